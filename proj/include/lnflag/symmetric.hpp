#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "lnflag/bigint.hpp"
#include "lnflag/exponent_seq.hpp"

namespace lnflag {

/// Exponent assignments of the monomial symmetric function m_w in
/// `root_count` ordered roots: every distinct way to give exactly w_i of the
/// roots exponent i (for each i >= 1) and the rest exponent 0.  Empty when w
/// has more parts than roots.
inline std::vector<std::vector<int>> expand_monomial_sym(const ExponentSeq& w, int root_count) {
    std::vector<int> exps;
    for (int i = 1; i <= w.max_index(); ++i)
        exps.insert(exps.end(), static_cast<std::size_t>(w.at(i)), i);
    if (static_cast<int>(exps.size()) > root_count)
        return {};
    exps.resize(static_cast<std::size_t>(root_count), 0);
    std::sort(exps.begin(), exps.end());
    std::vector<std::vector<int>> out;
    do {
        out.push_back(exps);
    } while (std::next_permutation(exps.begin(), exps.end()));
    return out;
}

/// Integer combination of monomial symmetric functions m_w.
class SymExpr {
public:
    using TermMap = std::map<ExponentSeq, BigInt>;

    SymExpr() = default;

    static SymExpr monomial(const ExponentSeq& w, BigInt c = 1) {
        SymExpr e;
        if (c != 0)
            e.terms_[w] = std::move(c);
        return e;
    }

    void add_term(const ExponentSeq& w, const BigInt& c) {
        if (c == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    BigInt coefficient(const ExponentSeq& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    bool operator==(const SymExpr& o) const { return terms_ == o.terms_; }
    bool operator!=(const SymExpr& o) const { return !(*this == o); }

private:
    TermMap terms_;
};

namespace symdetail {

// Plain multivariate polynomials in a fixed number of variables, used only as
// scratch space for the basis conversions below.  Exponent vectors have fixed
// length d.
using Mono = std::vector<int>;
using VarPoly = std::map<Mono, BigInt>;

inline void vp_add(VarPoly& p, const Mono& m, const BigInt& c) {
    if (c == 0)
        return;
    auto [it, inserted] = p.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            p.erase(it);
    }
}

inline VarPoly vp_mul(const VarPoly& a, const VarPoly& b) {
    VarPoly r;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            Mono m = ma;
            for (std::size_t i = 0; i < m.size(); ++i)
                m[i] += mb[i];
            vp_add(r, m, ca * cb);
        }
    return r;
}

inline VarPoly vp_const(int d, BigInt c) {
    VarPoly p;
    vp_add(p, Mono(static_cast<std::size_t>(d), 0), std::move(c));
    return p;
}

// Elementary symmetric e_j in d variables.
inline VarPoly elementary(int j, int d) {
    VarPoly p;
    if (j == 0)
        return vp_const(d, 1);
    if (j > d)
        return p;
    std::vector<int> idx(static_cast<std::size_t>(j));
    for (int i = 0; i < j; ++i)
        idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        Mono m(static_cast<std::size_t>(d), 0);
        for (int i : idx)
            m[static_cast<std::size_t>(i)] = 1;
        vp_add(p, m, 1);
        int i = j - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == d - j + i)
            --i;
        if (i < 0)
            break;
        ++idx[static_cast<std::size_t>(i)];
        for (int t = i + 1; t < j; ++t)
            idx[static_cast<std::size_t>(t)] = idx[static_cast<std::size_t>(t) - 1] + 1;
    }
    return p;
}

// m_w expanded in d variables.
inline VarPoly monomial_sym(const ExponentSeq& w, int d) {
    VarPoly p;
    for (const auto& assignment : expand_monomial_sym(w, d))
        vp_add(p, assignment, 1);
    return p;
}

// e-monomials as multiplicity vectors over e_1..e_d.
using EPow = std::vector<int>;

inline VarPoly expand_e_monomial(const EPow& pow, int d) {
    VarPoly r = vp_const(d, 1);
    for (int j = 1; j <= d; ++j)
        for (int t = 0; t < pow[static_cast<std::size_t>(j) - 1]; ++t)
            r = vp_mul(r, elementary(j, d));
    return r;
}

inline ExponentSeq partition_of_sorted(const Mono& sorted_desc) {
    std::vector<int> mult;
    for (int part : sorted_desc) {
        if (part == 0)
            continue;
        if (part > static_cast<int>(mult.size()))
            mult.resize(static_cast<std::size_t>(part), 0);
        ++mult[static_cast<std::size_t>(part) - 1];
    }
    return ExponentSeq(std::move(mult));
}

// The symmetric polynomial `p` (in d variables) written in the e-basis by
// leading-term elimination; stays integral throughout.  Keys are e-power
// vectors of length d.
inline std::map<EPow, BigInt> to_elementary(VarPoly p, int d) {
    std::map<EPow, BigInt> out;
    while (!p.empty()) {
        // lexicographically largest sorted-descending exponent vector
        const Mono* lead = nullptr;
        for (const auto& [m, c] : p) {
            if (!std::is_sorted(m.rbegin(), m.rend()))
                continue;
            if (!lead || m > *lead)
                lead = &m;
        }
        if (!lead)
            throw std::logic_error("to_elementary: no sorted leading term in symmetric input");
        Mono lambda = *lead;
        BigInt c = p.at(lambda);
        // e_{lambda'} has leading m-term m_lambda with coefficient 1; the
        // columns of the Young diagram of lambda give its e-factors.
        EPow pow(static_cast<std::size_t>(d), 0);
        for (int col = 1; col <= (lambda.empty() ? 0 : lambda[0]); ++col) {
            int height = 0;
            for (int part : lambda)
                if (part >= col)
                    ++height;
            if (height > 0)
                ++pow[static_cast<std::size_t>(height) - 1];
        }
        VarPoly expanded = expand_e_monomial(pow, d);
        for (const auto& [m, cc] : expanded)
            vp_add(p, m, -c * cc);
        auto [it, inserted] = out.try_emplace(pow, c);
        if (!inserted)
            it->second += c;
    }
    return out;
}

// e_j of the complement alphabet, as polynomials in d variables: the
// coefficients of 1/E_x(t).
inline std::vector<VarPoly> complement_elementaries(int d) {
    std::vector<VarPoly> ey(static_cast<std::size_t>(d) + 1);
    ey[0] = vp_const(d, 1);
    for (int j = 1; j <= d; ++j) {
        VarPoly s;
        for (int i = 1; i <= j; ++i) {
            VarPoly t = vp_mul(elementary(i, d), ey[static_cast<std::size_t>(j - i)]);
            for (const auto& [m, c] : t)
                vp_add(s, m, c);
        }
        for (auto& [m, c] : s)
            c = -c;
        ey[static_cast<std::size_t>(j)] = std::move(s);
    }
    return ey;
}

// Collect a symmetric VarPoly into the m-basis: one term per sorted-descending
// representative.
inline SymExpr collect_m(const VarPoly& p) {
    SymExpr out;
    for (const auto& [m, c] : p)
        if (std::is_sorted(m.rbegin(), m.rend()))
            out.add_term(partition_of_sorted(m), c);
    return out;
}

}  // namespace symdetail

/// m_psi of the complement alphabet written in the m-basis of the original
/// alphabet, where the alphabets satisfy E_x(t) E_y(t) = 1.  The coefficients
/// are the lambda_{psi,omega}.  Works with a variable budget of |psi|/2, the
/// maximal part count in that grading, entirely over the integers (m -> e
/// elimination, series inversion on the e's, re-expansion).
inline SymExpr complement_transform(const ExponentSeq& psi) {
    if (psi.is_zero())
        return SymExpr::monomial(ExponentSeq());
    int d = psi.grading() / 2;
    using namespace symdetail;
    VarPoly target = monomial_sym(psi, d);
    std::map<EPow, BigInt> in_e = to_elementary(std::move(target), d);
    std::vector<VarPoly> ey = complement_elementaries(d);
    VarPoly result;
    for (const auto& [pow, c] : in_e) {
        VarPoly term = vp_const(d, c);
        for (int j = 1; j <= d; ++j)
            for (int t = 0; t < pow[static_cast<std::size_t>(j) - 1]; ++t)
                term = vp_mul(term, ey[static_cast<std::size_t>(j)]);
        for (const auto& [m, cc] : term)
            vp_add(result, m, cc);
    }
    return symdetail::collect_m(result);
}

/// lambda_{psi,omega} for all psi, omega of the given grading; rows and
/// columns indexed by the canonical basis order.
struct LambdaMatrix {
    std::vector<ExponentSeq> basis;
    std::vector<std::vector<BigInt>> entries;  // entries[row psi][col omega]
};

inline LambdaMatrix lambda_matrix(int grading) {
    if (grading < 0 || grading % 2 != 0)
        throw std::invalid_argument("lambda_matrix: grading must be even and nonnegative");
    LambdaMatrix m;
    m.basis = sequences_of_grading(grading);
    m.entries.resize(m.basis.size());
    for (std::size_t r = 0; r < m.basis.size(); ++r) {
        SymExpr row = complement_transform(m.basis[r]);
        m.entries[r].resize(m.basis.size());
        for (std::size_t c = 0; c < m.basis.size(); ++c)
            m.entries[r][c] = row.coefficient(m.basis[c]);
    }
    return m;
}

}  // namespace lnflag
