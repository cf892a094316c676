#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "lnflag/gpoly.hpp"
#include "lnflag/subset.hpp"
#include "lnflag/symmetric.hpp"

namespace lnflag {

/// The coefficient ring context: the truncated ring with generators
/// x_i for i in Q, relations x_i^2 = x_i x_{i+1}, and x_i = 0 for i outside Q
/// (x_{n+1} = 0).  Q = [n] is the ring of the full bounded flag manifold B_n.
struct FlagContext {
    SubsetQ q;

    explicit FlagContext(SubsetQ subset) : q(std::move(subset)) {}

    static FlagContext bounded_flag(int n) { return FlagContext(SubsetQ::full(n)); }

    int ambient() const { return q.ambient(); }

    bool operator==(const FlagContext& o) const { return q == o.q; }
    bool operator!=(const FlagContext& o) const { return !(*this == o); }
};

namespace flagdetail {

// Normal form of x_1^{e_1} ... x_n^{e_n}: repeatedly rewrite e_i >= 2 into
// (e_i - 1, e_{i+1} + 1), leftmost first; a term dies as soon as any index
// with positive exponent leaves Q.  Mass only moves right, so the weighted
// degree sum i*e_i strictly increases and the loop terminates.
inline std::optional<std::uint32_t> reduce_monomial(std::vector<int> exps, const SubsetQ& q) {
    int n = q.ambient();
    for (int i = 1; i <= n; ++i)
        if (exps[static_cast<std::size_t>(i) - 1] > 0 && !q.contains(i))
            return std::nullopt;
    int i = 1;
    while (i <= n) {
        if (exps[static_cast<std::size_t>(i) - 1] >= 2) {
            if (i + 1 > n || !q.contains(i + 1))
                return std::nullopt;
            --exps[static_cast<std::size_t>(i) - 1];
            ++exps[static_cast<std::size_t>(i)];
        } else {
            ++i;
        }
    }
    std::uint32_t mask = 0;
    for (int j = 1; j <= n; ++j)
        if (exps[static_cast<std::size_t>(j) - 1] == 1)
            mask |= 1u << (j - 1);
    return mask;
}

// Same rewrite with the reducible position chosen by `rng` at each step; used
// by the confluence property test.
inline std::optional<std::uint32_t> reduce_monomial_random_order(std::vector<int> exps,
                                                                 const SubsetQ& q,
                                                                 std::mt19937& rng) {
    int n = q.ambient();
    for (int i = 1; i <= n; ++i)
        if (exps[static_cast<std::size_t>(i) - 1] > 0 && !q.contains(i))
            return std::nullopt;
    while (true) {
        std::vector<int> reducible;
        for (int i = 1; i <= n; ++i)
            if (exps[static_cast<std::size_t>(i) - 1] >= 2)
                reducible.push_back(i);
        if (reducible.empty())
            break;
        int i = reducible[std::uniform_int_distribution<std::size_t>(0, reducible.size() - 1)(rng)];
        if (i + 1 > n || !q.contains(i + 1))
            return std::nullopt;
        --exps[static_cast<std::size_t>(i) - 1];
        ++exps[static_cast<std::size_t>(i)];
    }
    std::uint32_t mask = 0;
    for (int j = 1; j <= n; ++j)
        if (exps[static_cast<std::size_t>(j) - 1] == 1)
            mask |= 1u << (j - 1);
    return mask;
}

}  // namespace flagdetail

/// Element of the truncated flag cobordism ring: square-free monomials x^R,
/// R a subset of Q, with GPoly coefficients.  Keys iterate in binary counting
/// order, the canonical subset order.
class FlagElem {
public:
    using TermMap = std::map<std::uint32_t, GPoly>;

    explicit FlagElem(FlagContext ctx) : ctx_(std::move(ctx)) {}

    static FlagElem zero(const FlagContext& ctx) { return FlagElem(ctx); }

    static FlagElem unit(const FlagContext& ctx) {
        FlagElem e(ctx);
        e.terms_[0] = GPoly::one();
        return e;
    }

    /// x_i; requires i in Q.
    static FlagElem generator(const FlagContext& ctx, int i) {
        if (!ctx.q.contains(i))
            throw std::invalid_argument("FlagElem::generator: index not in Q");
        FlagElem e(ctx);
        e.terms_[1u << (i - 1)] = GPoly::one();
        return e;
    }

    static FlagElem monomial(const FlagContext& ctx, const SubsetQ& r, GPoly coeff = GPoly::one()) {
        if (!r.is_subset_of(ctx.q))
            throw std::invalid_argument("FlagElem::monomial: subset not contained in Q");
        FlagElem e(ctx);
        if (!coeff.is_zero())
            e.terms_[r.mask()] = std::move(coeff);
        return e;
    }

    const FlagContext& context() const { return ctx_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    GPoly coefficient(const SubsetQ& r) const {
        auto it = terms_.find(r.mask());
        return it == terms_.end() ? GPoly::zero() : it->second;
    }

    void add_term(std::uint32_t mask, const GPoly& coeff) {
        if (coeff.is_zero())
            return;
        auto [it, inserted] = terms_.try_emplace(mask, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    FlagElem& operator+=(const FlagElem& o) {
        require_same_context(o);
        for (const auto& [m, c] : o.terms_)
            add_term(m, c);
        return *this;
    }

    FlagElem operator+(const FlagElem& o) const {
        FlagElem r = *this;
        r += o;
        return r;
    }

    FlagElem operator-() const {
        FlagElem r = *this;
        for (auto& [m, c] : r.terms_)
            c = -c;
        return r;
    }

    FlagElem operator-(const FlagElem& o) const { return *this + (-o); }

    FlagElem operator*(const FlagElem& o) const {
        require_same_context(o);
        int n = ctx_.ambient();
        FlagElem r(ctx_);
        for (const auto& [m1, c1] : terms_)
            for (const auto& [m2, c2] : o.terms_) {
                std::vector<int> exps(static_cast<std::size_t>(n), 0);
                for (int i = 1; i <= n; ++i)
                    exps[static_cast<std::size_t>(i) - 1] =
                        ((m1 >> (i - 1)) & 1u) + ((m2 >> (i - 1)) & 1u);
                auto nf = flagdetail::reduce_monomial(std::move(exps), ctx_.q);
                if (nf)
                    r.add_term(*nf, c1 * c2);
            }
        return r;
    }

    FlagElem& operator*=(const FlagElem& o) { return *this = *this * o; }

    FlagElem operator*(const GPoly& c) const {
        FlagElem r(ctx_);
        for (const auto& [m, v] : terms_) {
            GPoly p = v * c;
            if (!p.is_zero())
                r.terms_[m] = std::move(p);
        }
        return r;
    }

    FlagElem pow(int e) const {
        FlagElem r = unit(ctx_);
        for (int i = 0; i < e; ++i)
            r *= *this;
        return r;
    }

    /// Total grading 2(|R| + d) uniform over all terms.
    bool is_homogeneous(int* grading_out = nullptr) const {
        int g = -1;
        for (const auto& [m, c] : terms_) {
            int base = 2 * std::popcount(m);
            for (const auto& [w, coeff] : c.terms()) {
                int total = base + w.grading();
                if (g < 0)
                    g = total;
                else if (total != g)
                    return false;
            }
        }
        if (grading_out)
            *grading_out = g;
        return true;
    }

    bool operator==(const FlagElem& o) const { return ctx_ == o.ctx_ && terms_ == o.terms_; }
    bool operator!=(const FlagElem& o) const { return !(*this == o); }

private:
    void require_same_context(const FlagElem& o) const {
        if (ctx_ != o.ctx_)
            throw std::invalid_argument("FlagElem: context mismatch");
    }

    FlagContext ctx_;
    TermMap terms_;
};

/// x_{i,r} = sum_m g_m x_i^{m+1}, a finite sum since the powers truncate.
inline FlagElem right_class(const FlagContext& ctx, int i) {
    if (!ctx.q.contains(i))
        throw std::invalid_argument("right_class: index not in Q");
    int n = ctx.ambient();
    FlagElem out(ctx);
    for (int m = 0;; ++m) {
        std::vector<int> exps(static_cast<std::size_t>(n), 0);
        exps[static_cast<std::size_t>(i) - 1] = m + 1;
        auto nf = flagdetail::reduce_monomial(std::move(exps), ctx.q);
        if (!nf)
            break;
        out.add_term(*nf, GPoly::generator(m));
    }
    return out;
}

/// pi_!: evaluation against the fundamental class.  On a basis monomial x^R
/// in context Q with intervals I(j) it is the interval-deficit product
/// prod_j g_{|I(j)| - |I(j) n R|}, extended GPoly-linearly.
inline GPoly pushforward(const FlagElem& e) {
    GPoly out;
    const auto& ivs = e.context().q.intervals();
    for (const auto& [mask, coeff] : e.terms()) {
        std::vector<int> mult;
        for (const auto& iv : ivs) {
            int hit = 0;
            for (int i = iv.lo; i <= iv.hi; ++i)
                if (mask & (1u << (i - 1)))
                    ++hit;
            int deficit = iv.length() - hit;
            if (deficit > 0) {
                if (deficit > static_cast<int>(mult.size()))
                    mult.resize(static_cast<std::size_t>(deficit), 0);
                ++mult[static_cast<std::size_t>(deficit) - 1];
            }
        }
        out += coeff * GPoly::monomial(ExponentSeq(std::move(mult)));
    }
    return out;
}

/// Underlying-U Kronecker evaluation: pushforward followed by the
/// augmentation g_k -> 0 for k > 0.
inline BigInt kronecker_U(const FlagElem& e) { return pushforward(e).constant_term(); }

/// <cbar_{psi,l}(nu_l) c_{omega,r}(nu_r), sigma>: expand m_psi over the left
/// roots {x_i : i in Q} and m_omega over the right roots {x_{a(j),r}},
/// multiply in the ring and push forward.  This is the characteristic-number
/// oracle for all the action formulas.
inline GPoly char_number(const SubsetQ& q, const ExponentSeq& psi, const ExponentSeq& omega) {
    FlagContext ctx(q);
    int n = q.ambient();

    FlagElem left = FlagElem::zero(ctx);
    for (const auto& assignment : expand_monomial_sym(psi, q.size())) {
        std::vector<int> exps(static_cast<std::size_t>(n), 0);
        for (std::size_t t = 0; t < assignment.size(); ++t)
            exps[static_cast<std::size_t>(q.elements()[t]) - 1] = assignment[t];
        auto nf = flagdetail::reduce_monomial(std::move(exps), q);
        if (nf)
            left.add_term(*nf, GPoly::one());
    }

    int s = static_cast<int>(q.intervals().size());
    std::vector<FlagElem> rc;
    rc.reserve(static_cast<std::size_t>(s));
    for (const auto& iv : q.intervals())
        rc.push_back(right_class(ctx, iv.lo));
    FlagElem right = FlagElem::zero(ctx);
    for (const auto& assignment : expand_monomial_sym(omega, s)) {
        FlagElem term = FlagElem::unit(ctx);
        for (int j = 0; j < s; ++j)
            if (assignment[static_cast<std::size_t>(j)] > 0)
                term *= rc[static_cast<std::size_t>(j)].pow(assignment[static_cast<std::size_t>(j)]);
        right += term;
    }

    return pushforward(left * right);
}

/// y_i in the x-basis: y_i = -x_i + x_{i+1}, with x_{n+1} = 0.  Context must
/// be the full ring Q = [n].
inline FlagElem y_to_x(const FlagContext& ctx, int i) {
    if (!ctx.q.is_full())
        throw std::invalid_argument("y_to_x: context must be the full ring [n]");
    int n = ctx.ambient();
    if (i < 1 || i > n)
        throw std::invalid_argument("y_to_x: index out of range");
    FlagElem out(ctx);
    out.add_term(1u << (i - 1), GPoly::constant(-1));
    if (i + 1 <= n)
        out.add_term(1u << i, GPoly::one());
    return out;
}

enum class VarietyKind { X, Y };

struct NotCoveredError : std::domain_error {
    explicit NotCoveredError(const std::string& what) : std::domain_error(what) {}
};

/// Result of a transverse intersection: a subvariety of the given kind,
/// indexed by `subset`, living in the ring context of `context_subset`
/// ([n] for like kinds, the Y-side subset for the mixed case).
struct Intersection {
    VarietyKind kind;
    SubsetQ subset;
    SubsetQ context_subset;

    bool operator==(const Intersection& o) const {
        return kind == o.kind && subset == o.subset && context_subset == o.context_subset;
    }
};

/// Transverse intersection calculus: like kinds require A u B = [n] and meet
/// in the same kind at A n B; X against Y meets in X_{A n B} inside the
/// B-context when A u B = [n] and is empty otherwise (nullopt).
inline std::optional<Intersection> intersect(VarietyKind kind_a, const SubsetQ& a,
                                             VarietyKind kind_b, const SubsetQ& b, int n) {
    if (a.ambient() != n || b.ambient() != n)
        throw std::invalid_argument("intersect: ambient mismatch");
    if (kind_a == kind_b) {
        if (!a.union_is_full(b))
            throw NotCoveredError("intersect: like kinds need A u B = [n]");
        return Intersection{kind_a, a.intersect(b), SubsetQ::full(n)};
    }
    const SubsetQ& x_side = kind_a == VarietyKind::X ? a : b;
    const SubsetQ& y_side = kind_a == VarietyKind::X ? b : a;
    if (!x_side.union_is_full(y_side))
        return std::nullopt;
    return Intersection{VarietyKind::X, x_side.intersect(y_side), y_side};
}

}  // namespace lnflag
