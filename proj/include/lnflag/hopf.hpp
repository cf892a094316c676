#pragma once

#include <vector>

#include "lnflag/gpoly.hpp"
#include "lnflag/series.hpp"
#include "lnflag/symmetric.hpp"

namespace lnflag {

// The Hopf structure on Z[b_1, b_2, ...].  The coproduct on a generator is
// delta(b_n) = sum_{k>=0} (b)^{k+1}_{n-k} x b_k, extended as an algebra map;
// this is the exponent convention forced by the counit axiom.  Operations
// s_w of the dual are represented by their index sequences, since
// <s_w, b^psi> = delta_{w,psi} makes pairing a coefficient extraction.

inline GTensor coproduct_generator(int n) {
    GTensor t;
    for (int k = 0; k <= n; ++k)
        t += GTensor::tensor(series_power_component(k + 1, n - k),
                             GPoly::monomial(k == 0 ? ExponentSeq() : ExponentSeq::unit(k)));
    return t;
}

inline GTensor coproduct(const GPoly& p) {
    GTensor out;
    for (const auto& [w, c] : p.terms()) {
        GTensor term = GTensor::unit();
        for (int i = 1; i <= w.max_index(); ++i) {
            if (w.at(i) == 0)
                continue;
            GTensor gen = coproduct_generator(i);
            for (int e = 0; e < w.at(i); ++e)
                term *= gen;
        }
        out += term * BigInt(c);
    }
    return out;
}

/// Constant-term augmentation.
inline BigInt counit(const GPoly& p) { return p.constant_term(); }

/// chi(b_0), ..., chi(b_maxn) by the degree-induction recursion
/// sum_k (b)^{k+1}_{n-k} chi(b_k) = 0 for n >= 1.
inline std::vector<GPoly> antipode_generators(int maxn) {
    std::vector<GPoly> chi(static_cast<std::size_t>(maxn) + 1);
    chi[0] = GPoly::one();
    for (int n = 1; n <= maxn; ++n) {
        GPoly s;
        for (int k = 0; k < n; ++k)
            s += series_power_component(k + 1, n - k) * chi[static_cast<std::size_t>(k)];
        chi[static_cast<std::size_t>(n)] = -s;
    }
    return chi;
}

inline GPoly antipode(const GPoly& p) {
    int maxn = 0;
    for (const auto& [w, c] : p.terms())
        maxn = std::max(maxn, w.max_index());
    std::vector<GPoly> chi = antipode_generators(maxn);
    GPoly out;
    for (const auto& [w, c] : p.terms()) {
        GPoly term = GPoly::constant(c);
        for (int i = 1; i <= w.max_index(); ++i)
            for (int e = 0; e < w.at(i); ++e)
                term *= chi[static_cast<std::size_t>(i)];
        out += term;
    }
    return out;
}

/// <s_w, p>: the coefficient of b^w in p.
inline BigInt kronecker_pair(const ExponentSeq& w, const GPoly& p) { return p.coefficient(w); }

/// s_{w,r}(p) = sum <s_w, a_2> a_1 over delta(p).
inline GPoly act_right(const ExponentSeq& w, const GPoly& p) {
    GPoly out;
    GTensor cop = coproduct(p);
    for (const auto& [key, c] : cop.terms())
        if (key.second == w)
            out.add_term(key.first, c);
    return out;
}

/// s_{w,l}(p) = sum <chi(s_w), a_1> a_2, with <chi(s), q> read as <s, chi(q)>.
inline GPoly act_left(const ExponentSeq& w, const GPoly& p) {
    GPoly out;
    GTensor cop = coproduct(p);
    for (const auto& [key, c] : cop.terms()) {
        if (key.first.grading() != w.grading())
            continue;
        BigInt v = kronecker_pair(w, antipode(GPoly::monomial(key.first)));
        if (v != 0)
            out.add_term(key.second, c * v);
    }
    return out;
}

/// Tangential operation: sbar_{psi,l} = sum_w lambda_{psi,w} s_{w,l}.
inline GPoly act_left_tangential(const ExponentSeq& psi, const GPoly& p) {
    GPoly out;
    SymExpr row = complement_transform(psi);
    for (const auto& [w, lambda] : row.terms())
        out += act_left(w, p) * lambda;
    return out;
}

/// Adjoint action through the Cartan coproduct on the operation side:
/// ad(s_w) = sum_{psi+theta=w} s_{psi,l} s_{theta,r}.
inline GPoly act_adjoint(const ExponentSeq& w, const GPoly& p) {
    GPoly out;
    for (const ExponentSeq& psi : componentwise_below(w))
        out += act_left(psi, act_right(w - psi, p));
    return out;
}

}  // namespace lnflag
