#pragma once

#include <stdexcept>
#include <vector>

#include "lnflag/gpoly.hpp"

namespace lnflag {

namespace detail {

// Truncated product of graded component lists: c[k] = sum_j a[j] b[k-j].
inline std::vector<GPoly> conv_trunc(const std::vector<GPoly>& a, const std::vector<GPoly>& b,
                                     int max_k) {
    std::vector<GPoly> c(static_cast<std::size_t>(max_k) + 1);
    for (int j = 0; j <= max_k && j < static_cast<int>(a.size()); ++j) {
        if (a[static_cast<std::size_t>(j)].is_zero())
            continue;
        for (int i = 0; i + j <= max_k && i < static_cast<int>(b.size()); ++i)
            c[static_cast<std::size_t>(i + j)] +=
                a[static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(i)];
    }
    return c;
}

// Components 0..max_k of (sum_{j>=0} b_j)^{-1}: inv[0] = 1,
// inv[k] = -sum_{j=1..k} b_j inv[k-j].
inline std::vector<GPoly> inverse_components(int max_k) {
    std::vector<GPoly> inv(static_cast<std::size_t>(max_k) + 1);
    inv[0] = GPoly::one();
    for (int k = 1; k <= max_k; ++k) {
        GPoly s;
        for (int j = 1; j <= k; ++j)
            s += GPoly::generator(j) * inv[static_cast<std::size_t>(k - j)];
        inv[static_cast<std::size_t>(k)] = -s;
    }
    return inv;
}

}  // namespace detail

/// (b)^n_k: the grading-2k homogeneous component of (sum_{j>=0} b_j)^n.
/// Negative n goes through the inverse series; (b)^n_0 = 1 for every n.
inline GPoly series_power_component(int n, int k) {
    if (k < 0)
        throw std::invalid_argument("series_power_component: negative component index");
    if (k == 0)
        return GPoly::one();
    std::vector<GPoly> base;
    if (n >= 0) {
        base.resize(static_cast<std::size_t>(k) + 1);
        for (int j = 0; j <= k; ++j)
            base[static_cast<std::size_t>(j)] = GPoly::generator(j);
    } else {
        base = detail::inverse_components(k);
    }
    int e = n >= 0 ? n : -n;
    std::vector<GPoly> acc(static_cast<std::size_t>(k) + 1);
    acc[0] = GPoly::one();
    for (int i = 0; i < e; ++i)
        acc = detail::conv_trunc(acc, base, k);
    return acc[static_cast<std::size_t>(k)];
}

/// Coefficients (1, b_1, ..., b_maxdeg) of the generic series sum b_m t^{m+1}.
inline std::vector<GPoly> generator_series(int maxdeg) {
    std::vector<GPoly> s(static_cast<std::size_t>(maxdeg) + 1);
    for (int m = 0; m <= maxdeg; ++m)
        s[static_cast<std::size_t>(m)] = GPoly::generator(m);
    return s;
}

/// Coefficients (1, 0, ..., 0) of the identity series t.
inline std::vector<GPoly> identity_series(int maxdeg) {
    std::vector<GPoly> s(static_cast<std::size_t>(maxdeg) + 1);
    s[0] = GPoly::one();
    return s;
}

namespace detail {

// Dense t-coefficient vector of sum_m coeffs[m] t^{m+1}, truncated at t^deg.
inline std::vector<GPoly> to_dense(const std::vector<GPoly>& coeffs, int deg) {
    std::vector<GPoly> d(static_cast<std::size_t>(deg) + 1);
    for (int m = 0; m + 1 <= deg && m < static_cast<int>(coeffs.size()); ++m)
        d[static_cast<std::size_t>(m) + 1] = coeffs[static_cast<std::size_t>(m)];
    return d;
}

}  // namespace detail

/// Coefficients of sum_n outer[n] (sum_m inner[m] t^{m+1})^{n+1} through the
/// target degree; both series must have unit leading coefficient.
inline std::vector<GPoly> substitute_series(const std::vector<GPoly>& outer,
                                            const std::vector<GPoly>& inner,
                                            int target_degree) {
    if (outer.empty() || inner.empty() || outer[0] != GPoly::one() || inner[0] != GPoly::one())
        throw std::invalid_argument("substitute_series: series must have unit leading coefficient");
    int deg = target_degree + 1;  // t-degree of the last kept coefficient
    std::vector<GPoly> dense = detail::to_dense(inner, deg);
    std::vector<GPoly> pw = dense;  // inner^{n+1}, starting at n = 0
    std::vector<GPoly> out(static_cast<std::size_t>(target_degree) + 1);
    for (int n = 0; n <= target_degree; ++n) {
        const GPoly& a = n < static_cast<int>(outer.size()) ? outer[static_cast<std::size_t>(n)]
                                                            : GPoly::zero();
        if (!a.is_zero())
            for (int k = 0; k <= target_degree; ++k)
                out[static_cast<std::size_t>(k)] += a * pw[static_cast<std::size_t>(k) + 1];
        if (n < target_degree)
            pw = detail::conv_trunc(pw, dense, deg);
    }
    return out;
}

/// Compositional inverse of sum_m coeffs[m] t^{m+1} (unit leading
/// coefficient): the unique series with coeffs o inverse = identity.
inline std::vector<GPoly> revert_series(const std::vector<GPoly>& coeffs, int target_degree) {
    if (coeffs.empty() || coeffs[0] != GPoly::one())
        throw std::invalid_argument("revert_series: series must have unit leading coefficient");
    std::vector<GPoly> rev(static_cast<std::size_t>(target_degree) + 1);
    rev[0] = GPoly::one();
    for (int n = 1; n <= target_degree; ++n) {
        // [s^{n+1}] sum_m coeffs[m] Rev(s)^{m+1} must vanish; the m >= 1 terms
        // only involve rev[j] for j < n.
        int deg = n + 1;
        std::vector<GPoly> dense = detail::to_dense(rev, deg);
        std::vector<GPoly> pw = dense;
        GPoly value;
        for (int m = 1; m <= n; ++m) {
            pw = detail::conv_trunc(pw, dense, deg);
            const GPoly& c = m < static_cast<int>(coeffs.size())
                                 ? coeffs[static_cast<std::size_t>(m)]
                                 : GPoly::zero();
            if (!c.is_zero())
                value += c * pw[static_cast<std::size_t>(deg)];
        }
        rev[static_cast<std::size_t>(n)] = -value;
    }
    return rev;
}

/// gbar_0, ..., gbar_maxdeg: coefficients of the compositional inverse of the
/// generic series sum g_m t^{m+1}, as polynomials in the g_m.
inline std::vector<GPoly> reversion(int maxdeg) {
    return revert_series(generator_series(maxdeg), maxdeg);
}

}  // namespace lnflag
