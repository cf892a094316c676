#pragma once

#include <stdexcept>
#include <vector>

#include "lnflag/flag_ring.hpp"
#include "lnflag/gpoly.hpp"
#include "lnflag/hopf.hpp"
#include "lnflag/series.hpp"
#include "lnflag/subset.hpp"
#include "lnflag/twist.hpp"

namespace lnflag {

/// A class X^k_{Q,base}: the subvariety indexed by the surviving subset
/// `base` of an original Q, with twist m(j) applied to the j-th factor of the
/// decomposition along the ORIGINAL intervals of Q.  Twists beyond the
/// interval length denote the zero class and are never constructed.
struct TwistedClass {
    SubsetQ base;
    std::vector<int> twists;  // one per original interval, 0-based j

    TwistedClass(SubsetQ base_, std::vector<int> twists_, const SubsetQ& original_q)
        : base(std::move(base_)), twists(std::move(twists_)) {
        if (!base.is_subset_of(original_q))
            throw std::invalid_argument("TwistedClass: base not contained in the original Q");
        const auto& ivs = original_q.intervals();
        if (twists.size() != ivs.size())
            throw std::invalid_argument("TwistedClass: one twist per original interval required");
        for (std::size_t j = 0; j < twists.size(); ++j)
            if (twists[j] < 0 || twists[j] > ivs[j].length())
                throw std::invalid_argument("TwistedClass: twist exceeds interval length");
    }
};

/// Cobordism class of a twisted manifold: prod_j (g)^{m(j)+1}_{d(j)} with
/// d(j) = |I(j) n base| over the original intervals; empty factors are 1.
inline GPoly eval_twisted(const TwistedClass& t, const SubsetQ& original_q) {
    GPoly out = GPoly::one();
    const auto& ivs = original_q.intervals();
    for (std::size_t j = 0; j < ivs.size(); ++j) {
        int d = 0;
        for (int i = ivs[j].lo; i <= ivs[j].hi; ++i)
            if (t.base.contains(i))
                ++d;
        out *= series_power_component(t.twists[j] + 1, d);
    }
    return out;
}

namespace geodetail {

inline std::vector<int> twists_of(const TwistSeq& k, const SubsetQ& q) {
    std::vector<int> t;
    t.reserve(q.intervals().size());
    for (const auto& iv : q.intervals())
        t.push_back(k.at(iv.lo));
    return t;
}

}  // namespace geodetail

/// sbar_{psi,l}(X_Q) = sum over admissible h in H(Q,psi) of the class of
/// X_{Q,h[n]} (zero twists, base Q n h[n]).
inline GPoly geom_act_left(const SubsetQ& q, const ExponentSeq& psi) {
    GPoly out;
    std::vector<int> zero_twists(q.intervals().size(), 0);
    for (const TwistSeq& h : enumerate_block(q, psi, BlockKind::H))
        out += eval_twisted(TwistedClass(apply_hQ(h, q), zero_twists, q), q);
    return out;
}

/// s_{omega,r}(X_Q) = sum over admissible k in K(Q,omega) of X^k_{Q,k[n]}.
inline GPoly geom_act_right(const SubsetQ& q, const ExponentSeq& omega) {
    GPoly out;
    for (const TwistSeq& k : enumerate_block(q, omega, BlockKind::K))
        out += eval_twisted(TwistedClass(apply_hQ(k, q), geodetail::twists_of(k, q), q), q);
    return out;
}

/// Combined action: sum over pairs (h,k) with h+k admissible of
/// X^k_{Q,(h+k)[n]}.
inline GPoly geom_act_both(const SubsetQ& q, const ExponentSeq& psi, const ExponentSeq& omega) {
    GPoly out;
    auto hs = enumerate_block(q, psi, BlockKind::H);
    auto ks = enumerate_block(q, omega, BlockKind::K);
    for (const TwistSeq& h : hs)
        for (const TwistSeq& k : ks) {
            TwistSeq sum = h + k;
            if (!is_admissible(sum, q))
                continue;
            out += eval_twisted(TwistedClass(apply_hQ(sum, q), geodetail::twists_of(k, q), q), q);
        }
    return out;
}

/// Coproduct realization: X_Q -> sum over admissible k in K(Q) of
/// X^k_{Q,k[n]} x X_{Q \ kQ}.
inline GTensor geom_coproduct(const SubsetQ& q) {
    GTensor out;
    const auto& ivs = q.intervals();
    int s = static_cast<int>(ivs.size());
    std::vector<int> choice(static_cast<std::size_t>(s), 0);
    // K(Q) with admissibility: k_{a(j)} ranges over 0..|I(j)| independently.
    std::function<void(int)> rec = [&](int j) {
        if (j == s) {
            std::vector<int> entries(static_cast<std::size_t>(q.ambient()), 0);
            for (int t = 0; t < s; ++t)
                entries[static_cast<std::size_t>(ivs[static_cast<std::size_t>(t)].lo) - 1] =
                    choice[static_cast<std::size_t>(t)];
            TwistSeq k{entries};
            SubsetQ kq = apply_hQ(k, q);
            GPoly first = eval_twisted(TwistedClass(kq, choice, q), q);
            GPoly second = GPoly::monomial(q.set_minus(kq).type());
            out += GTensor::tensor(first, second);
            return;
        }
        for (int m = 0; m <= ivs[static_cast<std::size_t>(j)].length(); ++m) {
            choice[static_cast<std::size_t>(j)] = m;
            rec(j + 1);
        }
    };
    rec(0);
    return out;
}

/// Antipode realization: X_Q -> prod over intervals of gbar_{|I(j)|}.
inline GPoly geom_antipode(const SubsetQ& q) {
    int maxlen = 0;
    for (const auto& iv : q.intervals())
        maxlen = std::max(maxlen, iv.length());
    std::vector<GPoly> gbar = reversion(maxlen);
    GPoly out = GPoly::one();
    for (const auto& iv : q.intervals())
        out *= gbar[static_cast<std::size_t>(iv.length())];
    return out;
}

/// The two coefficient lists of the projection B_n -> CP^{n-h+1}: the left
/// list (g_{n-m} for 0 <= m <= n+1-h, computed through the pushforward of
/// x_h^m) and the right list (sum_{j>=m} g_{n-j} (g)^m_{j-m}).
struct ProjectionCoefficients {
    std::vector<GPoly> left;
    std::vector<GPoly> right;
};

/// Converts left-basis coefficients via beta_{j,l} = sum_m (g)^m_{j-m}
/// beta_{m,r}.
inline std::vector<GPoly> convert_left_to_right(const std::vector<GPoly>& left) {
    std::vector<GPoly> right(left.size());
    for (std::size_t m = 0; m < left.size(); ++m)
        for (std::size_t j = m; j < left.size(); ++j)
            right[m] += left[j] * series_power_component(static_cast<int>(m),
                                                         static_cast<int>(j - m));
    return right;
}

inline ProjectionCoefficients projection_coefficients(int n, int h) {
    if (h < 1 || h > n)
        throw std::invalid_argument("projection_coefficients: need 1 <= h <= n");
    FlagContext ctx = FlagContext::bounded_flag(n);
    ProjectionCoefficients out;
    FlagElem xh = FlagElem::generator(ctx, h);
    for (int m = 0; m <= n + 1 - h; ++m)
        out.left.push_back(pushforward(xh.pow(m)));
    for (int m = 0; m <= n + 1 - h; ++m) {
        GPoly r;
        for (int j = m; j <= n + 1 - h; ++j)
            r += GPoly::generator(n - j) * series_power_component(m, j - m);
        out.right.push_back(r);
    }
    return out;
}

/// The closed-form left action on epsilon(m): over intervals with
/// |I(j)| >= m, (|I(j)|-m+1) copies of g^{type(Q\I(j))} g_{|I(j)|-m}.
inline GPoly left_action_closed_form(const SubsetQ& q, int m) {
    if (m < 1)
        throw std::invalid_argument("left_action_closed_form: m must be >= 1");
    GPoly out;
    for (const auto& iv : q.intervals()) {
        if (iv.length() < m)
            continue;
        std::uint32_t iv_mask = 0;
        for (int i = iv.lo; i <= iv.hi; ++i)
            iv_mask |= 1u << (i - 1);
        SubsetQ rest = q.set_minus(SubsetQ::from_mask(q.ambient(), iv_mask));
        GPoly term = GPoly::monomial(rest.type()) * GPoly::generator(iv.length() - m);
        out += term * BigInt(iv.length() - m + 1);
    }
    return out;
}

}  // namespace lnflag
