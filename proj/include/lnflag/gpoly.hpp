#pragma once

#include <map>
#include <stdexcept>
#include <utility>

#include "lnflag/bigint.hpp"
#include "lnflag/exponent_seq.hpp"

namespace lnflag {

/// Integer polynomial in the generators g_1, g_2, ... (written b_1, b_2, ...
/// in Hopf contexts; the same objects under the canonical isomorphism).
/// Sparse map from exponent sequence to nonzero coefficient; terms iterate in
/// canonical order.
class GPoly {
public:
    using TermMap = std::map<ExponentSeq, BigInt>;

    GPoly() = default;

    static GPoly zero() { return GPoly(); }
    static GPoly one() { return constant(1); }

    static GPoly constant(BigInt c) {
        GPoly p;
        if (c != 0)
            p.terms_[ExponentSeq()] = std::move(c);
        return p;
    }

    /// g_n (= b_n); g_0 is the unit.
    static GPoly generator(int n) {
        if (n < 0)
            throw std::invalid_argument("GPoly::generator: negative index");
        if (n == 0)
            return one();
        return monomial(ExponentSeq::unit(n));
    }

    static GPoly monomial(const ExponentSeq& w, BigInt c = 1) {
        GPoly p;
        if (c != 0)
            p.terms_[w] = std::move(c);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }

    BigInt coefficient(const ExponentSeq& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    BigInt constant_term() const { return coefficient(ExponentSeq()); }

    GPoly& operator+=(const GPoly& o) {
        for (const auto& [w, c] : o.terms_)
            add_term(w, c);
        return *this;
    }

    GPoly& operator-=(const GPoly& o) {
        for (const auto& [w, c] : o.terms_)
            add_term(w, -c);
        return *this;
    }

    GPoly operator+(const GPoly& o) const {
        GPoly r = *this;
        r += o;
        return r;
    }

    GPoly operator-(const GPoly& o) const {
        GPoly r = *this;
        r -= o;
        return r;
    }

    GPoly operator-() const {
        GPoly r = *this;
        for (auto& [w, c] : r.terms_)
            c = -c;
        return r;
    }

    GPoly operator*(const GPoly& o) const {
        GPoly r;
        for (const auto& [w1, c1] : terms_)
            for (const auto& [w2, c2] : o.terms_)
                r.add_term(w1 + w2, c1 * c2);
        return r;
    }

    GPoly& operator*=(const GPoly& o) { return *this = *this * o; }

    GPoly& operator*=(const BigInt& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [w, v] : terms_)
            v *= c;
        return *this;
    }

    GPoly operator*(const BigInt& c) const {
        GPoly r = *this;
        r *= c;
        return r;
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

    /// Largest term grading, -1 for the zero polynomial.
    int max_grading() const {
        return terms_.empty() ? -1 : terms_.rbegin()->first.grading();
    }

    bool is_homogeneous(int* grading_out = nullptr) const {
        int g = -1;
        for (const auto& [w, c] : terms_) {
            if (g < 0)
                g = w.grading();
            else if (w.grading() != g)
                return false;
        }
        if (grading_out)
            *grading_out = g;
        return true;
    }

    GPoly component(int grading) const {
        GPoly r;
        for (const auto& [w, c] : terms_)
            if (w.grading() == grading)
                r.terms_[w] = c;
        return r;
    }

    const TermMap& terms() const { return terms_; }

    bool operator==(const GPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const GPoly& o) const { return !(*this == o); }

private:
    TermMap terms_;
};

inline GPoly operator*(const BigInt& c, const GPoly& p) { return p * c; }
inline GPoly operator*(int c, const GPoly& p) { return p * BigInt(c); }
inline GPoly operator*(const GPoly& p, int c) { return p * BigInt(c); }

/// Integer combination of ordered pairs of monomials; houses coproduct
/// values.  Bilinear product (a x b)(c x d) = ac x bd.
class GTensor {
public:
    using Key = std::pair<ExponentSeq, ExponentSeq>;
    using TermMap = std::map<Key, BigInt>;

    GTensor() = default;

    static GTensor zero() { return GTensor(); }

    static GTensor unit() {
        GTensor t;
        t.terms_[{ExponentSeq(), ExponentSeq()}] = 1;
        return t;
    }

    static GTensor tensor(const GPoly& a, const GPoly& b) {
        GTensor t;
        for (const auto& [w1, c1] : a.terms())
            for (const auto& [w2, c2] : b.terms())
                t.add_term(w1, w2, c1 * c2);
        return t;
    }

    bool is_zero() const { return terms_.empty(); }

    BigInt coefficient(const ExponentSeq& l, const ExponentSeq& r) const {
        auto it = terms_.find({l, r});
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    GTensor& operator+=(const GTensor& o) {
        for (const auto& [k, c] : o.terms_)
            add_term(k.first, k.second, c);
        return *this;
    }

    GTensor operator+(const GTensor& o) const {
        GTensor r = *this;
        r += o;
        return r;
    }

    GTensor& operator-=(const GTensor& o) {
        for (const auto& [k, c] : o.terms_)
            add_term(k.first, k.second, -c);
        return *this;
    }

    GTensor operator-(const GTensor& o) const {
        GTensor r = *this;
        r -= o;
        return r;
    }

    GTensor operator*(const GTensor& o) const {
        GTensor r;
        for (const auto& [k1, c1] : terms_)
            for (const auto& [k2, c2] : o.terms_)
                r.add_term(k1.first + k2.first, k1.second + k2.second, c1 * c2);
        return r;
    }

    GTensor& operator*=(const GTensor& o) { return *this = *this * o; }

    GTensor operator*(const BigInt& c) const {
        GTensor r = *this;
        if (c == 0)
            return zero();
        for (auto& [k, v] : r.terms_)
            v *= c;
        return r;
    }

    void add_term(const ExponentSeq& l, const ExponentSeq& r, const BigInt& c) {
        if (c == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(Key{l, r}, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    const TermMap& terms() const { return terms_; }

    bool operator==(const GTensor& o) const { return terms_ == o.terms_; }
    bool operator!=(const GTensor& o) const { return !(*this == o); }

private:
    TermMap terms_;
};

inline GTensor operator*(const BigInt& c, const GTensor& t) { return t * c; }

}  // namespace lnflag
