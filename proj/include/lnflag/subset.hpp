#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "lnflag/exponent_seq.hpp"

namespace lnflag {

/// Finite subset Q of [n] = {1, ..., n} with its maximal-interval
/// decomposition I(1) u ... u I(s), I(j) = [a(j), b(j)], cached at
/// construction.  The type of Q records how many intervals have each
/// cardinality and is independent of the ambient n.
class SubsetQ {
public:
    struct Interval {
        int lo = 0;
        int hi = -1;
        int length() const { return hi - lo + 1; }
        bool contains(int i) const { return lo <= i && i <= hi; }
    };

    SubsetQ() = default;  // empty subset of [0]

    SubsetQ(int ambient, std::vector<int> elements)
        : ambient_(ambient), elements_(std::move(elements)) {
        if (ambient_ < 0 || ambient_ > 31)
            throw std::invalid_argument("SubsetQ: ambient size out of supported range [0,31]");
        int prev = 0;
        for (int e : elements_) {
            if (e <= prev || e > ambient_)
                throw std::invalid_argument(
                    "SubsetQ: elements must be strictly increasing within [1,n]");
            prev = e;
        }
        derive_intervals();
    }

    static SubsetQ full(int n) {
        std::vector<int> e(static_cast<std::size_t>(n));
        for (int i = 1; i <= n; ++i)
            e[static_cast<std::size_t>(i) - 1] = i;
        return SubsetQ(n, std::move(e));
    }

    static SubsetQ empty(int n) { return SubsetQ(n, {}); }

    static SubsetQ from_mask(int ambient, std::uint32_t mask) {
        std::vector<int> e;
        for (int i = 1; i <= ambient; ++i)
            if (mask & (1u << (i - 1)))
                e.push_back(i);
        return SubsetQ(ambient, std::move(e));
    }

    int ambient() const { return ambient_; }
    const std::vector<int>& elements() const { return elements_; }
    const std::vector<Interval>& intervals() const { return intervals_; }
    int size() const { return static_cast<int>(elements_.size()); }
    bool is_empty() const { return elements_.empty(); }
    bool is_full() const { return size() == ambient_; }

    bool contains(int i) const {
        return i >= 1 && i <= ambient_ && (mask_ & (1u << (i - 1)));
    }

    std::uint32_t mask() const { return mask_; }

    /// w_i = number of maximal intervals of cardinality i.
    ExponentSeq type() const {
        std::vector<int> mult;
        for (const Interval& iv : intervals_) {
            if (iv.length() > static_cast<int>(mult.size()))
                mult.resize(static_cast<std::size_t>(iv.length()), 0);
            ++mult[static_cast<std::size_t>(iv.length()) - 1];
        }
        return ExponentSeq(std::move(mult));
    }

    SubsetQ intersect(const SubsetQ& o) const {
        require_same_ambient(o);
        return from_mask(ambient_, mask_ & o.mask_);
    }

    SubsetQ set_minus(const SubsetQ& o) const {
        require_same_ambient(o);
        return from_mask(ambient_, mask_ & ~o.mask_);
    }

    SubsetQ complement() const { return from_mask(ambient_, ~mask_ & full_mask()); }

    bool union_is_full(const SubsetQ& o) const {
        require_same_ambient(o);
        return (mask_ | o.mask_) == full_mask();
    }

    bool is_subset_of(const SubsetQ& o) const {
        require_same_ambient(o);
        return (mask_ & ~o.mask_) == 0;
    }

    bool operator==(const SubsetQ& o) const {
        return ambient_ == o.ambient_ && mask_ == o.mask_;
    }
    bool operator!=(const SubsetQ& o) const { return !(*this == o); }

    std::string str() const {
        std::string s = "{";
        for (std::size_t i = 0; i < elements_.size(); ++i) {
            if (i)
                s += ',';
            s += std::to_string(elements_[i]);
        }
        s += "} in [" + std::to_string(ambient_) + "]";
        return s;
    }

private:
    void derive_intervals() {
        mask_ = 0;
        intervals_.clear();
        for (int e : elements_)
            mask_ |= 1u << (e - 1);
        for (std::size_t i = 0; i < elements_.size();) {
            std::size_t j = i;
            while (j + 1 < elements_.size() && elements_[j + 1] == elements_[j] + 1)
                ++j;
            intervals_.push_back(Interval{elements_[i], elements_[j]});
            i = j + 1;
        }
    }

    std::uint32_t full_mask() const {
        return ambient_ == 0 ? 0u : (ambient_ == 31 ? 0x7fffffffu : ((1u << ambient_) - 1));
    }

    void require_same_ambient(const SubsetQ& o) const {
        if (ambient_ != o.ambient_)
            throw std::invalid_argument("SubsetQ: ambient mismatch");
    }

    int ambient_ = 0;
    std::vector<int> elements_;
    std::vector<Interval> intervals_;
    std::uint32_t mask_ = 0;
};

/// Spec-facing alias for the type of a subset.
inline ExponentSeq type_of(const SubsetQ& q) { return q.type(); }

/// All subsets of [n] in binary counting order (the canonical subset order).
inline std::vector<SubsetQ> all_subsets(int n) {
    std::vector<SubsetQ> out;
    out.reserve(std::size_t{1} << n);
    for (std::uint32_t m = 0; m < (1u << n); ++m)
        out.push_back(SubsetQ::from_mask(n, m));
    return out;
}

}  // namespace lnflag
