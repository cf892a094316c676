#pragma once

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lnflag/exponent_seq.hpp"
#include "lnflag/subset.hpp"

namespace lnflag {

/// Nonnegative integer sequence h = (h_1, ..., h_n), supported on a reference
/// subset Q for membership in H(Q).  Its grading is |h| = 2*sum h_i (each
/// entry h_i counts as a single part of size h_i, unlike ExponentSeq).
class TwistSeq {
public:
    TwistSeq() = default;

    explicit TwistSeq(std::vector<int> entries) : entries_(std::move(entries)) {
        for (int e : entries_)
            if (e < 0)
                throw std::invalid_argument("TwistSeq: negative entry");
    }

    static TwistSeq zero(int n) { return TwistSeq(std::vector<int>(static_cast<std::size_t>(n), 0)); }

    int ambient() const { return static_cast<int>(entries_.size()); }

    /// 1-based access; indices beyond the stored range read as 0.
    int at(int i) const {
        if (i < 1 || i > ambient())
            return 0;
        return entries_[static_cast<std::size_t>(i) - 1];
    }

    int sum() const {
        int s = 0;
        for (int e : entries_)
            s += e;
        return s;
    }

    /// |h| = 2 * sum h_i.
    int grading() const { return 2 * sum(); }

    bool is_zero() const { return sum() == 0; }

    bool is_supported_on(const SubsetQ& q) const {
        for (int i = 1; i <= ambient(); ++i)
            if (at(i) != 0 && !q.contains(i))
                return false;
        return true;
    }

    TwistSeq operator+(const TwistSeq& o) const {
        std::vector<int> e(std::max(entries_.size(), o.entries_.size()), 0);
        for (std::size_t i = 0; i < e.size(); ++i)
            e[i] = at(static_cast<int>(i) + 1) + o.at(static_cast<int>(i) + 1);
        return TwistSeq(std::move(e));
    }

    bool operator==(const TwistSeq& o) const {
        int m = std::max(ambient(), o.ambient());
        for (int i = 1; i <= m; ++i)
            if (at(i) != o.at(i))
                return false;
        return true;
    }
    bool operator!=(const TwistSeq& o) const { return !(*this == o); }

    const std::vector<int>& entries() const { return entries_; }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (i)
                s += ',';
            s += std::to_string(entries_[i]);
        }
        return s + ")";
    }

private:
    std::vector<int> entries_;
};

struct InadmissibleTwist : std::domain_error {
    explicit InadmissibleTwist(const std::string& what) : std::domain_error(what) {}
};

/// Admissibility of h for Q: within every maximal interval [a,b] of Q,
/// sum_{i=l..b} h_i <= b-l+1 for all a <= l <= b.  Inadmissible sequences
/// index vanishing classes and are excluded from every block enumeration.
inline bool is_admissible(const TwistSeq& h, const SubsetQ& q) {
    for (const SubsetQ::Interval& iv : q.intervals()) {
        int tail = 0;
        for (int l = iv.hi; l >= iv.lo; --l) {
            tail += h.at(l);
            if (tail > iv.hi - l + 1)
                return false;
        }
    }
    return true;
}

/// h[n] = { m in [n] : sum_{i=l..m} h_i < m-l+1 for all l <= m }.
inline SubsetQ h_set(const TwistSeq& h, int n) {
    std::vector<int> elems;
    for (int m = 1; m <= n; ++m) {
        bool in = true;
        int s = 0;
        for (int l = m; l >= 1 && in; --l) {
            s += h.at(l);
            if (s >= m - l + 1)
                in = false;
        }
        if (in)
            elems.push_back(m);
    }
    return SubsetQ(n, std::move(elems));
}

/// hQ = Q n h[n] for admissible h in H(Q).
inline SubsetQ apply_hQ(const TwistSeq& h, const SubsetQ& q) {
    if (!h.is_supported_on(q))
        throw std::invalid_argument("apply_hQ: sequence not supported on Q");
    if (!is_admissible(h, q))
        throw InadmissibleTwist("apply_hQ: inadmissible twist sequence " + h.str() +
                                " for " + q.str());
    return q.intersect(h_set(h, q.ambient()));
}

/// S(h) = { j : I(j) n hQ nonempty }, 1-based interval indices.
inline std::vector<int> support_S(const TwistSeq& h, const SubsetQ& q) {
    SubsetQ hq = apply_hQ(h, q);
    std::vector<int> out;
    const auto& ivs = q.intervals();
    for (std::size_t j = 0; j < ivs.size(); ++j) {
        bool hit = false;
        for (int i = ivs[j].lo; i <= ivs[j].hi && !hit; ++i)
            hit = hq.contains(i);
        if (hit)
            out.push_back(static_cast<int>(j) + 1);
    }
    return out;
}

enum class BlockKind { H, K };

namespace detail {
// Placement-list order: compare the sorted lists of (position, value) pairs
// lexicographically.
inline bool placement_less(const TwistSeq& a, const TwistSeq& b) {
    int m = std::max(a.ambient(), b.ambient());
    std::vector<std::pair<int, int>> pa, pb;
    for (int i = 1; i <= m; ++i) {
        if (a.at(i))
            pa.emplace_back(i, a.at(i));
        if (b.at(i))
            pb.emplace_back(i, b.at(i));
    }
    return pa < pb;
}
}  // namespace detail

/// The block H(Q,psi) (or K(Q,psi)): all admissible sequences with psi_i
/// entries equal to i for each i >= 1, all other entries zero, supported on Q
/// (H) or only on the interval starts a(j) (K).  Empty when psi is
/// incompatible with Q.
inline std::vector<TwistSeq> enumerate_block(const SubsetQ& q, const ExponentSeq& psi,
                                             BlockKind kind) {
    std::vector<int> positions;
    if (kind == BlockKind::H) {
        positions = q.elements();
    } else {
        for (const auto& iv : q.intervals())
            positions.push_back(iv.lo);
    }

    int n = q.ambient();
    std::vector<TwistSeq> out;
    std::vector<int> cur(static_cast<std::size_t>(n), 0);
    std::vector<bool> used(positions.size(), false);

    // Assign positions for one value class at a time.
    std::function<void(int)> place = [&](int value) {
        if (value > psi.max_index()) {
            TwistSeq h{cur};
            if (is_admissible(h, q))
                out.push_back(std::move(h));
            return;
        }
        int count = psi.at(value);
        if (count == 0) {
            place(value + 1);
            return;
        }
        // choose `count` unused positions for entries equal to `value`
        std::vector<int> chosen;
        std::function<void(std::size_t)> choose = [&](std::size_t from) {
            if (static_cast<int>(chosen.size()) == count) {
                place(value + 1);
                return;
            }
            for (std::size_t p = from; p < positions.size(); ++p) {
                if (used[p])
                    continue;
                used[p] = true;
                cur[static_cast<std::size_t>(positions[p]) - 1] = value;
                chosen.push_back(positions[p]);
                choose(p + 1);
                chosen.pop_back();
                cur[static_cast<std::size_t>(positions[p]) - 1] = 0;
                used[p] = false;
            }
        };
        choose(0);
    };
    place(1);

    std::sort(out.begin(), out.end(), detail::placement_less);
    return out;
}

}  // namespace lnflag
