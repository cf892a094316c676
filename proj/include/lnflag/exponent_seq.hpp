#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace lnflag {

/// Eventually-zero sequence of nonnegative integers (w_1, w_2, ...).
///
/// Indexes the monomial b^w = b_1^{w_1} b_2^{w_2} ...; read as a partition it
/// has w_i parts equal to i.  Grading is |w| = 2*sum(i*w_i).  Stored dense
/// with trailing zeros trimmed, so equal sequences compare equal bytewise.
class ExponentSeq {
public:
    ExponentSeq() = default;

    explicit ExponentSeq(std::vector<int> entries) : entries_(std::move(entries)) {
        for (int e : entries_)
            if (e < 0)
                throw std::invalid_argument("ExponentSeq: negative multiplicity");
        trim();
    }

    /// epsilon(m): the sequence with a single entry w_m = 1.
    static ExponentSeq unit(int m) {
        if (m < 1)
            throw std::invalid_argument("ExponentSeq::unit: index must be >= 1");
        std::vector<int> e(static_cast<std::size_t>(m), 0);
        e[static_cast<std::size_t>(m) - 1] = 1;
        return ExponentSeq(std::move(e));
    }

    /// 1-based access; indices beyond the stored range read as 0.
    int at(int index) const {
        if (index < 1 || index > static_cast<int>(entries_.size()))
            return 0;
        return entries_[static_cast<std::size_t>(index) - 1];
    }

    int max_index() const { return static_cast<int>(entries_.size()); }
    bool is_zero() const { return entries_.empty(); }

    /// |w| = 2 * sum i*w_i.
    int grading() const {
        int g = 0;
        for (int i = 0; i < static_cast<int>(entries_.size()); ++i)
            g += (i + 1) * entries_[static_cast<std::size_t>(i)];
        return 2 * g;
    }

    /// Number of parts, sum w_i.
    int part_count() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

    ExponentSeq operator+(const ExponentSeq& o) const {
        std::vector<int> e(std::max(entries_.size(), o.entries_.size()), 0);
        for (std::size_t i = 0; i < e.size(); ++i)
            e[i] = at(static_cast<int>(i) + 1) + o.at(static_cast<int>(i) + 1);
        return ExponentSeq(std::move(e));
    }

    /// Componentwise difference; requires o <= *this componentwise.
    ExponentSeq operator-(const ExponentSeq& o) const {
        std::vector<int> e(entries_.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            int v = at(static_cast<int>(i) + 1) - o.at(static_cast<int>(i) + 1);
            if (v < 0)
                throw std::invalid_argument("ExponentSeq: difference not componentwise nonnegative");
            e[i] = v;
        }
        if (o.max_index() > max_index())
            throw std::invalid_argument("ExponentSeq: difference not componentwise nonnegative");
        return ExponentSeq(std::move(e));
    }

    bool dominates(const ExponentSeq& o) const {
        for (int i = 1; i <= std::max(max_index(), o.max_index()); ++i)
            if (at(i) < o.at(i))
                return false;
        return true;
    }

    bool operator==(const ExponentSeq& o) const { return entries_ == o.entries_; }
    bool operator!=(const ExponentSeq& o) const { return !(*this == o); }

    /// Canonical order: grading ascending, then entrywise from index 1 with
    /// the larger entry first (so b_1^2 precedes b_2 in grading 4).
    bool operator<(const ExponentSeq& o) const {
        int ga = grading(), gb = o.grading();
        if (ga != gb)
            return ga < gb;
        int m = std::max(max_index(), o.max_index());
        for (int i = 1; i <= m; ++i)
            if (at(i) != o.at(i))
                return at(i) > o.at(i);
        return false;
    }

    const std::vector<int>& entries() const { return entries_; }

    std::string str() const {
        if (entries_.empty())
            return "0";
        std::string s;
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (i)
                s += ',';
            s += std::to_string(entries_[i]);
        }
        return s;
    }

private:
    void trim() {
        while (!entries_.empty() && entries_.back() == 0)
            entries_.pop_back();
    }

    std::vector<int> entries_;
};

namespace detail {
inline void gen_partitions(int remaining, int max_part, std::vector<int>& mult,
                           std::vector<ExponentSeq>& out) {
    if (remaining == 0) {
        out.emplace_back(mult);
        return;
    }
    if (max_part == 0)
        return;
    for (int c = remaining / max_part; c >= 0; --c) {
        mult[static_cast<std::size_t>(max_part) - 1] = c;
        gen_partitions(remaining - c * max_part, max_part - 1, mult, out);
        mult[static_cast<std::size_t>(max_part) - 1] = 0;
    }
}
}  // namespace detail

/// All sequences of the given grading, in canonical order.  Odd gradings have
/// none; grading 0 has exactly the zero sequence.
inline std::vector<ExponentSeq> sequences_of_grading(int grading) {
    if (grading < 0 || grading % 2 != 0)
        return {};
    int w = grading / 2;
    std::vector<ExponentSeq> out;
    std::vector<int> mult(static_cast<std::size_t>(std::max(w, 1)), 0);
    detail::gen_partitions(w, w, mult, out);
    std::sort(out.begin(), out.end());
    return out;
}

/// All sequences of grading <= bound, in canonical order.
inline std::vector<ExponentSeq> sequences_up_to_grading(int bound) {
    std::vector<ExponentSeq> out;
    for (int g = 0; g <= bound; g += 2) {
        auto part = sequences_of_grading(g);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

/// All psi with psi_i <= w_i componentwise (the Cartan splittings psi + (w-psi) = w).
inline std::vector<ExponentSeq> componentwise_below(const ExponentSeq& w) {
    std::vector<ExponentSeq> out;
    std::vector<int> cur(static_cast<std::size_t>(std::max(w.max_index(), 1)), 0);
    std::function<void(int)> rec = [&](int i) {
        if (i > w.max_index()) {
            out.emplace_back(cur);
            return;
        }
        for (int v = 0; v <= w.at(i); ++v) {
            cur[static_cast<std::size_t>(i) - 1] = v;
            rec(i + 1);
        }
        cur[static_cast<std::size_t>(i) - 1] = 0;
    };
    rec(1);
    return out;
}

}  // namespace lnflag
