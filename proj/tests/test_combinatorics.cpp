#include <catch2/catch_amalgamated.hpp>

#include "lnflag/exponent_seq.hpp"
#include "lnflag/subset.hpp"
#include "lnflag/twist.hpp"

using namespace lnflag;

namespace {
ExponentSeq seq(std::vector<int> v) { return ExponentSeq(std::move(v)); }
}  // namespace

TEST_CASE("grading of exponent sequences") {
    CHECK(ExponentSeq::unit(3).grading() == 6);
    CHECK(ExponentSeq().grading() == 0);
    CHECK(seq({2, 1}).grading() == 8);
    CHECK(seq({0, 0, 0}).is_zero());
    CHECK(seq({2, 1}).part_count() == 3);
}

TEST_CASE("exponent sequence arithmetic and order") {
    CHECK(seq({1, 2}) + seq({0, 1, 1}) == seq({1, 3, 1}));
    CHECK(seq({1, 2}) + seq({0, 1}) == seq({0, 1}) + seq({1, 2}));
    CHECK(seq({1, 3, 1}) - seq({0, 1, 1}) == seq({1, 2}));
    CHECK_THROWS_AS(seq({1}) - seq({2}), std::invalid_argument);
    CHECK_THROWS_AS(ExponentSeq({-1}), std::invalid_argument);

    // canonical order: grading first, then larger low-index entries first
    CHECK(seq({1}) < seq({2}));
    CHECK(seq({2}) < ExponentSeq::unit(2));
    CHECK(sequences_of_grading(4) ==
          std::vector<ExponentSeq>{seq({2}), ExponentSeq::unit(2)});
    CHECK(sequences_of_grading(6) ==
          std::vector<ExponentSeq>{seq({3}), seq({1, 1}), ExponentSeq::unit(3)});
    CHECK(sequences_of_grading(3).empty());
    CHECK(sequences_of_grading(0).size() == 1);
    // p(0..8) partial sums: 67 monomials up to grading 16
    CHECK(sequences_up_to_grading(16).size() == 67);
}

TEST_CASE("componentwise splittings") {
    auto below = componentwise_below(seq({2, 1}));
    CHECK(below.size() == 6);
    for (const auto& psi : below)
        CHECK(seq({2, 1}).dominates(psi));
}

TEST_CASE("subset intervals and type") {
    SubsetQ q(4, {1, 2, 4});
    REQUIRE(q.intervals().size() == 2);
    CHECK(q.intervals()[0].lo == 1);
    CHECK(q.intervals()[0].hi == 2);
    CHECK(q.intervals()[1].lo == 4);
    CHECK(q.intervals()[1].hi == 4);
    CHECK(q.type() == seq({1, 1}));

    CHECK(SubsetQ::empty(3).type().is_zero());
    CHECK(SubsetQ::full(5).type() == ExponentSeq::unit(5));

    // type is independent of the ambient size
    CHECK(SubsetQ(6, {1, 2, 4}).type() == q.type());

    CHECK_THROWS_AS(SubsetQ(3, {2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(SubsetQ(3, {0}), std::invalid_argument);
    CHECK_THROWS_AS(SubsetQ(3, {4}), std::invalid_argument);
}

TEST_CASE("type grading is twice the cardinality") {
    for (int n = 0; n <= 6; ++n)
        for (const SubsetQ& q : all_subsets(n))
            CHECK(q.type().grading() == 2 * q.size());
}

TEST_CASE("cell count is 2^n") {
    for (int n = 0; n <= 10; ++n)
        CHECK(all_subsets(n).size() == (std::size_t{1} << n));
}

TEST_CASE("h_set examples") {
    CHECK(h_set(TwistSeq({1, 0}), 2) == SubsetQ(2, {2}));
    CHECK(h_set(TwistSeq({0, 1}), 2) == SubsetQ(2, {1}));
    CHECK(h_set(TwistSeq::zero(3), 3) == SubsetQ::full(3));
}

TEST_CASE("apply_hQ examples and admissibility") {
    CHECK(apply_hQ(TwistSeq({1, 0}), SubsetQ::full(2)) == SubsetQ(2, {2}));
    SubsetQ q(4, {1, 2, 4});
    CHECK(apply_hQ(TwistSeq::zero(4), q) == q);
    CHECK_THROWS_AS(apply_hQ(TwistSeq({2}), SubsetQ::full(1)), InadmissibleTwist);
    CHECK_THROWS_AS(apply_hQ(TwistSeq({0, 1}), SubsetQ(2, {1})), std::invalid_argument);

    CHECK(is_admissible(TwistSeq({2, 0, 0, 0}), q));
    CHECK_FALSE(is_admissible(TwistSeq({0, 2, 0, 0}), q));
    CHECK_FALSE(is_admissible(TwistSeq({0, 0, 0, 2}), q));
}

TEST_CASE("apply_hQ equals Q intersect h_set for every admissible h") {
    for (int n = 1; n <= 6; ++n) {
        for (const SubsetQ& q : all_subsets(n)) {
            // all h in H(Q) with sum h_i <= n, enumerated over blocks
            for (const ExponentSeq& psi : sequences_up_to_grading(2 * n)) {
                for (const TwistSeq& h : enumerate_block(q, psi, BlockKind::H)) {
                    REQUIRE(is_admissible(h, q));
                    CHECK(apply_hQ(h, q) == q.intersect(h_set(h, n)));
                }
            }
        }
    }
}

TEST_CASE("positions removed by an admissible h count sum h_i") {
    for (int n = 1; n <= 6; ++n)
        for (const SubsetQ& q : all_subsets(n))
            for (const ExponentSeq& psi : sequences_up_to_grading(2 * n))
                for (const TwistSeq& h : enumerate_block(q, psi, BlockKind::H))
                    CHECK(q.size() - apply_hQ(h, q).size() == h.sum());
}

TEST_CASE("support_S examples") {
    SubsetQ q(4, {1, 2, 4});
    CHECK(support_S(TwistSeq::zero(4), q) == std::vector<int>{1, 2});
    CHECK(support_S(TwistSeq({2, 0, 0, 0}), q) == std::vector<int>{2});
    CHECK(support_S(TwistSeq({0, 0, 0, 1}), q) == std::vector<int>{1});
}

TEST_CASE("block enumeration examples") {
    CHECK(enumerate_block(SubsetQ::full(2), ExponentSeq::unit(1), BlockKind::K) ==
          std::vector<TwistSeq>{TwistSeq({1, 0})});
    CHECK(enumerate_block(SubsetQ::full(2), ExponentSeq::unit(1), BlockKind::H) ==
          std::vector<TwistSeq>{TwistSeq({1, 0}), TwistSeq({0, 1})});
    for (int n = 1; n <= 5; ++n)
        CHECK(enumerate_block(SubsetQ::full(n), ExponentSeq({2}), BlockKind::K).empty());
    CHECK(enumerate_block(SubsetQ::empty(3), ExponentSeq(), BlockKind::H).size() == 1);
    CHECK(enumerate_block(SubsetQ::empty(3), ExponentSeq::unit(1), BlockKind::H).empty());
}

TEST_CASE("K([n], omega) nonempty exactly at epsilon sequences") {
    for (int n = 1; n <= 6; ++n) {
        SubsetQ full = SubsetQ::full(n);
        for (const ExponentSeq& omega : sequences_up_to_grading(2 * n)) {
            auto block = enumerate_block(full, omega, BlockKind::K);
            bool epsilon_like = omega.part_count() <= 1 && omega.grading() <= 2 * n;
            if (epsilon_like)
                CHECK(block.size() == 1);
            else
                CHECK(block.empty());
        }
    }
}

TEST_CASE("blocks carry the grading of their index") {
    for (int n = 1; n <= 5; ++n)
        for (const SubsetQ& q : all_subsets(n))
            for (const ExponentSeq& psi : sequences_up_to_grading(2 * n))
                for (const TwistSeq& h : enumerate_block(q, psi, BlockKind::H))
                    CHECK(h.grading() == psi.grading());
}
