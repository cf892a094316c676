#include <catch2/catch_amalgamated.hpp>

#include "lnflag/geometric.hpp"
#include "lnflag/verify.hpp"

using namespace lnflag;

namespace {
const GPoly g1 = GPoly::generator(1);
const GPoly g2 = GPoly::generator(2);
const ExponentSeq e1 = ExponentSeq::unit(1);
const ExponentSeq e2 = ExponentSeq::unit(2);
}  // namespace

TEST_CASE("twisted class evaluation") {
    SubsetQ q124(4, {1, 2, 4});
    CHECK(eval_twisted(TwistedClass(q124, {0, 0}, q124), q124) ==
          GPoly::monomial(q124.type()));

    SubsetQ full2 = SubsetQ::full(2);
    CHECK(eval_twisted(TwistedClass(SubsetQ(2, {2}), {1}, full2), full2) == 2 * g1);
    CHECK(eval_twisted(TwistedClass(SubsetQ(2, {2}), {1}, full2), full2) ==
          series_power_component(2, 1));

    for (int n = 1; n <= 8; ++n)
        for (int m = 0; m <= n; ++m) {
            std::vector<int> rest;
            for (int i = m + 1; i <= n; ++i)
                rest.push_back(i);
            CHECK(eval_twisted(TwistedClass(SubsetQ(n, rest), {m}, SubsetQ::full(n)),
                               SubsetQ::full(n)) == series_power_component(m + 1, n - m));
        }

    CHECK_THROWS_AS(TwistedClass(SubsetQ(2, {2}), {3}, SubsetQ::full(2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(TwistedClass(SubsetQ(2, {2}), {1, 1}, SubsetQ::full(2)),
                    std::invalid_argument);
}

TEST_CASE("geometric right action") {
    CHECK(geom_act_right(SubsetQ::full(2), e1) == 2 * g1);
    CHECK(geom_act_right(SubsetQ(4, {1, 2, 4}), e1) == 2 * g1 * g1 + g2);
    for (int n = 1; n <= 8; ++n)
        for (const ExponentSeq& omega : sequences_up_to_grading(2 * n))
            if (omega.part_count() > 1)
                CHECK(geom_act_right(SubsetQ::full(n), omega).is_zero());
}

TEST_CASE("geometric left action") {
    CHECK(geom_act_left(SubsetQ::full(2), e1) == 2 * g1);
    CHECK(geom_act_left(SubsetQ::full(1), e2).is_zero());
    for (int n = 1; n <= 6; ++n)
        for (int m = 1; m <= n; ++m)
            CHECK(geom_act_left(SubsetQ::full(n), ExponentSeq::unit(m)) ==
                  (n - m + 1) * GPoly::generator(n - m));
}

TEST_CASE("combined action reduces to the one-sided ones") {
    for (int n = 1; n <= 4; ++n)
        for (const SubsetQ& q : all_subsets(n))
            for (const ExponentSeq& op : sequences_up_to_grading(2 * n)) {
                CHECK(geom_act_both(q, op, ExponentSeq()) == geom_act_left(q, op));
                CHECK(geom_act_both(q, ExponentSeq(), op) == geom_act_right(q, op));
            }
    CHECK(geom_act_both(SubsetQ(4, {1, 2, 4}), ExponentSeq(), ExponentSeq()) ==
          GPoly::monomial(SubsetQ(4, {1, 2, 4}).type()));
    CHECK(geom_act_both(SubsetQ::full(2), e1, e1) ==
          char_number(SubsetQ::full(2), e1, e1));
}

TEST_CASE("coproduct realization") {
    CHECK(geom_coproduct(SubsetQ::full(1)) == coproduct(g1));
    CHECK(geom_coproduct(SubsetQ::full(2)) == coproduct(g2));
    CHECK(geom_coproduct(SubsetQ::empty(3)) == GTensor::unit());
}

TEST_CASE("antipode realization") {
    CHECK(geom_antipode(SubsetQ::full(1)) == -g1);
    CHECK(geom_antipode(SubsetQ::full(2)) == 2 * g1 * g1 - g2);
    CHECK(geom_antipode(SubsetQ(3, {1, 3})) == g1 * g1);
}

TEST_CASE("realization sweep") {
    VerifyReport rep = verify_realization(4, 5);
    for (const auto& r : rep.records) {
        INFO(r.operation << " @ " << r.input << " : " << r.detail);
        CHECK(r.pass);
    }
}

TEST_CASE("three-path agreement, small") {
    VerifyReport rep = verify_three_path(3);
    CHECK(rep.checked() > 0);
    for (const auto& r : rep.records) {
        INFO(r.operation << " @ " << r.input << " : " << r.detail);
        CHECK(r.pass);
    }
}

TEST_CASE("closed form of the left action on epsilon(m)") {
    VerifyReport rep = verify_left_closed_form(5, 5);
    for (const auto& r : rep.records) {
        INFO(r.operation << " @ " << r.input << " : " << r.detail);
        CHECK(r.pass);
    }
}

TEST_CASE("projective projection coefficients") {
    ProjectionCoefficients sc = projection_coefficients(2, 1);
    REQUIRE(sc.left.size() == 3);
    CHECK(sc.left[0] == g2);
    CHECK(sc.left[1] == g1);
    CHECK(sc.left[2] == GPoly::one());

    ProjectionCoefficients sc2 = projection_coefficients(2, 2);
    REQUIRE(sc2.left.size() == 2);
    CHECK(sc2.left[0] == g2);
    CHECK(sc2.left[1] == g1);

    CHECK_THROWS_AS(projection_coefficients(2, 3), std::invalid_argument);

    VerifyReport rep = verify_projection(8);
    for (const auto& r : rep.records) {
        INFO(r.operation << " @ " << r.input << " : " << r.detail);
        CHECK(r.pass);
    }
}

TEST_CASE("goldens suite") {
    VerifyReport rep = verify_goldens();
    for (const auto& r : rep.records) {
        INFO(r.operation << " @ " << r.input << " : " << r.detail);
        CHECK(r.pass);
    }
}
