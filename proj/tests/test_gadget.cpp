#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lindisc/gadget.hpp"
#include "test_support.hpp"

using namespace lindisc;
using testsupport::rat;

namespace {

const Rational kFourThirds = rat(4, 3);
const Rational kTwo = rat(2);

Rational sum3(const std::array<Rational, 3> &u) { return u[0] + u[1] + u[2]; }

} // namespace

TEST_CASE("gadget matrix entries, symmetry and row sums") {
    const RMatrix &g = gadget_matrix();
    REQUIRE(g.rows() == 3);
    REQUIRE(g.cols() == 3);
    CHECK(g.row(0) == RVector{rat(1), rat(1), rat(-1)});
    CHECK(g.row(1) == RVector{rat(1), rat(-1), rat(1)});
    CHECK(g.row(2) == RVector{rat(-1), rat(1), rat(1)});
    for (std::size_t i = 0; i < 3; ++i) {
        Rational row_sum;
        for (std::size_t j = 0; j < 3; ++j) {
            CHECK(g.at(i, j) == g.at(j, i));
            row_sum += g.at(i, j);
        }
        CHECK(row_sum == rat(1));
    }
}

TEST_CASE("rounding the all-halves point") {
    GadgetRounding r = round_gadget({rat(1, 2), rat(1, 2), rat(1, 2)}, +1);
    CHECK(r.case_tag == GadgetCase::II);
    CHECK(r.z == std::array<int, 3>{0, 0, 0});
    CHECK(r.g_norm == rat(1, 2));
    CHECK(r.sum_dev == rat(3, 2));
    CHECK_FALSE(r.flipped);
}

TEST_CASE("rounding the all-ones point with negative sign") {
    GadgetRounding r = round_gadget({rat(1), rat(1), rat(1)}, -1);
    CHECK(r.z == std::array<int, 3>{1, 1, 1});
    CHECK(r.sum_dev == rat(0));
    CHECK(r.flipped);
}

TEST_CASE("a case III point, evaluated from the case formulas") {
    std::array<Rational, 3> u = {rat(0), rat(9, 10), rat(1)};
    GadgetRounding r = round_gadget(u, +1);
    CHECK(r.case_tag == GadgetCase::III);
    CHECK(r.z == std::array<int, 3>{0, 0, 1});
    // Sorted case III images: (u1+u2-u3+1, u1-u2+u3-1, -u1+u2+u3-1).
    Rational e1 = u[0] + u[1] - u[2] + rat(1);
    Rational e2 = u[0] - u[1] + u[2] - rat(1);
    Rational e3 = -u[0] + u[1] + u[2] - rat(1);
    Rational expect = std::max({e1.abs(), e2.abs(), e3.abs()});
    CHECK(r.g_norm == expect);
    CHECK(r.g_norm == rat(9, 10));
    CHECK(r.sum_dev == rat(9, 10));
}

TEST_CASE("case boundary conventions") {
    // Coordinate sum exactly 2 goes to case I.
    GadgetRounding boundary1 = round_gadget({rat(2, 3), rat(2, 3), rat(2, 3)}, +1);
    CHECK(boundary1.case_tag == GadgetCase::I);
    // -u1+u2+u3 exactly 4/3 goes to case II.
    GadgetRounding boundary2 = round_gadget({rat(0), rat(1, 3), rat(1)}, +1);
    CHECK(boundary2.case_tag == GadgetCase::II);
}

TEST_CASE("domain validation") {
    CHECK_THROWS_AS(round_gadget({rat(-1, 10), rat(0), rat(0)}, +1), DomainError);
    CHECK_THROWS_AS(round_gadget({rat(0), rat(0), rat(11, 10)}, +1), DomainError);
    CHECK_THROWS_AS(round_gadget({rat(0), rat(0), rat(1)}, 2), DomainError);
}

TEST_CASE("exhaustive 1/16 grid satisfies all three completeness bounds exactly") {
    for (int b : {+1, -1}) {
        for (int i = 0; i <= 16; ++i) {
            for (int j = 0; j <= 16; ++j) {
                for (int k = 0; k <= 16; ++k) {
                    std::array<Rational, 3> u = {rat(i, 16), rat(j, 16), rat(k, 16)};
                    GadgetRounding r = round_gadget(u, b);
                    CHECK(r.g_norm <= kFourThirds);
                    CHECK(Rational(b) * r.sum_dev >= rat(0));
                    CHECK(r.sum_dev.abs() <= kTwo);

                    // Exactly one case predicate fires on the sorted values.
                    std::array<Rational, 3> s = u;
                    if (r.flipped) {
                        s = {rat(1) - u[0], rat(1) - u[1], rat(1) - u[2]};
                    }
                    std::sort(s.begin(), s.end());
                    bool case1 = sum3(s) >= kTwo;
                    bool case2 = !case1 && s[1] + s[2] - s[0] <= kFourThirds;
                    bool case3 = !case1 && !case2;
                    GadgetCase expect =
                        case1 ? GadgetCase::I : (case2 ? GadgetCase::II : GadgetCase::III);
                    (void)case3;
                    CHECK(r.case_tag == expect);
                }
            }
        }
    }
}

TEST_CASE("complement symmetry on grid points with distinct coordinates") {
    for (int i = 0; i <= 16; ++i) {
        for (int j = 0; j <= 16; ++j) {
            for (int k = 0; k <= 16; ++k) {
                if (i == j || j == k || i == k) {
                    continue;
                }
                std::array<Rational, 3> u = {rat(i, 16), rat(j, 16), rat(k, 16)};
                std::array<Rational, 3> cu = {rat(16 - i, 16), rat(16 - j, 16), rat(16 - k, 16)};
                GadgetRounding plus = round_gadget(u, +1);
                GadgetRounding minus = round_gadget(cu, -1);
                CHECK(minus.z == std::array<int, 3>{1 - plus.z[0], 1 - plus.z[1], 1 - plus.z[2]});
                CHECK(minus.sum_dev == -plus.sum_dev);
                CHECK(minus.g_norm == plus.g_norm);
            }
        }
    }
}

TEST_CASE("soundness at the half point: constant z reach 1/2, all others exactly 3/2") {
    SoundnessReport report = check_gadget_soundness();
    CHECK(report.constant_norm == rat(1, 2));
    CHECK(report.min_nonconstant_norm == rat(3, 2));
    for (const auto &e : report.entries) {
        bool constant = e.z[0] == e.z[1] && e.z[1] == e.z[2];
        CHECK(e.norm == (constant ? rat(1, 2) : rat(3, 2)));
    }
    // The (1,1,0) row image from the soundness argument.
    const auto &entry110 = report.entries[3]; // code 3 = (1,1,0)
    REQUIRE(entry110.z == std::array<int, 3>{1, 1, 0});
    CHECK(entry110.image == RVector{rat(-3, 2), rat(1, 2), rat(1, 2)});
    // And its mirror (0,1,1) by direct evaluation.
    const auto &entry011 = report.entries[6];
    REQUIRE(entry011.z == std::array<int, 3>{0, 1, 1});
    CHECK(entry011.norm == rat(3, 2));
}
