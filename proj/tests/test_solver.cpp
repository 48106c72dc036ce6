#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lindisc/gadget.hpp"
#include "lindisc/reduction.hpp"
#include "lindisc/solver.hpp"
#include "test_support.hpp"

using namespace lindisc;
using testsupport::rat;

namespace {

Clause clause(int a, int b, int c) {
    auto lit = [](int l) { return Literal{l > 0 ? l : -l, l > 0 ? +1 : -1}; };
    return Clause{{lit(a), lit(b), lit(c)}};
}

NaeFormula formula(int n, std::initializer_list<Clause> clauses) {
    NaeFormula f;
    f.n = n;
    f.clauses = clauses;
    return f;
}

RMatrix single_row(std::initializer_list<Rational> entries) {
    RVector v(entries);
    RMatrix a(1, v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i) {
        a.at(0, i) = v[i];
    }
    return a;
}

RMatrix random_small_matrix(std::mt19937_64 &gen, std::size_t max_cols) {
    std::uniform_int_distribution<std::size_t> rows(1, 6);
    std::uniform_int_distribution<std::size_t> cols(1, max_cols);
    std::uniform_int_distribution<int> entry(0, 3);
    const Rational choices[4] = {rat(-1), rat(0), rat(1), rat(1, 3)};
    RMatrix a(rows(gen), cols(gen));
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            a.at(i, j) = choices[entry(gen)];
        }
    }
    return a;
}

} // namespace

TEST_CASE("inner value of the coupling matrix at the half point") {
    InnerResult res = lindisc_at(gadget_matrix(), RVector::constant(3, rat(1, 2)));
    CHECK(res.value == rat(1, 2));
    CHECK(res.argmin_x == std::vector<int>{0, 0, 0});

    // Oracle: full sweep of the 8 candidates.
    auto naive = testsupport::naive_lindisc_at(gadget_matrix(), RVector::constant(3, rat(1, 2)));
    CHECK(naive.value == res.value);
    CHECK(naive.argmin == res.argmin_x);
}

TEST_CASE("binary points have inner value zero with themselves as argmin") {
    ReducedInstance inst = build_np_matrix(formula(2, {clause(1, 1, 2)}));
    RVector w{rat(1), rat(0), rat(1), rat(0), rat(1), rat(0)};
    InnerResult res = lindisc_at(inst.matrix, w);
    CHECK(res.value == rat(0));
    CHECK(res.argmin_x == std::vector<int>{1, 0, 1, 0, 1, 0});
}

TEST_CASE("single-row example enumerated by hand") {
    RMatrix a = single_row({rat(1), rat(1)});
    InnerResult res = lindisc_at(a, RVector{rat(3, 10), rat(4, 10)});
    CHECK(res.value == rat(3, 10));
    // Candidate sums are 0, 1, 1, 2 against 7/10; code 1 = (1,0) wins ties first.
    CHECK(res.argmin_x == std::vector<int>{1, 0});
}

TEST_CASE("lindisc_at input validation") {
    RMatrix a = single_row({rat(1), rat(1)});
    CHECK_THROWS_AS(lindisc_at(a, RVector{rat(1, 2)}), DimensionError);
    CHECK_THROWS_AS(lindisc_at(a, RVector{rat(1, 2), rat(3, 2)}), DomainError);
    CHECK_THROWS_AS(lindisc_at(a, RVector{rat(1, 2), rat(1, 2)}, 1), CapacityError);
    CHECK_THROWS_AS(lindisc_at(RMatrix(0, 0), RVector{}), DimensionError);
}

TEST_CASE("pruned search equals the naive sweep on random matrices") {
    std::mt19937_64 gen(424242);
    testsupport::RationalGen points(11);
    for (int trial = 0; trial < 25; ++trial) {
        RMatrix a = random_small_matrix(gen, 8);
        RVector w = points.unit_vector(a.cols());
        InnerResult fast = lindisc_at(a, w);
        auto naive = testsupport::naive_lindisc_at(a, w);
        CHECK(fast.value == naive.value);
        CHECK(fast.argmin_x == naive.argmin);
    }
}

TEST_CASE("inner value is a lower bound over random binary roundings") {
    testsupport::RationalGen points(13);
    ReducedInstance inst = build_np_matrix(formula(2, {clause(1, -2, 2)}));
    RVector w = points.unit_vector(6);
    InnerResult res = lindisc_at(inst.matrix, w);
    for (int trial = 0; trial < 100; ++trial) {
        RVector x = points.binary_vector(6);
        CHECK(res.value <= inf_norm(mat_vec_mul(inst.matrix, w - x)));
    }
}

TEST_CASE("scale equivariance of the inner value") {
    testsupport::RationalGen points(21);
    RMatrix a = single_row({rat(1), rat(-1), rat(1, 3)});
    RMatrix b(3, 3);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            b.at(i, j) = gadget_matrix().at(i, j);
        }
    }
    for (const Rational &c : {rat(-2, 3), rat(3), rat(-1)}) {
        for (const RMatrix *mat : {&a, &b}) {
            RMatrix scaled(mat->rows(), mat->cols());
            for (std::size_t i = 0; i < mat->rows(); ++i) {
                for (std::size_t j = 0; j < mat->cols(); ++j) {
                    scaled.at(i, j) = c * mat->at(i, j);
                }
            }
            RVector w = points.unit_vector(mat->cols());
            InnerResult plain = lindisc_at(*mat, w);
            InnerResult scaled_res = lindisc_at(scaled, w);
            CHECK(scaled_res.value == c.abs() * plain.value);
            CHECK(scaled_res.argmin_x == plain.argmin_x);
        }
    }
}

TEST_CASE("lipschitz constants") {
    CHECK(lipschitz_constant(gadget_matrix()) == rat(3));
    CHECK(lipschitz_constant(RMatrix::identity(5)) == rat(1));
    CHECK(lipschitz_constant(single_row({rat(1, 3), rat(-1, 3), rat(1, 3)})) == rat(1));
    // Clause row of a reduced instance: magnitude 1/3 entries over three copies.
    ReducedInstance inst = build_np_matrix(formula(3, {clause(1, -2, 3)}));
    Rational row_l1;
    for (std::size_t c = 0; c < inst.matrix.cols(); ++c) {
        row_l1 += inst.matrix.at(0, c).abs();
    }
    CHECK(row_l1 == rat(3));
    CHECK(lipschitz_constant(inst.matrix) == rat(3));
}

TEST_CASE("global search on the 1x1 all-ones matrix") {
    Certificate cert = lindisc_global(single_row({rat(1)}), rat(1, 100));
    CHECK(cert.complete);
    CHECK(cert.lo <= rat(1, 2));
    CHECK(cert.hi >= rat(1, 2));
    CHECK(cert.hi - cert.lo <= rat(1, 100));
    REQUIRE(cert.witness_w.dim() == 1);
    // The deep hole is the midpoint; the witness value equals lo.
    CHECK(lindisc_at(single_row({rat(1)}), cert.witness_w).value == cert.lo);
}

TEST_CASE("global search on the 2x2 identity") {
    Certificate cert = lindisc_global(RMatrix::identity(2), rat(1, 20));
    CHECK(cert.complete);
    CHECK(cert.lo <= rat(1, 2));
    CHECK(cert.hi >= rat(1, 2));
    CHECK(cert.hi - cert.lo <= rat(1, 20));
    CHECK(grid_oracle(RMatrix::identity(2), 2) <= cert.hi);
}

TEST_CASE("global search bounds a small YES instance by 4/3 plus slack") {
    // v1 appears twice positive, once negated: always NAE-satisfiable.
    ReducedInstance inst = build_np_matrix(formula(1, {clause(1, 1, -1)}));
    Certificate cert = lindisc_global(inst.matrix, rat(1, 10));
    CHECK(cert.complete);
    CHECK(cert.hi <= rat(4, 3) + rat(1, 10));
    CHECK(cert.lo <= rat(4, 3));
}

TEST_CASE("certificates serialize to the key=value line") {
    Certificate cert = lindisc_global(single_row({rat(1)}), rat(1, 4));
    std::string line = cert.to_line();
    CHECK(line.find("lo=") == 0);
    CHECK(line.find(" hi=") != std::string::npos);
    CHECK(line.find(" eps=1/4") != std::string::npos);
    CHECK(line.find(" nodes=") != std::string::npos);
    CHECK(line.find(" w=") != std::string::npos);

    // Determinism: identical runs give identical certificates.
    CHECK(lindisc_global(single_row({rat(1)}), rat(1, 4)).to_line() == line);
}

TEST_CASE("certify_upper proves a YES instance and refutes a NO instance") {
    ReducedInstance yes_inst = build_np_matrix(formula(1, {clause(1, 1, -1)}));
    CertifyResult proved = certify_upper(yes_inst.matrix, rat(4, 3), rat(1, 20));
    CHECK(proved.status == CertifyStatus::Proved);
    CHECK(proved.certificate.complete);
    CHECK(proved.certificate.hi == rat(4, 3) + rat(1, 20));

    ReducedInstance no_inst = build_np_matrix(formula(1, {clause(1, 1, 1)}));
    CertifyResult refuted = certify_upper(no_inst.matrix, rat(4, 3), rat(1, 20));
    CHECK(refuted.status == CertifyStatus::Refuted);
    REQUIRE(refuted.refutation_w.has_value());
    REQUIRE(refuted.refutation_value.has_value());
    CHECK(*refuted.refutation_value > rat(4, 3));
    CHECK(lindisc_at(no_inst.matrix, *refuted.refutation_w).value == *refuted.refutation_value);
    // The half point alone already sits at 3/2.
    CHECK(lindisc_at(no_inst.matrix, RVector::constant(3, rat(1, 2))).value >= rat(3, 2));
}

TEST_CASE("certify_upper is immediate at threshold L/2") {
    const RMatrix &a = gadget_matrix();
    Rational half_l = lipschitz_constant(a) * rat(1, 2);
    CertifyResult res = certify_upper(a, half_l, rat(1, 100));
    CHECK(res.status == CertifyStatus::Proved);
    CHECK(res.certificate.nodes < 200);
}

TEST_CASE("node budget exhaustion is reported, not silently truncated") {
    ReducedInstance inst = build_np_matrix(formula(2, {clause(1, 1, 2)}));
    BnbOptions tiny;
    tiny.node_budget = 3;
    Certificate cert = lindisc_global(inst.matrix, rat(1, 1000), tiny);
    CHECK_FALSE(cert.complete);
    CHECK(cert.lo <= cert.hi);

    CertifyResult res = certify_upper(inst.matrix, rat(4, 3), rat(1, 1000), tiny);
    CHECK(res.status == CertifyStatus::Indeterminate);
    CHECK_FALSE(res.certificate.complete);
}

TEST_CASE("branch-and-bound capacity and eps validation") {
    RMatrix wide(1, 13);
    for (std::size_t j = 0; j < 13; ++j) {
        wide.at(0, j) = rat(1);
    }
    CHECK_THROWS_AS(lindisc_global(wide, rat(1, 10)), CapacityError);
    CHECK_THROWS_AS(lindisc_global(single_row({rat(1)}), rat(0)), DomainError);
    CHECK_THROWS_AS(certify_upper(wide, rat(1), rat(1, 10)), CapacityError);
}

TEST_CASE("grid oracle basics") {
    CHECK(grid_oracle(RMatrix::identity(2), 2) == rat(1, 2));
    CHECK(grid_oracle(gadget_matrix(), 1) == rat(0));
    ReducedInstance no_inst = build_np_matrix(formula(1, {clause(1, 1, 1)}));
    CHECK(grid_oracle(no_inst.matrix, 2) >= rat(3, 2));
    CHECK_THROWS_AS(grid_oracle(RMatrix::identity(2), 0), DomainError);
    CHECK_THROWS_AS(grid_oracle(RMatrix::identity(12), 40), CapacityError);
}

TEST_CASE("grid oracle never decreases along grid refinements") {
    ReducedInstance inst = build_np_matrix(formula(1, {clause(1, 1, -1)}));
    Rational coarse = grid_oracle(inst.matrix, 2);
    Rational fine = grid_oracle(inst.matrix, 4);
    Rational finer = grid_oracle(inst.matrix, 8);
    CHECK(coarse <= fine);
    CHECK(fine <= finer);

    // And it always stays below a complete certificate's upper bound.
    Certificate cert = lindisc_global(inst.matrix, rat(1, 10));
    CHECK(finer <= cert.hi);
}
