#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lindisc/linalg.hpp"

namespace lindisc {

inline constexpr int kDefaultInnerLimit = 24;

// Exact min over binary x of ||A(w - x)||_inf, with the lowest-code argmin.
struct InnerResult {
    Rational value;
    std::vector<int> argmin_x;
    std::uint64_t nodes_explored = 0;
};

// Depth-first search over x with per-row bound pruning: a branch dies when
// some row's value is already forced outside (-best, best) by the assigned
// coordinates. Requires w in [0,1]^n and at most max_cols columns.
InnerResult lindisc_at(const RMatrix &a, const RVector &w, int max_cols = kDefaultInnerLimit);

// max_j ||row_j||_1; bounds |lindisc(A,w) - lindisc(A,w')| by L ||w - w'||_inf.
Rational lipschitz_constant(const RMatrix &a);

struct BnbOptions {
    std::uint64_t node_budget = 10'000'000;
    int max_cols = 12;
    int inner_max_cols = kDefaultInnerLimit;
    // Per-box bound: min over binary x of the box-wide row maximum. Much
    // tighter than center + L*radius once a box sits inside one rounding
    // cell; the Lipschitz bound is always taken as a fallback.
    bool interval_bound = true;
};

// Enclosure lo <= lindisc(A) <= hi with lindisc(A, witness_w) = lo.
// complete is false when the node budget ran out before hi - lo <= eps.
struct Certificate {
    Rational lo;
    Rational hi;
    RVector witness_w;
    Rational eps;
    std::uint64_t nodes = 0;
    Rational lipschitz;
    bool complete = true;

    std::string to_line() const;
};

// Global maximization of lindisc(A, .) over the cube by best-first
// branch-and-bound on boxes; midpoint split along the longest axis.
Certificate lindisc_global(const RMatrix &a, const Rational &eps, const BnbOptions &opt = {});

enum class CertifyStatus { Proved, Refuted, Indeterminate };

std::string to_string(CertifyStatus s);

struct CertifyResult {
    CertifyStatus status = CertifyStatus::Indeterminate;
    Certificate certificate;
    // Present on Refuted: a point with lindisc_at(A, w) > threshold.
    std::optional<RVector> refutation_w;
    std::optional<Rational> refutation_value;
};

// Decides lindisc(A) <= threshold + eps, pruning boxes certified under that
// bar. Proved means every box was pruned; Refuted carries a witness point
// exceeding the threshold; Indeterminate means the budget ran out.
CertifyResult certify_upper(const RMatrix &a, const Rational &threshold, const Rational &eps,
                            const BnbOptions &opt = {});

inline constexpr std::uint64_t kDefaultGridPointLimit = std::uint64_t{1} << 22;

// max of lindisc_at over the uniform grid {0, 1/res, ..., 1}^n: a certified
// lower bound on lindisc(A), monotone in res along refinements.
Rational grid_oracle(const RMatrix &a, int resolution,
                     std::uint64_t max_points = kDefaultGridPointLimit);

} // namespace lindisc
