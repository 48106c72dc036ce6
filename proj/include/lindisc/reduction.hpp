#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "lindisc/gadget.hpp"
#include "lindisc/linalg.hpp"
#include "lindisc/nae_sat.hpp"

namespace lindisc {

enum class ReductionKind { NP, PI2 };

std::string to_string(ReductionKind k);

// A formula compiled to its discrepancy matrix. NP instances are
// (m + 3n) x 3n; PI2 instances add n' columns and 2n' rows. The source
// formula rides along so downstream verifiers never re-parse.
struct ReducedInstance {
    ReductionKind kind{};
    RMatrix matrix;
    int n = 0;
    int m = 0;
    int n_prime = 0;
    QuantifiedNaeFormula source;
};

// A (3n + n')-dimensional point split into the three variable copies plus
// the quantifier column block (empty for NP instances).
struct BlockView {
    RVector w1, w2, w3, w_star;

    static BlockView from_flat(const RVector &flat, int n, int n_prime);
    RVector to_flat() const;
    RVector w_sum() const;

    int n() const { return static_cast<int>(w1.dim()); }
    int n_prime() const { return static_cast<int>(w_star.dim()); }

    friend bool operator==(const BlockView &, const BlockView &) = default;
};

// Binary rounding produced by a completeness witness, with the norm it
// achieves on the instance matrix. achieved_norm <= 4/3 always.
struct WitnessResult {
    BlockView x;
    Rational achieved_norm;
    std::vector<GadgetRounding> per_coordinate;
};

// Norm split along the instance's block structure. max_term equals
// direct_norm exactly; decompose_norm re-derives both sides and checks.
struct Decomposition {
    std::optional<Rational> clause_term;   // (1/3) ||B(w_sum - x_sum)||_inf, absent when m = 0
    std::vector<Rational> gadget_terms;    // per-variable ||G(...)||_inf
    std::vector<Rational> coupling_terms;  // |(2/3)(w_sum_i - x_sum_i) - 2(w*_i - x*_i)|
    std::vector<Rational> anchor_terms;    // (8/3)|w*_i - x*_i|
    Rational max_term;
    Rational direct_norm;
};

// Row j of B is the signed indicator sum of clause j's literals; replicated
// literals stack to +-2 and complementary ones cancel to 0.
RMatrix build_clause_matrix(const NaeFormula &f);

ReducedInstance build_np_matrix(const NaeFormula &f);
ReducedInstance build_pi2_matrix(const QuantifiedNaeFormula &qf);

Decomposition decompose_norm(const ReducedInstance &inst, const BlockView &w, const BlockView &x);

// Rounds w per coordinate with sign 1 - 2*psi(v_i). Requires an NP instance
// and an NAE-satisfying psi; the achieved norm is then at most 4/3.
WitnessResult completeness_witness(const ReducedInstance &inst, const Assignment &psi,
                                   const BlockView &w);

// psi(v_i) = x^1_i for binary x.
Assignment extract_assignment(const BlockView &x);

// The point [0.5 * 1_{3n}; w*] with w*_i = 1/3 or 2/3 tracking psi_a.
BlockView adversary_point(const QuantifiedNaeFormula &qf, const Assignment &psi_a);

// Thresholds w* at 1/2 to read off the universal assignment, completes it
// through `witnesses` (solve_forall_exists output), rounds the copies and
// pins x* to the universal values. Requires a PI2 instance of a YES formula.
WitnessResult pi2_completeness_witness(const ReducedInstance &inst, const BlockView &w,
                                       const std::vector<Assignment> &witnesses);

// Given binary x with ||A'(adversary_point(psi_a) - x)||_inf < 3/2 (checked
// by the caller), recovers the existential assignment. Throws
// PreconditionError when any consistency consequence of that bound fails.
Assignment pi2_soundness_check(const ReducedInstance &inst, const BlockView &x,
                               const Assignment &psi_a);

// Matrix text format with a sidecar comment "# kind=.. n=.. m=.. nprime=..".
void write_instance(std::ostream &out, const ReducedInstance &inst);

struct InstanceHeader {
    ReductionKind kind{};
    int n = 0;
    int m = 0;
    int n_prime = 0;
};

// Reads back the sidecar of write_instance; nullopt when no sidecar present.
std::optional<InstanceHeader> read_instance_header(std::istream &in);

} // namespace lindisc
