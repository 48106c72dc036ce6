#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "lindisc/reduction.hpp"
#include "lindisc/solver.hpp"

namespace lindisc {

enum class PipelineMode { Np, Pi2 };

std::string to_string(PipelineMode m);

struct PipelineOptions {
    PipelineMode mode = PipelineMode::Np;
    int samples = 1000;
    std::uint64_t seed = 42;
    Rational eps = Rational(1, 20);
    bool certify = false;
    int solver_limit = kDefaultInnerLimit;
    BnbOptions bnb;
};

// End-to-end result of one reduce-and-verify run. pass means: on YES the
// sampled witness norms (and the certificate, when requested) stayed at or
// under 4/3; on NO the adversary point's exact inner value reached 3/2.
struct GapReport {
    std::string instance_path;
    PipelineMode mode = PipelineMode::Np;
    int n = 0;
    int m = 0;
    int n_prime = 0;
    std::size_t rows = 0;
    std::size_t cols = 0;
    bool sat_yes = false;
    std::optional<Assignment> sat_assignment;     // NP YES
    std::vector<Assignment> forall_table;         // PI2 YES
    std::optional<Assignment> counterexample;     // PI2 NO universal part
    int samples = 0;
    std::uint64_t seed = 0;
    std::optional<Rational> completeness_max;
    std::optional<Rational> soundness_value;
    std::optional<CertifyResult> certificate;
    bool pass = false;

    std::string to_text() const;
    std::string to_machine() const;
};

GapReport verify_gap_pipeline(const QuantifiedNaeFormula &qf, const std::string &path_label,
                              const PipelineOptions &opt);

} // namespace lindisc
