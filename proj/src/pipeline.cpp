#include "lindisc/pipeline.hpp"

#include <sstream>

#include "lindisc/sampling.hpp"

namespace lindisc {

namespace {

const Rational kFourThirds(4, 3);
const Rational kThreeHalves(3, 2);

std::string bits_string(const Assignment &a) {
    if (a.bits.empty()) {
        return "-";
    }
    std::string s;
    s.reserve(a.bits.size());
    for (auto b : a.bits) {
        s.push_back(b ? '1' : '0');
    }
    return s;
}

} // namespace

std::string to_string(PipelineMode m) { return m == PipelineMode::Np ? "np" : "pi2"; }

GapReport verify_gap_pipeline(const QuantifiedNaeFormula &qf, const std::string &path_label,
                              const PipelineOptions &opt) {
    if (qf.formula.n == 0) {
        throw PreconditionError("formula has no variables");
    }
    if (opt.mode == PipelineMode::Np && qf.n_universal != 0) {
        throw PreconditionError("np mode requires a formula without universal variables");
    }

    GapReport report;
    report.instance_path = path_label;
    report.mode = opt.mode;
    report.n = qf.formula.n;
    report.m = qf.formula.m();
    report.n_prime = opt.mode == PipelineMode::Np ? 0 : qf.n_universal;
    report.samples = opt.samples;
    report.seed = opt.seed;

    SampleRng rng(opt.seed);

    if (opt.mode == PipelineMode::Np) {
        ReducedInstance inst = build_np_matrix(qf.formula);
        report.rows = inst.matrix.rows();
        report.cols = inst.matrix.cols();

        std::optional<Assignment> psi = solve_nae(qf.formula, opt.solver_limit);
        report.sat_yes = psi.has_value();
        if (psi) {
            report.sat_assignment = psi;
            Rational max_norm;
            for (int s = 0; s < opt.samples; ++s) {
                BlockView w = BlockView::from_flat(rng.cube_point(inst.matrix.cols()), inst.n, 0);
                WitnessResult witness = completeness_witness(inst, *psi, w);
                if (witness.achieved_norm > max_norm) {
                    max_norm = witness.achieved_norm;
                }
            }
            report.completeness_max = max_norm;
            report.pass = max_norm <= kFourThirds;
            if (opt.certify) {
                report.certificate = certify_upper(inst.matrix, kFourThirds, opt.eps, opt.bnb);
                report.pass =
                    report.pass && report.certificate->status == CertifyStatus::Proved;
            }
        } else {
            RVector half = RVector::constant(inst.matrix.cols(), Rational(1, 2));
            report.soundness_value = lindisc_at(inst.matrix, half, opt.solver_limit).value;
            report.pass = *report.soundness_value >= kThreeHalves;
        }
        return report;
    }

    ReducedInstance inst = build_pi2_matrix(qf);
    report.rows = inst.matrix.rows();
    report.cols = inst.matrix.cols();

    ForallExistsVerdict verdict = solve_forall_exists(qf, opt.solver_limit);
    report.sat_yes = verdict.yes;
    if (verdict.yes) {
        report.forall_table = verdict.witnesses;
        Rational max_norm;
        // Every universal assignment's adversary point first, then the
        // seeded random sweep over the whole cube.
        const std::uint64_t universal_total = std::uint64_t{1} << qf.n_universal;
        for (std::uint64_t code = 0; code < universal_total; ++code) {
            Assignment psi_a = Assignment::from_code(code, qf.n_universal);
            BlockView w = adversary_point(qf, psi_a);
            WitnessResult witness = pi2_completeness_witness(inst, w, verdict.witnesses);
            if (witness.achieved_norm > max_norm) {
                max_norm = witness.achieved_norm;
            }
        }
        for (int s = 0; s < opt.samples; ++s) {
            BlockView w = BlockView::from_flat(rng.cube_point(inst.matrix.cols()), inst.n,
                                               inst.n_prime);
            WitnessResult witness = pi2_completeness_witness(inst, w, verdict.witnesses);
            if (witness.achieved_norm > max_norm) {
                max_norm = witness.achieved_norm;
            }
        }
        report.completeness_max = max_norm;
        report.pass = max_norm <= kFourThirds;
        if (opt.certify) {
            report.certificate = certify_upper(inst.matrix, kFourThirds, opt.eps, opt.bnb);
            report.pass = report.pass && report.certificate->status == CertifyStatus::Proved;
        }
    } else {
        report.counterexample = verdict.counterexample;
        BlockView w = adversary_point(qf, *verdict.counterexample);
        report.soundness_value = lindisc_at(inst.matrix, w.to_flat(), opt.solver_limit).value;
        report.pass = *report.soundness_value >= kThreeHalves;
    }
    return report;
}

std::string GapReport::to_text() const {
    std::ostringstream out;
    out << "instance: " << instance_path << "\n";
    out << "mode: " << lindisc::to_string(mode) << " (n=" << n << " m=" << m
        << " n'=" << n_prime << ")\n";
    out << "matrix: " << rows << " x " << cols << "\n";
    out << "verdict: " << (sat_yes ? "YES" : "NO") << "\n";
    if (sat_assignment) {
        out << "assignment: " << bits_string(*sat_assignment) << "\n";
    }
    for (std::size_t c = 0; c < forall_table.size(); ++c) {
        out << "universal " << bits_string(Assignment::from_code(c, n_prime)) << " -> witness "
            << bits_string(forall_table[c]) << "\n";
    }
    if (counterexample) {
        out << "counterexample: " << bits_string(*counterexample) << "\n";
    }
    if (completeness_max) {
        out << "completeness: max witness norm " << *completeness_max << " over " << samples
            << " samples (seed " << seed << "), bound 4/3\n";
    }
    if (soundness_value) {
        out << "soundness: inner value " << *soundness_value << " at the adversary point, bound 3/2\n";
    }
    if (certificate) {
        out << "certificate: " << lindisc::to_string(certificate->status) << " "
            << certificate->certificate.to_line() << "\n";
    }
    out << "pass: " << (pass ? "true" : "false") << "\n";
    return out.str();
}

std::string GapReport::to_machine() const {
    std::ostringstream out;
    out << "instance=" << instance_path << "\n";
    out << "mode=" << lindisc::to_string(mode) << "\n";
    out << "n=" << n << " m=" << m << " nprime=" << n_prime << "\n";
    out << "rows=" << rows << " cols=" << cols << "\n";
    out << "verdict=" << (sat_yes ? "YES" : "NO") << "\n";
    if (sat_assignment) {
        out << "assignment=" << bits_string(*sat_assignment) << "\n";
    }
    for (std::size_t c = 0; c < forall_table.size(); ++c) {
        out << "witness_" << c << "=" << bits_string(forall_table[c]) << "\n";
    }
    if (counterexample) {
        out << "counterexample=" << bits_string(*counterexample) << "\n";
    }
    out << "samples=" << samples << " seed=" << seed << "\n";
    if (completeness_max) {
        out << "completeness_max=" << *completeness_max << "\n";
    }
    if (soundness_value) {
        out << "soundness_value=" << *soundness_value << "\n";
    }
    if (certificate) {
        out << "certify_status=" << lindisc::to_string(certificate->status) << "\n";
        out << "certificate: " << certificate->certificate.to_line() << "\n";
    }
    out << "pass=" << (pass ? "true" : "false") << "\n";
    return out.str();
}

} // namespace lindisc
