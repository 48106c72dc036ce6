#include "lindisc/reduction.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace lindisc {

namespace {

const Rational kHalf(1, 2);
const Rational kThird(1, 3);
const Rational kTwoThirds(2, 3);
const Rational kFourThirds(4, 3);
const Rational kThreeHalves(3, 2);
const Rational kEightThirds(8, 3);

void require_binary(const RVector &v, const char *what) {
    for (std::size_t i = 0; i < v.dim(); ++i) {
        if (!v[i].is_zero() && v[i] != Rational(1)) {
            throw DomainError(std::string(what) + " must be binary, entry " + std::to_string(i) +
                              " is " + v[i].to_string());
        }
    }
}

void require_unit_cube(const BlockView &w) {
    for (const RVector *part : {&w.w1, &w.w2, &w.w3, &w.w_star}) {
        for (std::size_t i = 0; i < part->dim(); ++i) {
            const Rational &e = (*part)[i];
            if (e.sign() < 0 || e > Rational(1)) {
                throw DomainError("point outside [0,1]: entry " + e.to_string());
            }
        }
    }
}

} // namespace

std::string to_string(ReductionKind k) { return k == ReductionKind::NP ? "NP" : "PI2"; }

BlockView BlockView::from_flat(const RVector &flat, int n, int n_prime) {
    if (flat.dim() != static_cast<std::size_t>(3 * n + n_prime)) {
        throw DimensionError("block view of dim " + std::to_string(flat.dim()) +
                             " cannot split as 3*" + std::to_string(n) + " + " +
                             std::to_string(n_prime));
    }
    BlockView b;
    b.w1 = RVector(static_cast<std::size_t>(n));
    b.w2 = RVector(static_cast<std::size_t>(n));
    b.w3 = RVector(static_cast<std::size_t>(n));
    b.w_star = RVector(static_cast<std::size_t>(n_prime));
    for (int i = 0; i < n; ++i) {
        b.w1[i] = flat[static_cast<std::size_t>(i)];
        b.w2[i] = flat[static_cast<std::size_t>(n + i)];
        b.w3[i] = flat[static_cast<std::size_t>(2 * n + i)];
    }
    for (int i = 0; i < n_prime; ++i) {
        b.w_star[i] = flat[static_cast<std::size_t>(3 * n + i)];
    }
    return b;
}

RVector BlockView::to_flat() const {
    std::vector<Rational> flat;
    flat.reserve(w1.dim() * 3 + w_star.dim());
    for (const RVector *part : {&w1, &w2, &w3, &w_star}) {
        for (std::size_t i = 0; i < part->dim(); ++i) {
            flat.push_back((*part)[i]);
        }
    }
    return RVector(std::move(flat));
}

RVector BlockView::w_sum() const { return w1 + w2 + w3; }

RMatrix build_clause_matrix(const NaeFormula &f) {
    RMatrix b(static_cast<std::size_t>(f.m()), static_cast<std::size_t>(f.n));
    for (int j = 0; j < f.m(); ++j) {
        for (const auto &lit : f.clauses[static_cast<std::size_t>(j)].lits) {
            auto col = static_cast<std::size_t>(lit.var - 1);
            b.at(static_cast<std::size_t>(j), col) += Rational(lit.sign);
        }
    }
    return b;
}

ReducedInstance build_np_matrix(const NaeFormula &f) {
    const int n = f.n;
    const int m = f.m();
    RMatrix b = build_clause_matrix(f);
    RMatrix a(static_cast<std::size_t>(m + 3 * n), static_cast<std::size_t>(3 * n));

    // Top block: [B/3  B/3  B/3].
    for (int j = 0; j < m; ++j) {
        for (int i = 0; i < n; ++i) {
            Rational third = b.at(j, i) * kThird;
            for (int copy = 0; copy < 3; ++copy) {
                a.at(static_cast<std::size_t>(j), static_cast<std::size_t>(copy * n + i)) = third;
            }
        }
    }
    // Coupling blocks: [I I -I; I -I I; -I I I], one row per (block, variable).
    const int signs[3][3] = {{1, 1, -1}, {1, -1, 1}, {-1, 1, 1}};
    for (int blk = 0; blk < 3; ++blk) {
        for (int i = 0; i < n; ++i) {
            auto row = static_cast<std::size_t>(m + blk * n + i);
            for (int copy = 0; copy < 3; ++copy) {
                a.at(row, static_cast<std::size_t>(copy * n + i)) = Rational(signs[blk][copy]);
            }
        }
    }

    ReducedInstance inst;
    inst.kind = ReductionKind::NP;
    inst.matrix = std::move(a);
    inst.n = n;
    inst.m = m;
    inst.n_prime = 0;
    inst.source.n_universal = 0;
    inst.source.formula = f;
    return inst;
}

ReducedInstance build_pi2_matrix(const QuantifiedNaeFormula &qf) {
    const int n = qf.formula.n;
    const int m = qf.formula.m();
    const int np = qf.n_universal;
    ReducedInstance base = build_np_matrix(qf.formula);

    RMatrix a(static_cast<std::size_t>(m + 3 * n + 2 * np), static_cast<std::size_t>(3 * n + np));
    for (std::size_t r = 0; r < base.matrix.rows(); ++r) {
        for (std::size_t c = 0; c < base.matrix.cols(); ++c) {
            a.at(r, c) = base.matrix.at(r, c);
        }
    }
    // Coupling rows: (2/3) on column i of each copy, -2 on the new column i.
    for (int i = 0; i < np; ++i) {
        auto row = static_cast<std::size_t>(m + 3 * n + i);
        for (int copy = 0; copy < 3; ++copy) {
            a.at(row, static_cast<std::size_t>(copy * n + i)) = kTwoThirds;
        }
        a.at(row, static_cast<std::size_t>(3 * n + i)) = Rational(-2);
    }
    // Anchor rows: (8/3) on the new columns only.
    for (int i = 0; i < np; ++i) {
        a.at(static_cast<std::size_t>(m + 3 * n + np + i), static_cast<std::size_t>(3 * n + i)) =
            kEightThirds;
    }

    ReducedInstance inst;
    inst.kind = ReductionKind::PI2;
    inst.matrix = std::move(a);
    inst.n = n;
    inst.m = m;
    inst.n_prime = np;
    inst.source = qf;
    return inst;
}

Decomposition decompose_norm(const ReducedInstance &inst, const BlockView &w, const BlockView &x) {
    if (w.n() != inst.n || x.n() != inst.n || w.n_prime() != inst.n_prime ||
        x.n_prime() != inst.n_prime) {
        throw DimensionError("block views do not match instance with n=" + std::to_string(inst.n) +
                             " n'=" + std::to_string(inst.n_prime));
    }

    Decomposition d;
    RVector w_sum = w.w_sum();
    RVector x_sum = x.w_sum();

    if (inst.m > 0) {
        RMatrix b = build_clause_matrix(inst.source.formula);
        d.clause_term = kThird * inf_norm(mat_vec_mul(b, w_sum - x_sum));
    }
    for (int i = 0; i < inst.n; ++i) {
        RVector diff{w.w1[i] - x.w1[i], w.w2[i] - x.w2[i], w.w3[i] - x.w3[i]};
        d.gadget_terms.push_back(inf_norm(mat_vec_mul(gadget_matrix(), diff)));
    }
    for (int i = 0; i < inst.n_prime; ++i) {
        Rational coupling =
            kTwoThirds * (w_sum[i] - x_sum[i]) - Rational(2) * (w.w_star[i] - x.w_star[i]);
        d.coupling_terms.push_back(coupling.abs());
        d.anchor_terms.push_back(kEightThirds * (w.w_star[i] - x.w_star[i]).abs());
    }

    d.max_term = Rational(0);
    if (d.clause_term) {
        d.max_term = *d.clause_term;
    }
    for (const auto *terms : {&d.gadget_terms, &d.coupling_terms, &d.anchor_terms}) {
        for (const auto &t : *terms) {
            if (t > d.max_term) {
                d.max_term = t;
            }
        }
    }

    d.direct_norm = inf_norm(mat_vec_mul(inst.matrix, w.to_flat() - x.to_flat()));
    if (d.max_term != d.direct_norm) {
        throw Error("norm decomposition mismatch: terms give " + d.max_term.to_string() +
                    ", matrix gives " + d.direct_norm.to_string());
    }
    return d;
}

namespace {

// Shared by both completeness witnesses: round every variable's copy triple
// with the sign 1 - 2*psi(v_i) and collect the roundings.
BlockView round_copies(const BlockView &w, const Assignment &psi,
                       std::vector<GadgetRounding> &roundings, int n_prime) {
    const int n = w.n();
    BlockView x;
    x.w1 = RVector(static_cast<std::size_t>(n));
    x.w2 = RVector(static_cast<std::size_t>(n));
    x.w3 = RVector(static_cast<std::size_t>(n));
    x.w_star = RVector(static_cast<std::size_t>(n_prime));
    roundings.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        int b = 1 - 2 * psi.value(i + 1);
        GadgetRounding r = round_gadget({w.w1[i], w.w2[i], w.w3[i]}, b);
        x.w1[i] = Rational(r.z[0]);
        x.w2[i] = Rational(r.z[1]);
        x.w3[i] = Rational(r.z[2]);
        roundings.push_back(std::move(r));
    }
    return x;
}

Rational norm_against(const ReducedInstance &inst, const BlockView &w, const BlockView &x) {
    return inf_norm(mat_vec_mul(inst.matrix, w.to_flat() - x.to_flat()));
}

} // namespace

WitnessResult completeness_witness(const ReducedInstance &inst, const Assignment &psi,
                                   const BlockView &w) {
    if (inst.kind != ReductionKind::NP) {
        throw PreconditionError("completeness_witness expects an NP instance");
    }
    if (w.n() != inst.n || w.n_prime() != 0) {
        throw DimensionError("witness point must have shape 3*" + std::to_string(inst.n));
    }
    require_unit_cube(w);
    if (psi.size() < inst.n || !eval_nae(inst.source.formula, psi)) {
        throw PreconditionError("assignment does not NAE-satisfy the formula");
    }

    WitnessResult res;
    res.x = round_copies(w, psi, res.per_coordinate, 0);
    res.achieved_norm = norm_against(inst, w, res.x);
    if (res.achieved_norm > kFourThirds) {
        throw Error("witness norm " + res.achieved_norm.to_string() + " exceeds 4/3");
    }
    return res;
}

Assignment extract_assignment(const BlockView &x) {
    require_binary(x.w1, "x^1");
    require_binary(x.w2, "x^2");
    require_binary(x.w3, "x^3");
    Assignment psi;
    psi.bits.reserve(x.w1.dim());
    for (std::size_t i = 0; i < x.w1.dim(); ++i) {
        psi.bits.push_back(static_cast<std::uint8_t>(x.w1[i].is_zero() ? 0 : 1));
    }
    return psi;
}

BlockView adversary_point(const QuantifiedNaeFormula &qf, const Assignment &psi_a) {
    if (psi_a.size() != qf.n_universal) {
        throw DimensionError("universal assignment covers " + std::to_string(psi_a.size()) +
                             " variables, instance has n'=" + std::to_string(qf.n_universal));
    }
    BlockView w;
    w.w1 = RVector::constant(static_cast<std::size_t>(qf.formula.n), kHalf);
    w.w2 = w.w1;
    w.w3 = w.w1;
    w.w_star = RVector(static_cast<std::size_t>(qf.n_universal));
    for (int i = 0; i < qf.n_universal; ++i) {
        w.w_star[i] = psi_a.value(i + 1) ? kTwoThirds : kThird;
    }
    return w;
}

WitnessResult pi2_completeness_witness(const ReducedInstance &inst, const BlockView &w,
                                       const std::vector<Assignment> &witnesses) {
    if (inst.kind != ReductionKind::PI2) {
        throw PreconditionError("pi2_completeness_witness expects a PI2 instance");
    }
    if (w.n() != inst.n || w.n_prime() != inst.n_prime) {
        throw DimensionError("witness point must have shape 3*" + std::to_string(inst.n) + " + " +
                             std::to_string(inst.n_prime));
    }
    require_unit_cube(w);

    // Universal assignment read off w*: at or below 1/2 means 0.
    Assignment psi_a;
    psi_a.bits.reserve(static_cast<std::size_t>(inst.n_prime));
    for (int i = 0; i < inst.n_prime; ++i) {
        psi_a.bits.push_back(static_cast<std::uint8_t>(w.w_star[i] <= kHalf ? 0 : 1));
    }

    std::uint64_t code = psi_a.code();
    bool usable = code < witnesses.size() && witnesses[code].size() == inst.n &&
                  std::equal(psi_a.bits.begin(), psi_a.bits.end(), witnesses[code].bits.begin());
    if (!usable) {
        throw PreconditionError("no existential completion for universal assignment with code " +
                                std::to_string(code) + "; the instance is a NO instance");
    }
    const Assignment &psi = witnesses[code];
    if (!eval_nae(inst.source.formula, psi)) {
        throw PreconditionError("oracle table entry does not NAE-satisfy the formula");
    }

    WitnessResult res;
    res.x = round_copies(w, psi, res.per_coordinate, inst.n_prime);
    for (int i = 0; i < inst.n_prime; ++i) {
        res.x.w_star[i] = Rational(psi_a.value(i + 1));
    }
    res.achieved_norm = norm_against(inst, w, res.x);
    if (res.achieved_norm > kFourThirds) {
        throw Error("witness norm " + res.achieved_norm.to_string() + " exceeds 4/3");
    }
    return res;
}

Assignment pi2_soundness_check(const ReducedInstance &inst, const BlockView &x,
                               const Assignment &psi_a) {
    if (inst.kind != ReductionKind::PI2) {
        throw PreconditionError("pi2_soundness_check expects a PI2 instance");
    }
    if (x.n() != inst.n || x.n_prime() != inst.n_prime || psi_a.size() != inst.n_prime) {
        throw DimensionError("shape mismatch in soundness check");
    }
    require_binary(x.w_star, "x*");

    // x* off psi_a would put the anchor row at (8/3)(2/3) = 16/9 >= 3/2.
    for (int i = 0; i < inst.n_prime; ++i) {
        if (x.w_star[i] != Rational(psi_a.value(i + 1))) {
            throw PreconditionError("x*_" + std::to_string(i + 1) + " disagrees with the universal "
                                    "assignment; anchor row already at 16/9 >= 3/2");
        }
    }
    // Copies must agree, else some gadget norm is >= 3/2 at the half point.
    if (!(x.w1 == x.w2 && x.w2 == x.w3)) {
        throw PreconditionError("copy blocks disagree; some gadget norm is >= 3/2");
    }

    Assignment psi = extract_assignment(x);
    // |1/3 + (4/3) psi_a - 2 psi| is 1/3 on agreement and 5/3 on disagreement.
    for (int i = 0; i < inst.n_prime; ++i) {
        Rational chain = kThird + kFourThirds * Rational(psi_a.value(i + 1)) -
                         Rational(2 * psi.value(i + 1));
        if (chain.abs() >= kThreeHalves) {
            throw PreconditionError("consistency chain value " + chain.abs().to_string() +
                                    " >= 3/2 at universal variable " + std::to_string(i + 1));
        }
    }
    if (!eval_nae(inst.source.formula, psi)) {
        throw PreconditionError("extracted assignment does not NAE-satisfy the formula");
    }

    Assignment psi_e;
    psi_e.bits.assign(psi.bits.begin() + inst.n_prime, psi.bits.end());
    return psi_e;
}

void write_instance(std::ostream &out, const ReducedInstance &inst) {
    out << "# kind=" << to_string(inst.kind) << " n=" << inst.n << " m=" << inst.m
        << " nprime=" << inst.n_prime << "\n";
    write_matrix(out, inst.matrix);
}

std::optional<InstanceHeader> read_instance_header(std::istream &in) {
    std::string line;
    while (std::getline(in, line)) {
        std::size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos) {
            continue;
        }
        if (line[pos] != '#') {
            return std::nullopt; // content before any sidecar
        }
        std::istringstream ls(line.substr(pos + 1));
        std::string tok;
        InstanceHeader h;
        bool have_kind = false, have_n = false, have_m = false, have_np = false;
        while (ls >> tok) {
            auto eq = tok.find('=');
            if (eq == std::string::npos) {
                continue;
            }
            std::string key = tok.substr(0, eq);
            std::string val = tok.substr(eq + 1);
            if (key == "kind") {
                if (val != "NP" && val != "PI2") {
                    return std::nullopt;
                }
                h.kind = val == "NP" ? ReductionKind::NP : ReductionKind::PI2;
                have_kind = true;
            } else if (key == "n") {
                h.n = std::stoi(val);
                have_n = true;
            } else if (key == "m") {
                h.m = std::stoi(val);
                have_m = true;
            } else if (key == "nprime") {
                h.n_prime = std::stoi(val);
                have_np = true;
            }
        }
        if (have_kind && have_n && have_m && have_np) {
            return h;
        }
    }
    return std::nullopt;
}

} // namespace lindisc
