#include "lindisc/gadget.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace lindisc {

std::string to_string(GadgetCase c) {
    switch (c) {
    case GadgetCase::I:
        return "I";
    case GadgetCase::II:
        return "II";
    case GadgetCase::III:
        return "III";
    }
    return "?";
}

const RMatrix &gadget_matrix() {
    static const RMatrix g = [] {
        RMatrix m(3, 3);
        const int entries[3][3] = {{1, 1, -1}, {1, -1, 1}, {-1, 1, 1}};
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < 3; ++j) {
                m.at(i, j) = Rational(entries[i][j]);
            }
        }
        return m;
    }();
    return g;
}

namespace {

const Rational kOne(1);
const Rational kTwo(2);
const Rational kFourThirds(4, 3);

std::array<Rational, 3> complement(const std::array<Rational, 3> &u) {
    return {kOne - u[0], kOne - u[1], kOne - u[2]};
}

} // namespace

GadgetRounding round_gadget(const std::array<Rational, 3> &u, int b) {
    if (b != 1 && b != -1) {
        throw DomainError("sign must be +1 or -1, got " + std::to_string(b));
    }
    for (const auto &ui : u) {
        if (ui.sign() < 0 || ui > kOne) {
            throw DomainError("coordinate " + ui.to_string() + " outside [0, 1]");
        }
    }

    if (b == -1) {
        GadgetRounding r = round_gadget(complement(u), +1);
        r.flipped = true;
        for (auto &zi : r.z) {
            zi = 1 - zi;
        }
        // G(u - z) is the negation of the unflipped image; norms are even.
        r.sum_dev = -r.sum_dev;
        return r;
    }

    GadgetRounding r;
    r.flipped = false;

    // Stable sort so equal coordinates keep their original order.
    std::array<int, 3> perm = {0, 1, 2};
    std::stable_sort(perm.begin(), perm.end(),
                     [&u](int a, int c) { return u[static_cast<std::size_t>(a)] <
                                                 u[static_cast<std::size_t>(c)]; });
    r.perm = perm;
    const Rational &s1 = u[static_cast<std::size_t>(perm[0])];
    const Rational &s2 = u[static_cast<std::size_t>(perm[1])];
    const Rational &s3 = u[static_cast<std::size_t>(perm[2])];

    Rational total = s1 + s2 + s3;
    std::array<int, 3> z_sorted{};
    if (total >= kTwo) {
        r.case_tag = GadgetCase::I;
        z_sorted = {0, 1, 1};
    } else if (s2 + s3 - s1 <= kFourThirds) {
        r.case_tag = GadgetCase::II;
        z_sorted = {0, 0, 0};
    } else {
        r.case_tag = GadgetCase::III;
        z_sorted = {0, 0, 1};
    }
    for (std::size_t k = 0; k < 3; ++k) {
        r.z[static_cast<std::size_t>(perm[k])] = z_sorted[k];
    }

    RVector diff(3);
    for (std::size_t i = 0; i < 3; ++i) {
        diff[i] = u[i] - Rational(r.z[i]);
    }
    r.g_norm = inf_norm(mat_vec_mul(gadget_matrix(), diff));
    r.sum_dev = diff[0] + diff[1] + diff[2];

    assert(r.g_norm <= kFourThirds);
    assert(r.sum_dev.sign() >= 0);
    assert(r.sum_dev.abs() <= kTwo);
    return r;
}

SoundnessReport check_gadget_soundness() {
    SoundnessReport report;
    const RVector half = RVector::constant(3, Rational(1, 2));
    bool have_nonconstant = false;
    for (int code = 0; code < 8; ++code) {
        SoundnessEntry &e = report.entries[static_cast<std::size_t>(code)];
        e.z = {code & 1, (code >> 1) & 1, (code >> 2) & 1};
        RVector diff(3);
        for (std::size_t i = 0; i < 3; ++i) {
            diff[i] = half[i] - Rational(e.z[i]);
        }
        e.image = mat_vec_mul(gadget_matrix(), diff);
        e.norm = inf_norm(e.image);
        bool constant = e.z[0] == e.z[1] && e.z[1] == e.z[2];
        if (constant) {
            report.constant_norm = e.norm;
        } else if (!have_nonconstant || e.norm < report.min_nonconstant_norm) {
            report.min_nonconstant_norm = e.norm;
            have_nonconstant = true;
        }
    }
    return report;
}

} // namespace lindisc
