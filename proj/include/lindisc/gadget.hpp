#pragma once

#include <array>
#include <string>

#include "lindisc/linalg.hpp"

namespace lindisc {

enum class GadgetCase { I, II, III };

std::string to_string(GadgetCase c);

// Result of rounding a point of [0,1]^3 against the coupling matrix G.
// Invariants (exact): g_norm <= 4/3, b * sum_dev >= 0, |sum_dev| <= 2.
struct GadgetRounding {
    std::array<int, 3> z{};        // chosen binary vector
    GadgetCase case_tag{};         // case picked after symmetry reduction
    bool flipped = false;          // complement transform applied (b = -1)
    std::array<int, 3> perm{};     // sorted slot -> original coordinate
    Rational g_norm;               // ||G(u - z)||_inf
    Rational sum_dev;              // 1^T (u - z)
};

// The fixed coupling matrix [1 1 -1; 1 -1 1; -1 1 1]. Each row sums to 1.
const RMatrix &gadget_matrix();

// Rounds u in [0,1]^3 to a binary z whose G-image stays within 4/3 while
// 1^T(u - z) keeps the sign b and magnitude at most 2. b = -1 is handled by
// the complement transform (u, b) -> (1 - u, +1), z -> 1 - z; ties in the
// coordinate sort are broken stably (equal entries keep their order).
GadgetRounding round_gadget(const std::array<Rational, 3> &u, int b);

struct SoundnessEntry {
    std::array<int, 3> z{};
    RVector image;  // G(0.5*1 - z)
    Rational norm;
};

// Exhaustive evaluation of all 8 binary z at u = 0.5*1: the two constant z
// reach norm 1/2, every other z reaches exactly 3/2.
struct SoundnessReport {
    std::array<SoundnessEntry, 8> entries;
    Rational min_nonconstant_norm;
    Rational constant_norm;
};

SoundnessReport check_gadget_soundness();

} // namespace lindisc
