#pragma once

#include <cstdint>
#include <random>

#include "lindisc/linalg.hpp"

namespace lindisc {

inline constexpr int kSampleDenominator = 997;

// Seeded source of exact rational sample points. mt19937_64 plus in-house
// rejection sampling, so streams are identical across platforms.
class SampleRng {
  public:
    explicit SampleRng(std::uint64_t seed) : gen_(seed) {}

    // Uniform in [0, bound); bound >= 1.
    std::uint64_t next_below(std::uint64_t bound);

    // Uniform over {0, 1/denom, ..., denom/denom}.
    Rational unit_rational(int denom = kSampleDenominator);

    // Independent coordinates, each unit_rational(denom).
    RVector cube_point(std::size_t dim, int denom = kSampleDenominator);

  private:
    std::mt19937_64 gen_;
};

} // namespace lindisc
