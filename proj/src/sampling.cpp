#include "lindisc/sampling.hpp"

namespace lindisc {

std::uint64_t SampleRng::next_below(std::uint64_t bound) {
    if (bound == 0) {
        throw DomainError("sampling bound must be positive");
    }
    // Reject the tail that would bias the modulus.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v = gen_();
    while (v >= limit) {
        v = gen_();
    }
    return v % bound;
}

Rational SampleRng::unit_rational(int denom) {
    auto k = next_below(static_cast<std::uint64_t>(denom) + 1);
    return Rational(static_cast<long long>(k), denom);
}

RVector SampleRng::cube_point(std::size_t dim, int denom) {
    RVector v(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        v[i] = unit_rational(denom);
    }
    return v;
}

} // namespace lindisc
