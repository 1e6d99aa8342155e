#pragma once

#include "rblie/rational.hpp"

#include <cstdint>
#include <random>

namespace rblie {

// Seeded generator of small exact rationals for property checks and golden
// vectors. Draws are taken with explicit modular reduction so the stream is
// identical across platforms.
class RationalSampler {
public:
    explicit RationalSampler(std::uint64_t seed, int max_numerator = 9,
                             int max_denominator = 6)
        : rng_(seed), max_num_(max_numerator), max_den_(max_denominator) {}

    Scalar rational() {
        std::int64_t num =
            static_cast<std::int64_t>(rng_() % (2 * max_num_ + 1)) - max_num_;
        std::int64_t den = static_cast<std::int64_t>(rng_() % max_den_) + 1;
        return Scalar(num, den);
    }

    Vec vec(std::size_t dim) {
        Vec v(dim);
        for (auto& c : v) c = rational();
        return v;
    }

private:
    std::mt19937_64 rng_;
    int max_num_, max_den_;
};

}  // namespace rblie
