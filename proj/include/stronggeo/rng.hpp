#pragma once

#include <cstdint>

#include "stronggeo/rational.hpp"
#include "stronggeo/vec.hpp"

namespace stronggeo {

// SplitMix64 (Steele/Lea/Flood). 64-bit state, fixed constants, fully
// deterministic: golden files produced with a given seed are portable.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform-ish value in [0, n); n > 0. Modular reduction is fine here,
    // determinism matters, statistical perfection does not.
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    // Integer in [lo, hi], inclusive.
    long long in_range(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // Rational with numerator in [-num_bound, num_bound] and denominator in
    // [1, den_bound].
    Rational rational(long long num_bound, long long den_bound) {
        long long n = in_range(-num_bound, num_bound);
        long long d = in_range(1, den_bound);
        return Rational(n, d);
    }

    Vec vec(std::size_t dim, long long num_bound, long long den_bound) {
        Vec v(dim);
        for (std::size_t i = 0; i < dim; ++i) v[i] = rational(num_bound, den_bound);
        return v;
    }

    Vec nonzero_vec(std::size_t dim, long long num_bound, long long den_bound) {
        for (;;) {
            Vec v = vec(dim, num_bound, den_bound);
            if (!v.is_zero()) return v;
        }
    }

  private:
    std::uint64_t state_;
};

}  // namespace stronggeo
