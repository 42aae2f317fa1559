#pragma once

#include <cstdint>
#include <vector>

#include "epwlab/scalar.hpp"

namespace epwlab::exactalg {

// Deterministic 64-bit generator (splitmix64).  The same seed yields the
// same stream on every platform, which the reproducibility tests rely on.
class SeededSampler {
  public:
    explicit SeededSampler(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [lo, hi] via rejection sampling (no modulo bias).
    long range(long lo, long hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t r;
        do {
            r = next();
        } while (r >= limit);
        return lo + static_cast<long>(r % span);
    }

    // F_p: uniform residue.  Q: small integer in [-9, 9], so products of a
    // few sampled values stay readable and exact arithmetic stays fast.
    Scalar field_element(field_t f) {
        if (f == kFieldQ) return Scalar::of_long(f, range(-9, 9));
        return Scalar::of_long(f, range(0, f - 1));
    }

    std::vector<long> int_vector(int n, long lo, long hi) {
        std::vector<long> v(n);
        for (auto& x : v) x = range(lo, hi);
        return v;
    }

  private:
    std::uint64_t state_;
};

}  // namespace epwlab::exactalg
