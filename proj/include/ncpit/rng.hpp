#pragma once

#include <cstdint>

#include <gmpxx.h>

#include "ncpit/error.hpp"

namespace ncpit {

// Deterministic splitmix64 stream. All randomness in the library flows
// through this type so that runs are replayable from a single seed on any
// platform (std distributions are implementation-defined, hence avoided).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound), bound > 0. Masked rejection keeps it unbiased.
  std::uint64_t below_u64(std::uint64_t bound) {
    if (bound == 0) fail(Errc::Config, "Rng::below_u64: bound must be positive");
    if (bound == 1) return 0;
    std::uint64_t mask = ~std::uint64_t{0} >> __builtin_clzll(bound - 1);
    for (;;) {
      std::uint64_t v = next() & mask;
      if (v < bound) return v;
    }
  }

  // Uniform in [0, bound). Delegates to the 64-bit path when bound fits, so
  // both field representations consume the stream identically.
  mpz_class below(const mpz_class& bound) {
    if (bound <= 0) fail(Errc::Config, "Rng::below: bound must be positive");
    if (bound.fits_ulong_p()) return mpz_class(below_u64(bound.get_ui()));
    std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
    std::size_t chunks = (bits + 63) / 64;
    for (;;) {
      mpz_class acc = 0;
      for (std::size_t i = 0; i < chunks; ++i) {
        acc <<= 64;
        acc += mpz_class(next());
      }
      acc &= (mpz_class(1) << bits) - 1;
      if (acc < bound) return acc;
    }
  }

  // Per-trial seed schedule: seed_trial = mix(master, k, trial). Fixed
  // function, documented here; concurrent and sequential trial execution
  // produce identical streams.
  static std::uint64_t mix(std::uint64_t master, std::uint64_t k, std::uint64_t trial) {
    return avalanche(avalanche(master + 0x9e3779b97f4a7c15ULL * (k + 1)) ^
                     (trial + 0x9e3779b97f4a7c15ULL));
  }

 private:
  static std::uint64_t avalanche(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace ncpit
