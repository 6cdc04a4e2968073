#pragma once

#include <cstdint>
#include <initializer_list>

namespace ridematch {

// splitmix64 step, used for seed expansion and sub-seed derivation.
std::uint64_t splitmix64(std::uint64_t& state);

// Derives a deterministic sub-seed from a base seed and an index path
// (e.g. {size_index, trial_index}); parallel and serial runs of a benchmark
// plan draw from identical streams.
std::uint64_t derive_seed(std::uint64_t base,
                          std::initializer_list<std::uint64_t> path);

// xoshiro256** with hand-rolled samplers. The algorithm is fixed here, not
// delegated to std:: distributions, so the byte streams and every generated
// fixture are reproducible across platforms and standard libraries. The
// integer and uniform streams are bit-exact everywhere; the normal/gamma/
// beta samplers additionally depend on libm rounding, which can differ by
// an ulp between math libraries.
class Rng {
 public:
  static constexpr const char* kAlgorithm = "xoshiro256** (splitmix64 seeded)";

  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64();

  // Uniform on [0,1), 53-bit resolution.
  double next_double();

  // Uniform integer on [lo, hi] inclusive, unbiased (rejection sampling).
  int uniform_int(int lo, int hi);

  bool bernoulli(double p = 0.5);

  // Box-Muller; both normals of a pair are consumed per call.
  double normal(double mean, double stddev);

  // Resampling until the value lands in [lo, hi].
  double truncated_normal(double mean, double stddev, double lo, double hi);

  // Marsaglia-Tsang for shape >= 1, with the standard boost for shape < 1.
  double gamma(double shape);

  double beta(double a, double b);

 private:
  std::uint64_t s_[4];
};

}  // namespace ridematch
