#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "oapt/transform.hpp"

namespace oapt {

/// Seeded generator whose stream depends only on its seed. Draws avoid the
/// standard distributions, whose output is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Independent stream for one (suite, n, k) task of a run.
  static Rng for_task(std::uint64_t seed, std::string_view suite, int n, int k);

  std::uint64_t next() { return engine_(); }
  /// Uniform in [lo, hi].
  long uniform(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool coin() { return next() & 1u; }

 private:
  std::mt19937_64 engine_;
};

/// Gaussian rational with numerators in [-range, range] and denominators in
/// [1, max_den].
GaussianRational random_scalar(Rng& rng, int range = 3, int max_den = 2);
Vector random_vector(Rng& rng, std::size_t n);
/// A random subspace of exactly the requested dimension.
Subspace random_subspace(Rng& rng, std::size_t n, std::size_t k);

ExactMatrix permutation_matrix(const std::vector<std::size_t>& perm);
/// I - 2 v v* / <v, v>: unitary with Gaussian-rational entries.
ExactMatrix householder(const Vector& v);
/// Product of random reflections, a random permutation and a positive
/// integer scale; scaled-unitary by construction.
ExactMatrix random_scaled_unitary(Rng& rng, std::size_t n, int reflections = 2);
TransformSpec random_spec(Rng& rng, std::size_t n, bool allow_conjugate, bool perp);

}  // namespace oapt
