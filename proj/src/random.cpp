#include "oapt/random.hpp"

#include <numeric>

namespace oapt {

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

Rng Rng::for_task(std::uint64_t seed, std::string_view suite, int n, int k) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (char c : suite) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  std::uint64_t s = mix(seed);
  s = mix(s ^ h);
  s = mix(s ^ static_cast<std::uint64_t>(n));
  s = mix(s ^ (static_cast<std::uint64_t>(k) << 32));
  return Rng(s);
}

GaussianRational random_scalar(Rng& rng, int range, int max_den) {
  mpq_class re(rng.uniform(-range, range), rng.uniform(1, max_den));
  mpq_class im(rng.uniform(-range, range), rng.uniform(1, max_den));
  return {re, im};
}

Vector random_vector(Rng& rng, std::size_t n) {
  Vector v(n);
  for (auto& z : v) z = random_scalar(rng);
  return v;
}

Subspace random_subspace(Rng& rng, std::size_t n, std::size_t k) {
  while (true) {
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < k; ++i) rows.push_back(random_vector(rng, n));
    Subspace s(n, rows);
    if (s.dim() == k) return s;
  }
}

ExactMatrix permutation_matrix(const std::vector<std::size_t>& perm) {
  ExactMatrix m(perm.size(), perm.size());
  for (std::size_t r = 0; r < perm.size(); ++r) m(r, perm[r]) = 1;
  return m;
}

ExactMatrix householder(const Vector& v) {
  const std::size_t n = v.size();
  const HermitianForm form(n);
  const GaussianRational factor = GaussianRational(2) / GaussianRational(form.norm2(v));
  ExactMatrix h = ExactMatrix::identity(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) h(r, c) -= factor * v[r] * v[c].conj();
  return h;
}

ExactMatrix random_scaled_unitary(Rng& rng, std::size_t n, int reflections) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.next() % i]);
  ExactMatrix m = permutation_matrix(perm);
  for (int t = 0; t < reflections; ++t) {
    Vector v(n);
    // Integer entries keep denominators small.
    do {
      for (auto& z : v) z = GaussianRational(mpq_class(rng.uniform(-2, 2)), mpq_class(rng.uniform(-1, 1)));
    } while (sgn(HermitianForm(n).norm2(v)) == 0);
    m = m * householder(v);
  }
  return GaussianRational(rng.uniform(1, 3)) * m;
}

TransformSpec random_spec(Rng& rng, std::size_t n, bool allow_conjugate, bool perp) {
  const int reflections = static_cast<int>(rng.uniform(0, 2));
  return TransformSpec(random_scaled_unitary(rng, n, reflections),
                       allow_conjugate && rng.coin(), perp);
}

}  // namespace oapt
