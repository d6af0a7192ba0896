#include "hurwitz/sampling.hpp"

namespace hurwitz {

int Sampler::uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

Rational Sampler::rational() {
  Rational q(uniform_int(-9, 9), uniform_int(1, 6));
  q.canonicalize();
  return q;
}

Element Sampler::element(int dim) {
  std::vector<Rational> v;
  for (int i = 0; i < dim; ++i) v.push_back(rational());
  return Element(std::move(v));
}

Element Sampler::off_cone(const Signature& sig) {
  while (true) {
    Element u = element(sig.dim());
    if (norm_form(u, sig) != 0) return u;
  }
}

SignVector Sampler::sign_vector(int dim) {
  std::vector<int> e{1};
  for (int i = 1; i < dim; ++i) e.push_back(uniform_int(0, 1) ? 1 : -1);
  return SignVector(std::move(e));
}

std::vector<Integer> Sampler::integers(int dim, int bound) {
  std::vector<Integer> v;
  for (int i = 0; i < dim; ++i) v.emplace_back(uniform_int(-bound, bound));
  return v;
}

std::vector<SignVector> all_sign_vectors(int dim) {
  std::vector<SignVector> out;
  for (unsigned mask = 0; mask < (1u << (dim - 1)); ++mask) {
    std::vector<int> e{1};
    for (int i = 1; i < dim; ++i) e.push_back(mask & (1u << (i - 1)) ? -1 : 1);
    out.emplace_back(std::move(e));
  }
  return out;
}

}  // namespace hurwitz
