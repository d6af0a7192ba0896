#include "hurwitz/number_theory.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "hurwitz/errors.hpp"
#include "hurwitz/hurwitz_matrix.hpp"

namespace hurwitz {

namespace {

struct FamilyInfo {
  Family family;
  const char* id;
  int params;
  int seed_dim;
  int arity;
};

constexpr FamilyInfo kFamilies[] = {
    {Family::TypeA8, "EQ38", 3, 8, 9},        {Family::TypeA4, "EQ38_DIM4", 2, 4, 5},
    {Family::TypeA2, "EQ38_DIM2", 1, 2, 3},   {Family::TypeB8, "EQ39", 3, 8, 6},
    {Family::TypeB4, "EQ39_DIM4", 2, 4, 4},   {Family::TypeC8, "EQ40", 3, 8, 8},
    {Family::Pythagorean, "EQ41", 0, 4, 4},   {Family::TwiceSquare, "EQ46", 0, 4, 3},
    {Family::PowerNorm, "EQ47", 1, 2, 3},
};

const FamilyInfo& info(Family f) {
  for (const auto& i : kFamilies) {
    if (i.family == f) return i;
  }
  throw InvalidArgument("unknown family");
}

// Seed and sign parameters padded to dimension 8; absent parameters are 0.
struct Padded {
  Integer u[8];
  Integer c1, c2, c3;

  Padded(std::span<const Integer> seed, const std::vector<int>& c) {
    for (std::size_t i = 0; i < seed.size(); ++i) u[i] = seed[i];
    c1 = c.size() > 0 ? c[0] : 0;
    c2 = c.size() > 1 ? c[1] : 0;
    c3 = c.size() > 2 ? c[2] : 0;
  }

  Integer norm() const {
    return u[0] * u[0] - c1 * u[1] * u[1] - c2 * u[2] * u[2] + c1 * c2 * u[3] * u[3] - c3 * u[4] * u[4] +
           c1 * c3 * u[5] * u[5] + c2 * c3 * u[6] * u[6] - c1 * c2 * c3 * u[7] * u[7];
  }
};

std::vector<Integer> type_a(const Padded& p, int dim) {
  const auto& u = p.u;
  std::vector<Integer> v;
  v.push_back(u[0] * u[0] + p.c1 * u[1] * u[1] + p.c2 * u[2] * u[2] - p.c1 * p.c2 * u[3] * u[3] +
              p.c3 * u[4] * u[4] - p.c1 * p.c3 * u[5] * u[5] - p.c2 * p.c3 * u[6] * u[6] +
              p.c1 * p.c2 * p.c3 * u[7] * u[7]);
  for (int k = 1; k < dim; ++k) v.push_back(2 * u[0] * u[k]);
  v.push_back(p.norm());
  return v;
}

std::vector<Integer> type_b(const Padded& p, int dim) {
  const auto& u = p.u;
  const Integer &c1 = p.c1, &c2 = p.c2, &c3 = p.c3;
  std::vector<Integer> v;
  v.push_back(u[0] * u[0] - c1 * u[1] * u[1] + c2 * u[2] * u[2] - c1 * c2 * u[3] * u[3] + c3 * u[4] * u[4] -
              c1 * c3 * u[5] * u[5] + c2 * c3 * u[6] * u[6] - c1 * c2 * c3 * u[7] * u[7]);
  v.push_back(2 * (u[0] * u[2] + c1 * u[1] * u[3] + c3 * u[4] * u[6] - c1 * c3 * u[5] * u[7]));
  v.push_back(2 * (u[0] * u[3] + u[1] * u[2] - c3 * u[5] * u[6] + c3 * u[4] * u[7]));
  if (dim == 8) {
    v.push_back(2 * (u[0] * u[4] + c1 * u[1] * u[5] - c2 * u[2] * u[6] + c1 * c2 * u[3] * u[7]));
    v.push_back(2 * (u[0] * u[5] + u[1] * u[4] + c2 * u[3] * u[6] - c2 * u[2] * u[7]));
  }
  v.push_back(p.norm());
  return v;
}

std::vector<Integer> type_c(const Padded& p) {
  const auto& u = p.u;
  const Integer &c1 = p.c1, &c2 = p.c2, &c3 = p.c3;
  return {u[0] * u[0] - c1 * u[1] * u[1] - c2 * u[2] * u[2] + c1 * c2 * u[3] * u[3] - c3 * u[4] * u[4] +
              c1 * c3 * u[5] * u[5] - c2 * c3 * u[6] * u[6] + c1 * c2 * c3 * u[7] * u[7],
          2 * (-c3 * u[4] * u[6] + c1 * c3 * u[5] * u[7]),
          2 * (-c3 * u[4] * u[7] + c3 * u[5] * u[6]),
          2 * (c2 * u[2] * u[6] - c1 * c2 * u[3] * u[7]),
          2 * (c2 * u[2] * u[7] - c2 * u[3] * u[6]),
          2 * (u[0] * u[6] - c1 * u[1] * u[7]),
          2 * (u[0] * u[7] - u[1] * u[6]),
          p.norm()};
}

// Left-side weights of sum w_i v_i^2 = v_last^2 for the degree-2 families.
std::vector<Integer> weights(const DiophantineFamily& f) {
  const auto& c = f.c();
  auto eta = [&](int dim) {
    const auto e = metric(Signature(dim, c)).eta;
    return std::vector<Integer>(e.begin(), e.end());
  };
  switch (f.id()) {
    case Family::TypeA8: return eta(8);
    case Family::TypeA4: return eta(4);
    case Family::TypeA2: return eta(2);
    case Family::TypeB8: {
      const auto e = eta(8);
      return {e[0], e[2], e[3], e[4], e[5]};
    }
    case Family::TypeB4: {
      const auto e = eta(4);
      return {e[0], e[2], e[3]};
    }
    case Family::TypeC8: {
      const auto e = eta(8);
      return {e[0], e[2], e[3], e[4], e[5], e[6], e[7]};
    }
    case Family::Pythagorean: return {1, 1, 1};
    case Family::TwiceSquare: return {1, 2};
    case Family::PowerNorm: return {1, -f.c()[0]};
  }
  return {};
}

void for_each_seed(int dim, int bound, std::span<const LinearConstraint> constraints,
                   const std::function<void(const std::vector<Integer>&)>& fn) {
  std::vector<Integer> u(static_cast<std::size_t>(dim), -bound);
  while (true) {
    const bool ok = std::all_of(constraints.begin(), constraints.end(), [&](const LinearConstraint& lc) {
      Integer s = 0;
      for (std::size_t i = 0; i < lc.coeffs.size(); ++i) s += lc.coeffs[i] * u[i];
      return s == 0;
    });
    if (ok) fn(u);
    int k = dim - 1;
    while (k >= 0 && u[k] == bound) {
      u[k] = -bound;
      --k;
    }
    if (k < 0) return;
    ++u[k];
  }
}

}  // namespace

std::string family_id(Family f) { return info(f).id; }

Family parse_family(std::string_view id) {
  if (id == "EQ43") return Family::TypeA2;
  for (const auto& i : kFamilies) {
    if (id == i.id) return i.family;
  }
  throw InvalidArgument("unknown family '" + std::string(id) + "'");
}

std::vector<Family> all_families() {
  std::vector<Family> out;
  for (const auto& i : kFamilies) out.push_back(i.family);
  return out;
}

int DiophantineFamily::parameter_count(Family f) { return info(f).params; }

DiophantineFamily::DiophantineFamily(Family id, std::vector<int> c, int n) : id_(id), c_(std::move(c)), n_(n) {
  const auto& i = info(id);
  if (static_cast<int>(c_.size()) != i.params) {
    throw InvalidArgument(std::string(i.id) + " takes " + std::to_string(i.params) + " sign parameter(s), got " +
                          std::to_string(c_.size()));
  }
  for (int s : c_) {
    if (s != 1 && s != -1) throw InvalidArgument("sign parameters must be +1 or -1");
  }
  if (id == Family::PowerNorm && n_ < 2) throw InvalidArgument("EQ47 requires N >= 2");
}

int DiophantineFamily::arity() const { return info(id_).arity; }

int DiophantineFamily::seed_dim() const { return info(id_).seed_dim; }

SolutionTuple solution_from_seed(const DiophantineFamily& family, std::span<const Integer> seed) {
  if (static_cast<int>(seed.size()) != family.seed_dim()) {
    throw DimensionMismatch(family_id(family.id()) + " seeds have " + std::to_string(family.seed_dim()) +
                            " components, got " + std::to_string(seed.size()));
  }
  SolutionTuple out;
  out.seed.assign(seed.begin(), seed.end());
  const Padded p(seed, family.c());
  const auto& u = p.u;
  switch (family.id()) {
    case Family::TypeA8: out.values = type_a(p, 8); break;
    case Family::TypeA4: out.values = type_a(p, 4); break;
    case Family::TypeA2: out.values = type_a(p, 2); break;
    case Family::TypeB8: out.values = type_b(p, 8); break;
    case Family::TypeB4: out.values = type_b(p, 4); break;
    case Family::TypeC8: out.values = type_c(p); break;
    case Family::Pythagorean:
      out.values = {u[0] * u[0] + u[1] * u[1] - u[2] * u[2] - u[3] * u[3], 2 * (u[0] * u[2] - u[1] * u[3]),
                    2 * (u[0] * u[3] + u[1] * u[2]), u[0] * u[0] + u[1] * u[1] + u[2] * u[2] + u[3] * u[3]};
      break;
    case Family::TwiceSquare:
      if (u[1] != 0 || u[2] != u[3]) throw ConstraintViolation("EQ46 seeds need u1 = 0 and u2 = u3");
      out.values = {u[0] * u[0] - 2 * u[2] * u[2], 2 * u[0] * u[2], u[0] * u[0] + 2 * u[2] * u[2]};
      break;
    case Family::PowerNorm: {
      Integer a = u[0], b = u[1];
      for (int k = 0; k < family.n(); ++k) {
        Integer na = u[0] * a + p.c1 * u[1] * b;
        Integer nb = u[1] * a + u[0] * b;
        a = std::move(na);
        b = std::move(nb);
      }
      out.values = {a, b, u[0] * u[0] - p.c1 * u[1] * u[1]};
      break;
    }
  }
  out.primitive = gcd(out.values) == 1;
  return out;
}

bool verify(const DiophantineFamily& family, std::span<const Integer> values) {
  if (static_cast<int>(values.size()) != family.arity()) {
    throw ArityMismatch(family_id(family.id()) + " expects " + std::to_string(family.arity()) + " values, got " +
                        std::to_string(values.size()));
  }
  const auto w = weights(family);
  Integer lhs = 0;
  for (std::size_t i = 0; i < w.size(); ++i) lhs += w[i] * values[i] * values[i];
  const Integer& last = values.back();
  const Integer rhs = family.id() == Family::PowerNorm ? pow(last, static_cast<unsigned>(family.n() + 1))
                                                       : Integer(last * last);
  return lhs == rhs;
}

std::vector<Integer> canonical_key(const DiophantineFamily& family, std::span<const Integer> values) {
  std::vector<Integer> key;
  for (const auto& v : values) key.push_back(abs(v));
  if (family.id() == Family::PowerNorm && (family.n() + 1) % 2 == 1) key.back() = values.back();
  return key;
}

Integer gcd(std::span<const Integer> values) {
  Integer g = 0;
  for (const auto& v : values) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  return g;
}

std::vector<std::vector<Integer>> constrained_seeds(int dim, int bound,
                                                    std::span<const LinearConstraint> constraints) {
  if (bound < 0) throw InvalidArgument("seed bound must be >= 0");
  std::vector<std::vector<Integer>> out;
  for_each_seed(dim, bound, constraints, [&](const std::vector<Integer>& u) { out.push_back(u); });
  return out;
}

std::vector<LinearConstraint> seed_constraints(Family f) {
  if (f == Family::TwiceSquare) return {{{0, 1, 0, 0}}, {{0, 0, 1, -1}}};
  return {};
}

std::vector<SolutionTuple> generate(const DiophantineFamily& family, int bound, GenerateOptions options) {
  if (bound < 0) throw InvalidArgument("seed bound must be >= 0");
  const auto constraints = seed_constraints(family.id());
  std::vector<std::pair<std::vector<Integer>, SolutionTuple>> rows;
  std::map<std::vector<Integer>, std::size_t> seen;

  for_each_seed(family.seed_dim(), bound, constraints, [&](const std::vector<Integer>& u) {
    SolutionTuple sol = solution_from_seed(family, u);
    if (!verify(family, sol.values)) {
      throw IdentityViolation(family_id(family.id()) + " seed " + to_string(Element(std::vector<Rational>(
                                                                      u.begin(), u.end()))) +
                              " produced a non-solution");
    }
    if (options.primitive_only) {
      const Integer g = gcd(sol.values);
      if (g == 0) return;
      if (family.id() == Family::PowerNorm) {
        if (g != 1) return;
      } else {
        for (auto& v : sol.values) v /= g;
      }
    }
    sol.primitive = gcd(sol.values) == 1;
    auto key = canonical_key(family, sol.values);
    if (options.dedupe) {
      if (seen.contains(key)) return;
      seen.emplace(key, rows.size());
      sol.values = key;
    }
    rows.emplace_back(std::move(key), std::move(sol));
  });

  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<SolutionTuple> out;
  out.reserve(rows.size());
  for (auto& r : rows) out.push_back(std::move(r.second));
  return out;
}

std::tuple<Rational, Rational, Rational> composition_identity(const Element& u, const Element& v,
                                                              const Signature& sig) {
  require_dim(u, sig, "composition_identity");
  require_dim(v, sig, "composition_identity");
  const Element w = hurwitz_matrix(u, sig) * v;
  Rational nw = norm_form(w, sig), nu = norm_form(u, sig), nv = norm_form(v, sig);
  if (nw != nu * nv) {
    throw IdentityViolation("w^T eta w = " + to_string(nw) + " but (u^T eta u)(v^T eta v) = " + to_string(nu * nv));
  }
  return {nw, nu, nv};
}

}  // namespace hurwitz
