#pragma once

#include <initializer_list>
#include <vector>

#include "hurwitz/algebra.hpp"
#include "hurwitz/sampling.hpp"

namespace test {

inline hurwitz::Element el(std::initializer_list<int> v) {
  std::vector<hurwitz::Rational> q;
  for (int x : v) q.emplace_back(x);
  return hurwitz::Element(std::move(q));
}

inline std::vector<hurwitz::Integer> ints(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

}  // namespace test
