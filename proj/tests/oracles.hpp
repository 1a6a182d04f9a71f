#pragma once

// Test-only reference computations that share no code path with the
// library: permutation models of Weyl groups and brute-force coset closures.

#include <algorithm>
#include <numeric>
#include <set>
#include <span>
#include <vector>

#include "bedard/coxeter.hpp"

namespace oracle {

using Perm = std::vector<int>;

/// Signed permutation of {1..n} encoded on {-n..-1, 1..n} as an array over
/// 2n points; type B_n generators: s_i = (i, i+1) for i < n, s_n = sign change of n.
inline Perm compose(const Perm& a, const Perm& b) {
  Perm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[b[i]];
  return out;
}

inline Perm transposition(int n, int i) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  std::swap(p[i], p[i + 1]);
  return p;
}

/// Closure of the identity under right multiplication by generators.
inline std::set<Perm> closure(const std::vector<Perm>& gens) {
  Perm id(gens.front().size());
  std::iota(id.begin(), id.end(), 0);
  std::set<Perm> seen{id};
  std::vector<Perm> todo{id};
  while (!todo.empty()) {
    Perm p = todo.back();
    todo.pop_back();
    for (const auto& g : gens) {
      Perm q = compose(p, g);
      if (seen.insert(q).second) todo.push_back(q);
    }
  }
  return seen;
}

inline std::vector<Perm> symmetric_generators(int n) {
  std::vector<Perm> gens;
  for (int i = 0; i + 1 < n; ++i) gens.push_back(transposition(n, i));
  return gens;
}

/// B_n acting on 2n points {0..n-1} (positive) and {n..2n-1} (negatives).
inline std::vector<Perm> hyperoctahedral_generators(int n) {
  std::vector<Perm> gens;
  for (int i = 0; i + 1 < n; ++i) {
    Perm p(2 * n);
    std::iota(p.begin(), p.end(), 0);
    std::swap(p[i], p[i + 1]);
    std::swap(p[n + i], p[n + i + 1]);
    gens.push_back(p);
  }
  Perm p(2 * n);
  std::iota(p.begin(), p.end(), 0);
  std::swap(p[n - 1], p[2 * n - 1]);
  gens.push_back(p);
  return gens;
}

inline Perm perm_of_word(const std::vector<Perm>& gens, std::span<const int> word) {
  Perm p(gens.front().size());
  std::iota(p.begin(), p.end(), 0);
  for (int letter : word) p = compose(p, gens[letter]);
  return p;
}

/// W_K w W_J by closure under left/right generator multiplication.
inline std::vector<bedard::Element> double_coset(const bedard::Group& g, bedard::GenSet k, bedard::Element w,
                                                 bedard::GenSet j) {
  std::set<bedard::Element> seen{w};
  std::vector<bedard::Element> todo{w};
  while (!todo.empty()) {
    auto x = todo.back();
    todo.pop_back();
    for (int s : k.indices()) {
      auto y = g.left_mul_gen(s, x);
      if (seen.insert(y).second) todo.push_back(y);
    }
    for (int s : j.indices()) {
      auto y = g.right_mul_gen(x, s);
      if (seen.insert(y).second) todo.push_back(y);
    }
  }
  return {seen.begin(), seen.end()};
}

inline std::vector<bedard::GenSet> all_subsets(int rank) {
  std::vector<bedard::GenSet> out;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << rank); ++b) out.emplace_back(b);
  return out;
}

}  // namespace oracle
