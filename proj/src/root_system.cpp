#include "bedard/root_system.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "bedard/error.hpp"

namespace bedard {
namespace {

Root reflect_root(const std::vector<std::vector<int>>& a, int i, const Root& r) {
  // s_i(beta) = beta - <alpha_i^vee, beta> alpha_i
  int pairing = 0;
  for (std::size_t j = 0; j < r.size(); ++j) pairing += a[i][j] * r[j];
  Root out = r;
  out[i] -= pairing;
  return out;
}

bool positive(const Root& r) {
  return std::all_of(r.begin(), r.end(), [](int x) { return x >= 0; });
}

int root_height(const Root& r) { return std::accumulate(r.begin(), r.end(), 0); }

}  // namespace

RootSystem RootSystem::from_type(std::string_view type) { return from_cartan_type(parse_cartan_type(type)); }

RootSystem RootSystem::from_cartan_type(const CartanType& type) { return from_cartan_matrix(type.cartan_matrix()); }

RootSystem RootSystem::from_cartan_matrix(std::vector<std::vector<int>> cartan) {
  RootSystem rs;
  const int n = static_cast<int>(cartan.size());
  rs.cartan_ = std::move(cartan);

  std::map<Root, int> seen;
  std::deque<Root> queue;
  for (int i = 0; i < n; ++i) {
    Root r(n, 0);
    r[i] = 1;
    seen.emplace(r, 0);
    queue.push_back(r);
  }
  while (!queue.empty()) {
    Root r = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      Root s = reflect_root(rs.cartan_, i, r);
      if (seen.emplace(s, 0).second) {
        if (seen.size() > 10'000) throw InvalidPresentation("root system is not finite");
        queue.push_back(std::move(s));
      }
    }
  }
  std::vector<Root> pos;
  for (const auto& [r, unused] : seen)
    if (positive(r)) pos.push_back(r);
  std::sort(pos.begin(), pos.end(), [](const Root& x, const Root& y) {
    const int hx = root_height(x), hy = root_height(y);
    if (hx != hy) return hx < hy;
    return x > y;  // alpha_0 before alpha_1 at equal height
  });
  rs.roots_ = pos;
  for (const Root& r : pos) {
    Root neg = r;
    for (int& x : neg) x = -x;
    rs.roots_.push_back(neg);
  }
  if (rs.roots_.size() != seen.size()) throw InternalError("root system is not closed under negation");

  rs.support_.resize(rs.roots_.size());
  for (std::size_t k = 0; k < rs.roots_.size(); ++k) {
    std::uint64_t mask = 0;
    for (int i = 0; i < n; ++i)
      if (rs.roots_[k][i] != 0) mask |= std::uint64_t{1} << i;
    rs.support_[k] = mask;
  }
  rs.simple_index_.resize(n);
  for (int i = 0; i < n; ++i) {
    Root r(n, 0);
    r[i] = 1;
    rs.simple_index_[i] = rs.index_of(r);
  }
  rs.reflection_.resize(static_cast<std::size_t>(n) * rs.roots_.size());
  for (int i = 0; i < n; ++i)
    for (std::size_t k = 0; k < rs.roots_.size(); ++k)
      rs.reflection_[static_cast<std::size_t>(i) * rs.roots_.size() + k] =
          rs.index_of(reflect_root(rs.cartan_, i, rs.roots_[k]));

  // Symmetrizer: len_i a_ij = len_j a_ji, propagated along bonds.
  rs.simple_len_.assign(n, 0);
  for (int start = 0; start < n; ++start) {
    if (rs.simple_len_[start] != 0) continue;
    rs.simple_len_[start] = 6;
    std::deque<int> q{start};
    while (!q.empty()) {
      const int i = q.front();
      q.pop_front();
      for (int j = 0; j < n; ++j) {
        if (i == j || rs.cartan_[i][j] == 0 || rs.simple_len_[j] != 0) continue;
        rs.simple_len_[j] = rs.simple_len_[i] * rs.cartan_[i][j] / rs.cartan_[j][i];
        q.push_back(j);
      }
    }
  }
  return rs;
}

int RootSystem::index_of(const Root& r) const {
  if (static_cast<int>(r.size()) != rank()) return -1;
  const bool pos = positive(r);
  Root key = r;
  if (!pos)
    for (int& x : key) x = -x;
  const int np = num_positive();
  for (int k = 0; k < np; ++k) {
    if (roots_[k] == key) return pos ? k : k + np;
  }
  return -1;
}

int RootSystem::act(const Group& g, Element w, int idx) const {
  const auto word = g.word(w);
  for (auto it = word.rbegin(); it != word.rend(); ++it) idx = reflect(*it, idx);
  return idx;
}

Root RootSystem::act(const Group& g, Element w, const Root& r) const {
  Root out = r;
  const auto word = g.word(w);
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = reflect_root(cartan_, *it, out);
  return out;
}

int RootSystem::height(int idx) const { return root_height(roots_[idx]); }

long long RootSystem::doubled_form(const Root& a, const Root& b) const {
  long long acc = 0;
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j)
      acc += static_cast<long long>(a[i]) * b[j] * cartan_[i][j] * simple_len_[i];
  return acc;
}

int RootSystem::num_positive_in(GenSet j) const {
  int count = 0;
  for (int k = 0; k < num_positive(); ++k)
    if (in_subsystem(k, j)) ++count;
  return count;
}

}  // namespace bedard
