#pragma once

#include <string_view>
#include <vector>

#include "bedard/cartan.hpp"
#include "bedard/coxeter.hpp"

namespace bedard {

/// Integer coordinates in the basis of simple roots.
using Root = std::vector<int>;

/// Finite crystallographic root system generated from a Cartan matrix.
/// Order: positive roots by height then lexicographically, followed by
/// their negatives in the same order.
class RootSystem {
 public:
  static RootSystem from_type(std::string_view type);
  static RootSystem from_cartan_type(const CartanType& type);
  static RootSystem from_cartan_matrix(std::vector<std::vector<int>> cartan);

  int rank() const { return static_cast<int>(cartan_.size()); }
  const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }
  const std::vector<Root>& roots() const { return roots_; }
  std::size_t size() const { return roots_.size(); }
  int num_positive() const { return static_cast<int>(roots_.size() / 2); }
  bool is_positive(int idx) const { return idx < num_positive(); }
  int negate(int idx) const { return is_positive(idx) ? idx + num_positive() : idx - num_positive(); }
  /// -1 if `r` is not a root.
  int index_of(const Root& r) const;
  int simple_root(int i) const { return simple_index_[i]; }

  /// Index of s_i(root).
  int reflect(int i, int idx) const { return reflection_[static_cast<std::size_t>(i) * size() + idx]; }
  /// Index of w(root), with w acting through its canonical word.
  int act(const Group& g, Element w, int idx) const;
  Root act(const Group& g, Element w, const Root& r) const;

  /// The root lies in Phi_J (its support is inside J).
  bool in_subsystem(int idx, GenSet j) const { return (support_[idx] & ~j.bits()) == 0; }
  int height(int idx) const;
  /// 2 (alpha, beta) for the W-invariant form normalised so every
  /// squared length is an even integer.
  long long doubled_form(const Root& a, const Root& b) const;

  /// #Phi_J^+
  int num_positive_in(GenSet j) const;

 private:
  std::vector<std::vector<int>> cartan_;
  std::vector<Root> roots_;
  std::vector<std::uint64_t> support_;
  std::vector<int> reflection_;
  std::vector<int> simple_index_;
  std::vector<long long> simple_len_;
};

}  // namespace bedard
