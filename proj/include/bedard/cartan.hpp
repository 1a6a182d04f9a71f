#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace bedard {

/// One irreducible factor of a Cartan type, e.g. {'B', 3}.
struct CartanComponent {
  char family = 'A';
  int rank = 1;
  friend bool operator==(const CartanComponent&, const CartanComponent&) = default;
};

/// A product of irreducible finite Cartan types. Generators are numbered
/// consecutively across components in Bourbaki order.
struct CartanType {
  std::vector<CartanComponent> components;

  int rank() const;
  /// Canonical name, e.g. "A2xA1".
  std::string name() const;
  /// a[i][j] = <alpha_i^vee, alpha_j>.
  std::vector<std::vector<int>> cartan_matrix() const;
};

/// Accepts "A2", "B3", "A2xA1", "A1×A1", "G2", ... Throws UnknownType.
CartanType parse_cartan_type(std::string_view text);

/// m(i,j) from the products a_ij * a_ji.
std::vector<std::vector<int>> coxeter_from_cartan(const std::vector<std::vector<int>>& a);

/// All permutations of the generators preserving the Coxeter matrix,
/// identity first, then lexicographic.
std::vector<std::vector<int>> diagram_automorphisms(const std::vector<std::vector<int>>& coxeter);

}  // namespace bedard
