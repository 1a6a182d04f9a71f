#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "bedard/coxeter.hpp"
#include "bedard/fq_linalg.hpp"

namespace bedard {

/// Strictly increasing chain 0 < V_1 < ... < V_k < F^n of proper nonzero
/// subspaces. The stabilizer has type J = {g : g+1 is not a jump dimension}
/// in the generators 0..n-2 of W(A_{n-1}).
class PartialFlag {
 public:
  PartialFlag() = default;
  /// Throws DimensionMismatch unless the chain is strictly increasing,
  /// proper, nonzero and in a common ambient space.
  PartialFlag(const FqField& f, int ambient, std::vector<Subspace> chain);
  /// span(e_0..e_{d-1}) for each d in dims.
  static PartialFlag standard(int ambient, const std::vector<int>& dims);

  int ambient() const { return ambient_; }
  const std::vector<Subspace>& chain() const { return chain_; }
  /// Jump dimensions.
  std::vector<int> dims() const;
  GenSet type() const;

  friend bool operator==(const PartialFlag&, const PartialFlag&) = default;
  friend auto operator<=>(const PartialFlag& x, const PartialFlag& y) {
    if (auto c = x.ambient_ <=> y.ambient_; c != 0) return c;
    return x.chain_ <=> y.chain_;
  }

 private:
  int ambient_ = 0;
  std::vector<Subspace> chain_;
};

/// Jump dimensions of the flags with stabilizer type J.
std::vector<int> dims_of_type(int n, GenSet j);
GenSet type_of_dims(int n, const std::vector<int>& dims);

/// All flags with the given jump dimensions, in increasing order. Throws
/// BudgetExceeded when more than `budget` flags would be produced.
std::vector<PartialFlag> enumerate_flags(const FqField& f, int n, const std::vector<int>& dims,
                                         std::size_t budget = 1'000'000);

/// Relative position pos(F1, F2) in ^{type F1}W^{type F2}, with W = W(A_{n-1})
/// acting on positions 0..n-1 and generator i swapping positions i, i+1.
/// For complete flags, pos(E, wE) = w where E is the standard flag and w
/// permutes the standard basis.
Element pos_flags(const FqField& f, const Group& w_group, const PartialFlag& f1, const PartialFlag& f2);
/// The permutation (as images of 0..n-1) of a Weyl group element of type A.
std::vector<int> permutation_of(const Group& w_group, Element w);
Element element_of_permutation(const Group& w_group, const std::vector<int>& perm);

/// Flag of P^Q = (P cap Q) U_P: the refinement V_{i-1} + (V_i cap W_j).
PartialFlag flag_PQ(const FqField& f, const PartialFlag& p, const PartialFlag& q);
PartialFlag frobenius_flag(const FqField& f, const PartialFlag& fl, int power);
PartialFlag apply_flag(const FqField& f, const Matrix& g, const PartialFlag& fl);

/// g maps each V_i to itself.
bool stabilizes(const FqField& f, const Matrix& g, const PartialFlag& fl);
/// (g - 1) V_i lies in V_{i-1} for every i, i.e. g is in U_P.
bool in_unipotent_radical(const FqField& f, const Matrix& g, const PartialFlag& fl);
/// Invertible h with h(standard flag of the same dims) = fl.
Matrix adapted_basis(const FqField& f, const PartialFlag& fl);
/// Every element of U_P, by conjugating the standard block unitriangular group.
std::vector<Matrix> unipotent_radical(const FqField& f, const PartialFlag& fl);

}  // namespace bedard
