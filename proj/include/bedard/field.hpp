#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace bedard {

/// The finite field F_{p^k}, table driven.
///
/// Elements are the integers 0 .. p^k - 1. The integer with base-p digits
/// c_0 + c_1 p + ... + c_{k-1} p^{k-1} stands for c_0 + c_1 x + ... + c_{k-1}
/// x^{k-1} modulo the defining polynomial. The modulus is the first monic
/// irreducible polynomial of degree k when polynomials are ordered by the
/// integer encoding of their lower coefficients (F_4: x^2+x+1, F_8: x^3+x+1,
/// F_9: x^2+1, F_16: x^4+x+1). For k = 1 this is plain arithmetic mod p.
class FqField {
 public:
  /// Throws Error unless p is prime and p^k <= kMaxFieldSize.
  static std::shared_ptr<const FqField> make(int p, int k);
  /// Field with q elements, q a prime power.
  static std::shared_ptr<const FqField> of_order(int q);

  static constexpr int kMaxFieldSize = 1024;

  int characteristic() const { return p_; }
  int degree() const { return k_; }
  int size() const { return size_; }
  /// Coefficients of the modulus, lowest degree first, leading 1 included.
  const std::vector<int>& modulus() const { return modulus_; }
  std::string name() const;

  int add(int a, int b) const { return add_[a * size_ + b]; }
  int sub(int a, int b) const { return add_[a * size_ + neg_[b]]; }
  int neg(int a) const { return neg_[a]; }
  int mul(int a, int b) const { return mul_[a * size_ + b]; }
  /// Throws Error on zero.
  int inv(int a) const;
  int div(int a, int b) const { return mul(a, inv(b)); }
  int pow(int a, std::uint64_t e) const;

  /// x -> x^(p^power); power is reduced mod k, negative values allowed.
  int frobenius(int x, int power) const;
  /// A generator of the multiplicative group (the least one).
  int primitive_element() const { return primitive_; }

 private:
  FqField() = default;
  int p_ = 0;
  int k_ = 0;
  int size_ = 0;
  int primitive_ = 1;
  std::vector<int> modulus_;
  std::vector<int> add_;
  std::vector<int> mul_;
  std::vector<int> neg_;
  std::vector<int> inv_;
  std::vector<int> frob_;
};

}  // namespace bedard
