#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bedard {

/// Exact integer polynomial in q, coefficients lowest degree first. All
/// arithmetic is overflow-checked (throws Overflow).
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<std::int64_t> coeffs);
  static QPoly constant(std::int64_t c);
  static QPoly monomial(int degree, std::int64_t c = 1);
  /// (q - 1)^r
  static QPoly q_minus_one_pow(int r);

  const std::vector<std::int64_t>& coefficients() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::int64_t coefficient(int k) const { return k < static_cast<int>(c_.size()) ? c_[k] : 0; }

  std::int64_t evaluate(std::int64_t q) const;

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend bool operator==(const QPoly&, const QPoly&) = default;

  /// "1 + 2q + q^3"
  std::string to_string() const;
  /// "[1,2,0,1]"
  std::string to_list_string() const;

 private:
  void trim();
  std::vector<std::int64_t> c_;
};

}  // namespace bedard
