#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bedard/flags.hpp"
#include "bedard/sequences.hpp"

namespace bedard {

inline constexpr std::size_t kDefaultBudget = 2'000'000;

/// F_{q^m} together with the Frobenius F : x -> x^q.
struct FrobeniusField {
  std::shared_ptr<const FqField> field;
  int q = 0;
  int m = 0;
  /// q = p^power
  int power = 0;

  static FrobeniusField make(int q, int m);
  Subspace apply(const Subspace& s, int times = 1) const { return frobenius(*field, s, power * times); }
  PartialFlag apply(const PartialFlag& fl, int times = 1) const {
    return frobenius_flag(*field, fl, power * times);
  }
};

/// All invertible n x n matrices, in increasing matrix_code order.
std::vector<Matrix> enumerate_gl(const FqField& f, int n, std::size_t budget = kDefaultBudget);
/// Adjacent transposition matrices, the transvection 1 + E_01 and
/// diag(zeta, 1, ..., 1) with zeta primitive; together they generate GL_n.
std::vector<Matrix> gl_generators(const FqField& f, int n);
/// |GL_n(F_q)|, throwing Overflow past 2^63.
long long gl_order(int n, long long q);

/// Frobenius piece of Q: ^0Q = Q, ^nQ = (^{n-1}Q)^{F^-1(^{n-1}Q)},
/// w_n = pos(F(^nQ), ^nQ). eps must be the identity twist of W(A_{n-1}).
TSeq dl_piece(const FrobeniusField& ff, const Twist& eps, const PartialFlag& q);

/// dim(L + F(L) + F^2(L) + ...)
int gl_line_class(const FrobeniusField& ff, const Subspace& line);

/// X_j or X'_j for a line of F^{2n} with the form
/// <x, y> = sum_{i<n} x_i y_{n+i} - x_{n+i} y_i.
struct SpLineClass {
  bool prime = false;
  int j = 0;
  /// "X_2", "X'_1"
  std::string tag() const;
  friend auto operator<=>(const SpLineClass&, const SpLineClass&) = default;
};
int symplectic_form(const FqField& f, const std::vector<int>& x, const std::vector<int>& y);
SpLineClass sp_line_class(const FrobeniusField& ff, const Subspace& line);

struct LineCensus {
  int n = 0;
  int q = 0;
  int m = 0;
  std::size_t lines = 0;
  /// class j -> number of lines, j = 1..n
  std::map<int, std::size_t> class_counts;
  /// piece w -> number of lines, ShortLex order
  std::map<Element, std::size_t> piece_counts;
  /// Every dl_piece passed validate_t.
  bool all_valid = true;
  /// class j always met the j-th piece of enumerate_pieces.
  bool dictionary_ok = true;
  std::size_t observed_pieces() const { return piece_counts.size(); }
};
LineCensus gl_line_census(int n, int q, int m, std::size_t budget = kDefaultBudget);

struct SpLineCensus {
  int half = 0;
  int q = 0;
  int m = 0;
  std::size_t lines = 0;
  std::map<SpLineClass, std::size_t> class_counts;
};
/// Lines of F_{q^m}^{2 half}.
SpLineCensus sp_line_census(int half, int q, int m, std::size_t budget = kDefaultBudget);
/// The 2n tags X_1..X_n, X'_n..X'_1.
std::vector<SpLineClass> sp_line_tags(int half);

/// A point (P, P', gU_P) of Z over F_q with witness g (gP = P').
struct ZPointFq {
  PartialFlag p;
  PartialFlag p_prime;
  Matrix g;
};

/// One term of the Z-sequence: P^n, P'^n and w_n = pos(P'^n, P^n).
struct ZStep {
  PartialFlag p;
  PartialFlag p_prime;
  Element w;
};
std::vector<ZStep> z_trace(const FqField& f, const Group& w_group, const PartialFlag& p, const Matrix& g);
TSeq z_piece(const FqField& f, const Twist& eps, const ZPointFq& z);

struct ZCensusOptions {
  bool orbits = true;
  bool fibres = true;
  /// Recompute the piece from every member of each coset gU_P.
  bool representatives = false;
  std::size_t budget = kDefaultBudget;
};

struct ZCensusPiece {
  TSeq t;
  std::size_t count = 0;
};

struct ZCensus {
  int n = 0;
  int q = 0;
  GenSet j;
  std::size_t flags = 0;
  std::size_t total = 0;
  /// Ordered by the final w of t (ShortLex).
  std::vector<ZCensusPiece> pieces;
  bool all_valid = true;
  std::optional<std::size_t> orbits;
  std::optional<bool> orbit_constant;
  std::optional<std::size_t> fibres_checked;
  std::optional<bool> fibres_ok;
  std::optional<bool> representatives_ok;
};

/// Enumerates Z_J for GL_n(F_q) (q prime power), classifying each point.
/// Throws BudgetExceeded when the point count or group size passes the budget.
ZCensus z_census(int n, int q, GenSet j, const ZCensusOptions& options = {});

/// pos(P'^P, Z) = pos(P', P) pos(P^{P'}, Z) with lengths adding, over every
/// triple of flags (P', P, Z) with Z refining P.
struct PosCheck {
  std::size_t configurations = 0;
  std::size_t failures = 0;
};
PosCheck check_pos_multiplicativity(const FqField& f, int n, std::size_t budget = kDefaultBudget);
/// Every flag of F^n of every type, ordered by type then flag.
std::vector<PartialFlag> enumerate_all_flags(const FqField& f, int n, std::size_t budget = kDefaultBudget);

}  // namespace bedard
