#pragma once

#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "bedard/coxeter.hpp"
#include "bedard/qpoly.hpp"
#include "bedard/root_system.hpp"
#include "bedard/sequences.hpp"

namespace bedard {

/// Point-count model of a connected reductive group: a root system plus the
/// rank of a maximal torus (r >= semisimple rank; GL_n has A_{n-1} with r = n).
struct ReductiveDatum {
  std::shared_ptr<const Group> group;
  std::shared_ptr<const RootSystem> roots;
  int torus_rank = 0;

  /// Throws Error if torus_rank < semisimple rank.
  static ReductiveDatum from_type(std::string_view type, int torus_rank,
                                  std::size_t cap = kDefaultGroupCap);
  static ReductiveDatum from_group(std::shared_ptr<const Group> group, int torus_rank);

  int num_positive() const { return roots->num_positive(); }
  int dim_group() const { return 2 * num_positive() + torus_rank; }
};

/// #( w (Phi^+ \ Phi_J) cap Phi_{eps(J)} ): dimension of the affine fibre
/// added when passing from (J_n, w_n) to the next term.
int step_fibre_dim(const RootSystem& rs, GenSet jn, const Twist& eps, Element wn);

/// #( w (Phi^+ \ Phi_J) cap (Phi^+ \ Phi_{eps(J)}) ), the number of roots of
/// U_P cap U_P' for a pair in good position. Throws NotGoodPosition unless
/// Ad(w) J = eps(J).
int stabilized_codim(const RootSystem& rs, GenSet j_inf, const Twist& eps, Element w_inf);

/// W_J(q) = sum over W_J of q^l(w).
QPoly poincare_poly(const Group& g, GenSet j);
/// sum over W^J of q^l(w), the F_q point count of the partial flag variety.
QPoly flag_count_poly(const Group& g, GenSet j);
/// q^N (q-1)^r W(q)
QPoly group_order_poly(const ReductiveDatum& datum);

struct PieceCensusRow {
  PieceKey key;
  std::vector<int> d;  // per-step fibre dimensions
  int n_t = 0;         // sum of d
  int m_t = 0;
  int dim = 0;
  std::optional<QPoly> count;  // split connected case only
};

PieceCensusRow piece_row(const PieceKey& key, const ReductiveDatum& datum, const Twist& eps);
int piece_dim(const PieceKey& key, const ReductiveDatum& datum, const Twist& eps);
/// q^(N_t + N - m_t) (q-1)^r W(q). Requires eps = identity.
QPoly piece_count_poly(const PieceKey& key, const ReductiveDatum& datum, const Twist& eps);
/// (sum over W^J of q^l(w)) q^(N_J) (q-1)^r W(q)
QPoly variety_count_poly(GenSet j, const ReductiveDatum& datum);

struct Census {
  GenSet j;
  bool split = true;
  std::vector<PieceCensusRow> rows;
  QPoly variety;
  std::optional<QPoly> piece_sum;
  /// Sum of piece counts equals the variety count (nullopt when twisted).
  std::optional<bool> sum_ok;
  /// N_t <= m_t for every row and some row attains equality.
  bool dim_bound_ok = false;
  /// |rows| = |W^J|
  bool euler_ok = false;
};

Census census(GenSet j, const Twist& eps, const ReductiveDatum& datum);

}  // namespace bedard
