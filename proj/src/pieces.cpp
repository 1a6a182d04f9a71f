#include "bedard/pieces.hpp"

#include <algorithm>

#include "bedard/error.hpp"

namespace bedard {
namespace {

void require_same_group(const ReductiveDatum& datum, const Twist& eps) {
  if (datum.group->cartan_matrix() != eps.group().cartan_matrix()) {
    throw Error("twist and reductive datum belong to different groups");
  }
}

}  // namespace

ReductiveDatum ReductiveDatum::from_type(std::string_view type, int torus_rank, std::size_t cap) {
  return from_group(Group::from_type(type, cap), torus_rank);
}

ReductiveDatum ReductiveDatum::from_group(std::shared_ptr<const Group> group, int torus_rank) {
  if (torus_rank < group->rank()) {
    throw Error("torus rank " + std::to_string(torus_rank) + " is below the semisimple rank " +
                std::to_string(group->rank()));
  }
  auto roots = std::make_shared<const RootSystem>(RootSystem::from_cartan_matrix(group->cartan_matrix()));
  return ReductiveDatum{std::move(group), std::move(roots), torus_rank};
}

int step_fibre_dim(const RootSystem& rs, GenSet jn, const Twist& eps, Element wn) {
  const Group& g = eps.group();
  const GenSet ej = eps.twist_subset(jn);
  int count = 0;
  for (int k = 0; k < rs.num_positive(); ++k) {
    if (rs.in_subsystem(k, jn)) continue;
    if (rs.in_subsystem(rs.act(g, wn, k), ej)) ++count;
  }
  return count;
}

int stabilized_codim(const RootSystem& rs, GenSet j_inf, const Twist& eps, Element w_inf) {
  const Group& g = eps.group();
  const GenSet ej = eps.twist_subset(j_inf);
  if (g.ad_subset(w_inf, j_inf) != ej || g.ad_subset(w_inf, j_inf).size() != j_inf.size()) {
    throw NotGoodPosition("Ad(w) J != eps(J) for w = [" + g.format(w_inf) + "], J = {" + format_gen_set(j_inf) + "}");
  }
  int count = 0;
  for (int k = 0; k < rs.num_positive(); ++k) {
    if (rs.in_subsystem(k, j_inf)) continue;
    const int img = rs.act(g, w_inf, k);
    if (rs.is_positive(img) && !rs.in_subsystem(img, ej)) ++count;
  }
  return count;
}

QPoly poincare_poly(const Group& g, GenSet j) {
  std::vector<std::int64_t> c;
  for (Element w : g.parabolic_elements(j)) {
    const auto l = static_cast<std::size_t>(g.length(w));
    if (c.size() <= l) c.resize(l + 1, 0);
    ++c[l];
  }
  return QPoly(std::move(c));
}

QPoly flag_count_poly(const Group& g, GenSet j) {
  std::vector<std::int64_t> c;
  for (Element w : g.enumerate_min_reps(GenSet{}, j)) {
    const auto l = static_cast<std::size_t>(g.length(w));
    if (c.size() <= l) c.resize(l + 1, 0);
    ++c[l];
  }
  return QPoly(std::move(c));
}

QPoly group_order_poly(const ReductiveDatum& datum) {
  return QPoly::monomial(datum.num_positive()) * QPoly::q_minus_one_pow(datum.torus_rank) *
         poincare_poly(*datum.group, datum.group->all_generators());
}

PieceCensusRow piece_row(const PieceKey& key, const ReductiveDatum& datum, const Twist& eps) {
  require_same_group(datum, eps);
  PieceCensusRow row;
  row.key = key;
  for (const TStep& st : key.steps) {
    const int d = step_fibre_dim(*datum.roots, st.j, eps, st.w);
    row.d.push_back(d);
    row.n_t += d;
  }
  if (row.d.back() != 0) throw InternalError("stabilized step has a nonzero fibre dimension");
  row.m_t = stabilized_codim(*datum.roots, key.j_inf, eps, key.w_inf);
  row.dim = row.n_t + datum.dim_group() - row.m_t;
  if (eps.is_identity()) {
    row.count = QPoly::monomial(row.n_t + datum.num_positive() - row.m_t) *
                QPoly::q_minus_one_pow(datum.torus_rank) * poincare_poly(*datum.group, datum.group->all_generators());
  }
  return row;
}

int piece_dim(const PieceKey& key, const ReductiveDatum& datum, const Twist& eps) {
  return piece_row(key, datum, eps).dim;
}

QPoly piece_count_poly(const PieceKey& key, const ReductiveDatum& datum, const Twist& eps) {
  if (!eps.is_identity()) throw Error("point-count polynomials are only defined for the split connected case");
  return *piece_row(key, datum, eps).count;
}

QPoly variety_count_poly(GenSet j, const ReductiveDatum& datum) {
  return flag_count_poly(*datum.group, j) * QPoly::monomial(datum.roots->num_positive_in(j)) *
         QPoly::q_minus_one_pow(datum.torus_rank) * poincare_poly(*datum.group, datum.group->all_generators());
}

Census census(GenSet j, const Twist& eps, const ReductiveDatum& datum) {
  Census c;
  c.j = j;
  c.split = eps.is_identity();
  for (const PieceKey& key : enumerate_pieces(j, eps)) c.rows.push_back(piece_row(key, datum, eps));
  c.variety = variety_count_poly(j, datum);
  if (c.split) {
    QPoly sum;
    for (const auto& row : c.rows) sum += *row.count;
    c.piece_sum = sum;
    c.sum_ok = sum == c.variety;
  }
  bool bound = true;
  bool dense = false;
  for (const auto& row : c.rows) {
    bound = bound && row.n_t <= row.m_t;
    dense = dense || row.n_t == row.m_t;
  }
  c.dim_bound_ok = bound && dense;
  c.euler_ok = c.rows.size() == datum.group->enumerate_min_reps(GenSet{}, j).size();
  return c;
}

}  // namespace bedard
