#include "bedard/error.hpp"
#include "bedard/pieces.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace bedard;

namespace {

Root vec(std::initializer_list<int> v) { return Root(v); }

// |GL_n(F_q)| computed directly.
long long gl_order(int n, long long q) {
  long long qn = 1;
  for (int i = 0; i < n; ++i) qn *= q;
  long long out = 1, qi = 1;
  for (int i = 0; i < n; ++i) {
    out *= qn - qi;
    qi *= q;
  }
  return out;
}

}  // namespace

TEST_CASE("root systems") {
  CHECK(RootSystem::from_type("A1").num_positive() == 1);
  const auto a2 = RootSystem::from_type("A2");
  CHECK(a2.num_positive() == 3);
  CHECK(a2.roots()[0] == vec({1, 0}));
  CHECK(a2.roots()[1] == vec({0, 1}));
  CHECK(a2.roots()[2] == vec({1, 1}));
  CHECK(RootSystem::from_type("B2").num_positive() == 4);
  CHECK(RootSystem::from_type("G2").num_positive() == 6);
  CHECK(RootSystem::from_type("F4").num_positive() == 24);
  CHECK(RootSystem::from_type("E6").num_positive() == 36);
  CHECK(RootSystem::from_type("D4").num_positive() == 12);
  CHECK_THROWS_AS(RootSystem::from_type("Q3"), UnknownType);
  CHECK_THROWS_AS(RootSystem::from_type("D3"), UnknownType);

  auto g = Group::from_type("A2");
  CHECK(a2.act(*g, g->identity(), vec({1, 1})) == vec({1, 1}));
  CHECK(a2.act(*g, g->parse("1"), vec({1, 1})) == vec({1, 0}));
  CHECK(a2.act(*g, g->parse("0"), vec({1, 0})) == vec({-1, 0}));
}

TEST_CASE("action permutes roots and preserves lengths") {
  for (const char* type : {"A3", "B3", "C3", "G2", "D4", "A2xA1"}) {
    auto g = Group::from_type(type);
    auto rs = RootSystem::from_type(type);
    CHECK(rs.size() == 2 * static_cast<std::size_t>(rs.num_positive()));
    for (std::uint32_t i = 0; i < g->order(); i += 3) {
      std::vector<bool> hit(rs.size(), false);
      for (std::size_t k = 0; k < rs.size(); ++k) {
        const int img = rs.act(*g, Element{i}, static_cast<int>(k));
        REQUIRE(img >= 0);
        hit[img] = true;
        CHECK(rs.doubled_form(rs.roots()[img], rs.roots()[img]) ==
              rs.doubled_form(rs.roots()[k], rs.roots()[k]));
      }
      CHECK(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }));
    }
    for (int s = 0; s < rs.rank(); ++s)
      for (int k = 0; k < rs.num_positive(); ++k) {
        const int img = rs.reflect(s, k);
        if (k == rs.simple_root(s))
          CHECK(img == rs.negate(k));
        else
          CHECK(rs.is_positive(img));
      }
  }
}

TEST_CASE("step_fibre_dim and stabilized_codim") {
  auto g = Group::from_type("A2");
  auto rs = RootSystem::from_type("A2");
  const Twist id = Twist::identity(g);
  for (std::uint32_t i = 0; i < g->order(); ++i) CHECK(step_fibre_dim(rs, GenSet{}, id, Element{i}) == 0);
  CHECK(step_fibre_dim(rs, GenSet::of({0}), id, g->parse("1")) == 1);
  CHECK(stabilized_codim(rs, GenSet{}, id, g->parse("1")) == 2);
  CHECK(stabilized_codim(rs, GenSet{}, id, g->longest()) == 0);
  for (auto j : oracle::all_subsets(2))
    CHECK(stabilized_codim(rs, j, id, g->identity()) == rs.num_positive() - rs.num_positive_in(j));
  CHECK_THROWS_AS(stabilized_codim(rs, GenSet::of({0}), id, g->parse("1")), NotGoodPosition);

  // Stabilized steps have zero fibre dimension.
  for (const char* type : {"A3", "B3", "G2", "A2xA1"}) {
    auto h = Group::from_type(type);
    auto hr = RootSystem::from_type(type);
    for (const auto& eps : Twist::diagram_automorphisms(h))
      for (auto j : oracle::all_subsets(h->rank()))
        for (std::uint32_t i = 0; i < h->order(); ++i) {
          const Element w{i};
          if (!h->is_min_rep(eps.twist_subset(j), w, j)) continue;
          if (h->ad_subset(w, j) != eps.twist_subset(j) || h->ad_subset(w, j).size() != j.size()) continue;
          CHECK(step_fibre_dim(hr, j, eps, w) == 0);
        }
  }
}

TEST_CASE("polynomials") {
  auto g = Group::from_type("A2");
  CHECK(poincare_poly(*g, GenSet{}) == QPoly::constant(1));
  CHECK(poincare_poly(*g, g->all_generators()) == QPoly({1, 2, 2, 1}));
  CHECK(flag_count_poly(*g, GenSet::of({0})) == QPoly({1, 1, 1}));
  CHECK(QPoly({1, 2, 0, 1}).to_list_string() == "[1,2,0,1]");
  CHECK(QPoly({1, 2, 0, 1}).to_string() == "1 + 2q + q^3");
  CHECK(QPoly({0, 0, 0}).is_zero());
  CHECK(QPoly::q_minus_one_pow(2) == QPoly({1, -2, 1}));
  CHECK_THROWS_AS(QPoly::monomial(70, 1).evaluate(2), Overflow);
  CHECK_THROWS_AS(QPoly::constant(INT64_MAX) + QPoly::constant(1), Overflow);
}

TEST_CASE("GL_3 worked census") {
  const auto datum = ReductiveDatum::from_type("A2", 3);
  const auto& g = *datum.group;
  const Twist id = Twist::identity(datum.group);
  const GenSet j = GenSet::of({0});
  const auto keys = enumerate_pieces(j, id);
  REQUIRE(keys.size() == 3);
  CHECK(keys[0].w == g.identity());
  CHECK(keys[1].w == g.parse("1"));
  CHECK(keys[2].w == g.parse("1 0"));
  CHECK(piece_count_poly(keys[0], datum, id).evaluate(2) == 42);
  CHECK(piece_count_poly(keys[1], datum, id).evaluate(2) == 84);
  CHECK(piece_count_poly(keys[2], datum, id).evaluate(2) == 168);
  CHECK(variety_count_poly(j, datum).evaluate(2) == 294);
  CHECK(294 == 7 * gl_order(3, 2) / 4);
  CHECK(piece_dim(keys[2], datum, id) == 9);
  CHECK(piece_dim(keys[0], datum, id) == 7);

  const auto row = piece_row(keys[2], datum, id);
  CHECK(row.d == std::vector<int>{1, 0});
  CHECK(row.n_t == 1);
  CHECK(row.m_t == 1);

  CHECK(variety_count_poly(g.all_generators(), datum) == group_order_poly(datum));
  CHECK(group_order_poly(datum).evaluate(2) == gl_order(3, 2));
  CHECK(group_order_poly(datum).evaluate(3) == gl_order(3, 3));
  const auto gl2 = ReductiveDatum::from_type("A1", 2);
  CHECK(variety_count_poly(GenSet{}, gl2).evaluate(2) == 9);

  const auto whole = census(g.all_generators(), id, datum);
  REQUIRE(whole.rows.size() == 1);
  CHECK(*whole.rows[0].count == group_order_poly(datum));
  CHECK(piece_dim(whole.rows[0].key, datum, id) == datum.dim_group());

  CHECK_THROWS(ReductiveDatum::from_type("A2", 1));
}

TEST_CASE("partition identity, Euler specialization and dimension bound") {
  for (const char* type : {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "G2", "F4", "A1xA1", "A2xA1"}) {
    CAPTURE(type);
    auto g = Group::from_type(type);
    for (int extra : {0, 1}) {
      const auto datum = ReductiveDatum::from_group(g, g->rank() + extra);
      for (const auto& eps : Twist::diagram_automorphisms(g))
        for (auto j : oracle::all_subsets(g->rank())) {
          const auto c = census(j, eps, datum);
          CHECK(c.euler_ok);
          CHECK(c.dim_bound_ok);
          CHECK(c.rows.size() == g->enumerate_min_reps(GenSet{}, j).size());
          if (eps.is_identity()) {
            REQUIRE(c.sum_ok.has_value());
            CHECK(*c.sum_ok);
            CHECK(*c.piece_sum == c.variety);
            for (const auto& row : c.rows) {
              CHECK(row.count->evaluate(1) == 0);
              CHECK(row.dim <= datum.dim_group());
            }
          } else {
            CHECK_FALSE(c.sum_ok.has_value());
          }
        }
    }
  }
}
