#include "bedard/error.hpp"
#include "bedard/sequences.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace bedard;

namespace {

// A2 with s0, s1 the two simple reflections; J = {s0} throughout.
struct A2 {
  std::shared_ptr<const Group> g = Group::from_type("A2");
  Twist id = Twist::identity(g);
  GenSet j = GenSet::of({0});
  Element e = g->identity();
  Element s0 = g->parse("0");
  Element s1 = g->parse("1");
  Element s1s0 = g->parse("1 0");
  Element s0s1 = g->parse("0 1");
};

std::vector<std::pair<std::string, std::vector<Twist>>> sweep() {
  std::vector<std::pair<std::string, std::vector<Twist>>> out;
  for (const char* type : {"A1", "A2", "A3", "B2", "B3", "C3", "G2", "D4", "A1xA1", "A2xA1", "A4", "B4"}) {
    auto g = Group::from_type(type);
    out.emplace_back(type, Twist::diagram_automorphisms(g));
  }
  return out;
}

}  // namespace

TEST_CASE("validate_t examples") {
  A2 a;
  const std::vector<TStep> trivial{{a.j, a.e}, {a.j, a.e}};
  CHECK_FALSE(validate_t(trivial, a.j, a.id).has_value());

  const std::vector<TStep> good{{a.j, a.s1}, {GenSet{}, a.s1s0}, {GenSet{}, a.s1s0}};
  CHECK_FALSE(validate_t(good, a.j, a.id).has_value());

  const std::vector<TStep> bad{{a.j, a.s1}, {GenSet{}, a.s0s1}, {GenSet{}, a.s0s1}};
  const auto v = validate_t(bad, a.j, a.id);
  REQUIRE(v.has_value());
  CHECK(v->axiom == "d");
  CHECK(v->index == 1);
  // Independent coset check backing the expected verdict.
  CHECK(oracle::double_coset(*a.g, GenSet{}, a.s1, a.j) == std::vector<Element>{a.s1, a.s1s0});

  const std::vector<TStep> wrong_base{{GenSet{}, a.e}};
  CHECK(validate_t(wrong_base, a.j, a.id)->axiom == "a");
  const std::vector<TStep> not_min{{a.j, a.s0}};
  CHECK(validate_t(not_min, a.j, a.id)->axiom == "c");
  // (s1, J) repeated forever violates (b): J_1 must be empty.
  const std::vector<TStep> unstable{{a.j, a.s1}};
  CHECK(validate_t(unstable, a.j, a.id).has_value());
}

TEST_CASE("validate_s examples") {
  A2 a;
  for (std::uint32_t i = 0; i < a.g->order(); ++i) {
    const std::vector<SStep> s{{GenSet{}, GenSet{}, Element{i}}, {GenSet{}, GenSet{}, a.e}};
    CHECK_FALSE(validate_s(s, GenSet{}, a.id).has_value());
  }
  const std::vector<SStep> good{{a.j, a.j, a.s1}, {GenSet{}, GenSet{}, a.s0}, {GenSet{}, GenSet{}, a.e}};
  CHECK_FALSE(validate_s(good, a.j, a.id).has_value());
  const std::vector<SStep> bad{{a.j, a.j, a.s1}, {GenSet{}, GenSet{}, a.s1}, {GenSet{}, GenSet{}, a.e}};
  const auto v = validate_s(bad, a.j, a.id);
  REQUIRE(v.has_value());
  CHECK(v->axiom == "d");
  CHECK(v->index == 1);
  const std::vector<SStep> no_fixpoint{{a.j, a.j, a.s1}, {GenSet{}, GenSet{}, a.s0}};
  CHECK(validate_s(no_fixpoint, a.j, a.id)->axiom == "stabilization");
}

TEST_CASE("s_to_t and t_to_s examples") {
  A2 a;
  const SSeq s{a.j, {{a.j, a.j, a.s1}, {GenSet{}, GenSet{}, a.s0}, {GenSet{}, GenSet{}, a.e}}};
  const TSeq t = s_to_t(s, a.id);
  CHECK(t.steps == std::vector<TStep>{{a.j, a.s1}, {GenSet{}, a.s1s0}});
  CHECK(t_to_s(t, a.id) == s);

  const SSeq trivial = sseq_from_u(std::vector<Element>{}, a.j, a.id);
  CHECK(s_to_t(trivial, a.id).steps == std::vector<TStep>{{a.j, a.e}});
  for (const auto& step : t_to_s(s_to_t(trivial, a.id), a.id).steps) CHECK(step.u == a.e);

  const std::vector<Element> single{a.s0s1};
  const SSeq empty_j = sseq_from_u(single, GenSet{}, a.id);
  CHECK(s_to_t(empty_j, a.id).steps == std::vector<TStep>{{GenSet{}, a.s0s1}});
  const SSeq back = t_to_s(s_to_t(empty_j, a.id), a.id);
  CHECK(back.steps.front().u == a.s0s1);
  CHECK(back.steps.back().u == a.e);
}

TEST_CASE("phi and psi examples") {
  A2 a;
  CHECK(phi(sseq_from_u(std::vector<Element>{}, a.j, a.id), *a.g) == a.e);
  CHECK(phi(sseq_from_u(std::vector<Element>{a.s1, a.s0}, a.j, a.id), *a.g) == a.s1s0);
  CHECK(phi(sseq_from_u(std::vector<Element>{a.s1}, a.j, a.id), *a.g) == a.s1);

  const SSeq from_e = psi(a.e, a.j, a.id);
  for (const auto& step : from_e.steps) {
    CHECK(step.u == a.e);
    CHECK(step.j == a.j);
  }
  CHECK(j_infinity(s_to_t(from_e, a.id), a.id) == a.j);

  const SSeq long_one = psi(a.s1s0, a.j, a.id);
  REQUIRE(long_one.steps.size() == 3);
  CHECK(long_one.steps[0] == SStep{a.j, a.j, a.s1});
  CHECK(long_one.steps[1] == SStep{GenSet{}, GenSet{}, a.s0});
  CHECK(long_one.steps[2] == SStep{GenSet{}, GenSet{}, a.e});
  CHECK(j_infinity(s_to_t(long_one, a.id), a.id) == GenSet{});

  const SSeq short_one = psi(a.s1, a.j, a.id);
  CHECK(short_one.steps[0].u == a.s1);
  CHECK(short_one.steps[1].j == GenSet{});
  CHECK(short_one.steps[1].u == a.e);
  CHECK(j_infinity(s_to_t(short_one, a.id), a.id) == GenSet{});

  CHECK_THROWS_AS(psi(a.s0, a.j, a.id), NotMinimalInput);
  CHECK_THROWS_AS(psi(a.g->longest(), a.j, a.id), NotMinimalInput);
}

TEST_CASE("j_infinity requires a stabilized sequence") {
  A2 a;
  const TSeq unfinished{a.j, {{a.j, a.s1}}};
  CHECK_THROWS_AS(j_infinity(unfinished, a.id), NotStabilized);
}

TEST_CASE("enumerate_pieces counts") {
  // J = I: a single piece, for every diagram automorphism.
  for (const auto& [type, twists] : sweep())
    for (const auto& eps : twists) {
      const auto keys = enumerate_pieces(eps.group().all_generators(), eps);
      REQUIRE(keys.size() == 1);
      CHECK(keys.front().w == eps.group().identity());
    }
  // Line stabilizers: drop one end node.
  for (int n = 2; n <= 5; ++n) {
    auto g = Group::from_type("A" + std::to_string(n - 1));
    GenSet j = g->all_generators();
    j.erase(0);
    CHECK(enumerate_pieces(j, Twist::identity(g)).size() == static_cast<std::size_t>(n));
  }
  for (int n = 2; n <= 4; ++n) {
    auto g = Group::from_type((n == 2 ? std::string("B2") : "C" + std::to_string(n)));
    GenSet j = g->all_generators();
    j.erase(0);
    CHECK(enumerate_pieces(j, Twist::identity(g)).size() == static_cast<std::size_t>(2 * n));
  }
}

TEST_CASE("bijectivity, round trips and stabilization over the sweep") {
  for (const auto& [type, twists] : sweep()) {
    CAPTURE(type);
    for (const auto& eps : twists) {
      const Group& g = eps.group();
      for (auto j : oracle::all_subsets(g.rank())) {
        const GenSet ej = eps.twist_subset(j);
        const auto reps = g.enumerate_min_reps(ej, GenSet{});
        const auto keys = enumerate_pieces(j, eps);
        CHECK(keys.size() == reps.size());
        CHECK(keys.size() == g.enumerate_min_reps(GenSet{}, j).size());
        for (std::size_t k = 0; k < reps.size(); ++k) {
          const Element w = reps[k];
          const SSeq s = psi(w, j, eps);
          CHECK_FALSE(validate_s(s.steps, j, eps).has_value());
          CHECK(phi(s, g) == w);
          CHECK(s.steps.size() <= static_cast<std::size_t>(j.size() + 2));
          const TSeq t = s_to_t(s, eps);
          CHECK_FALSE(validate_t(t.steps, j, eps).has_value());
          CHECK(t_to_s(t, eps) == s);
          CHECK(s_to_t(t_to_s(t, eps), eps) == t);
          // psi o phi on the image of psi.
          CHECK(psi(phi(s, g), j, eps) == s);
          // Length additivity of the u-products.
          int total = 0;
          Element prefix = g.identity();
          for (const auto& step : s.steps) {
            total += g.length(step.u);
            prefix = g.mul(prefix, step.u);
            CHECK(g.length(prefix) == total);
          }
          // Prefix minimality.
          Element running = g.identity();
          for (const auto& step : s.steps) {
            running = g.mul(running, step.u);
            CHECK(running == g.min_double_coset(ej, w, step.j));
          }
          const GenSet jinf = j_infinity(t, eps);
          CHECK(g.ad_subset(w, jinf) == eps.twist_subset(jinf));
          CHECK(keys[k].w == w);
          CHECK(keys[k].j_inf == jinf);
          CHECK(keys[k].w_inf == w);
          CHECK(keys[k].steps == t.steps);
        }
      }
    }
  }
}
