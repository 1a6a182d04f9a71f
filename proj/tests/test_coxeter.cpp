#include <map>

#include "bedard/coxeter.hpp"
#include "bedard/error.hpp"
#include "bedard/root_system.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace bedard;

namespace {

const char* kSmallTypes[] = {"A1", "A2", "A3", "B2", "B3", "C3", "G2", "A1xA1", "A2xA1", "A1xA1xA1"};

}  // namespace

TEST_CASE("enumerate_group orders") {
  CHECK(Group::from_type("A1")->order() == 2);
  CHECK(Group::from_type("A1")->format(Group::from_type("A1")->longest()) == "0");
  // Independent permutation models.
  CHECK(Group::from_type("A2")->order() == oracle::closure(oracle::symmetric_generators(3)).size());
  CHECK(oracle::closure(oracle::symmetric_generators(3)).size() == 6);
  CHECK(Group::from_type("B2")->order() == oracle::closure(oracle::hyperoctahedral_generators(2)).size());
  CHECK(oracle::closure(oracle::hyperoctahedral_generators(2)).size() == 8);
  CHECK(Group::from_type("B3")->order() == 48);
  CHECK(Group::from_type("D4")->order() == 192);
  CHECK(Group::from_type("G2")->order() == 12);
  CHECK(Group::from_type("F4")->order() == 1152);
  CHECK(Group::from_type("E6")->order() == 51840);
  CHECK(Group::from_type("A2xA1")->order() == 12);
}

TEST_CASE("enumeration respects the cap") {
  CHECK_THROWS_AS(Group::from_type("A4", 100), CapExceeded);
  // Affine A2 (a triangle of 3s) is infinite.
  CoxeterPresentation affine{{{1, 3, 3}, {3, 1, 3}, {3, 3, 1}}};
  CHECK_THROWS_AS(Group::from_presentation(affine, 5000), CapExceeded);
  CoxeterPresentation h3{{{1, 5, 2}, {5, 1, 3}, {2, 3, 1}}};
  CHECK_THROWS_AS(Group::from_presentation(h3), InvalidPresentation);
  CoxeterPresentation bad{{{1, 3}, {2, 1}}};
  CHECK_THROWS_AS(bad.validate(), InvalidPresentation);
  CoxeterPresentation b3{{{1, 3, 2}, {3, 1, 4}, {2, 4, 1}}};
  CHECK(Group::from_presentation(b3)->order() == 48);
}

TEST_CASE("ShortLex ordering and canonical words") {
  auto g = Group::from_type("A2");
  std::vector<std::string> words;
  for (std::size_t i = 0; i < g->order(); ++i) words.push_back(g->format(g->at(i)));
  CHECK(words == std::vector<std::string>{"", "0", "1", "0 1", "1 0", "0 1 0"});
  CHECK(g->parse("1 0 1") == g->parse("0 1 0"));
  CHECK(g->parse("0 0") == g->identity());
}

TEST_CASE("canonical word is the lexicographically least reduced word (brute force)") {
  for (const char* type : {"A3", "B3", "G2"}) {
    auto g = Group::from_type(type);
    const int n = g->rank();
    std::map<std::uint32_t, std::vector<int>> least;
    // All words of length <= max length, in lexicographic order per length.
    std::vector<std::vector<int>> layer{{}};
    least[0] = {};
    for (int len = 1; len <= g->length(g->longest()); ++len) {
      std::vector<std::vector<int>> next;
      for (const auto& w : layer)
        for (int s = 0; s < n; ++s) {
          auto v = w;
          v.push_back(s);
          next.push_back(v);
        }
      std::sort(next.begin(), next.end());
      for (const auto& w : next) {
        const Element e = g->from_word(w);
        if (g->length(e) == len && !least.count(e.index)) least[e.index] = w;
      }
      // Keep only reduced words to bound the search.
      std::vector<std::vector<int>> reduced;
      for (const auto& w : next)
        if (g->length(g->from_word(w)) == len) reduced.push_back(w);
      layer = std::move(reduced);
    }
    REQUIRE(least.size() == g->order());
    for (const auto& [idx, w] : least) {
      const auto canon = g->word(Element{idx});
      CHECK(std::vector<int>(canon.begin(), canon.end()) == w);
    }
  }
}

TEST_CASE("mul, inv, len") {
  auto g = Group::from_type("A2");
  const Element s0s1 = g->parse("0 1");
  CHECK(g->mul(g->identity(), s0s1) == s0s1);
  CHECK(g->mul(s0s1, s0s1) == g->parse("1 0"));
  CHECK(g->length(g->longest()) == 3);
  CHECK(g->length(g->longest()) == RootSystem::from_type("A2").num_positive());

  // Agreement with the permutation model of S_4 on every pair.
  auto a3 = Group::from_type("A3");
  const auto gens = oracle::symmetric_generators(4);
  for (std::uint32_t i = 0; i < a3->order(); ++i)
    for (std::uint32_t j = 0; j < a3->order(); j += 5) {
      const Element x{i}, y{j};
      const auto px = oracle::perm_of_word(gens, a3->word(x));
      const auto py = oracle::perm_of_word(gens, a3->word(y));
      CHECK(oracle::perm_of_word(gens, a3->word(a3->mul(x, y))) == oracle::compose(px, py));
    }
}

TEST_CASE("canonicalization invariants") {
  for (const char* type : kSmallTypes) {
    auto g = Group::from_type(type);
    auto rs = RootSystem::from_type(type);
    for (std::uint32_t i = 0; i < g->order(); ++i) {
      const Element w{i};
      CHECK(g->mul(g->inv(w), w) == g->identity());
      CHECK(static_cast<int>(g->word(w).size()) == g->length(w));
      CHECK(g->parse(g->format(w)) == w);
      // l(w) = #{alpha > 0 : w alpha < 0}
      int negated = 0;
      for (int k = 0; k < rs.num_positive(); ++k) negated += rs.is_positive(rs.act(*g, w, k)) ? 0 : 1;
      CHECK(negated == g->length(w));
      for (std::uint32_t j = 0; j < g->order(); j += 3) {
        const Element v{j};
        const int l = g->length(g->mul(w, v));
        CHECK(l <= g->length(w) + g->length(v));
        CHECK((l - g->length(w) - g->length(v)) % 2 == 0);
      }
    }
  }
}

TEST_CASE("descents") {
  auto g = Group::from_type("A2");
  CHECK(g->descents(g->identity()) == Descents{GenSet{}, GenSet{}});
  CHECK(g->descents(g->longest()) == Descents{GenSet::of({0, 1}), GenSet::of({0, 1})});
  CHECK(g->descents(g->parse("0 1")) == Descents{GenSet::of({0}), GenSet::of({1})});
  // Exhaustive length-table definition.
  for (const char* type : kSmallTypes) {
    auto h = Group::from_type(type);
    for (std::uint32_t i = 0; i < h->order(); ++i) {
      const Element w{i};
      GenSet left, right;
      for (int s = 0; s < h->rank(); ++s) {
        if (h->length(h->mul(h->generator(s), w)) < h->length(w)) left.insert(s);
        if (h->length(h->mul(w, h->generator(s))) < h->length(w)) right.insert(s);
      }
      CHECK(h->descents(w) == Descents{left, right});
    }
  }
}

TEST_CASE("is_min_rep and enumerate_min_reps") {
  auto g = Group::from_type("A2");
  for (auto k : oracle::all_subsets(2))
    for (auto j : oracle::all_subsets(2)) CHECK(g->is_min_rep(k, g->identity(), j));
  CHECK(g->is_min_rep(GenSet::of({0}), g->parse("1 0"), GenSet::of({1})));
  CHECK_FALSE(g->is_min_rep(GenSet::of({0}), g->longest(), GenSet::of({1})));
  CHECK(g->enumerate_min_reps(GenSet{}, GenSet{}).size() == 6);
  CHECK(g->enumerate_min_reps(GenSet::of({0}), GenSet::of({1})) ==
        std::vector<Element>{g->identity(), g->parse("1 0")});
  CHECK(g->enumerate_min_reps(GenSet{}, GenSet::of({0})).size() == 3);
}

TEST_CASE("min_double_coset matches coset enumeration") {
  auto g = Group::from_type("A2");
  const Element w = g->parse("1 0");
  CHECK(g->min_double_coset(GenSet{}, w, GenSet{}) == w);
  CHECK(g->min_double_coset(GenSet::of({0}), g->longest(), GenSet::of({1})) == g->parse("1 0"));
  CHECK(oracle::double_coset(*g, GenSet::of({0}), g->longest(), GenSet::of({1})) ==
        std::vector<Element>{g->parse("1 0"), g->longest()});
  CHECK(g->min_double_coset(GenSet::of({0}), g->parse("1"), GenSet::of({0})) == g->parse("1"));

  for (const char* type : {"A3", "B3", "G2", "A2xA1"}) {
    auto h = Group::from_type(type);
    for (auto k : oracle::all_subsets(h->rank()))
      for (auto j : oracle::all_subsets(h->rank()))
        for (std::uint32_t i = 0; i < h->order(); i += 2) {
          const auto coset = oracle::double_coset(*h, k, Element{i}, j);
          int min_len = 1 << 20;
          for (auto x : coset) min_len = std::min(min_len, h->length(x));
          std::vector<Element> minimal;
          for (auto x : coset)
            if (h->length(x) == min_len) minimal.push_back(x);
          REQUIRE(minimal.size() == 1);
          const Element m = h->min_double_coset(k, Element{i}, j);
          CHECK(m == minimal.front());
          CHECK(h->is_min_rep(k, m, j));
        }
  }
}

TEST_CASE("ad_subset") {
  auto g = Group::from_type("A2");
  CHECK(g->ad_subset(g->identity(), GenSet::of({0, 1})) == GenSet::of({0, 1}));
  CHECK(g->ad_subset(g->longest(), GenSet::of({0})) == GenSet::of({1}));
  CHECK(g->ad_subset(g->parse("1"), GenSet::of({0})) == GenSet{});
  CHECK_THROWS_AS(g->ad_subset_strict(g->parse("1"), GenSet::of({0})), NotSimple);
  CHECK(g->ad_subset_strict(g->longest(), GenSet::of({0, 1})) == GenSet::of({0, 1}));
}

TEST_CASE("twists") {
  auto g = Group::from_type("A2");
  const Twist id = Twist::identity(g);
  const Twist flip = Twist::parse(g, "flip");
  CHECK(id.is_identity());
  CHECK_FALSE(flip.is_identity());
  for (std::uint32_t i = 0; i < g->order(); ++i) CHECK(id.apply(Element{i}) == Element{i});
  CHECK(flip.apply(g->parse("0 1")) == g->parse("1 0"));
  CHECK(flip.twist_subset(GenSet::of({0})) == GenSet::of({1}));
  // Homomorphism property.
  for (std::uint32_t i = 0; i < g->order(); ++i)
    for (std::uint32_t j = 0; j < g->order(); ++j)
      CHECK(flip.apply(g->mul(Element{i}, Element{j})) == g->mul(flip.apply(Element{i}), flip.apply(Element{j})));

  // Inner automorphism by w0 in A3 differs from the flip only by labels;
  // conjugation by s1 moves s0 off I.
  auto a3 = Group::from_type("A3");
  const Element s1 = a3->generator(1);
  std::vector<Element> images;
  for (int i = 0; i < 3; ++i) images.push_back(a3->conjugate(s1, a3->generator(i)));
  const Twist inner = Twist::from_images(a3, images);
  CHECK_THROWS_AS(inner.twist_subset(GenSet::of({0})), TwistNotSimpleOnSubset);
  CHECK(inner.twist_subset(GenSet::of({1})) == GenSet::of({1}));

  CHECK_THROWS_AS(Twist::parse(g, "0;0"), InvalidTwist);
  CHECK_THROWS_AS(Twist::parse(Group::from_type("A3"), "0;2;1"), InvalidTwist);
  CHECK(Twist::parse(Group::from_type("B2"), "1;0").apply(Group::from_type("B2")->generator(0)).index != 0);
  CHECK(Twist::parse(g, "1;0").apply(g->generator(0)) == g->generator(1));
  CHECK_THROWS_AS(Twist::parse(Group::from_type("D4"), "flip"), InvalidTwist);
  CHECK_THROWS_AS(Twist::parse(Group::from_type("B3"), "flip"), InvalidTwist);
  CHECK(Twist::diagram_automorphisms(Group::from_type("D4")).size() == 6);
  CHECK(Twist::diagram_automorphisms(Group::from_type("A2xA1")).size() == 2);
  CHECK(Twist::diagram_automorphisms(Group::from_type("A1xA1")).size() == 2);
}

TEST_CASE("double coset facts, exhaustive on rank <= 3") {
  for (const char* type : kSmallTypes) {
    CAPTURE(type);
    auto g = Group::from_type(type);
    const auto subsets = oracle::all_subsets(g->rank());
    for (auto k : subsets)
      for (auto kp : subsets) {
        const auto reps = g->enumerate_min_reps(k, kp);
        const auto wkp = g->parabolic_elements(kp);
        for (Element x : reps) {
          const GenSet inter = kp & g->ad_subset(g->inv(x), k);
          // (a)
          for (Element u : wkp) {
            if (!(g->left_descents(u) & inter).empty()) continue;
            const Element xu = g->mul(x, u);
            CHECK((g->left_descents(xu) & k).empty());
            CHECK(g->length(xu) == g->length(x) + g->length(u));
          }
          // (b)
          for (std::uint32_t i = 0; i < g->order(); ++i) {
            const Element xp{i};
            if (!(g->left_descents(xp) & k).empty()) continue;
            if (g->min_double_coset(k, xp, kp) != x) continue;
            const Element u = g->mul(g->inv(x), xp);
            CHECK(g->in_parabolic(u, kp));
            CHECK((g->left_descents(u) & inter).empty());
          }
        }
      }
    // (c)
    for (auto k : subsets) {
      const auto reps = g->enumerate_min_reps(GenSet{}, k);
      const auto wk = g->parabolic_elements(k);
      for (auto kp : subsets) {
        if (!kp.subset_of(k)) continue;
        for (Element x : reps)
          for (Element xp : wk) {
            const bool lhs = (g->right_descents(xp) & kp).empty();
            const bool rhs = (g->right_descents(g->mul(x, xp)) & kp).empty();
            CHECK(lhs == rhs);
          }
      }
    }
  }
}
