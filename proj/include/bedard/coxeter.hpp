#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bedard/cartan.hpp"
#include "bedard/gen_set.hpp"

namespace bedard {

inline constexpr std::size_t kDefaultGroupCap = 200'000;

/// Coxeter matrix over the ordered generator set I = {0, ..., rank-1}.
struct CoxeterPresentation {
  std::vector<std::vector<int>> coxeter_matrix;

  int rank() const { return static_cast<int>(coxeter_matrix.size()); }
  /// Checks m(i,i) = 1 and m(i,j) = m(j,i) >= 2. Throws InvalidPresentation.
  void validate() const;
};

/// A group element. The index is the element's position in ShortLex order of
/// canonical words, so comparing elements compares them in ShortLex order.
struct Element {
  std::uint32_t index = 0;
  friend constexpr bool operator==(Element, Element) = default;
  friend constexpr auto operator<=>(Element, Element) = default;
};

struct Descents {
  GenSet left;
  GenSet right;
  friend bool operator==(const Descents&, const Descents&) = default;
};

/// A finite Weyl group, fully enumerated. Elements are identified through the
/// orbit of rho under the reflection action on integral weights, so all
/// length and descent data are exact integer computations.
class Group {
 public:
  static std::shared_ptr<const Group> from_type(std::string_view type, std::size_t cap = kDefaultGroupCap);
  static std::shared_ptr<const Group> from_cartan_type(const CartanType& type, std::size_t cap = kDefaultGroupCap);
  /// Picks an integral Cartan matrix realising the Coxeter matrix; labels
  /// must lie in {2, 3, 4, 6}. Infinite groups end in CapExceeded.
  static std::shared_ptr<const Group> from_presentation(const CoxeterPresentation& pres,
                                                        std::size_t cap = kDefaultGroupCap);
  static std::shared_ptr<const Group> from_cartan_matrix(std::vector<std::vector<int>> cartan, std::string name,
                                                         std::size_t cap = kDefaultGroupCap);

  int rank() const { return rank_; }
  std::size_t order() const { return lengths_.size(); }
  const std::string& name() const { return name_; }
  const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }
  const CoxeterPresentation& presentation() const { return presentation_; }
  GenSet all_generators() const { return GenSet::full(rank_); }

  Element identity() const { return Element{0}; }
  Element generator(int i) const;
  Element longest() const { return Element{static_cast<std::uint32_t>(order() - 1)}; }
  Element at(std::size_t index) const;

  std::span<const int> word(Element w) const;
  /// "1 0" for s1*s0; "" for the identity.
  std::string format(Element w) const;
  /// Accepts any (not necessarily reduced) word of space-separated indices.
  Element parse(std::string_view text) const;
  Element from_word(std::span<const int> letters) const;

  Element mul(Element a, Element b) const;
  Element inv(Element w) const { return Element{inverse_[w.index]}; }
  int length(Element w) const { return lengths_[w.index]; }
  Element left_mul_gen(int i, Element w) const { return Element{left_[w.index * rank_ + i]}; }
  Element right_mul_gen(Element w, int i) const { return Element{right_[w.index * rank_ + i]}; }
  /// w x w^-1
  Element conjugate(Element w, Element x) const { return mul(mul(w, x), inv(w)); }
  int order_of(Element w) const;
  /// Generator index if w is a simple reflection, otherwise -1.
  int simple_index(Element w) const;

  GenSet left_descents(Element w) const { return GenSet(left_desc_[w.index]); }
  GenSet right_descents(Element w) const { return GenSet(left_desc_[inverse_[w.index]]); }
  Descents descents(Element w) const { return {left_descents(w), right_descents(w)}; }

  bool in_parabolic(Element w, GenSet j) const;
  /// w lies in ^K W^J.
  bool is_min_rep(GenSet k, Element w, GenSet j) const;
  Element min_double_coset(GenSet k, Element w, GenSet j) const;
  /// ^K W^J in ShortLex order.
  std::vector<Element> enumerate_min_reps(GenSet k, GenSet j) const;
  std::vector<Element> parabolic_elements(GenSet j) const;

  /// {s' in I : s' = w s w^-1 for some s in J}; non-simple conjugates dropped.
  GenSet ad_subset(Element w, GenSet j) const;
  /// As ad_subset, but throws NotSimple when some conjugate is not simple.
  GenSet ad_subset_strict(Element w, GenSet j) const;

 private:
  Group() = default;
  void enumerate(std::size_t cap);

  int rank_ = 0;
  std::string name_;
  std::vector<std::vector<int>> cartan_;
  CoxeterPresentation presentation_;
  std::vector<int> lengths_;
  std::vector<std::uint32_t> inverse_;
  std::vector<std::uint32_t> left_;
  std::vector<std::uint32_t> right_;
  std::vector<std::uint64_t> left_desc_;
  std::vector<int> letters_;
  std::vector<std::uint32_t> word_offset_;
};

/// A group automorphism of W, given by the images of the simple reflections.
class Twist {
 public:
  static Twist identity(std::shared_ptr<const Group> group);
  /// Validates relation orders and bijectivity on the enumerated group.
  static Twist from_images(std::shared_ptr<const Group> group, std::vector<Element> images,
                           std::string label = {});
  static Twist from_permutation(std::shared_ptr<const Group> group, const std::vector<int>& perm);
  /// Identity first, then the nontrivial Coxeter-diagram automorphisms.
  static std::vector<Twist> diagram_automorphisms(std::shared_ptr<const Group> group);
  /// "id", "flip" (the unique nontrivial diagram automorphism), or explicit
  /// images "w0;w1;..." with each w_i a space-separated word.
  static Twist parse(std::shared_ptr<const Group> group, std::string_view text);

  const Group& group() const { return *group_; }
  const std::shared_ptr<const Group>& group_ptr() const { return group_; }
  const std::string& label() const { return label_; }
  bool is_identity() const { return identity_; }

  Element apply(Element w) const { return Element{table_[w.index]}; }
  Element image_of_generator(int i) const { return images_[i]; }
  /// epsilon(J); throws TwistNotSimpleOnSubset if some epsilon(s) is not simple.
  GenSet twist_subset(GenSet j) const;
  /// {s in J : epsilon(s) lies in `targets`} by membership testing.
  GenSet preimage_within(GenSet j, std::span<const Element> targets) const;

 private:
  Twist() = default;
  std::shared_ptr<const Group> group_;
  std::vector<Element> images_;
  std::vector<std::uint32_t> table_;
  std::string label_;
  bool identity_ = false;
};

}  // namespace bedard
