#include "bedard/coxeter.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "bedard/error.hpp"

namespace bedard {
namespace {

struct VectorHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (int x : v) {
      h ^= static_cast<std::size_t>(static_cast<unsigned>(x)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

std::vector<int> parse_word(std::string_view text, int rank) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    if (pos == text.size()) break;
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc{} || ptr == text.data() + pos) {
      throw ParseError("bad word '" + std::string(text) + "'");
    }
    if (value < 0 || value >= rank) {
      throw ParseError("generator index " + std::to_string(value) + " out of range");
    }
    out.push_back(value);
    pos = static_cast<std::size_t>(ptr - text.data());
  }
  return out;
}

}  // namespace

void CoxeterPresentation::validate() const {
  const int n = rank();
  if (n == 0 || n > 64) throw InvalidPresentation("rank must be in [1, 64]");
  for (const auto& row : coxeter_matrix) {
    if (static_cast<int>(row.size()) != n) throw InvalidPresentation("Coxeter matrix is not square");
  }
  for (int i = 0; i < n; ++i) {
    if (coxeter_matrix[i][i] != 1) throw InvalidPresentation("m(i,i) must be 1");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (coxeter_matrix[i][j] < 2) throw InvalidPresentation("m(i,j) must be >= 2 off the diagonal");
      if (coxeter_matrix[i][j] != coxeter_matrix[j][i]) throw InvalidPresentation("Coxeter matrix not symmetric");
    }
  }
}

std::shared_ptr<const Group> Group::from_type(std::string_view type, std::size_t cap) {
  return from_cartan_type(parse_cartan_type(type), cap);
}

std::shared_ptr<const Group> Group::from_cartan_type(const CartanType& type, std::size_t cap) {
  return from_cartan_matrix(type.cartan_matrix(), type.name(), cap);
}

std::shared_ptr<const Group> Group::from_presentation(const CoxeterPresentation& pres, std::size_t cap) {
  pres.validate();
  const int n = pres.rank();
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    a[i][i] = 2;
    for (int j = i + 1; j < n; ++j) {
      switch (pres.coxeter_matrix[i][j]) {
        case 2: break;
        case 3: a[i][j] = a[j][i] = -1; break;
        case 4: a[i][j] = -1; a[j][i] = -2; break;
        case 6: a[i][j] = -1; a[j][i] = -3; break;
        default:
          throw InvalidPresentation("label " + std::to_string(pres.coxeter_matrix[i][j]) +
                                    " has no integral reflection representation");
      }
    }
  }
  return from_cartan_matrix(std::move(a), "custom", cap);
}

std::shared_ptr<const Group> Group::from_cartan_matrix(std::vector<std::vector<int>> cartan, std::string name,
                                                       std::size_t cap) {
  std::shared_ptr<Group> g(new Group());
  g->rank_ = static_cast<int>(cartan.size());
  g->name_ = std::move(name);
  g->presentation_.coxeter_matrix = coxeter_from_cartan(cartan);
  g->presentation_.validate();
  g->cartan_ = std::move(cartan);
  g->enumerate(cap);
  return g;
}

void Group::enumerate(std::size_t cap) {
  const int n = rank_;
  // Breadth-first over the orbit of rho = (1, ..., 1) in fundamental-weight
  // coordinates; s_i lengthens w exactly when coordinate i of w(rho) is > 0.
  std::vector<std::vector<int>> orbit;
  std::vector<int> raw_length;
  std::unordered_map<std::vector<int>, std::uint32_t, VectorHash> index_of;
  std::vector<std::uint32_t> raw_left;

  orbit.emplace_back(n, 1);
  raw_length.push_back(0);
  index_of.emplace(orbit.front(), 0);
  for (std::size_t cur = 0; cur < orbit.size(); ++cur) {
    for (int i = 0; i < n; ++i) {
      std::vector<int> v = orbit[cur];
      const int c = v[i];
      for (int j = 0; j < n; ++j) v[j] -= c * cartan_[j][i];
      auto [it, inserted] = index_of.emplace(std::move(v), static_cast<std::uint32_t>(orbit.size()));
      if (inserted) {
        if (orbit.size() >= cap) {
          throw CapExceeded("group enumeration exceeded cap of " + std::to_string(cap) + " elements");
        }
        orbit.push_back(it->first);
        raw_length.push_back(raw_length[cur] + 1);
      }
      raw_left.push_back(it->second);
    }
  }

  const std::size_t count = orbit.size();
  // ShortLex-least reduced word: its first letter is the least left descent.
  std::vector<std::vector<int>> raw_words(count);
  for (std::size_t r = 1; r < count; ++r) {
    int first = 0;
    while (orbit[r][first] >= 0) ++first;
    const std::uint32_t shorter = raw_left[r * n + first];
    raw_words[r].reserve(raw_length[r]);
    raw_words[r].push_back(first);
    raw_words[r].insert(raw_words[r].end(), raw_words[shorter].begin(), raw_words[shorter].end());
  }

  std::vector<std::uint32_t> order(count);
  std::iota(order.begin(), order.end(), 0U);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (raw_length[a] != raw_length[b]) return raw_length[a] < raw_length[b];
    return raw_words[a] < raw_words[b];
  });
  std::vector<std::uint32_t> rank_of(count);
  for (std::size_t k = 0; k < count; ++k) rank_of[order[k]] = static_cast<std::uint32_t>(k);

  lengths_.resize(count);
  left_.resize(count * n);
  left_desc_.resize(count);
  word_offset_.resize(count + 1);
  letters_.clear();
  for (std::size_t k = 0; k < count; ++k) {
    const std::uint32_t r = order[k];
    lengths_[k] = raw_length[r];
    std::uint64_t mask = 0;
    for (int i = 0; i < n; ++i) {
      left_[k * n + i] = rank_of[raw_left[r * n + i]];
      if (orbit[r][i] < 0) mask |= std::uint64_t{1} << i;
    }
    left_desc_[k] = mask;
    word_offset_[k] = static_cast<std::uint32_t>(letters_.size());
    letters_.insert(letters_.end(), raw_words[r].begin(), raw_words[r].end());
  }
  word_offset_[count] = static_cast<std::uint32_t>(letters_.size());

  inverse_.resize(count);
  for (std::size_t k = 0; k < count; ++k) {
    std::uint32_t x = 0;
    for (int letter : word(Element{static_cast<std::uint32_t>(k)})) x = left_[x * n + letter];
    inverse_[k] = x;
  }
  right_.resize(count * n);
  for (std::size_t k = 0; k < count; ++k)
    for (int i = 0; i < n; ++i) right_[k * n + i] = inverse_[left_[inverse_[k] * n + i]];
}

Element Group::generator(int i) const {
  if (i < 0 || i >= rank_) throw ParseError("generator index out of range");
  return left_mul_gen(i, identity());
}

Element Group::at(std::size_t index) const {
  if (index >= order()) throw ParseError("element index out of range");
  return Element{static_cast<std::uint32_t>(index)};
}

std::span<const int> Group::word(Element w) const {
  return {letters_.data() + word_offset_[w.index], letters_.data() + word_offset_[w.index + 1]};
}

std::string Group::format(Element w) const {
  std::string out;
  for (int letter : word(w)) {
    if (!out.empty()) out += ' ';
    out += std::to_string(letter);
  }
  return out;
}

Element Group::parse(std::string_view text) const {
  const auto letters = parse_word(text, rank_);
  return from_word(letters);
}

Element Group::from_word(std::span<const int> letters) const {
  Element x = identity();
  for (int letter : letters) {
    if (letter < 0 || letter >= rank_) throw ParseError("generator index out of range");
    x = right_mul_gen(x, letter);
  }
  return x;
}

Element Group::mul(Element a, Element b) const {
  Element x = a;
  for (int letter : word(b)) x = right_mul_gen(x, letter);
  return x;
}

int Group::order_of(Element w) const {
  int k = 1;
  for (Element x = w; x != identity(); x = mul(x, w)) ++k;
  return k;
}

int Group::simple_index(Element w) const { return length(w) == 1 ? word(w).front() : -1; }

bool Group::in_parabolic(Element w, GenSet j) const {
  for (int letter : word(w))
    if (!j.contains(letter)) return false;
  return true;
}

bool Group::is_min_rep(GenSet k, Element w, GenSet j) const {
  return (left_descents(w) & k).empty() && (right_descents(w) & j).empty();
}

Element Group::min_double_coset(GenSet k, Element w, GenSet j) const {
  // Strip descents on either side until none remain in K (left) or J (right).
  for (;;) {
    if (GenSet l = left_descents(w) & k; !l.empty()) {
      w = left_mul_gen(l.indices().front(), w);
    } else if (GenSet r = right_descents(w) & j; !r.empty()) {
      w = right_mul_gen(w, r.indices().front());
    } else {
      return w;
    }
  }
}

std::vector<Element> Group::enumerate_min_reps(GenSet k, GenSet j) const {
  std::vector<Element> out;
  for (std::uint32_t idx = 0; idx < order(); ++idx)
    if (is_min_rep(k, Element{idx}, j)) out.push_back(Element{idx});
  return out;
}

std::vector<Element> Group::parabolic_elements(GenSet j) const {
  std::vector<Element> out;
  for (std::uint32_t idx = 0; idx < order(); ++idx)
    if (in_parabolic(Element{idx}, j)) out.push_back(Element{idx});
  return out;
}

GenSet Group::ad_subset(Element w, GenSet j) const {
  GenSet out;
  for (int s : j.indices()) {
    const int t = simple_index(conjugate(w, generator(s)));
    if (t >= 0) out.insert(t);
  }
  return out;
}

GenSet Group::ad_subset_strict(Element w, GenSet j) const {
  GenSet out;
  for (int s : j.indices()) {
    const Element c = conjugate(w, generator(s));
    const int t = simple_index(c);
    if (t < 0) {
      throw NotSimple("w s" + std::to_string(s) + " w^-1 = [" + format(c) + "] is not a simple reflection");
    }
    out.insert(t);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Twist

Twist Twist::identity(std::shared_ptr<const Group> group) {
  std::vector<Element> images;
  for (int i = 0; i < group->rank(); ++i) images.push_back(group->generator(i));
  Twist t = from_images(std::move(group), std::move(images), "id");
  return t;
}

Twist Twist::from_images(std::shared_ptr<const Group> group, std::vector<Element> images, std::string label) {
  const Group& g = *group;
  const int n = g.rank();
  if (static_cast<int>(images.size()) != n) throw InvalidTwist("need one image per generator");
  const auto& m = g.presentation().coxeter_matrix;
  for (int i = 0; i < n; ++i) {
    if (images[i].index >= g.order()) throw InvalidTwist("image outside the group");
    for (int j = 0; j < n; ++j) {
      const int ord = g.order_of(g.mul(images[i], images[j]));
      if (ord != m[i][j]) {
        throw InvalidTwist("images of s" + std::to_string(i) + ", s" + std::to_string(j) +
                           " violate the relation of order " + std::to_string(m[i][j]));
      }
    }
  }
  Twist t;
  t.group_ = std::move(group);
  t.images_ = std::move(images);
  t.table_.resize(g.order());
  std::vector<bool> hit(g.order(), false);
  // Images in ShortLex order: extend along canonical words, one letter at a time.
  t.table_[0] = 0;
  hit[0] = true;
  for (std::uint32_t idx = 1; idx < g.order(); ++idx) {
    const auto w = g.word(Element{idx});
    const Element prefix = g.from_word(w.first(w.size() - 1));
    const Element img = g.mul(Element{t.table_[prefix.index]}, t.images_[w.back()]);
    if (hit[img.index]) throw InvalidTwist("twist is not injective");
    hit[img.index] = true;
    t.table_[idx] = img.index;
  }
  t.identity_ = true;
  for (int i = 0; i < n; ++i) t.identity_ = t.identity_ && t.images_[i] == g.generator(i);
  if (!label.empty()) {
    t.label_ = std::move(label);
  } else {
    for (int i = 0; i < n; ++i) {
      if (i) t.label_ += ';';
      t.label_ += g.format(t.images_[i]);
    }
  }
  return t;
}

Twist Twist::from_permutation(std::shared_ptr<const Group> group, const std::vector<int>& perm) {
  std::vector<Element> images;
  for (int p : perm) images.push_back(group->generator(p));
  std::string label;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (i) label += ';';
    label += std::to_string(perm[i]);
  }
  bool is_id = true;
  for (std::size_t i = 0; i < perm.size(); ++i) is_id = is_id && perm[i] == static_cast<int>(i);
  return from_images(std::move(group), std::move(images), is_id ? "id" : label);
}

std::vector<Twist> Twist::diagram_automorphisms(std::shared_ptr<const Group> group) {
  std::vector<Twist> out;
  for (const auto& perm : bedard::diagram_automorphisms(group->presentation().coxeter_matrix))
    out.push_back(from_permutation(group, perm));
  return out;
}

Twist Twist::parse(std::shared_ptr<const Group> group, std::string_view text) {
  if (text == "id" || text == "identity") return identity(std::move(group));
  if (text == "flip") {
    auto autos = bedard::diagram_automorphisms(group->presentation().coxeter_matrix);
    if (autos.size() != 2) {
      throw InvalidTwist("'flip' needs exactly one nontrivial diagram automorphism; " + group->name() + " has " +
                         std::to_string(autos.size() - 1));
    }
    Twist t = from_permutation(group, autos[1]);
    t.label_ = "flip";
    return t;
  }
  std::vector<Element> images;
  std::size_t start = 0;
  for (;;) {
    const std::size_t semi = text.find(';', start);
    const auto piece = text.substr(start, semi == std::string_view::npos ? std::string_view::npos : semi - start);
    images.push_back(group->parse(piece));
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  return from_images(std::move(group), std::move(images));
}

GenSet Twist::twist_subset(GenSet j) const {
  GenSet out;
  for (int s : j.indices()) {
    const int t = group_->simple_index(images_[s]);
    if (t < 0) {
      throw TwistNotSimpleOnSubset("twist image of s" + std::to_string(s) + " is [" + group_->format(images_[s]) +
                                   "], not a simple reflection");
    }
    out.insert(t);
  }
  return out;
}

GenSet Twist::preimage_within(GenSet j, std::span<const Element> targets) const {
  GenSet out;
  for (int s : j.indices())
    if (std::find(targets.begin(), targets.end(), images_[s]) != targets.end()) out.insert(s);
  return out;
}

// ---------------------------------------------------------------------------

std::string format_gen_set(GenSet s) {
  std::string out;
  for (int i : s.indices()) {
    if (!out.empty()) out += ',';
    out += std::to_string(i);
  }
  return out;
}

GenSet parse_gen_set(std::string_view text, int rank) {
  GenSet out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == ',')) ++pos;
    if (pos == text.size()) break;
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc{} || ptr == text.data() + pos) throw ParseError("bad subset '" + std::string(text) + "'");
    if (value < 0 || value >= rank) throw ParseError("generator index " + std::to_string(value) + " out of range");
    out.insert(value);
    pos = static_cast<std::size_t>(ptr - text.data());
  }
  return out;
}

}  // namespace bedard
