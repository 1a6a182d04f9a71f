#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace bedard {

/// A subset of the generating set I, stored as a bitmask (rank <= 64).
class GenSet {
 public:
  constexpr GenSet() = default;
  constexpr explicit GenSet(std::uint64_t bits) : bits_(bits) {}

  static GenSet of(std::initializer_list<int> gens) {
    GenSet s;
    for (int g : gens) s.insert(g);
    return s;
  }
  static GenSet from_indices(const std::vector<int>& gens) {
    GenSet s;
    for (int g : gens) s.insert(g);
    return s;
  }
  static constexpr GenSet full(int rank) {
    return GenSet(rank >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << rank) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(int g) const { return (bits_ >> g) & 1U; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr void insert(int g) { bits_ |= std::uint64_t{1} << g; }
  constexpr void erase(int g) { bits_ &= ~(std::uint64_t{1} << g); }
  constexpr bool subset_of(GenSet o) const { return (bits_ & ~o.bits_) == 0; }

  std::vector<int> indices() const {
    std::vector<int> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  friend constexpr GenSet operator&(GenSet a, GenSet b) { return GenSet(a.bits_ & b.bits_); }
  friend constexpr GenSet operator|(GenSet a, GenSet b) { return GenSet(a.bits_ | b.bits_); }
  friend constexpr bool operator==(GenSet, GenSet) = default;
  friend constexpr auto operator<=>(GenSet, GenSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// "0,2" <-> {s0, s2}; the empty set is "".
std::string format_gen_set(GenSet s);
GenSet parse_gen_set(std::string_view text, int rank);

}  // namespace bedard
