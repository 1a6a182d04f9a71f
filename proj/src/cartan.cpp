#include "bedard/cartan.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "bedard/error.hpp"

namespace bedard {
namespace {

using IntMatrix = std::vector<std::vector<int>>;

bool rank_allowed(char family, int r) {
  switch (family) {
    case 'A': return r >= 1;
    case 'B':
    case 'C': return r >= 2;
    case 'D': return r >= 4;
    case 'E': return r >= 6 && r <= 8;
    case 'F': return r == 4;
    case 'G': return r == 2;
    default: return false;
  }
}

void bond(IntMatrix& a, int i, int j) {
  a[i][j] = -1;
  a[j][i] = -1;
}

IntMatrix irreducible_cartan(const CartanComponent& c) {
  const int n = c.rank;
  IntMatrix a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  switch (c.family) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) bond(a, i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 1 < n; ++i) bond(a, i, i + 1);
      a[n - 1][n - 2] = -2;  // alpha_n short
      break;
    case 'C':
      for (int i = 0; i + 1 < n; ++i) bond(a, i, i + 1);
      a[n - 2][n - 1] = -2;  // alpha_n long
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) bond(a, i, i + 1);
      bond(a, n - 3, n - 1);
      break;
    case 'E':
      // Bourbaki: 1-3-4-5-6-7-8 with 2 attached to 4.
      bond(a, 0, 2);
      bond(a, 1, 3);
      for (int i = 2; i + 1 < n; ++i) bond(a, i, i + 1);
      break;
    case 'F':
      bond(a, 0, 1);
      bond(a, 1, 2);
      bond(a, 2, 3);
      a[2][1] = -2;
      break;
    case 'G':
      a[0][1] = -3;
      a[1][0] = -1;
      break;
    default:
      throw UnknownType("unknown Cartan family");
  }
  return a;
}

}  // namespace

int CartanType::rank() const {
  int r = 0;
  for (const auto& c : components) r += c.rank;
  return r;
}

std::string CartanType::name() const {
  std::string out;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i) out += 'x';
    out += components[i].family;
    out += std::to_string(components[i].rank);
  }
  return out;
}

std::vector<std::vector<int>> CartanType::cartan_matrix() const {
  const int n = rank();
  IntMatrix a(n, std::vector<int>(n, 0));
  int offset = 0;
  for (const auto& c : components) {
    IntMatrix block = irreducible_cartan(c);
    for (int i = 0; i < c.rank; ++i)
      for (int j = 0; j < c.rank; ++j) a[offset + i][offset + j] = block[i][j];
    offset += c.rank;
  }
  return a;
}

CartanType parse_cartan_type(std::string_view text) {
  // Normalise the UTF-8 multiplication sign to 'x'.
  std::string s;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (i + 1 < text.size() && static_cast<unsigned char>(text[i]) == 0xC3 &&
        static_cast<unsigned char>(text[i + 1]) == 0x97) {
      s += 'x';
      ++i;
    } else if (!std::isspace(static_cast<unsigned char>(text[i]))) {
      s += text[i];
    }
  }
  CartanType type;
  std::size_t pos = 0;
  if (s.empty()) throw UnknownType("empty Cartan type");
  while (pos < s.size()) {
    const char family = static_cast<char>(std::toupper(static_cast<unsigned char>(s[pos])));
    ++pos;
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos || pos - start > 2) throw UnknownType("unknown Cartan type '" + std::string(text) + "'");
    const int r = std::stoi(s.substr(start, pos - start));
    if (!rank_allowed(family, r)) throw UnknownType("unknown Cartan type '" + std::string(text) + "'");
    type.components.push_back({family, r});
    if (pos < s.size()) {
      if (s[pos] != 'x' && s[pos] != 'X' && s[pos] != '*')
        throw UnknownType("unknown Cartan type '" + std::string(text) + "'");
      ++pos;
      if (pos == s.size()) throw UnknownType("unknown Cartan type '" + std::string(text) + "'");
    }
  }
  if (type.rank() > 64) throw UnknownType("rank above 64 is not supported");
  return type;
}

std::vector<std::vector<int>> coxeter_from_cartan(const std::vector<std::vector<int>>& a) {
  const int n = static_cast<int>(a.size());
  IntMatrix m(n, std::vector<int>(n, 1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      switch (a[i][j] * a[j][i]) {
        case 0: m[i][j] = 2; break;
        case 1: m[i][j] = 3; break;
        case 2: m[i][j] = 4; break;
        case 3: m[i][j] = 6; break;
        default: throw InvalidPresentation("Cartan entry product outside {0,1,2,3}");
      }
    }
  return m;
}

std::vector<std::vector<int>> diagram_automorphisms(const std::vector<std::vector<int>>& coxeter) {
  const int n = static_cast<int>(coxeter.size());
  std::vector<std::vector<int>> out;
  std::vector<int> perm(n, -1);
  std::vector<bool> used(n, false);
  // Backtracking in lexicographic order; the identity comes out first.
  auto extend = [&](auto&& self, int i) -> void {
    if (i == n) {
      out.push_back(perm);
      return;
    }
    for (int img = 0; img < n; ++img) {
      if (used[img]) continue;
      bool ok = true;
      for (int k = 0; k < i && ok; ++k) ok = coxeter[perm[k]][img] == coxeter[k][i];
      if (!ok) continue;
      perm[i] = img;
      used[img] = true;
      self(self, i + 1);
      used[img] = false;
    }
  };
  extend(extend, 0);
  return out;
}

}  // namespace bedard
