#include "bedard/flags.hpp"

#include <algorithm>
#include <numeric>

#include "bedard/error.hpp"

namespace bedard {
namespace {

// dims with 0 and n added at the ends
std::vector<int> full_dims(const PartialFlag& fl) {
  std::vector<int> d{0};
  for (int x : fl.dims()) d.push_back(x);
  d.push_back(fl.ambient());
  return d;
}

std::vector<Subspace> full_chain(const PartialFlag& fl) {
  std::vector<Subspace> c{Subspace::zero(fl.ambient())};
  c.insert(c.end(), fl.chain().begin(), fl.chain().end());
  c.push_back(Subspace::whole(fl.ambient()));
  return c;
}

}  // namespace

PartialFlag::PartialFlag(const FqField& f, int ambient, std::vector<Subspace> chain)
    : ambient_(ambient), chain_(std::move(chain)) {
  for (std::size_t i = 0; i < chain_.size(); ++i) {
    const Subspace& s = chain_[i];
    if (s.ambient() != ambient) throw DimensionMismatch("flag member in the wrong ambient space");
    if (s.dim() == 0 || s.dim() == ambient) throw DimensionMismatch("flag members must be proper and nonzero");
    if (i > 0 && (s.dim() <= chain_[i - 1].dim() || !s.contains(f, chain_[i - 1]))) {
      throw DimensionMismatch("flag is not strictly increasing");
    }
  }
}

PartialFlag PartialFlag::standard(int ambient, const std::vector<int>& dims) {
  PartialFlag fl;
  fl.ambient_ = ambient;
  for (int d : dims) fl.chain_.push_back(Subspace::standard(ambient, d));
  return fl;
}

std::vector<int> PartialFlag::dims() const {
  std::vector<int> d;
  for (const auto& s : chain_) d.push_back(s.dim());
  return d;
}

GenSet PartialFlag::type() const { return type_of_dims(ambient_, dims()); }

std::vector<int> dims_of_type(int n, GenSet j) {
  std::vector<int> d;
  for (int g = 0; g + 1 < n; ++g)
    if (!j.contains(g)) d.push_back(g + 1);
  return d;
}

GenSet type_of_dims(int n, const std::vector<int>& dims) {
  GenSet j = GenSet::full(n - 1);
  for (int d : dims) j.erase(d - 1);
  return j;
}

std::vector<PartialFlag> enumerate_flags(const FqField& f, int n, const std::vector<int>& dims, std::size_t budget) {
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (dims[i] <= 0 || dims[i] >= n || (i > 0 && dims[i] <= dims[i - 1])) {
      throw DimensionMismatch("flag dimensions must increase strictly within (0, n)");
    }
  }
  std::vector<std::vector<Subspace>> by_dim;
  for (int d : dims) by_dim.push_back(enumerate_subspaces(f, n, d));
  std::vector<PartialFlag> out;
  std::vector<Subspace> chain;
  auto extend = [&](auto&& self, std::size_t level) -> void {
    if (level == dims.size()) {
      if (out.size() >= budget) throw BudgetExceeded("more than " + std::to_string(budget) + " flags");
      out.push_back(PartialFlag(f, n, chain));
      return;
    }
    for (const auto& s : by_dim[level]) {
      if (level > 0 && !s.contains(f, chain.back())) continue;
      chain.push_back(s);
      self(self, level + 1);
      chain.pop_back();
    }
  };
  extend(extend, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> permutation_of(const Group& w_group, Element w) {
  const int n = w_group.rank() + 1;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  // w = s_{i1} ... s_{ik}; right multiplication by s_i swaps positions i, i+1.
  for (int letter : w_group.word(w)) std::swap(perm[letter], perm[letter + 1]);
  return perm;
}

Element element_of_permutation(const Group& w_group, const std::vector<int>& perm) {
  std::vector<int> p = perm;
  std::vector<int> letters;
  // Peel right descents: w = (w s_i) s_i whenever w(i) > w(i+1).
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
      if (p[i] > p[i + 1]) {
        std::swap(p[i], p[i + 1]);
        letters.push_back(static_cast<int>(i));
        changed = true;
        break;
      }
  }
  std::reverse(letters.begin(), letters.end());
  return w_group.from_word(letters);
}

Element pos_flags(const FqField& f, const Group& w_group, const PartialFlag& f1, const PartialFlag& f2) {
  const int n = f1.ambient();
  if (f2.ambient() != n) throw DimensionMismatch("flags live in different spaces");
  if (w_group.rank() != n - 1) throw DimensionMismatch("Weyl group rank does not match the flag ambient space");
  const auto c1 = full_chain(f1);
  const auto c2 = full_chain(f2);
  const auto d1 = full_dims(f1);
  const auto d2 = full_dims(f2);
  const std::size_t A = c1.size();
  const std::size_t B = c2.size();
  std::vector<std::vector<int>> r(A, std::vector<int>(B, 0));
  for (std::size_t a = 1; a < A; ++a)
    for (std::size_t b = 1; b < B; ++b) r[a][b] = intersect(f, c1[a], c2[b]).dim();
  // c[a][b]: how many positions of F2-block b carry values of F1-block a.
  std::vector<int> perm(n, -1);
  std::vector<int> next_value(A, 0);
  for (std::size_t a = 1; a < A; ++a) next_value[a] = d1[a - 1];
  int position = 0;
  for (std::size_t b = 1; b < B; ++b)
    for (std::size_t a = 1; a < A; ++a) {
      const int count = r[a][b] - r[a - 1][b] - r[a][b - 1] + r[a - 1][b - 1];
      if (count < 0) throw InternalError("negative block count in rank matrix");
      for (int t = 0; t < count; ++t) perm[position++] = next_value[a]++;
    }
  if (position != n) throw InternalError("rank matrix does not complete to a permutation");
  return element_of_permutation(w_group, perm);
}

PartialFlag flag_PQ(const FqField& f, const PartialFlag& p, const PartialFlag& q) {
  if (p.ambient() != q.ambient()) throw DimensionMismatch("flags live in different spaces");
  const auto cp = full_chain(p);
  const auto cq = full_chain(q);
  std::vector<Subspace> chain;
  for (std::size_t i = 1; i < cp.size(); ++i)
    for (std::size_t j = 0; j < cq.size(); ++j) {
      Subspace s = sum(f, cp[i - 1], intersect(f, cp[i], cq[j]));
      if (s.dim() == 0 || s.dim() == p.ambient()) continue;
      if (!chain.empty() && chain.back() == s) continue;
      chain.push_back(std::move(s));
    }
  return PartialFlag(f, p.ambient(), std::move(chain));
}

PartialFlag frobenius_flag(const FqField& f, const PartialFlag& fl, int power) {
  std::vector<Subspace> chain;
  for (const auto& s : fl.chain()) chain.push_back(frobenius(f, s, power));
  return PartialFlag(f, fl.ambient(), std::move(chain));
}

PartialFlag apply_flag(const FqField& f, const Matrix& g, const PartialFlag& fl) {
  std::vector<Subspace> chain;
  for (const auto& s : fl.chain()) chain.push_back(apply(f, g, s));
  return PartialFlag(f, fl.ambient(), std::move(chain));
}

bool stabilizes(const FqField& f, const Matrix& g, const PartialFlag& fl) {
  for (const auto& s : fl.chain())
    if (apply(f, g, s) != s) return false;
  return true;
}

bool in_unipotent_radical(const FqField& f, const Matrix& g, const PartialFlag& fl) {
  Matrix d = g;
  for (int i = 0; i < d.rows; ++i) d.at(i, i) = f.sub(d.at(i, i), 1);
  const auto c = full_chain(fl);
  for (std::size_t i = 1; i < c.size(); ++i) {
    const Subspace image = Subspace::span(f, mat_mul(f, c[i].basis(), transpose(d)));
    if (!c[i - 1].contains(f, image)) return false;
  }
  return true;
}

Matrix adapted_basis(const FqField& f, const PartialFlag& fl) {
  const int n = fl.ambient();
  std::vector<std::vector<int>> basis;
  Subspace current = Subspace::zero(n);
  auto take_from = [&](const Subspace& target) {
    for (int i = 0; i < target.dim(); ++i) {
      const auto v = target.basis().row(i);
      if (current.contains_vector(f, v)) continue;
      basis.push_back(v);
      current = Subspace::span(f, n, basis);
    }
  };
  for (const auto& s : fl.chain()) take_from(s);
  take_from(Subspace::whole(n));
  Matrix h(n, n);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) h.at(i, k) = basis[k][i];
  return h;
}

std::vector<Matrix> unipotent_radical(const FqField& f, const PartialFlag& fl) {
  const int n = fl.ambient();
  const auto d = full_dims(fl);
  std::vector<int> block(n);
  for (std::size_t b = 1; b < d.size(); ++b)
    for (int i = d[b - 1]; i < d[b]; ++i) block[i] = static_cast<int>(b);
  std::vector<std::pair<int, int>> free;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (block[i] < block[j]) free.emplace_back(i, j);
  const Matrix h = adapted_basis(f, fl);
  const Matrix h_inv = mat_inverse(f, h);
  std::vector<Matrix> out;
  std::vector<int> digits(free.size(), 0);
  while (true) {
    Matrix u = Matrix::identity(n);
    for (std::size_t t = 0; t < free.size(); ++t) u.at(free[t].first, free[t].second) = digits[t];
    out.push_back(mat_mul(f, mat_mul(f, h, u), h_inv));
    std::size_t t = 0;
    while (t < digits.size() && ++digits[t] == f.size()) digits[t++] = 0;
    if (t == digits.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace bedard
