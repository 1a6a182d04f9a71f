#include "bedard/flagbrute.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "bedard/error.hpp"
#include "bedard/pieces.hpp"

namespace bedard {
namespace {

std::shared_ptr<const Group> type_a_group(int n) {
  if (n < 2) throw DimensionMismatch("GL_n needs n >= 2");
  return Group::from_type("A" + std::to_string(n - 1));
}

long long checked_pow(long long base, int e, std::size_t budget) {
  long long r = 1;
  for (int i = 0; i < e; ++i) {
    r *= base;
    if (r > static_cast<long long>(budget)) throw BudgetExceeded("enumeration of " + std::to_string(base) + "^" +
                                                                 std::to_string(e) + " items exceeds the budget");
  }
  return r;
}

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0U); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

FrobeniusField FrobeniusField::make(int q, int m) {
  if (m < 1) throw Error("extension degree m must be positive");
  auto base = FqField::of_order(q);
  FrobeniusField ff;
  ff.q = q;
  ff.m = m;
  ff.power = base->degree();
  ff.field = FqField::make(base->characteristic(), base->degree() * m);
  return ff;
}

std::vector<Matrix> gl_generators(const FqField& f, int n) {
  std::vector<Matrix> gens;
  for (int i = 0; i + 1 < n; ++i) {
    Matrix p = Matrix::identity(n);
    p.at(i, i) = 0;
    p.at(i + 1, i + 1) = 0;
    p.at(i, i + 1) = 1;
    p.at(i + 1, i) = 1;
    gens.push_back(p);
  }
  Matrix t = Matrix::identity(n);
  t.at(0, 1) = 1;
  gens.push_back(t);
  Matrix d = Matrix::identity(n);
  d.at(0, 0) = f.primitive_element();
  gens.push_back(d);
  return gens;
}

long long gl_order(int n, long long q) {
  long long qn = 1;
  for (int i = 0; i < n; ++i)
    if (__builtin_mul_overflow(qn, q, &qn)) throw Overflow("|GL_n(F_q)| overflows");
  long long out = 1;
  long long qi = 1;
  for (int i = 0; i < n; ++i) {
    if (__builtin_mul_overflow(out, qn - qi, &out)) throw Overflow("|GL_n(F_q)| overflows");
    qi *= q;
  }
  return out;
}

std::vector<Matrix> enumerate_gl(const FqField& f, int n, std::size_t budget) {
  const long long total = checked_pow(f.size(), n * n, budget);
  std::vector<Matrix> out;
  for (long long code = 0; code < total; ++code) {
    Matrix m = matrix_from_code(f, n, code);
    if (is_invertible(f, m)) out.push_back(std::move(m));
  }
  return out;
}

TSeq dl_piece(const FrobeniusField& ff, const Twist& eps, const PartialFlag& q) {
  const FqField& f = *ff.field;
  const Group& w_group = eps.group();
  std::vector<TStep> steps;
  PartialFlag current = q;
  const int cap = q.ambient() + 2;
  for (int n = 0;; ++n) {
    if (n > cap) throw InternalError("Frobenius sequence did not stabilize");
    steps.push_back({current.type(), pos_flags(f, w_group, ff.apply(current), current)});
    PartialFlag next = flag_PQ(f, current, ff.apply(current, -1));
    if (next == current) break;
    current = std::move(next);
  }
  return make_tseq(steps, q.type(), eps);
}

int gl_line_class(const FrobeniusField& ff, const Subspace& line) {
  if (line.dim() != 1) throw DimensionMismatch("expected a line");
  Subspace span = line;
  Subspace image = line;
  while (true) {
    image = ff.apply(image);
    Subspace next = sum(*ff.field, span, image);
    if (next == span) return span.dim();
    span = std::move(next);
  }
}

std::string SpLineClass::tag() const { return std::string(prime ? "X'_" : "X_") + std::to_string(j); }

int symplectic_form(const FqField& f, const std::vector<int>& x, const std::vector<int>& y) {
  const std::size_t n = x.size() / 2;
  int acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    acc = f.add(acc, f.mul(x[i], y[n + i]));
    acc = f.sub(acc, f.mul(x[n + i], y[i]));
  }
  return acc;
}

SpLineClass sp_line_class(const FrobeniusField& ff, const Subspace& line) {
  if (line.dim() != 1 || line.ambient() % 2 != 0) throw DimensionMismatch("expected a line in an even-dimensional space");
  const FqField& f = *ff.field;
  const std::vector<int> v = line.basis().row(0);
  std::vector<std::vector<int>> orbit{v};
  Subspace span = line;
  // F^j(v) for j >= 1 until the span stops growing; the form values
  // <v, F^j v> decide isotropy since <F^i v, F^j v> = <v, F^{j-i} v>^(q^i).
  for (int j = 1;; ++j) {
    std::vector<int> fv = orbit.back();
    for (int& x : fv) x = f.frobenius(x, ff.power);
    if (symplectic_form(f, v, fv) != 0) return {true, j};
    orbit.push_back(fv);
    Subspace next = sum(f, span, Subspace::span(f, line.ambient(), {fv}));
    if (next == span) return {false, span.dim()};
    span = std::move(next);
  }
}

std::vector<SpLineClass> sp_line_tags(int half) {
  std::vector<SpLineClass> out;
  for (int j = 1; j <= half; ++j) out.push_back({false, j});
  for (int j = half; j >= 1; --j) out.push_back({true, j});
  return out;
}

LineCensus gl_line_census(int n, int q, int m, std::size_t budget) {
  const auto ff = FrobeniusField::make(q, m);
  const auto w_group = type_a_group(n);
  const Twist eps = Twist::identity(w_group);
  checked_pow(ff.field->size(), n, budget);
  LineCensus out;
  out.n = n;
  out.q = q;
  out.m = m;
  const GenSet j_line = type_of_dims(n, {1});
  const auto keys = enumerate_pieces(j_line, eps);
  for (const auto& line : enumerate_subspaces(*ff.field, n, 1)) {
    ++out.lines;
    const int cls = gl_line_class(ff, line);
    const PartialFlag flag(*ff.field, n, {line});
    const TSeq t = dl_piece(ff, eps, flag);
    if (validate_t(t.steps, j_line, eps)) out.all_valid = false;
    const Element w = t.steps.back().w;
    ++out.class_counts[cls];
    ++out.piece_counts[w];
    if (cls < 1 || cls > static_cast<int>(keys.size()) || keys[cls - 1].steps != t.steps) out.dictionary_ok = false;
  }
  return out;
}

SpLineCensus sp_line_census(int half, int q, int m, std::size_t budget) {
  const auto ff = FrobeniusField::make(q, m);
  checked_pow(ff.field->size(), 2 * half, budget);
  SpLineCensus out;
  out.half = half;
  out.q = q;
  out.m = m;
  for (const auto& line : enumerate_subspaces(*ff.field, 2 * half, 1)) {
    ++out.lines;
    ++out.class_counts[sp_line_class(ff, line)];
  }
  return out;
}

std::vector<ZStep> z_trace(const FqField& f, const Group& w_group, const PartialFlag& p, const Matrix& g) {
  const Matrix g_inv = mat_inverse(f, g);
  std::vector<ZStep> out;
  PartialFlag pn = p;
  PartialFlag pn_prime = apply_flag(f, g, p);
  const int cap = p.ambient() + 2;
  for (int n = 0;; ++n) {
    if (n > cap) throw InternalError("Z sequence did not stabilize");
    out.push_back({pn, pn_prime, pos_flags(f, w_group, pn_prime, pn)});
    PartialFlag next_prime = flag_PQ(f, pn_prime, pn);
    PartialFlag next = apply_flag(f, g_inv, next_prime);
    if (next == pn) break;
    pn = std::move(next);
    pn_prime = std::move(next_prime);
  }
  return out;
}

TSeq z_piece(const FqField& f, const Twist& eps, const ZPointFq& z) {
  if (apply_flag(f, z.g, z.p) != z.p_prime) throw Error("witness does not map P to P'");
  std::vector<TStep> steps;
  for (const auto& st : z_trace(f, eps.group(), z.p, z.g)) steps.push_back({st.p.type(), st.w});
  return make_tseq(steps, z.p.type(), eps);
}

ZCensus z_census(int n, int q, GenSet j, const ZCensusOptions& options) {
  const auto field = FqField::of_order(q);
  const FqField& f = *field;
  const auto w_group = type_a_group(n);
  const Twist eps = Twist::identity(w_group);
  if (!j.subset_of(w_group->all_generators())) throw Error("J is not a subset of the generators");

  const auto flags = enumerate_flags(f, n, dims_of_type(n, j), options.budget);
  const long long g_order = gl_order(n, q);
  const long long u_order = static_cast<long long>(unipotent_radical(f, flags.front()).size());
  const long long points = static_cast<long long>(flags.size()) * (g_order / u_order);
  if (points > static_cast<long long>(options.budget)) {
    throw BudgetExceeded("Z has " + std::to_string(points) + " points, beyond the budget of " +
                         std::to_string(options.budget));
  }
  const auto group = enumerate_gl(f, n, options.budget);
  const long long codes = checked_pow(f.size(), n * n, options.budget);
  std::vector<std::int32_t> index_of_code(static_cast<std::size_t>(codes), -1);
  for (std::size_t i = 0; i < group.size(); ++i) index_of_code[matrix_code(f, group[i])] = static_cast<std::int32_t>(i);
  auto gidx = [&](const Matrix& m) { return static_cast<std::size_t>(index_of_code[matrix_code(f, m)]); };

  std::map<PartialFlag, std::size_t> flag_index;
  for (std::size_t i = 0; i < flags.size(); ++i) flag_index.emplace(flags[i], i);

  // Cosets gU_P, labelled by their least member.
  std::vector<std::vector<std::int32_t>> coset_of(flags.size());
  std::vector<std::size_t> offset(flags.size() + 1, 0);
  std::vector<std::size_t> point_flag;
  std::vector<std::size_t> point_label;
  for (std::size_t fi = 0; fi < flags.size(); ++fi) {
    const auto unipotent = unipotent_radical(f, flags[fi]);
    auto& cosets = coset_of[fi];
    cosets.assign(group.size(), -1);
    std::int32_t next = 0;
    for (std::size_t gi = 0; gi < group.size(); ++gi) {
      if (cosets[gi] >= 0) continue;
      for (const auto& u : unipotent) cosets[gidx(mat_mul(f, group[gi], u))] = next;
      point_flag.push_back(fi);
      point_label.push_back(gi);
      ++next;
    }
    offset[fi + 1] = offset[fi] + static_cast<std::size_t>(next);
  }

  ZCensus out;
  out.n = n;
  out.q = q;
  out.j = j;
  out.flags = flags.size();
  out.total = point_flag.size();

  std::map<Element, std::size_t> piece_slot;
  std::vector<std::size_t> piece_of(out.total);
  std::vector<std::vector<ZStep>> traces(out.total);
  for (std::size_t pt = 0; pt < out.total; ++pt) {
    traces[pt] = z_trace(f, *w_group, flags[point_flag[pt]], group[point_label[pt]]);
    std::vector<TStep> steps;
    for (const auto& st : traces[pt]) steps.push_back({st.p.type(), st.w});
    if (validate_t(steps, j, eps)) out.all_valid = false;
    TSeq t = make_tseq(steps, j, eps);
    const Element w = t.steps.back().w;
    auto [it, inserted] = piece_slot.emplace(w, out.pieces.size());
    if (inserted) out.pieces.push_back({t, 0});
    if (out.pieces[it->second].t != t) out.all_valid = false;
    ++out.pieces[it->second].count;
    piece_of[pt] = it->second;
  }

  if (options.representatives) {
    bool ok = true;
    for (std::size_t pt = 0; pt < out.total && ok; ++pt) {
      const auto& p = flags[point_flag[pt]];
      const Matrix& g = group[point_label[pt]];
      for (const auto& u : unipotent_radical(f, p)) {
        const Matrix gu = mat_mul(f, g, u);
        const TSeq t = z_piece(f, eps, {p, apply_flag(f, gu, p), gu});
        if (t != out.pieces[piece_of[pt]].t) {
          ok = false;
          break;
        }
      }
    }
    out.representatives_ok = ok;
  }

  if (options.orbits) {
    const auto gens = gl_generators(f, n);
    UnionFind uf(out.total);
    for (const auto& h : gens) {
      const Matrix h_inv = mat_inverse(f, h);
      std::vector<std::size_t> flag_image(flags.size());
      for (std::size_t fi = 0; fi < flags.size(); ++fi) flag_image[fi] = flag_index.at(apply_flag(f, h, flags[fi]));
      for (std::size_t pt = 0; pt < out.total; ++pt) {
        const std::size_t fi = flag_image[point_flag[pt]];
        const Matrix conj = mat_mul(f, mat_mul(f, h, group[point_label[pt]]), h_inv);
        const std::size_t target = offset[fi] + static_cast<std::size_t>(coset_of[fi][gidx(conj)]);
        uf.unite(static_cast<std::uint32_t>(pt), static_cast<std::uint32_t>(target));
      }
    }
    std::size_t roots = 0;
    bool constant = true;
    for (std::size_t pt = 0; pt < out.total; ++pt) {
      const std::uint32_t r = uf.find(static_cast<std::uint32_t>(pt));
      if (r == pt) ++roots;
      if (piece_of[r] != piece_of[pt]) constant = false;
    }
    out.orbits = roots;
    out.orbit_constant = constant;
  }

  if (options.fibres) {
    const RootSystem rs = RootSystem::from_cartan_matrix(w_group->cartan_matrix());
    std::map<PartialFlag, std::vector<Matrix>> radicals;
    // (P^1, label of gU_{P^1}) -> (fibre size, expected dimension)
    std::map<std::pair<PartialFlag, long long>, std::pair<std::size_t, int>> fibres;
    bool ok = true;
    for (std::size_t pt = 0; pt < out.total; ++pt) {
      const auto& tr = traces[pt];
      const PartialFlag& p1 = tr.size() > 1 ? tr[1].p : tr[0].p;
      auto it = radicals.find(p1);
      if (it == radicals.end()) it = radicals.emplace(p1, unipotent_radical(f, p1)).first;
      const Matrix& g = group[point_label[pt]];
      long long label = -1;
      for (const auto& u : it->second) {
        const long long c = matrix_code(f, mat_mul(f, g, u));
        if (label < 0 || c < label) label = c;
      }
      const int d = step_fibre_dim(rs, j, eps, tr[0].w);
      auto& slot = fibres[{p1, label}];
      if (slot.first > 0 && slot.second != d) ok = false;
      slot.second = d;
      ++slot.first;
    }
    for (const auto& [key, value] : fibres) {
      long long expected = 1;
      for (int i = 0; i < value.second; ++i) expected *= q;
      if (static_cast<long long>(value.first) != expected) ok = false;
    }
    out.fibres_checked = fibres.size();
    out.fibres_ok = ok;
  }

  std::sort(out.pieces.begin(), out.pieces.end(),
            [](const ZCensusPiece& a, const ZCensusPiece& b) { return a.t.steps.back().w < b.t.steps.back().w; });
  return out;
}

std::vector<PartialFlag> enumerate_all_flags(const FqField& f, int n, std::size_t budget) {
  std::vector<PartialFlag> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n - 1)); ++bits) {
    auto part = enumerate_flags(f, n, dims_of_type(n, GenSet(bits)), budget);
    out.insert(out.end(), part.begin(), part.end());
    if (out.size() > budget) throw BudgetExceeded("too many flags");
  }
  return out;
}

PosCheck check_pos_multiplicativity(const FqField& f, int n, std::size_t budget) {
  const auto w_group = type_a_group(n);
  const Group& w = *w_group;
  const auto all = enumerate_all_flags(f, n, budget);
  PosCheck out;
  for (const auto& p : all) {
    std::vector<const PartialFlag*> inside;
    for (const auto& z : all) {
      bool refines = true;
      for (const auto& s : p.chain()) refines = refines && std::find(z.chain().begin(), z.chain().end(), s) != z.chain().end();
      if (refines) inside.push_back(&z);
    }
    for (const auto& p_prime : all) {
      const PartialFlag x = flag_PQ(f, p_prime, p);
      const PartialFlag y = flag_PQ(f, p, p_prime);
      const Element a = pos_flags(f, w, p_prime, p);
      for (const PartialFlag* z : inside) {
        if (++out.configurations > budget) throw BudgetExceeded("too many configurations");
        const Element b = pos_flags(f, w, y, *z);
        const Element lhs = pos_flags(f, w, x, *z);
        if (lhs != w.mul(a, b) || w.length(lhs) != w.length(a) + w.length(b)) ++out.failures;
      }
    }
  }
  return out;
}

}  // namespace bedard
