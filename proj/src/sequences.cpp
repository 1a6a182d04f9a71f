#include "bedard/sequences.hpp"

#include <algorithm>

#include "bedard/error.hpp"

namespace bedard {
namespace {

std::vector<Element> conjugates(const Group& g, Element w, GenSet j) {
  std::vector<Element> out;
  for (int s : j.indices()) out.push_back(g.conjugate(w, g.generator(s)));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Element> twist_images(const Twist& eps, GenSet j) {
  std::vector<Element> out;
  for (int s : j.indices()) out.push_back(eps.image_of_generator(s));
  std::sort(out.begin(), out.end());
  return out;
}

std::string set_str(GenSet s) { return "{" + format_gen_set(s) + "}"; }

Violation violation(std::string axiom, std::size_t index, std::string detail) {
  return Violation{std::move(axiom), index, std::move(detail)};
}

bool same_double_coset(const Group& g, GenSet left, Element a, Element b, GenSet right) {
  return g.min_double_coset(left, a, right) == g.min_double_coset(left, b, right);
}

}  // namespace

GenSet next_j(GenSet prev, Element prefix, const Twist& eps) {
  const auto targets = conjugates(eps.group(), prefix, prev);
  return eps.preimage_within(prev, targets);
}

GenSet next_j_prime(GenSet prev, Element prefix, const Twist& eps) {
  const Group& g = eps.group();
  const auto images = twist_images(eps, prev);
  GenSet out;
  for (int s : prev.indices()) {
    const Element c = g.conjugate(prefix, g.generator(s));
    if (std::binary_search(images.begin(), images.end(), c)) out.insert(s);
  }
  return out;
}

std::optional<Violation> validate_t(std::span<const TStep> steps, GenSet j, const Twist& eps) {
  const Group& g = eps.group();
  if (steps.empty()) return violation("a", 0, "empty sequence");
  for (std::size_t n = 0; n < steps.size(); ++n) {
    const TStep& cur = steps[n];
    if (n == 0) {
      if (cur.j != j) return violation("a", 0, "J_0 = " + set_str(cur.j) + " differs from J = " + set_str(j));
    } else {
      const TStep& prev = steps[n - 1];
      if (!cur.j.subset_of(prev.j)) return violation("a", n, "J_n is not contained in J_{n-1}");
      const GenSet expect = next_j(prev.j, prev.w, eps);
      if (cur.j != expect) {
        return violation("b", n, "J_n = " + set_str(cur.j) + " but J_{n-1} cap eps^-1 Ad(w_{n-1}) J_{n-1} = " +
                                     set_str(expect));
      }
    }
    const GenSet ej = eps.twist_subset(cur.j);
    if (!g.is_min_rep(ej, cur.w, cur.j)) {
      return violation("c", n, "w_n = [" + g.format(cur.w) + "] is not minimal in its (eps(J_n), J_n) double coset");
    }
    if (n > 0) {
      const TStep& prev = steps[n - 1];
      if (!same_double_coset(g, ej, cur.w, prev.w, prev.j)) {
        return violation("d", n, "w_n = [" + g.format(cur.w) + "] not in W_{eps(J_n)} w_{n-1} W_{J_{n-1}}");
      }
    }
  }
  const TStep& last = steps.back();
  if (next_j(last.j, last.w, eps) != last.j) {
    return violation("b", steps.size(), "the last listed term is not stable, so a constant tail violates (b)");
  }
  return std::nullopt;
}

std::optional<Violation> validate_s(std::span<const SStep> steps, GenSet j, const Twist& eps) {
  const Group& g = eps.group();
  if (steps.empty()) return violation("a", 0, "empty sequence");
  Element prefix = g.identity();  // u_0 ... u_{n-1}
  for (std::size_t n = 0; n < steps.size(); ++n) {
    const SStep& cur = steps[n];
    if (n == 0) {
      if (cur.j != j) return violation("a", 0, "J_0 = " + set_str(cur.j) + " differs from J = " + set_str(j));
      const GenSet jp = eps.twist_subset(j);
      if (cur.j_prime != jp) return violation("c", 0, "J'_0 must equal eps(J) = " + set_str(jp));
    } else {
      const SStep& prev = steps[n - 1];
      if (!cur.j.subset_of(prev.j)) return violation("a", n, "J_n is not contained in J_{n-1}");
      const GenSet expect_j = next_j(prev.j, prefix, eps);
      if (cur.j != expect_j) {
        return violation("b", n, "J_n = " + set_str(cur.j) + " but the recursion gives " + set_str(expect_j));
      }
      const GenSet expect_jp = next_j_prime(prev.j, prefix, eps);
      if (cur.j_prime != expect_jp) {
        return violation("c", n, "J'_n = " + set_str(cur.j_prime) + " but the recursion gives " + set_str(expect_jp));
      }
      if (!g.in_parabolic(cur.u, prev.j)) {
        return violation("d", n, "u_n = [" + g.format(cur.u) + "] is not in W_{J_{n-1}}");
      }
    }
    if (!g.is_min_rep(cur.j_prime, cur.u, cur.j)) {
      return violation("e", n, "u_n = [" + g.format(cur.u) + "] is not in ^{J'_n}W^{J_n}");
    }
    if (n > 0) {
      const auto lhs = twist_images(eps, cur.j);
      const auto rhs = conjugates(g, prefix, cur.j_prime);
      if (lhs != rhs) return violation("f", n, "eps(J_n) != Ad(u_0...u_{n-1}) J'_n");
    }
    prefix = g.mul(prefix, cur.u);
  }
  const SStep& last = steps.back();
  if (steps.size() < 2 || last.u != g.identity() || last.j != steps[steps.size() - 2].j || last.j_prime != last.j) {
    return violation("stabilization", steps.size() - 1, "the last listed term is not the fixpoint (J, J, e)");
  }
  return std::nullopt;
}

TSeq make_tseq(std::span<const TStep> steps, GenSet j, const Twist& eps) {
  if (steps.empty()) throw NotStabilized("empty sequence");
  const TStep& last = steps.back();
  if (next_j(last.j, last.w, eps) != last.j) throw NotStabilized("last listed term is not stable");
  std::size_t keep = steps.size();
  while (keep >= 2 && steps[keep - 2] == steps[keep - 1]) --keep;
  return TSeq{j, std::vector<TStep>(steps.begin(), steps.begin() + static_cast<std::ptrdiff_t>(keep))};
}

SSeq sseq_from_u(std::span<const Element> u, GenSet j, const Twist& eps) {
  const Group& g = eps.group();
  SSeq s{j, {}};
  const Element u0 = u.empty() ? g.identity() : u[0];
  s.steps.push_back({j, eps.twist_subset(j), u0});
  Element prefix = u0;
  const std::size_t cap = u.size() + static_cast<std::size_t>(g.rank()) + 2;
  for (std::size_t n = 1; n < cap; ++n) {
    const SStep& prev = s.steps.back();
    const Element un = n < u.size() ? u[n] : g.identity();
    SStep cur{next_j(prev.j, prefix, eps), next_j_prime(prev.j, prefix, eps), un};
    const bool fix = un == g.identity() && cur.j == prev.j && cur.j_prime == cur.j;
    s.steps.push_back(cur);
    prefix = g.mul(prefix, un);
    if (fix && n + 1 >= u.size()) return s;
  }
  throw NotStabilized("u sequence does not reach a fixpoint");
}

TSeq s_to_t(const SSeq& s, const Twist& eps) {
  const Group& g = eps.group();
  std::vector<TStep> steps;
  Element prefix = g.identity();
  for (const SStep& st : s.steps) {
    prefix = g.mul(prefix, st.u);
    steps.push_back({st.j, prefix});
  }
  return make_tseq(steps, s.base, eps);
}

SSeq t_to_s(const TSeq& t, const Twist& eps) {
  const Group& g = eps.group();
  SSeq s{t.base, {}};
  for (std::size_t n = 0; n < t.steps.size(); ++n) {
    const TStep& cur = t.steps[n];
    if (n == 0) {
      s.steps.push_back({cur.j, eps.twist_subset(t.base), cur.w});
    } else {
      const TStep& prev = t.steps[n - 1];
      s.steps.push_back({cur.j, next_j_prime(prev.j, prev.w, eps), g.mul(g.inv(prev.w), cur.w)});
    }
  }
  const TStep& last = t.steps.back();
  s.steps.push_back({last.j, next_j_prime(last.j, last.w, eps), g.identity()});
  return s;
}

Element phi(const SSeq& s, const Group& group) {
  Element prod = group.identity();
  for (const SStep& st : s.steps) prod = group.mul(prod, st.u);
  return prod;
}

SSeq psi(Element w, GenSet j, const Twist& eps) {
  const Group& g = eps.group();
  const GenSet jp = eps.twist_subset(j);
  if (!(g.left_descents(w) & jp).empty()) {
    throw NotMinimalInput("[" + g.format(w) + "] has a left descent in eps(J) = {" + format_gen_set(jp) + "}");
  }
  SSeq s{j, {}};
  Element prefix = g.min_double_coset(jp, w, j);
  s.steps.push_back({j, jp, prefix});
  int flat_iterations = 0;
  for (;;) {
    const SStep prev = s.steps.back();
    const GenSet jn = next_j(prev.j, prefix, eps);
    const GenSet jpn = next_j_prime(prev.j, prefix, eps);
    const Element next_prefix = g.min_double_coset(jp, w, jn);
    const Element un = g.mul(g.inv(prefix), next_prefix);
    s.steps.push_back({jn, jpn, un});
    prefix = next_prefix;
    if (un == g.identity() && jn == prev.j && jpn == jn) break;
    if (jn == prev.j && ++flat_iterations > g.rank() + 2) {
      throw InternalError("psi did not stabilize within |I| + 2 non-shrinking iterations");
    }
  }
  return s;
}

GenSet j_infinity(const TSeq& t, const Twist& eps) {
  if (t.steps.empty()) throw NotStabilized("empty sequence");
  const TStep& last = t.steps.back();
  if (next_j(last.j, last.w, eps) != last.j) throw NotStabilized("sequence is not at its fixpoint");
  const Group& g = eps.group();
  if (conjugates(g, last.w, last.j) != twist_images(eps, last.j)) {
    throw InternalError("Ad(w) J_inf != eps(J_inf) at the fixpoint");
  }
  return last.j;
}

PieceKey piece_key(Element w, GenSet j, const Twist& eps) {
  const TSeq t = s_to_t(psi(w, j, eps), eps);
  const GenSet j_inf = j_infinity(t, eps);
  return PieceKey{w, j_inf, t.steps.back().w, t.steps};
}

std::vector<PieceKey> enumerate_pieces(GenSet j, const Twist& eps) {
  const Group& g = eps.group();
  const GenSet jp = eps.twist_subset(j);
  std::vector<PieceKey> out;
  for (Element w : g.enumerate_min_reps(jp, GenSet{})) out.push_back(piece_key(w, j, eps));
  return out;
}

}  // namespace bedard
