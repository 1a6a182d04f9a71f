#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bedard/coxeter.hpp"

namespace bedard {

/// One term (J_n, w_n) of a sequence in T(J, eps).
struct TStep {
  GenSet j;
  Element w;
  friend bool operator==(const TStep&, const TStep&) = default;
};

/// One term (J_n, J'_n, u_n) of a sequence in S(J, eps).
struct SStep {
  GenSet j;
  GenSet j_prime;
  Element u;
  friend bool operator==(const SStep&, const SStep&) = default;
};

/// Element of T(J, eps) stored as a finite prefix. The last step is the
/// stable value: every later term equals it, and no earlier term does.
struct TSeq {
  GenSet base;
  std::vector<TStep> steps;
  friend bool operator==(const TSeq&, const TSeq&) = default;
};

/// Element of S(J, eps). The prefix runs up to and including the first
/// n >= 1 with u_n = e, J_n = J_{n-1}, J'_n = J_n; that step repeats forever.
struct SSeq {
  GenSet base;
  std::vector<SStep> steps;
  friend bool operator==(const SSeq&, const SSeq&) = default;
};

/// First failed axiom, e.g. {"d", 1, "..."}; "stabilization" flags a prefix
/// whose implied constant tail is not a valid continuation.
struct Violation {
  std::string axiom;
  std::size_t index = 0;
  std::string detail;
};

/// Label of one piece: w = phi(t), the stabilized subset and the T-sequence.
struct PieceKey {
  Element w;
  GenSet j_inf;
  Element w_inf;
  std::vector<TStep> steps;
};

/// Checks the T-sequence axioms (a)-(d) in order on a finite prefix whose last
/// term is taken to repeat forever.
std::optional<Violation> validate_t(std::span<const TStep> steps, GenSet j, const Twist& eps);
/// Checks axioms (a)-(e) and the derived identity (f) on a finite prefix
/// whose last term must be the fixpoint.
std::optional<Violation> validate_s(std::span<const SStep> steps, GenSet j, const Twist& eps);

/// Drops the repeated tail of a valid prefix. Throws NotStabilized if the
/// last listed term is not stable.
TSeq make_tseq(std::span<const TStep> steps, GenSet j, const Twist& eps);

/// Rebuilds (J_n, J'_n) from J and a list of u_n, padding with u = e until
/// the fixpoint is reached.
SSeq sseq_from_u(std::span<const Element> u, GenSet j, const Twist& eps);

TSeq s_to_t(const SSeq& s, const Twist& eps);
SSeq t_to_s(const TSeq& t, const Twist& eps);

Element phi(const SSeq& s, const Group& group);
/// Inverse of phi via successive minimal double-coset representatives.
/// Throws NotMinimalInput if w has a left descent in eps(J).
SSeq psi(Element w, GenSet j, const Twist& eps);

/// Throws NotStabilized unless the last step is a fixpoint; checks
/// Ad(w_inf) J_inf = eps(J_inf) and throws InternalError otherwise.
GenSet j_infinity(const TSeq& t, const Twist& eps);

PieceKey piece_key(Element w, GenSet j, const Twist& eps);
/// One key per w in ^{eps(J)}W, in ShortLex order of w.
std::vector<PieceKey> enumerate_pieces(GenSet j, const Twist& eps);

// Subset recursions shared by the two sequence types.
GenSet next_j(GenSet prev, Element prefix, const Twist& eps);
GenSet next_j_prime(GenSet prev, Element prefix, const Twist& eps);

}  // namespace bedard
