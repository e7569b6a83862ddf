// Schmitt-Vogel partitions: representation, exact verification of the
// lemma's hypotheses, q-polynomial emission, and the explicit partitions
// for sunlet graphs and multiwhisker cycles.

#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "aracert/complexes.hpp"

namespace aracert {

/// Ordered layers P_0..P_r of squarefree monomials with per-monomial
/// exponents e(p) >= 1 (default 1). q_i is the sum of p^e(p) over P_i.
struct SvPartition {
  VertexTable ambient;
  std::vector<std::vector<SqfMonomial>> sets;       // each canonically sorted
  std::unordered_map<VertexMask, int> exponents;    // absent means 1

  int exponent(SqfMonomial p) const;
  int size() const { return static_cast<int>(sets.size()); }  // r + 1
};

struct SvViolation {
  std::string condition;  // "ii", "iii" or "structure"
  int set_index = -1;
  SqfMonomial a, b;       // witness pair for (iii)
};

struct SvReport {
  bool conditions_ok = false;
  std::optional<bool> radical_cover_ok;  // filled by the radical check
  std::vector<SvViolation> violations;
  int size = 0;
};

/// Checks (ii) structurally and (iii) for every unordered pair in each P_i,
/// i >= 1; (i) holds definitionally with P the union of the layers. Reports
/// all violations, not just the first.
SvReport verify_sv_conditions(const SvPartition& part);

struct RadicalCheck {
  bool ok = false;
  std::vector<SqfMonomial> missing_generators;  // no p divides them
  std::vector<SqfMonomial> foreign_monomials;   // no generator divides them
};

/// Exact radical equality of (P) and the ideal: every generator divisible
/// by some p in P, and every p divisible by some generator.
RadicalCheck verify_radical_cover(const SvPartition& part,
                                  const MonomialIdeal& ideal);

struct QPolynomial {
  std::vector<std::pair<SqfMonomial, int>> terms;  // (monomial, exponent)
};

/// The formal sums q_0..q_r, in layer order.
std::vector<QPolynomial> sv_generators(const SvPartition& part);

/// "x1*x2 + x3*y3" style; exponents > 1 expand per variable ("x3^2*y3^2").
std::string render(const QPolynomial& q, const VertexTable& table);

/// The explicit partition certifying the n-sunlet, size n.
SvPartition sunlet_sv(int n);

/// The explicit partition for the cycle with k whiskers per vertex,
/// size ceil(n/2) + floor(n/2)*k.
SvPartition multiwhisker_cycle_sv(int n, int k);

}  // namespace aracert
