// Assembles lower bounds (big height with a witness cover) and upper bounds
// (verified Schmitt-Vogel partitions, Lyubeznik admissible-symbol maxima)
// into an arithmetical-rank certificate with equality and STCI verdicts.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aracert/covers.hpp"
#include "aracert/resolutions.hpp"
#include "aracert/sv.hpp"

namespace aracert {

struct UpperBound {
  std::string kind;  // "lyubeznik" or "sv"
  int value = 0;
  // lyubeznik witnesses
  std::vector<int> order;
  Symbol witness_symbol;
  // sv witnesses (the partition is stored so the bound can be re-checked)
  std::optional<SvPartition> partition;
  std::string digest;
};

struct AraCertificate {
  MonomialIdeal ideal;
  std::string digest;
  CoverSummary covers;
  SqfMonomial witness_cover;  // first canonical cover of maximal size
  std::vector<UpperBound> uppers;  // sorted by kind, then value
  int ara_lower = 0;               // = bight
  std::optional<int> ara_upper;    // min over uppers, absent if none
  bool equal = false;              // ara_lower == ara_upper
  bool stci = false;               // equal and height == ara_upper
  bool exact = true;               // no strategy was truncated by budget
  std::vector<std::string> notes;  // rejected or incomplete strategies
};

enum class LyuSource { none, whisker, lex, canonical };

struct CertifyOptions {
  // cover enumeration always runs; it supplies the lower bound
  std::optional<SvPartition> sv;
  LyuSource lyu = LyuSource::none;
  bool lyu_exhaustive = false;
  long budget = kDefaultBudget;
};

AraCertificate certify(const SimplicialComplex& dx,
                       const CertifyOptions& opt);

/// ceil(n/2) + floor(n/2) * k, the multiwhisker-cycle value.
int expected_multiwhisker_value(int n, int k);

std::string ideal_digest(const MonomialIdeal& ideal);
std::string partition_digest(const SvPartition& part);

}  // namespace aracert
