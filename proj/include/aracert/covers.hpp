// Minimal vertex covers of a complex (= minimal primes of its facet ideal),
// height, big height and unmixedness.

#pragma once

#include "aracert/complexes.hpp"

namespace aracert {

struct CoverSummary {
  std::vector<SqfMonomial> covers;  // canonical: by size, then lex
  int height = 0;                   // min cover size
  int bight = 0;                    // max cover size
  bool unmixed = true;
};

/// True iff every facet meets the vertex set a.
bool is_vertex_cover(const SimplicialComplex& dx, SqfMonomial a);

/// All minimal transversals, found by branching on an uncovered facet with
/// exclusion pruning and a final minimality sweep. Canonically sorted.
/// An empty facet list yields the single empty cover.
std::vector<SqfMonomial> minimal_vertex_covers(const SimplicialComplex& dx);

/// Same contract, by exhaustive subset enumeration; test oracle only.
/// Requires at most 22 vertices.
std::vector<SqfMonomial> minimal_vertex_covers_oracle(
    const SimplicialComplex& dx);

CoverSummary cover_summary(const SimplicialComplex& dx);

}  // namespace aracert
