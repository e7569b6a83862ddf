#include "aracert/covers.hpp"

#include <algorithm>
#include <stdexcept>

namespace aracert {

bool is_vertex_cover(const SimplicialComplex& dx, SqfMonomial a) {
  if (a.support & ~dx.vertices.full_mask())
    throw std::invalid_argument("cover contains an unknown vertex");
  return std::all_of(dx.facets.begin(), dx.facets.end(),
                     [&](SqfMonomial f) { return f.support & a.support; });
}

namespace {

// Branch on the first uncovered facet. Vertices already tried in earlier
// sibling branches are excluded below, so every minimal cover is reached
// exactly once (possibly alongside non-minimal ones, swept out later).
void cover_dfs(const std::vector<SqfMonomial>& facets, VertexMask chosen,
               VertexMask excluded, std::vector<VertexMask>& out) {
  const SqfMonomial* open = nullptr;
  for (const SqfMonomial& f : facets)
    if (!(f.support & chosen)) {
      open = &f;
      break;
    }
  if (!open) {
    out.push_back(chosen);
    return;
  }
  VertexMask avail = open->support & ~excluded;
  VertexMask tried = 0;
  while (avail) {
    VertexMask bit = avail & (~avail + 1);
    avail ^= bit;
    cover_dfs(facets, chosen | bit, excluded | tried, out);
    tried |= bit;
  }
}

bool is_minimal_cover(const std::vector<SqfMonomial>& facets, VertexMask c) {
  VertexMask rest = c;
  while (rest) {
    VertexMask bit = rest & (~rest + 1);
    rest ^= bit;
    bool has_private_facet = false;
    for (const SqfMonomial& f : facets)
      if ((f.support & c) == bit) {
        has_private_facet = true;
        break;
      }
    if (!has_private_facet) return false;
  }
  return true;
}

void sort_canonical(std::vector<SqfMonomial>& covers) {
  std::sort(covers.begin(), covers.end(), [](SqfMonomial a, SqfMonomial b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return lex_less(a, b);
  });
}

}  // namespace

std::vector<SqfMonomial> minimal_vertex_covers(const SimplicialComplex& dx) {
  std::vector<VertexMask> candidates;
  cover_dfs(dx.facets, 0, 0, candidates);
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());
  std::vector<SqfMonomial> covers;
  for (VertexMask c : candidates)
    if (is_minimal_cover(dx.facets, c)) covers.push_back({c});
  sort_canonical(covers);
  return covers;
}

std::vector<SqfMonomial> minimal_vertex_covers_oracle(
    const SimplicialComplex& dx) {
  int n = dx.vertices.size();
  if (n > 22)
    throw std::invalid_argument("cover oracle capped at 22 vertices");
  std::vector<std::uint8_t> is_cov(std::size_t{1} << n, 0);
  for (VertexMask m = 0; m < (VertexMask{1} << n); ++m) {
    bool ok = true;
    for (const SqfMonomial& f : dx.facets)
      if (!(f.support & m)) {
        ok = false;
        break;
      }
    is_cov[m] = ok;
  }
  std::vector<SqfMonomial> covers;
  for (VertexMask m = 0; m < (VertexMask{1} << n); ++m) {
    if (!is_cov[m]) continue;
    bool minimal = true;
    VertexMask rest = m;
    while (rest) {
      VertexMask bit = rest & (~rest + 1);
      rest ^= bit;
      if (is_cov[m ^ bit]) {
        minimal = false;
        break;
      }
    }
    if (minimal) covers.push_back({m});
  }
  sort_canonical(covers);
  return covers;
}

CoverSummary cover_summary(const SimplicialComplex& dx) {
  CoverSummary s;
  s.covers = minimal_vertex_covers(dx);
  if (s.covers.empty()) return s;  // unreachable: the empty cover exists
  s.height = s.covers.front().degree();
  s.bight = s.covers.back().degree();
  s.unmixed = s.height == s.bight;
  return s;
}

}  // namespace aracert
