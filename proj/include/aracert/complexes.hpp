// Vertex tables, squarefree monomials, simplicial complexes and monomial
// ideals, plus the whisker/graft constructions that produce the certified
// families. Vertex sets are bitmasks over ordinals; the ambient variable
// order is the order of the vertex table.

#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace aracert {

// Everything in this library represents vertex sets as 64-bit masks.
inline constexpr int kMaxVertices = 64;

using VertexMask = std::uint64_t;

/// A squarefree monomial, identified with its support (a set of vertex
/// ordinals). Also used for plain vertex sets such as covers: under the
/// minimal-prime correspondence the two are the same object.
struct SqfMonomial {
  VertexMask support = 0;

  int degree() const { return std::popcount(support); }
  bool empty() const { return support == 0; }
  bool contains(int v) const { return (support >> v) & 1u; }
  bool divides(SqfMonomial m) const { return (support & ~m.support) == 0; }

  friend SqfMonomial lcm(SqfMonomial a, SqfMonomial b) {
    return {a.support | b.support};
  }
  friend bool operator==(SqfMonomial a, SqfMonomial b) {
    return a.support == b.support;
  }
};

SqfMonomial monomial_of(const std::vector<int>& ordinals);
std::vector<int> support_vector(SqfMonomial m);

/// Lexicographic order on supports written as increasing ordinal sequences,
/// a prefix preceding its extensions. This is the canonical order for
/// facets, generators and covers throughout the library.
bool lex_less(SqfMonomial a, SqfMonomial b);

/// Ordered table of vertex labels; the ordinal order is the ambient
/// variable order used by every generator ordering.
struct VertexTable {
  std::vector<std::string> names;
  std::unordered_map<std::string, int> index;

  int add(const std::string& label);
  int ordinal(const std::string& label) const;  // throws on unknown label
  bool has(const std::string& label) const { return index.count(label) > 0; }
  int size() const { return static_cast<int>(names.size()); }
  VertexMask full_mask() const;

  friend bool operator==(const VertexTable& a, const VertexTable& b) {
    return a.names == b.names;
  }
};

VertexTable make_table(const std::vector<std::string>& labels);

/// How a complex was produced. Constructions record enough metadata for the
/// generator orderings that are only defined on whiskered or grafted inputs.
enum class ConstructionKind { none, whiskered, grafted };

struct Provenance {
  ConstructionKind kind = ConstructionKind::none;
  int base_count = 0;   // ordinals < base_count are base vertices
  std::string family;   // "sunlet", "multiwhisker-cycle", ... when applicable
  int n = 0;
  int k = 0;
};

/// A simplicial complex given by its facets (pairwise incomparable,
/// canonically sorted). A graph is the case where every facet has size 2;
/// isolated vertices live in the table without a facet.
struct SimplicialComplex {
  VertexTable vertices;
  std::vector<SqfMonomial> facets;
  Provenance provenance;

  bool is_graph() const;
  /// adjacency()[v] = mask of neighbours of v (graphs only).
  std::vector<VertexMask> adjacency() const;

  friend bool operator==(const SimplicialComplex& a,
                         const SimplicialComplex& b) {
    return a.vertices == b.vertices && a.facets == b.facets;
  }
};

/// A squarefree monomial ideal by its minimal generating set, canonically
/// sorted. Carries construction metadata through from the complex.
struct MonomialIdeal {
  VertexTable ambient;
  std::vector<SqfMonomial> generators;
  Provenance provenance;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.ambient == b.ambient && a.generators == b.generators;
  }
};

/// Per base vertex, the added facets of a (multi)graft, each given by its
/// number of fresh vertices (>= 1, so every added facet has dimension >= 1).
struct GraftSpec {
  enum class Mode { graft, multigraft };
  Mode mode = Mode::graft;
  std::vector<std::vector<int>> fresh_counts;  // indexed by base ordinal
};

// Constructions ------------------------------------------------------------

/// Validates labels/facets, absorbs non-maximal facets and returns the
/// canonical complex.
SimplicialComplex build_complex(
    const std::vector<std::string>& labels,
    const std::vector<std::vector<std::string>>& facets);

/// Cycle on x1..xn, n >= 3.
SimplicialComplex cycle_graph(int n);

MonomialIdeal edge_ideal(const SimplicialComplex& g);
MonomialIdeal facet_ideal(const SimplicialComplex& dx);

/// For a partition {W_1..W_t} of V(G), adds one vertex y_i per block and
/// the whisker {v, y_i} for every v in W_i. Blocks must be disjoint,
/// nonempty and cover V(G).
SimplicialComplex partition_whisker(const SimplicialComplex& g,
                                    const std::vector<VertexMask>& blocks);

/// Same construction, but every block must induce a complete subgraph.
/// Empty blocks are accepted only behind the flag and add an isolated
/// vertex (no edge, no generator).
SimplicialComplex clique_whisker(const SimplicialComplex& g,
                                 const std::vector<VertexMask>& blocks,
                                 bool allow_empty = false);

/// Cycle with one whisker per vertex: vertices x1..xn, y1..yn.
SimplicialComplex sunlet(int n);

/// counts[i] >= 1 whiskers on vertex i; whisker j of vertex x gets the
/// label "<x ordinal's label>"-independent scheme y<i>.<j>.
SimplicialComplex multiwhisker(const SimplicialComplex& g,
                               const std::vector<int>& counts);

/// Adds one facet per vertex (spec mode graft, m_i = 1): facet at x_i
/// meets the complex exactly in x_i, added facets pairwise disjoint.
/// Fresh vertices are labelled <base>#w<k>.
SimplicialComplex graft(const SimplicialComplex& dx, const GraftSpec& spec);

/// Adds m_i >= 1 facets per vertex; facets on the same vertex share exactly
/// that vertex. Fresh vertices are labelled <base>#w<j>.<k> (facet j,
/// vertex k).
SimplicialComplex multigraft(const SimplicialComplex& dx,
                             const GraftSpec& spec);

// Rendering ----------------------------------------------------------------

/// "x1*x2" style; factors in ambient order.
std::string monomial_to_string(SqfMonomial m, const VertexTable& table);
std::vector<std::string> labels_of(SqfMonomial m, const VertexTable& table);
SqfMonomial monomial_from_labels(const std::vector<std::string>& labels,
                                 const VertexTable& table);

/// Reduce to maximal faces, drop duplicates, sort canonically.
std::vector<SqfMonomial> canonicalize_facets(std::vector<SqfMonomial> facets);

}  // namespace aracert
