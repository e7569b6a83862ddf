#include "aracert/complexes.hpp"

#include <algorithm>
#include <stdexcept>

namespace aracert {

SqfMonomial monomial_of(const std::vector<int>& ordinals) {
  SqfMonomial m;
  for (int v : ordinals) {
    if (v < 0 || v >= kMaxVertices)
      throw std::invalid_argument("vertex ordinal out of range");
    m.support |= VertexMask{1} << v;
  }
  return m;
}

std::vector<int> support_vector(SqfMonomial m) {
  std::vector<int> out;
  VertexMask s = m.support;
  while (s) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

bool lex_less(SqfMonomial a, SqfMonomial b) {
  VertexMask x = a.support, y = b.support;
  while (x && y) {
    int ia = std::countr_zero(x), ib = std::countr_zero(y);
    if (ia != ib) return ia < ib;
    x &= x - 1;
    y &= y - 1;
  }
  return x == 0 && y != 0;
}

int VertexTable::add(const std::string& label) {
  if (label.empty()) throw std::invalid_argument("empty vertex label");
  if (has(label))
    throw std::invalid_argument("duplicate vertex label: " + label);
  if (size() >= kMaxVertices)
    throw std::invalid_argument("vertex cap exceeded (at most 64 vertices)");
  names.push_back(label);
  index.emplace(label, size() - 1);
  return size() - 1;
}

int VertexTable::ordinal(const std::string& label) const {
  auto it = index.find(label);
  if (it == index.end())
    throw std::invalid_argument("unknown vertex label: " + label);
  return it->second;
}

VertexMask VertexTable::full_mask() const {
  int n = size();
  return n == 0 ? 0 : (n == kMaxVertices ? ~VertexMask{0}
                                         : (VertexMask{1} << n) - 1);
}

VertexTable make_table(const std::vector<std::string>& labels) {
  VertexTable t;
  for (const auto& l : labels) t.add(l);
  return t;
}

bool SimplicialComplex::is_graph() const {
  return std::all_of(facets.begin(), facets.end(),
                     [](SqfMonomial f) { return f.degree() == 2; });
}

std::vector<VertexMask> SimplicialComplex::adjacency() const {
  std::vector<VertexMask> adj(vertices.size(), 0);
  for (SqfMonomial f : facets) {
    auto vs = support_vector(f);
    if (vs.size() != 2) throw std::invalid_argument("adjacency needs a graph");
    adj[vs[0]] |= VertexMask{1} << vs[1];
    adj[vs[1]] |= VertexMask{1} << vs[0];
  }
  return adj;
}

std::vector<SqfMonomial> canonicalize_facets(std::vector<SqfMonomial> facets) {
  std::sort(facets.begin(), facets.end(),
            [](SqfMonomial a, SqfMonomial b) { return a.support < b.support; });
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  std::vector<SqfMonomial> maximal;
  for (SqfMonomial f : facets) {
    bool absorbed = false;
    for (SqfMonomial g : facets)
      if (!(f == g) && f.divides(g)) {
        absorbed = true;
        break;
      }
    if (!absorbed) maximal.push_back(f);
  }
  std::sort(maximal.begin(), maximal.end(), lex_less);
  return maximal;
}

SimplicialComplex build_complex(
    const std::vector<std::string>& labels,
    const std::vector<std::vector<std::string>>& facets) {
  SimplicialComplex dx;
  dx.vertices = make_table(labels);
  std::vector<SqfMonomial> fs;
  for (const auto& facet : facets) {
    if (facet.empty()) throw std::invalid_argument("empty facet");
    fs.push_back(monomial_from_labels(facet, dx.vertices));
  }
  dx.facets = canonicalize_facets(std::move(fs));
  return dx;
}

SimplicialComplex cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  std::vector<std::string> labels;
  std::vector<std::vector<std::string>> edges;
  for (int i = 1; i <= n; ++i) labels.push_back("x" + std::to_string(i));
  for (int i = 1; i < n; ++i)
    edges.push_back({labels[i - 1], labels[i]});
  edges.push_back({labels[0], labels[n - 1]});
  return build_complex(labels, edges);
}

MonomialIdeal edge_ideal(const SimplicialComplex& g) {
  if (!g.is_graph())
    throw std::invalid_argument("edge ideal needs a graph (facet of size != 2)");
  return facet_ideal(g);
}

MonomialIdeal facet_ideal(const SimplicialComplex& dx) {
  MonomialIdeal ideal;
  ideal.ambient = dx.vertices;
  ideal.generators = dx.facets;  // maximal facets are pairwise incomparable
  ideal.provenance = dx.provenance;
  return ideal;
}

namespace {

void validate_blocks(const SimplicialComplex& g,
                     const std::vector<VertexMask>& blocks, bool allow_empty) {
  VertexMask seen = 0;
  VertexMask full = g.vertices.full_mask();
  for (const VertexMask b : blocks) {
    if (b == 0 && !allow_empty)
      throw std::invalid_argument("empty partition block");
    if (b & ~full) throw std::invalid_argument("block vertex outside graph");
    if (b & seen) throw std::invalid_argument("overlapping partition blocks");
    seen |= b;
  }
  if (seen != full)
    throw std::invalid_argument("partition blocks do not cover the vertex set");
}

SimplicialComplex whisker_blocks(const SimplicialComplex& g,
                                 const std::vector<VertexMask>& blocks) {
  SimplicialComplex out;
  out.vertices = g.vertices;
  std::vector<SqfMonomial> facets = g.facets;
  for (size_t i = 0; i < blocks.size(); ++i) {
    int y = out.vertices.add("y" + std::to_string(i + 1));
    for (int v : support_vector({blocks[i]}))
      facets.push_back(monomial_of({v, y}));
  }
  out.facets = canonicalize_facets(std::move(facets));
  out.provenance.kind = ConstructionKind::whiskered;
  out.provenance.base_count = g.vertices.size();
  return out;
}

}  // namespace

SimplicialComplex partition_whisker(const SimplicialComplex& g,
                                    const std::vector<VertexMask>& blocks) {
  if (!g.is_graph()) throw std::invalid_argument("whiskering needs a graph");
  validate_blocks(g, blocks, /*allow_empty=*/false);
  return whisker_blocks(g, blocks);
}

SimplicialComplex clique_whisker(const SimplicialComplex& g,
                                 const std::vector<VertexMask>& blocks,
                                 bool allow_empty) {
  if (!g.is_graph()) throw std::invalid_argument("whiskering needs a graph");
  validate_blocks(g, blocks, allow_empty);
  auto adj = g.adjacency();
  for (const VertexMask b : blocks) {
    for (int v : support_vector({b})) {
      VertexMask rest = b & ~(VertexMask{1} << v);
      if (rest & ~adj[v])
        throw std::invalid_argument("partition block is not a clique");
    }
  }
  return whisker_blocks(g, blocks);
}

SimplicialComplex sunlet(int n) {
  if (n < 3) throw std::invalid_argument("sunlet needs n >= 3");
  auto cycle = cycle_graph(n);
  std::vector<VertexMask> singletons;
  for (int i = 0; i < n; ++i) singletons.push_back(VertexMask{1} << i);
  auto g = partition_whisker(cycle, singletons);
  g.provenance.family = "sunlet";
  g.provenance.n = n;
  return g;
}

SimplicialComplex multiwhisker(const SimplicialComplex& g,
                               const std::vector<int>& counts) {
  if (!g.is_graph()) throw std::invalid_argument("whiskering needs a graph");
  int n = g.vertices.size();
  if (static_cast<int>(counts.size()) != n)
    throw std::invalid_argument("need one whisker count per vertex");
  for (int k : counts)
    if (k < 1) throw std::invalid_argument("whisker count must be >= 1");

  SimplicialComplex out;
  out.vertices = g.vertices;
  std::vector<SqfMonomial> facets = g.facets;
  for (int i = 0; i < n; ++i) {
    for (int j = 1; j <= counts[i]; ++j) {
      int y = out.vertices.add("y" + std::to_string(i + 1) + "." +
                               std::to_string(j));
      facets.push_back(monomial_of({i, y}));
    }
  }
  out.facets = canonicalize_facets(std::move(facets));
  // A multiwhisker graph is the multigraft of its base by whisker facets.
  out.provenance.kind = ConstructionKind::grafted;
  out.provenance.base_count = n;
  return out;
}

namespace {

SimplicialComplex graft_impl(const SimplicialComplex& dx,
                             const GraftSpec& spec, bool multi) {
  int n = dx.vertices.size();
  if (n == 0) throw std::invalid_argument("cannot graft an empty vertex set");
  if (static_cast<int>(spec.fresh_counts.size()) != n)
    throw std::invalid_argument("graft spec must list every vertex of the base");

  SimplicialComplex out;
  out.vertices = dx.vertices;
  std::vector<SqfMonomial> facets = dx.facets;
  for (int i = 0; i < n; ++i) {
    const auto& per_facet = spec.fresh_counts[i];
    if (per_facet.empty())
      throw std::invalid_argument("no facet specified for vertex " +
                                  dx.vertices.names[i]);
    if (!multi && per_facet.size() != 1)
      throw std::invalid_argument("graft adds exactly one facet per vertex");
    for (size_t j = 0; j < per_facet.size(); ++j) {
      if (per_facet[j] < 1)
        throw std::invalid_argument(
            "added facet needs at least one fresh vertex (dimension >= 1)");
      std::vector<int> face{i};
      for (int k = 1; k <= per_facet[j]; ++k) {
        std::string label = dx.vertices.names[i] + "#w";
        if (multi) label += std::to_string(j + 1) + ".";
        label += std::to_string(k);
        face.push_back(out.vertices.add(label));
      }
      facets.push_back(monomial_of(face));
    }
  }
  out.facets = canonicalize_facets(std::move(facets));
  out.provenance.kind = ConstructionKind::grafted;
  out.provenance.base_count = n;
  return out;
}

}  // namespace

SimplicialComplex graft(const SimplicialComplex& dx, const GraftSpec& spec) {
  return graft_impl(dx, spec, /*multi=*/false);
}

SimplicialComplex multigraft(const SimplicialComplex& dx,
                             const GraftSpec& spec) {
  return graft_impl(dx, spec, /*multi=*/true);
}

std::string monomial_to_string(SqfMonomial m, const VertexTable& table) {
  std::string out;
  for (int v : support_vector(m)) {
    if (!out.empty()) out += "*";
    if (v >= table.size())
      throw std::invalid_argument("monomial outside ambient table");
    out += table.names[v];
  }
  return out;
}

std::vector<std::string> labels_of(SqfMonomial m, const VertexTable& table) {
  std::vector<std::string> out;
  for (int v : support_vector(m)) {
    if (v >= table.size())
      throw std::invalid_argument("monomial outside ambient table");
    out.push_back(table.names[v]);
  }
  return out;
}

SqfMonomial monomial_from_labels(const std::vector<std::string>& labels,
                                 const VertexTable& table) {
  SqfMonomial m;
  for (const auto& l : labels)
    m.support |= VertexMask{1} << table.ordinal(l);
  return m;
}

}  // namespace aracert
