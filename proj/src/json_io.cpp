#include "aracert/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

namespace aracert {

namespace {

json provenance_to_json(const Provenance& p) {
  json j;
  j["kind"] = p.kind == ConstructionKind::whiskered ? "whiskered" : "grafted";
  j["base_count"] = p.base_count;
  if (!p.family.empty()) {
    j["family"] = p.family;
    j["n"] = p.n;
    j["k"] = p.k;
  }
  return j;
}

Provenance provenance_from_json(const json& j) {
  Provenance p;
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "whiskered")
    p.kind = ConstructionKind::whiskered;
  else if (kind == "grafted")
    p.kind = ConstructionKind::grafted;
  else
    throw std::invalid_argument("unknown construction kind: " + kind);
  p.base_count = j.at("base_count").get<int>();
  if (j.contains("family")) {
    p.family = j.at("family").get<std::string>();
    p.n = j.value("n", 0);
    p.k = j.value("k", 0);
  }
  return p;
}

std::vector<std::string> string_list(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected a JSON array");
  std::vector<std::string> out;
  for (const auto& e : j) out.push_back(e.get<std::string>());
  return out;
}

json label_sets(const std::vector<SqfMonomial>& sets,
                const VertexTable& table) {
  json out = json::array();
  for (SqfMonomial m : sets) out.push_back(labels_of(m, table));
  return out;
}

}  // namespace

json complex_to_json(const SimplicialComplex& dx) {
  json j;
  j["vertices"] = dx.vertices.names;
  j["facets"] = label_sets(dx.facets, dx.vertices);
  if (dx.provenance.kind != ConstructionKind::none)
    j["construction"] = provenance_to_json(dx.provenance);
  return j;
}

SimplicialComplex complex_from_json(const json& j) {
  std::vector<std::vector<std::string>> facets;
  for (const auto& f : j.at("facets")) facets.push_back(string_list(f));
  auto dx = build_complex(string_list(j.at("vertices")), facets);
  if (j.contains("construction"))
    dx.provenance = provenance_from_json(j.at("construction"));
  return dx;
}

json ideal_to_json(const MonomialIdeal& ideal) {
  json j;
  j["vertices"] = ideal.ambient.names;
  j["generators"] = label_sets(ideal.generators, ideal.ambient);
  if (ideal.provenance.kind != ConstructionKind::none)
    j["construction"] = provenance_to_json(ideal.provenance);
  return j;
}

MonomialIdeal ideal_from_json(const json& j) {
  MonomialIdeal ideal;
  ideal.ambient = make_table(string_list(j.at("vertices")));
  std::vector<SqfMonomial> gens;
  for (const auto& g : j.at("generators")) {
    auto labels = string_list(g);
    if (labels.empty()) throw std::invalid_argument("empty generator");
    gens.push_back(monomial_from_labels(labels, ideal.ambient));
  }
  // reduce to the minimal generating set
  std::sort(gens.begin(), gens.end(),
            [](SqfMonomial a, SqfMonomial b) { return a.support < b.support; });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (SqfMonomial g : gens) {
    bool redundant = false;
    for (SqfMonomial d : gens)
      if (!(d == g) && d.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant) ideal.generators.push_back(g);
  }
  std::sort(ideal.generators.begin(), ideal.generators.end(), lex_less);
  if (j.contains("construction"))
    ideal.provenance = provenance_from_json(j.at("construction"));
  return ideal;
}

MonomialIdeal ideal_from_any_json(const json& j) {
  if (j.contains("facets")) return facet_ideal(complex_from_json(j));
  return ideal_from_json(j);
}

json covers_to_json(const CoverSummary& summary, const VertexTable& table) {
  json j;
  j["covers"] = label_sets(summary.covers, table);
  j["height"] = summary.height;
  j["bight"] = summary.bight;
  j["unmixed"] = summary.unmixed;
  return j;
}

json sv_to_json(const SvPartition& part) {
  json j;
  j["vertices"] = part.ambient.names;
  json sets = json::array();
  for (const auto& layer : part.sets) {
    json jl = json::array();
    for (SqfMonomial p : layer)
      jl.push_back(
          {{"m", labels_of(p, part.ambient)}, {"e", part.exponent(p)}});
    sets.push_back(jl);
  }
  j["sets"] = sets;
  return j;
}

SvPartition sv_from_json(const json& j,
                         const std::optional<VertexTable>& ambient) {
  SvPartition part;
  if (j.contains("vertices"))
    part.ambient = make_table(string_list(j.at("vertices")));
  else if (ambient)
    part.ambient = *ambient;
  else
    throw std::invalid_argument(
        "sv partition has no vertex table and none was supplied");
  for (const auto& jl : j.at("sets")) {
    std::vector<SqfMonomial> layer;
    for (const auto& je : jl) {
      SqfMonomial m =
          monomial_from_labels(string_list(je.at("m")), part.ambient);
      if (m.empty()) throw std::invalid_argument("empty sv monomial");
      int e = je.value("e", 1);
      if (e < 1) throw std::invalid_argument("sv exponent must be >= 1");
      layer.push_back(m);
      if (e != 1) part.exponents[m.support] = e;
    }
    std::sort(layer.begin(), layer.end(), lex_less);
    part.sets.push_back(std::move(layer));
  }
  return part;
}

GraftSpec graft_spec_from_json(const json& j, const SimplicialComplex& base) {
  GraftSpec spec;
  std::string mode = j.at("mode").get<std::string>();
  if (mode == "graft")
    spec.mode = GraftSpec::Mode::graft;
  else if (mode == "multigraft")
    spec.mode = GraftSpec::Mode::multigraft;
  else
    throw std::invalid_argument("graft spec mode must be graft or multigraft");
  spec.fresh_counts.assign(base.vertices.size(), {});
  for (const auto& [label, counts] : j.at("facets").items()) {
    int v = base.vertices.ordinal(label);  // throws for foreign vertices
    for (const auto& c : counts)
      spec.fresh_counts[v].push_back(c.get<int>());
  }
  return spec;
}

json graft_spec_to_json(const GraftSpec& spec, const SimplicialComplex& base) {
  json facets = json::object();
  for (std::size_t i = 0; i < spec.fresh_counts.size(); ++i)
    facets[base.vertices.names[i]] = spec.fresh_counts[i];
  return {{"mode", spec.mode == GraftSpec::Mode::graft ? "graft"
                                                       : "multigraft"},
          {"facets", facets}};
}

json resolution_to_json(const LyubeznikResolution& res) {
  const auto& ideal = res.ordering.ideal;
  json ordering = json::array();
  for (int pos = 0; pos < res.ordering.size(); ++pos)
    ordering.push_back(
        monomial_to_string(res.ordering.gen(pos), ideal.ambient));
  json levels = json::array();
  for (const auto& level : res.levels) {
    json jl = json::array();
    for (const auto& e : level) {
      json sym;
      json indices = json::array();
      for (int i : e.indices) indices.push_back(i + 1);  // 1-based outside
      sym["indices"] = indices;
      json diff = json::array();
      for (const DiffTerm& t : e.differential)
        diff.push_back(
            {{"delete_pos", t.delete_pos + 1},
             {"sign", t.sign},
             {"monomial", monomial_to_string(t.coeff, ideal.ambient)}});
      sym["differential"] = diff;
      jl.push_back(sym);
    }
    levels.push_back(jl);
  }
  return {{"ordering", ordering},
          {"length", res.length()},
          {"levels", levels}};
}

json certificate_to_json(const AraCertificate& cert) {
  const auto& table = cert.ideal.ambient;
  json j;
  j["ideal"] = {{"digest", cert.digest},
                {"generators", label_sets(cert.ideal.generators, table)}};
  j["lower"] = {{"bight", cert.covers.bight},
                {"cover", labels_of(cert.witness_cover, table)}};
  j["height"] = cert.covers.height;
  j["unmixed"] = cert.covers.unmixed;
  json uppers = json::array();
  for (const auto& ub : cert.uppers) {
    json ju;
    ju["kind"] = ub.kind;
    ju["value"] = ub.value;
    if (ub.kind == "lyubeznik") {
      json ordering = json::array();
      for (int gi : ub.order)
        ordering.push_back(monomial_to_string(
            cert.ideal.generators[static_cast<std::size_t>(gi)], table));
      ju["ordering"] = ordering;
      json witness = json::array();
      for (int i : ub.witness_symbol) witness.push_back(i + 1);
      ju["witness_symbol"] = witness;
    } else if (ub.partition) {
      ju["partition"] = sv_to_json(*ub.partition);
      ju["partition_digest"] = ub.digest;
      json qs = json::array();
      for (const auto& q : sv_generators(*ub.partition))
        qs.push_back(render(q, ub.partition->ambient));
      ju["q"] = qs;
    }
    uppers.push_back(ju);
  }
  j["uppers"] = uppers;
  j["ara_lower"] = cert.ara_lower;
  if (cert.ara_upper)
    j["ara_upper"] = *cert.ara_upper;
  else
    j["ara_upper"] = nullptr;
  j["equal"] = cert.equal;
  j["stci"] = cert.stci;
  j["exact"] = cert.exact;
  j["notes"] = cert.notes;
  return j;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return json::parse(in);
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace aracert
