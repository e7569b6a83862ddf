#include "aracert/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>

#include "aracert/json_io.hpp"

namespace aracert::cli {

namespace {

struct CommonOpts {
  std::string out;
  bool pretty = false;
  long budget = kDefaultBudget;
  std::uint64_t seed = 0;
  bool seed_set = false;
};

void add_common(CLI::App* sub, CommonOpts& c) {
  sub->add_option("--out", c.out, "write the JSON report to this file");
  sub->add_flag("--pretty", c.pretty, "print a human-readable summary");
  sub->add_option("--budget", c.budget, "search node budget")
      ->check(CLI::PositiveNumber);
  sub->add_option("--seed", c.seed, "seed for randomized strategies")
      ->each([&c](const std::string&) { c.seed_set = true; });
}

void emit(const json& j, const CommonOpts& c) {
  std::string text = j.dump(2) + "\n";
  if (!c.out.empty())
    write_text_file(c.out, text);
  else
    std::cout << text;
}

std::vector<VertexMask> parse_blocks(const std::vector<std::string>& specs,
                                     const VertexTable& table) {
  std::vector<VertexMask> blocks;
  for (const auto& spec : specs) {
    VertexMask block = 0;
    std::stringstream ss(spec);
    std::string label;
    while (std::getline(ss, label, ','))
      if (!label.empty())
        block |= VertexMask{1} << table.ordinal(label);
    blocks.push_back(block);
  }
  return blocks;
}

SvPartition paper_partition(const SimplicialComplex& dx) {
  const Provenance& p = dx.provenance;
  if (p.family == "sunlet") return sunlet_sv(p.n);
  if (p.family == "multiwhisker-cycle") return multiwhisker_cycle_sv(p.n, p.k);
  throw std::invalid_argument(
      "no named partition for this input; the file needs sunlet or "
      "multiwhisker-cycle construction metadata");
}

int cmd_family(const std::string& name, int n, int k,
               const std::string& base_path, int cycle_n,
               const std::vector<std::string>& block_specs, bool allow_empty,
               const std::string& spec_path, const CommonOpts& c) {
  auto load_base = [&]() -> SimplicialComplex {
    if (!base_path.empty())
      return complex_from_json(read_json_file(base_path));
    if (cycle_n > 0) return cycle_graph(cycle_n);
    throw std::invalid_argument("this family needs --base or --cycle");
  };

  SimplicialComplex dx;
  if (name == "sunlet") {
    dx = sunlet(n);
  } else if (name == "multiwhisker-cycle") {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    dx = multiwhisker(cycle_graph(n), std::vector<int>(n, k));
    dx.provenance.family = "multiwhisker-cycle";
    dx.provenance.n = n;
    dx.provenance.k = k;
  } else if (name == "clique-whisker") {
    auto base = load_base();
    dx = clique_whisker(base, parse_blocks(block_specs, base.vertices),
                        allow_empty);
  } else if (name == "graft" || name == "multigraft") {
    auto base = load_base();
    if (spec_path.empty())
      throw std::invalid_argument("grafting needs --spec <graft-spec.json>");
    auto spec = graft_spec_from_json(read_json_file(spec_path), base);
    dx = name == "graft" ? graft(base, spec) : multigraft(base, spec);
  } else {
    throw std::invalid_argument("unknown family: " + name);
  }

  emit(complex_to_json(dx), c);
  std::cout << "vertices: " << dx.vertices.size()
            << ", facets: " << dx.facets.size() << "\n";
  return 0;
}

int cmd_ideal(const std::string& input, const CommonOpts& c) {
  auto dx = complex_from_json(read_json_file(input));
  emit(ideal_to_json(facet_ideal(dx)), c);
  return 0;
}

int cmd_covers(const std::string& input, const CommonOpts& c) {
  auto dx = complex_from_json(read_json_file(input));
  auto summary = cover_summary(dx);
  emit(covers_to_json(summary, dx.vertices), c);
  if (c.pretty) {
    std::cout << summary.covers.size() << " minimal covers, height "
              << summary.height << ", bight " << summary.bight
              << (summary.unmixed ? ", unmixed" : ", not unmixed") << "\n";
    for (SqfMonomial cover : summary.covers) {
      std::cout << "  {";
      auto labels = labels_of(cover, dx.vertices);
      for (std::size_t i = 0; i < labels.size(); ++i)
        std::cout << (i ? ", " : " ") << labels[i];
      std::cout << " }\n";
    }
  }
  return 0;
}

int cmd_resolution(const std::string& input, const std::string& ordering,
                   int samples, const CommonOpts& c) {
  auto ideal = ideal_from_any_json(read_json_file(input));

  if (ordering == "exhaustive" || ordering == "random") {
    LLengthOptions opt;
    opt.budget = c.budget;
    if (ordering == "exhaustive") {
      opt.strategy = OrderingStrategy::exhaustive;
    } else {
      if (!c.seed_set)
        throw std::invalid_argument("--ordering random needs --seed");
      opt.strategy = OrderingStrategy::random;
      opt.samples = samples;
      opt.seed = c.seed;
    }
    auto res = l_length(ideal, opt);
    if (!res.complete)
      throw std::runtime_error("ordering search truncated by budget");
    json j;
    j["strategy"] = ordering;
    j["value"] = res.value;
    j["exact"] = res.exact;
    j["orderings_tried"] = res.orderings_tried;
    json best = json::array();
    for (int gi : res.best_order)
      best.push_back(monomial_to_string(
          ideal.generators[static_cast<std::size_t>(gi)], ideal.ambient));
    j["ordering"] = best;
    emit(j, c);
    std::cout << "l-length " << (res.exact ? "= " : "<= ") << res.value
              << " over " << res.orderings_tried << " orderings\n";
    return 0;
  }

  GeneratorOrdering ord = ordering == "whisker" ? whisker_ordering(ideal)
                          : ordering == "lex"   ? lex_ordering(ideal)
                          : ordering == "canonical"
                              ? canonical_ordering(ideal)
                              : throw std::invalid_argument(
                                    "unknown ordering: " + ordering);
  auto res = lyubeznik_resolution(ord);
  auto check = verify_complex(res);
  json j = resolution_to_json(res);
  j["verified"] = check.ok;
  if (!check.ok) j["verify_failure"] = check.reason;
  json witness = json::array();
  if (res.length() > 0)
    for (int i : res.levels.back().front().indices) witness.push_back(i + 1);
  j["witness_symbol"] = witness;
  emit(j, c);
  std::cout << "lambda-witness length " << res.length() << ", d o d = 0 "
            << (check.ok ? "verified" : "FAILED") << "\n";
  return check.ok ? 0 : 1;
}

int cmd_sv_check(const std::string& sv_path, const std::string& ideal_path,
                 const CommonOpts& c) {
  auto ideal = ideal_from_any_json(read_json_file(ideal_path));
  auto part = sv_from_json(read_json_file(sv_path), ideal.ambient);

  auto report = verify_sv_conditions(part);
  auto radical = verify_radical_cover(part, ideal);  // throws on mismatch
  report.radical_cover_ok = radical.ok;

  std::cout << "condition (i): satisfied (P is the union of the layers)\n";
  auto verdict = [&](const char* cond) {
    for (const auto& v : report.violations)
      if (v.condition == cond) return false;
    return true;
  };
  std::cout << "condition (ii): " << (verdict("ii") ? "ok" : "VIOLATED")
            << "\n";
  std::cout << "condition (iii): " << (verdict("iii") ? "ok" : "VIOLATED")
            << "\n";
  for (const auto& v : report.violations) {
    std::cout << "  violation (" << v.condition << ") in P_" << v.set_index;
    if (v.condition == "iii")
      std::cout << ": pair (" << monomial_to_string(v.a, part.ambient) << ", "
                << monomial_to_string(v.b, part.ambient) << ")";
    std::cout << "\n";
  }
  std::cout << "radical cover: " << (radical.ok ? "ok" : "FAILED") << "\n";
  for (SqfMonomial m : radical.missing_generators)
    std::cout << "  generator not reached: "
              << monomial_to_string(m, ideal.ambient) << "\n";
  for (SqfMonomial m : radical.foreign_monomials)
    std::cout << "  monomial outside the radical: "
              << monomial_to_string(m, ideal.ambient) << "\n";

  json j;
  j["conditions_ok"] = report.conditions_ok;
  j["radical_cover_ok"] = radical.ok;
  j["size"] = report.size;
  json violations = json::array();
  for (const auto& v : report.violations) {
    json jv;
    jv["condition"] = v.condition;
    jv["set"] = v.set_index;
    if (v.condition == "iii")
      jv["pair"] = {monomial_to_string(v.a, part.ambient),
                    monomial_to_string(v.b, part.ambient)};
    violations.push_back(jv);
  }
  for (SqfMonomial m : radical.missing_generators)
    violations.push_back({{"condition", "radical-missing"},
                          {"monomial", monomial_to_string(m, ideal.ambient)}});
  for (SqfMonomial m : radical.foreign_monomials)
    violations.push_back({{"condition", "radical-foreign"},
                          {"monomial", monomial_to_string(m, ideal.ambient)}});
  j["violations"] = violations;
  if (!c.out.empty()) write_text_file(c.out, j.dump(2) + "\n");

  return report.conditions_ok && radical.ok ? 0 : 1;
}

int cmd_certify(const std::string& input, const std::string& sv_arg,
                const std::string& lyu_arg, bool lyu_exhaustive,
                const CommonOpts& c) {
  auto dx = complex_from_json(read_json_file(input));

  CertifyOptions opt;
  opt.budget = c.budget;
  opt.lyu_exhaustive = lyu_exhaustive;
  if (!sv_arg.empty()) {
    if (sv_arg == "paper")
      opt.sv = paper_partition(dx);
    else
      opt.sv = sv_from_json(read_json_file(sv_arg), dx.vertices);
  }
  if (!lyu_arg.empty()) {
    if (lyu_arg == "whisker")
      opt.lyu = LyuSource::whisker;
    else if (lyu_arg == "lex")
      opt.lyu = LyuSource::lex;
    else if (lyu_arg == "canonical")
      opt.lyu = LyuSource::canonical;
    else
      throw std::invalid_argument("unknown --lyu source: " + lyu_arg);
  }

  auto cert = certify(dx, opt);
  emit(certificate_to_json(cert), c);
  if (c.pretty) {
    std::cout << "lower bound (bight): " << cert.ara_lower << "\n";
    if (cert.ara_upper)
      std::cout << "upper bound: " << *cert.ara_upper << "\n";
    else
      std::cout << "upper bound: none (no upper strategy succeeded)\n";
    std::cout << "equal: " << (cert.equal ? "yes" : "no")
              << ", stci: " << (cert.stci ? "yes" : "no")
              << ", exact: " << (cert.exact ? "yes" : "no") << "\n";
    for (const auto& note : cert.notes) std::cout << "note: " << note << "\n";
  }
  return cert.equal ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args) {
  CLI::App app{"exact arithmetical-rank certificates for squarefree "
               "monomial ideals of whiskered and grafted complexes"};
  app.require_subcommand(1);

  CommonOpts common;

  auto* fam = app.add_subcommand(
      "family", "construct a named family and write its complex file");
  std::string fam_name;
  int fam_n = 0, fam_k = 1, fam_cycle = 0;
  std::string fam_base, fam_spec;
  std::vector<std::string> fam_blocks;
  bool fam_allow_empty = false;
  fam->add_option("name", fam_name,
                  "sunlet | multiwhisker-cycle | clique-whisker | graft | "
                  "multigraft")
      ->required();
  fam->add_option("--n", fam_n, "family size parameter");
  fam->add_option("--k", fam_k, "whiskers per vertex");
  fam->add_option("--base", fam_base, "base complex file");
  fam->add_option("--cycle", fam_cycle, "use the cycle C_n as the base");
  fam->add_option("--block", fam_blocks,
                  "clique block as comma-separated labels (repeatable)");
  fam->add_flag("--allow-empty", fam_allow_empty,
                "accept empty clique blocks (isolated whisker vertex)");
  fam->add_option("--spec", fam_spec, "graft spec file");
  add_common(fam, common);

  auto* ideal_cmd =
      app.add_subcommand("ideal", "facet ideal of a complex file");
  std::string ideal_input;
  ideal_cmd->add_option("input", ideal_input, "complex file")->required();
  add_common(ideal_cmd, common);

  auto* covers_cmd =
      app.add_subcommand("covers", "minimal vertex covers, height, bight");
  std::string covers_input;
  covers_cmd->add_option("input", covers_input, "complex file")->required();
  add_common(covers_cmd, common);

  auto* res_cmd = app.add_subcommand(
      "resolution", "Lyubeznik resolution and admissible-symbol search");
  std::string res_input, res_ordering = "canonical";
  int res_samples = 64;
  res_cmd->add_option("input", res_input, "complex or ideal file")
      ->required();
  res_cmd->add_option(
      "--ordering", res_ordering,
      "canonical | whisker | lex | exhaustive | random");
  res_cmd->add_option("--samples", res_samples,
                      "orderings to try with --ordering random");
  add_common(res_cmd, common);

  auto* sv_cmd = app.add_subcommand(
      "sv-check", "verify a partition against an ideal");
  std::string sv_file, sv_ideal;
  sv_cmd->add_option("partition", sv_file, "sv partition file")->required();
  sv_cmd->add_option("ideal", sv_ideal, "ideal or complex file")->required();
  add_common(sv_cmd, common);

  auto* cert_cmd = app.add_subcommand(
      "certify", "lower/upper bound certificate with equality verdict");
  std::string cert_input, cert_sv, cert_lyu;
  bool cert_exhaustive = false;
  cert_cmd->add_option("input", cert_input, "complex file")->required();
  cert_cmd->add_option("--sv", cert_sv,
                       "'paper' for the named family partition, or a file");
  cert_cmd->add_option("--lyu", cert_lyu, "whisker | lex | canonical");
  cert_cmd->add_flag("--lyu-exhaustive", cert_exhaustive,
                     "minimize over all generator orderings (<= 9 gens)");
  add_common(cert_cmd, common);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (fam->parsed())
      return cmd_family(fam_name, fam_n, fam_k, fam_base, fam_cycle,
                        fam_blocks, fam_allow_empty, fam_spec, common);
    if (ideal_cmd->parsed()) return cmd_ideal(ideal_input, common);
    if (covers_cmd->parsed()) return cmd_covers(covers_input, common);
    if (res_cmd->parsed())
      return cmd_resolution(res_input, res_ordering, res_samples, common);
    if (sv_cmd->parsed()) return cmd_sv_check(sv_file, sv_ideal, common);
    if (cert_cmd->parsed())
      return cmd_certify(cert_input, cert_sv, cert_lyu, cert_exhaustive,
                         common);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace aracert::cli
