#include <doctest.h>

#include "aracert/sv.hpp"
#include "testutil.hpp"

using namespace aracert;

namespace {

std::vector<std::string> rendered(const SvPartition& part) {
  std::vector<std::string> out;
  for (const auto& q : sv_generators(part)) out.push_back(render(q, part.ambient));
  return out;
}

SqfMonomial m(const SvPartition& part, const std::vector<std::string>& labels) {
  return monomial_from_labels(labels, part.ambient);
}

// Independent all-pairs re-check used to validate the checker on mutated
// partitions: conditions and the radical tie, evaluated from scratch.
bool naive_all_ok(const SvPartition& part, const MonomialIdeal& ideal) {
  if (part.sets.empty() || part.sets[0].size() != 1) return false;
  for (const auto& layer : part.sets)
    if (layer.empty()) return false;
  for (std::size_t i = 1; i < part.sets.size(); ++i)
    for (SqfMonomial p : part.sets[i])
      for (SqfMonomial q : part.sets[i]) {
        if (p == q) continue;
        bool found = false;
        for (std::size_t e = 0; e < i && !found; ++e)
          for (SqfMonomial d : part.sets[e])
            if (d.divides({p.support | q.support})) {
              found = true;
              break;
            }
        if (!found) return false;
      }
  for (SqfMonomial g : ideal.generators) {
    bool hit = false;
    for (const auto& layer : part.sets)
      for (SqfMonomial p : layer)
        if (p.divides(g)) hit = true;
    if (!hit) return false;
  }
  for (const auto& layer : part.sets)
    for (SqfMonomial p : layer) {
      bool inside = false;
      for (SqfMonomial g : ideal.generators)
        if (g.divides(p)) inside = true;
      if (!inside) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("sunlet partitions satisfy the lemma conditions") {
  CHECK(verify_sv_conditions(sunlet_sv(3)).conditions_ok);

  auto r6 = verify_sv_conditions(sunlet_sv(6));
  CHECK(r6.conditions_ok);
  CHECK(r6.size == 6);

  CHECK(sunlet_sv(3).size() == 3);
  auto r7 = verify_sv_conditions(sunlet_sv(7));
  CHECK(r7.conditions_ok);
  CHECK(r7.size == 7);

  // the degree-4 monomial sits in P_3 for n = 5
  auto p5 = sunlet_sv(5);
  bool found = false;
  for (SqfMonomial p : p5.sets[3])
    if (p.degree() == 4) found = true;
  CHECK(found);
}

TEST_CASE("a broken partition is reported with all witness pairs") {
  auto part = sunlet_sv(3);
  // move x2x3 from P_1 into P_2
  SqfMonomial moved = m(part, {"x2", "x3"});
  auto& p1 = part.sets[1];
  p1.erase(std::find(p1.begin(), p1.end(), moved));
  part.sets[2].push_back(moved);
  std::sort(part.sets[2].begin(), part.sets[2].end(), lex_less);

  auto report = verify_sv_conditions(part);
  CHECK_FALSE(report.conditions_ok);
  REQUIRE(report.violations.size() == 3);
  CHECK(report.violations[0].a == m(part, {"x2", "x3"}));
  CHECK(report.violations[0].b == m(part, {"x2", "y2"}));
  CHECK(report.violations[1].a == m(part, {"x2", "x3"}));
  CHECK(report.violations[1].b == m(part, {"x3", "y3"}));
  CHECK(report.violations[2].a == m(part, {"x2", "y2"}));
  CHECK(report.violations[2].b == m(part, {"x3", "y3"}));
  for (const auto& v : report.violations) {
    CHECK(v.condition == "iii");
    CHECK(v.set_index == 2);
  }
}

TEST_CASE("radical cover") {
  CHECK(verify_radical_cover(sunlet_sv(6), edge_ideal(sunlet(6))).ok);

  auto part = sunlet_sv(3);
  auto ideal = edge_ideal(sunlet(3));
  SqfMonomial whisker = m(part, {"x3", "y3"});
  auto& last = part.sets[2];
  last.erase(std::find(last.begin(), last.end(), whisker));
  auto check = verify_radical_cover(part, ideal);
  CHECK_FALSE(check.ok);
  REQUIRE(check.missing_generators.size() == 1);
  CHECK(check.missing_generators[0] == whisker);

  // a monomial no generator divides, on a shared extended ambient
  auto labels = sunlet(3).vertices.names;
  labels.push_back("x4");
  std::vector<std::vector<std::string>> edges;
  for (SqfMonomial f : sunlet(3).facets)
    edges.push_back(labels_of(f, sunlet(3).vertices));
  auto extended = build_complex(labels, edges);
  auto ideal_ext = facet_ideal(extended);
  SvPartition foreign = sunlet_sv(3);
  foreign.ambient = extended.vertices;
  foreign.sets[1].push_back(m(foreign, {"x1", "x4"}));
  auto fcheck = verify_radical_cover(foreign, ideal_ext);
  CHECK_FALSE(fcheck.ok);
  REQUIRE(fcheck.foreign_monomials.size() == 1);
  CHECK(fcheck.foreign_monomials[0] == m(foreign, {"x1", "x4"}));

  CHECK_THROWS_AS(verify_radical_cover(sunlet_sv(3), edge_ideal(sunlet(4))),
                  std::invalid_argument);
}

TEST_CASE("q-lists render exactly") {
  CHECK(rendered(sunlet_sv(3)) ==
        std::vector<std::string>{"x1*x2", "x1*x3 + x2*x3",
                                 "x1*y1 + x2*y2 + x3*y3"});
  CHECK(rendered(sunlet_sv(4)) ==
        std::vector<std::string>{"x1*x2", "x1*x4 + x2*x3",
                                 "x1*y1 + x2*y2 + x3*x4",
                                 "x3*y3 + x4*y4"});

  SvPartition singleton;
  singleton.ambient = make_table({"x1", "x2"});
  singleton.sets = {{monomial_of({0, 1})}};
  CHECK(rendered(singleton) == std::vector<std::string>{"x1*x2"});

  singleton.exponents[monomial_of({0, 1}).support] = 2;
  CHECK(rendered(singleton) == std::vector<std::string>{"x1^2*x2^2"});
}

TEST_CASE("multiwhisker cycle partitions") {
  for (int k : {1, 2, 3}) {
    auto part = multiwhisker_cycle_sv(3, k);
    CHECK(part.size() == 2 + k);
    for (int j = 1; j <= k; ++j) {
      auto qs = rendered(part);
      std::string sj = std::to_string(j);
      CHECK(qs[1 + j] ==
            "x1*y1." + sj + " + x2*y2." + sj + " + x3*y3." + sj);
    }
  }

  CHECK(multiwhisker_cycle_sv(4, 2).size() == 6);

  auto odd = multiwhisker_cycle_sv(5, 2);
  bool has_product_term = false;
  for (int i = 5; i < odd.size(); ++i)
    for (SqfMonomial p : odd.sets[i])
      if (p.degree() == 4) has_product_term = true;
  CHECK(has_product_term);

  CHECK_THROWS_AS(multiwhisker_cycle_sv(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(multiwhisker_cycle_sv(3, 0), std::invalid_argument);
}

TEST_CASE("paper partitions verify across the family grid") {
  for (int n = 3; n <= 12; ++n) {
    auto part = sunlet_sv(n);
    CHECK(part.size() == n);
    CHECK(verify_sv_conditions(part).conditions_ok);
    CHECK(verify_radical_cover(part, edge_ideal(sunlet(n))).ok);
  }
  for (int n = 3; n <= 9; ++n)
    for (int k = 1; k <= 3; ++k) {
      auto part = multiwhisker_cycle_sv(n, k);
      CHECK(part.size() == (n + 1) / 2 + (n / 2) * k);
      CHECK(verify_sv_conditions(part).conditions_ok);
      auto g = multiwhisker(cycle_graph(n), std::vector<int>(n, k));
      CHECK(verify_radical_cover(part, edge_ideal(g)).ok);
    }
}

TEST_CASE("checker matches the naive re-check on random mutations") {
  std::mt19937_64 rng(53);
  auto ideal = edge_ideal(sunlet(5));
  for (int trial = 0; trial < 200; ++trial) {
    auto part = sunlet_sv(5);
    int from = testutil::rand_int(rng, 0, part.size() - 1);
    if (part.sets[from].empty()) continue;
    int at = testutil::rand_int(
        rng, 0, static_cast<int>(part.sets[from].size()) - 1);
    int to = testutil::rand_int(rng, 0, part.size() - 1);
    if (to == from) continue;
    SqfMonomial moved = part.sets[from][at];
    part.sets[from].erase(part.sets[from].begin() + at);
    part.sets[to].push_back(moved);
    std::sort(part.sets[to].begin(), part.sets[to].end(), lex_less);

    auto report = verify_sv_conditions(part);
    bool radical_ok = verify_radical_cover(part, ideal).ok;
    bool checker_ok = report.conditions_ok && radical_ok;
    CHECK(checker_ok == naive_all_ok(part, ideal));
  }
}

TEST_CASE("exponents never change a verdict") {
  std::mt19937_64 rng(59);
  for (int n : {3, 5, 6}) {
    auto plain = sunlet_sv(n);
    auto weighted = plain;
    for (const auto& layer : weighted.sets)
      for (SqfMonomial p : layer)
        weighted.exponents[p.support] = testutil::rand_int(rng, 1, 4);
    auto ideal = edge_ideal(sunlet(n));
    CHECK(verify_sv_conditions(plain).conditions_ok ==
          verify_sv_conditions(weighted).conditions_ok);
    CHECK(verify_radical_cover(plain, ideal).ok ==
          verify_radical_cover(weighted, ideal).ok);
  }
}
