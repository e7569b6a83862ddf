#include "aracert/sv.hpp"

#include <algorithm>
#include <stdexcept>

namespace aracert {

int SvPartition::exponent(SqfMonomial p) const {
  auto it = exponents.find(p.support);
  return it == exponents.end() ? 1 : it->second;
}

SvReport verify_sv_conditions(const SvPartition& part) {
  SvReport report;
  report.size = part.size();
  if (part.sets.empty()) {
    report.violations.push_back({"structure", -1, {}, {}});
    return report;
  }
  for (int i = 0; i < part.size(); ++i)
    if (part.sets[i].empty())
      report.violations.push_back({"structure", i, {}, {}});
  if (part.sets[0].size() != 1)
    report.violations.push_back({"ii", 0, {}, {}});

  // (iii): for p != p' in P_i there must be an earlier layer element
  // dividing pp'. Squarefree divisor into a product of squarefree
  // monomials means support inclusion into the union.
  for (int i = 1; i < part.size(); ++i) {
    const auto& layer = part.sets[i];
    for (std::size_t a = 0; a < layer.size(); ++a)
      for (std::size_t b = a + 1; b < layer.size(); ++b) {
        VertexMask product = layer[a].support | layer[b].support;
        bool found = false;
        for (int e = 0; e < i && !found; ++e)
          for (SqfMonomial d : part.sets[e])
            if ((d.support & ~product) == 0) {
              found = true;
              break;
            }
        if (!found)
          report.violations.push_back({"iii", i, layer[a], layer[b]});
      }
  }
  report.conditions_ok = report.violations.empty();
  return report;
}

RadicalCheck verify_radical_cover(const SvPartition& part,
                                  const MonomialIdeal& ideal) {
  if (!(part.ambient == ideal.ambient))
    throw std::invalid_argument("partition and ideal ambient tables differ");
  std::vector<SqfMonomial> pool;
  for (const auto& layer : part.sets)
    for (SqfMonomial p : layer) pool.push_back(p);
  std::sort(pool.begin(), pool.end(),
            [](SqfMonomial a, SqfMonomial b) { return a.support < b.support; });
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());

  RadicalCheck check;
  for (SqfMonomial g : ideal.generators) {
    bool covered = std::any_of(pool.begin(), pool.end(),
                               [&](SqfMonomial p) { return p.divides(g); });
    if (!covered) check.missing_generators.push_back(g);
  }
  for (SqfMonomial p : pool) {
    bool inside = std::any_of(
        ideal.generators.begin(), ideal.generators.end(),
        [&](SqfMonomial g) { return g.divides(p); });
    if (!inside) check.foreign_monomials.push_back(p);
  }
  check.ok = check.missing_generators.empty() && check.foreign_monomials.empty();
  return check;
}

std::vector<QPolynomial> sv_generators(const SvPartition& part) {
  std::vector<QPolynomial> qs;
  for (const auto& layer : part.sets) {
    QPolynomial q;
    for (SqfMonomial p : layer) q.terms.emplace_back(p, part.exponent(p));
    qs.push_back(std::move(q));
  }
  return qs;
}

std::string render(const QPolynomial& q, const VertexTable& table) {
  std::string out;
  for (const auto& [monomial, exponent] : q.terms) {
    if (!out.empty()) out += " + ";
    std::string term;
    for (int v : support_vector(monomial)) {
      if (!term.empty()) term += "*";
      term += table.names[v];
      if (exponent > 1) term += "^" + std::to_string(exponent);
    }
    out += term;
  }
  return out;
}

namespace {

void sort_layers(SvPartition& part) {
  for (auto& layer : part.sets)
    std::sort(layer.begin(), layer.end(), lex_less);
}

}  // namespace

SvPartition sunlet_sv(int n) {
  if (n < 3) throw std::invalid_argument("sunlet needs n >= 3");
  SvPartition part;
  part.ambient = sunlet(n).vertices;
  // 1-based helpers over the sunlet labels x1..xn, y1..yn
  auto xx = [&](int i, int j) { return monomial_of({i - 1, j - 1}); };
  auto xy = [&](int i) { return monomial_of({i - 1, n + i - 1}); };
  auto xyxy = [&](int i, int j) {
    return monomial_of({i - 1, n + i - 1, j - 1, n + j - 1});
  };

  auto& P = part.sets;
  if (n == 3) {
    P = {{xx(1, 2)}, {xx(1, 3), xx(2, 3)}, {xy(1), xy(2), xy(3)}};
  } else if (n == 4) {
    P = {{xx(1, 2)},
         {xx(1, 4), xx(2, 3)},
         {xy(1), xy(2), xx(3, 4)},
         {xy(3), xy(4)}};
  } else if (n == 5) {
    P = {{xx(1, 2)},
         {xx(1, 5), xx(2, 3)},
         {xy(1), xx(4, 5)},
         {xy(2), xx(3, 4), xyxy(3, 5)},
         {xy(3), xy(4), xy(5)}};
  } else {
    P.push_back({xx(1, 2)});
    P.push_back({xx(1, n), xx(2, 3)});
    for (int i = 2; i <= n - 4; ++i) P.push_back({xy(i), xx(i + 1, i + 2)});
    P.push_back({xy(1), xx(n - 1, n)});
    P.push_back({xy(n - 3), xx(n - 2, n - 1), xyxy(n - 2, n)});
    P.push_back({xy(n - 2), xy(n - 1), xy(n)});
  }
  sort_layers(part);
  return part;
}

SvPartition multiwhisker_cycle_sv(int n, int k) {
  if (n < 3) throw std::invalid_argument("multiwhisker cycle needs n >= 3");
  if (k < 1) throw std::invalid_argument("whisker count must be >= 1");
  SvPartition part;
  part.ambient =
      multiwhisker(cycle_graph(n), std::vector<int>(n, k)).vertices;
  // labels: x1..xn then y<i>.<j> grouped by base vertex
  auto xx = [&](int i, int j) { return monomial_of({i - 1, j - 1}); };
  auto yord = [&](int i, int j) { return n + (i - 1) * k + (j - 1); };
  auto xy = [&](int i, int j) { return monomial_of({i - 1, yord(i, j)}); };
  auto xyxy = [&](int i, int j, int w) {
    return monomial_of({i - 1, yord(i, w), j - 1, yord(j, w)});
  };

  auto& P = part.sets;
  if (n == 3) {
    P.push_back({xx(1, 2)});
    P.push_back({xx(1, 3), xx(2, 3)});
    for (int j = 1; j <= k; ++j)
      P.push_back({xy(1, j), xy(2, j), xy(3, j)});
  } else {
    // base layers: the sunlet partition with y_i read as y_{i,1}
    auto xy1 = [&](int i) { return xy(i, 1); };
    auto xyxy1 = [&](int i, int j) { return xyxy(i, j, 1); };
    if (n == 4) {
      P = {{xx(1, 2)},
           {xx(1, 4), xx(2, 3)},
           {xy1(1), xy1(2), xx(3, 4)},
           {xy1(3), xy1(4)}};
    } else if (n == 5) {
      P = {{xx(1, 2)},
           {xx(1, 5), xx(2, 3)},
           {xy1(1), xx(4, 5)},
           {xy1(2), xx(3, 4), xyxy1(3, 5)},
           {xy1(3), xy1(4), xy1(5)}};
    } else {
      P.push_back({xx(1, 2)});
      P.push_back({xx(1, n), xx(2, 3)});
      for (int i = 2; i <= n - 4; ++i)
        P.push_back({xy1(i), xx(i + 1, i + 2)});
      P.push_back({xy1(1), xx(n - 1, n)});
      P.push_back({xy1(n - 3), xx(n - 2, n - 1), xyxy1(n - 2, n)});
      P.push_back({xy1(n - 2), xy1(n - 1), xy1(n)});
    }
    for (int j = 2; j <= k; ++j) {
      if (n % 2 == 0) {
        for (int b = 0; b < n / 2; ++b)
          P.push_back({xy(2 * b + 1, j), xy(2 * b + 2, j)});
      } else {
        for (int b = 0; b <= n / 2 - 2; ++b)
          P.push_back(
              {xy(2 * b + 1, j), xy(2 * b + 2, j), xyxy(n, 2 * b + 3, j)});
        P.push_back({xy(n - 2, j), xy(n - 1, j), xy(n, j)});
      }
    }
  }
  sort_layers(part);
  return part;
}

}  // namespace aracert
