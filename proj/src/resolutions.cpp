#include "aracert/resolutions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <tuple>

namespace aracert {

namespace {

void validate_symbol(const GeneratorOrdering& ord, const Symbol& sym) {
  if (sym.empty()) throw std::invalid_argument("empty symbol");
  int prev = -1;
  for (int i : sym) {
    if (i <= prev)
      throw std::invalid_argument("symbol indices must be strictly increasing");
    if (i < 0 || i >= ord.size())
      throw std::invalid_argument("symbol index out of range");
    prev = i;
  }
}

std::vector<int> identity_order(std::size_t mu) {
  std::vector<int> order(mu);
  std::iota(order.begin(), order.end(), 0);
  return order;
}

}  // namespace

GeneratorOrdering canonical_ordering(const MonomialIdeal& ideal) {
  return {ideal, identity_order(ideal.generators.size())};
}

GeneratorOrdering whisker_ordering(const MonomialIdeal& ideal) {
  if (ideal.provenance.kind != ConstructionKind::whiskered)
    throw std::invalid_argument(
        "whisker ordering needs whisker construction metadata");
  int base = ideal.provenance.base_count;
  auto key = [&](int gi) {
    auto vs = support_vector(ideal.generators[gi]);
    if (vs.size() != 2)
      throw std::invalid_argument("whisker ordering needs an edge ideal");
    int a = vs[0], b = vs[1];
    if (b < base) return std::tuple(a, 0, b);  // base-base edge
    if (a >= base)
      throw std::invalid_argument("edge with no base endpoint");
    return std::tuple(a, 1, b);  // base-whisker edge
  };
  auto order = identity_order(ideal.generators.size());
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return key(i) < key(j); });
  return {ideal, order};
}

GeneratorOrdering whisker_ordering(const SimplicialComplex& g) {
  return whisker_ordering(edge_ideal(g));
}

GeneratorOrdering lex_ordering(const MonomialIdeal& ideal) {
  if (ideal.provenance.kind != ConstructionKind::grafted)
    throw std::invalid_argument(
        "lex ordering needs graft construction metadata");
  auto order = identity_order(ideal.generators.size());
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    return lex_less(ideal.generators[i], ideal.generators[j]);
  });
  return {ideal, order};
}

GeneratorOrdering lex_ordering(const SimplicialComplex& dx) {
  return lex_ordering(facet_ideal(dx));
}

SqfMonomial symbol_lcm(const GeneratorOrdering& ord, const Symbol& sym) {
  validate_symbol(ord, sym);
  SqfMonomial m;
  for (int i : sym) m = lcm(m, ord.gen(i));
  return m;
}

bool is_admissible(const GeneratorOrdering& ord, const Symbol& sym) {
  validate_symbol(ord, sym);
  int s = static_cast<int>(sym.size());
  if (s == 1) return true;
  // suffix[t] = lcm(u_{i_t},...,u_{i_s})
  std::vector<SqfMonomial> suffix(s);
  suffix[s - 1] = ord.gen(sym[s - 1]);
  for (int t = s - 2; t >= 0; --t)
    suffix[t] = lcm(ord.gen(sym[t]), suffix[t + 1]);
  for (int t = 0; t + 1 < s; ++t)
    for (int q = 0; q < sym[t]; ++q)
      if (ord.gen(q).divides(suffix[t])) return false;
  return true;
}

namespace {

// DFS over admissible symbols, built right to left: each state is an
// admissible symbol; prepending head h only needs the new head condition
// (no u_q with q < h divides the extended lcm).
struct SymbolSearch {
  const GeneratorOrdering& ord;
  long budget;
  long nodes = 0;
  bool complete = true;
  bool enumerate_all;                 // no length pruning when set
  std::vector<SymbolEntry>* sink = nullptr;

  int best_len = 0;
  Symbol best;

  std::vector<int> stack;  // current symbol, last index first

  explicit SymbolSearch(const GeneratorOrdering& o, long b, bool all)
      : ord(o), budget(b), enumerate_all(all) {}

  bool head_ok(int h, SqfMonomial extended) const {
    for (int q = 0; q < h; ++q)
      if (ord.gen(q).divides(extended)) return false;
    return true;
  }

  void record() {
    Symbol sym(stack.rbegin(), stack.rend());
    if (sink) sink->push_back({sym, {}});
    int len = static_cast<int>(sym.size());
    if (len > best_len ||
        (len == best_len &&
         std::lexicographical_compare(sym.begin(), sym.end(), best.begin(),
                                      best.end()))) {
      best_len = len;
      best = std::move(sym);
    }
  }

  // head = smallest index currently in the symbol, lcm over the whole symbol
  void extend(int head, SqfMonomial current_lcm) {
    if (!complete) return;
    if (++nodes > budget) {
      complete = false;
      return;
    }
    record();
    for (int h = head - 1; h >= 0; --h) {
      // at most h further indices fit below h
      if (!enumerate_all &&
          static_cast<int>(stack.size()) + 1 + h < best_len)
        break;
      SqfMonomial extended = lcm(ord.gen(h), current_lcm);
      if (!head_ok(h, extended)) continue;
      stack.push_back(h);
      extend(h, extended);
      stack.pop_back();
      if (!complete) return;
    }
  }

  void run() {
    for (int a = ord.size() - 1; a >= 0; --a) {
      if (!enumerate_all && 1 + a < best_len) break;
      stack.assign(1, a);
      extend(a, ord.gen(a));
      if (!complete) return;
    }
  }
};

}  // namespace

MaxSymbolResult max_admissible_length(const GeneratorOrdering& ord,
                                      long node_budget) {
  if (node_budget < 1) throw std::invalid_argument("budget must be >= 1");
  if (ord.size() == 0) return {0, {}, true, 0};
  SymbolSearch search(ord, node_budget, /*all=*/false);
  search.run();
  return {search.best_len, search.best, search.complete, search.nodes};
}

std::vector<DiffTerm> taylor_differential(const GeneratorOrdering& ord,
                                          const Symbol& sym) {
  SqfMonomial full = symbol_lcm(ord, sym);
  std::vector<DiffTerm> terms;
  for (std::size_t j = 0; j < sym.size(); ++j) {
    SqfMonomial rest;
    for (std::size_t t = 0; t < sym.size(); ++t)
      if (t != j) rest = lcm(rest, ord.gen(sym[t]));
    terms.push_back({static_cast<int>(j), (j % 2 == 0) ? 1 : -1,
                     {full.support & ~rest.support}});
  }
  return terms;
}

LyubeznikResolution lyubeznik_resolution(const GeneratorOrdering& ord) {
  if (ord.size() > 24)
    throw std::invalid_argument(
        "full resolution capped at 24 generators");
  std::vector<SymbolEntry> entries;
  SymbolSearch search(ord, kDefaultBudget, /*all=*/true);
  search.sink = &entries;
  search.run();
  if (!search.complete)
    throw std::runtime_error("resolution enumeration exceeded node budget");

  LyubeznikResolution res{ord, {}};
  res.levels.resize(static_cast<std::size_t>(search.best_len));
  for (auto& e : entries) {
    e.differential = taylor_differential(ord, e.indices);
    res.levels[e.indices.size() - 1].push_back(std::move(e));
  }
  for (auto& level : res.levels)
    std::sort(level.begin(), level.end(),
              [](const SymbolEntry& a, const SymbolEntry& b) {
                return a.indices < b.indices;
              });
  return res;
}

ComplexCheck verify_complex(const LyubeznikResolution& res) {
  std::set<Symbol> all;
  for (const auto& level : res.levels)
    for (const auto& e : level) all.insert(e.indices);

  auto erase_at = [](const Symbol& sym, int pos) {
    Symbol sub = sym;
    sub.erase(sub.begin() + pos);
    return sub;
  };

  for (const auto& level : res.levels)
    for (const auto& e : level) {
      if (e.indices.size() < 2) continue;
      // deletion closure
      for (std::size_t j = 0; j < e.indices.size(); ++j)
        if (!all.count(erase_at(e.indices, static_cast<int>(j))))
          return {false, e.indices, "admissible set is not deletion-closed"};
      // double boundary cancels symbolically
      std::map<Symbol, std::map<VertexMask, long>> acc;
      for (const DiffTerm& t1 : e.differential) {
        Symbol sub = erase_at(e.indices, t1.delete_pos);
        for (const DiffTerm& t2 : taylor_differential(res.ordering, sub)) {
          Symbol target = erase_at(sub, t2.delete_pos);
          acc[target][t1.coeff.support | t2.coeff.support] +=
              t1.sign * t2.sign;
        }
      }
      for (const auto& [target, monomials] : acc)
        for (const auto& [mask, total] : monomials)
          if (total != 0)
            return {false, e.indices, "double boundary does not vanish"};
    }
  return {};
}

LLengthResult l_length(const MonomialIdeal& ideal, const LLengthOptions& opt) {
  std::size_t mu = ideal.generators.size();
  LLengthResult result;
  result.value = 0;
  if (mu == 0) {
    result.exact = true;
    return result;
  }

  long remaining = opt.budget;
  bool have_value = false;
  auto consider = [&](const std::vector<int>& order) {
    if (remaining <= 0) {
      result.complete = false;
      return;
    }
    auto res =
        max_admissible_length(GeneratorOrdering{ideal, order}, remaining);
    remaining -= res.nodes;
    ++result.orderings_tried;
    if (!res.complete) {
      result.complete = false;
      return;
    }
    if (!have_value || res.length < result.value) {
      have_value = true;
      result.value = res.length;
      result.best_order = order;
      result.witness = res.witness;
    }
  };

  switch (opt.strategy) {
    case OrderingStrategy::exhaustive: {
      if (mu > 9)
        throw std::invalid_argument(
            "exhaustive ordering search capped at 9 generators");
      std::vector<int> perm = identity_order(mu);
      do {
        consider(perm);
        if (!result.complete) break;
      } while (std::next_permutation(perm.begin(), perm.end()));
      result.exact = result.complete;
      break;
    }
    case OrderingStrategy::paper: {
      if (ideal.provenance.kind == ConstructionKind::none)
        throw std::invalid_argument(
            "paper ordering strategy needs construction metadata");
      GeneratorOrdering ord =
          ideal.provenance.kind == ConstructionKind::whiskered
              ? whisker_ordering(ideal)
              : lex_ordering(ideal);
      consider(ord.order);
      break;
    }
    case OrderingStrategy::random: {
      std::mt19937_64 rng(opt.seed);
      std::vector<int> perm = identity_order(mu);
      for (int i = 0; i < opt.samples && result.complete; ++i) {
        std::shuffle(perm.begin(), perm.end(), rng);
        consider(perm);
      }
      break;
    }
  }
  if (!have_value) result.complete = false;
  return result;
}

}  // namespace aracert
