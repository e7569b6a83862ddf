// Taylor symbols and differentials, L-admissibility, Lyubeznik resolutions,
// maximum admissible-symbol search, L-length, and the two special generator
// orderings used by the whisker and graft certificates.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "aracert/complexes.hpp"

namespace aracert {

inline constexpr long kDefaultBudget = 20'000'000;

/// An order u_1 < u_2 < ... < u_mu on the minimal generators.
struct GeneratorOrdering {
  MonomialIdeal ideal;
  std::vector<int> order;  // order[pos] = generator index at position pos

  int size() const { return static_cast<int>(order.size()); }
  SqfMonomial gen(int pos) const {
    return ideal.generators[static_cast<std::size_t>(order[pos])];
  }
};

/// A Taylor symbol e_{i_1...i_s}: strictly increasing 0-based positions
/// into the ordering.
using Symbol = std::vector<int>;

/// Generators in their canonical (lex) listing order.
GeneratorOrdering canonical_ordering(const MonomialIdeal& ideal);

/// The ordering used by the whisker certificate: edges sorted by
/// (base endpoint, base-base before base-whisker, second endpoint).
/// Requires a partition- or clique-whiskered input.
GeneratorOrdering whisker_ordering(const MonomialIdeal& ideal);
GeneratorOrdering whisker_ordering(const SimplicialComplex& g);

/// Lexicographic ordering of the generators as increasing variable
/// sequences. Requires a grafted input.
GeneratorOrdering lex_ordering(const MonomialIdeal& ideal);
GeneratorOrdering lex_ordering(const SimplicialComplex& dx);

SqfMonomial symbol_lcm(const GeneratorOrdering& ord, const Symbol& sym);

/// Exact evaluation of the admissibility condition: no generator u_q with
/// q < i_t divides lcm(u_{i_t},...,u_{i_s}), for every suffix start t < s.
/// Length-1 symbols are always admissible.
bool is_admissible(const GeneratorOrdering& ord, const Symbol& sym);

struct MaxSymbolResult {
  int length = 0;
  Symbol witness;        // lexicographically least among the longest
  bool complete = true;  // false iff the node budget ran out
  long nodes = 0;
};

/// Maximum size of an admissible symbol, by right-to-left depth-first
/// extension with incremental suffix lcms. An incomplete search reports
/// only a lower estimate and must not be used as an upper bound.
MaxSymbolResult max_admissible_length(const GeneratorOrdering& ord,
                                      long node_budget = kDefaultBudget);

struct DiffTerm {
  int delete_pos;    // 0-based position removed from the symbol
  int sign;          // (-1)^(j-1) for 1-based j
  SqfMonomial coeff; // lcm(full) / lcm(without the deleted position)
};

struct SymbolEntry {
  Symbol indices;
  std::vector<DiffTerm> differential;
};

struct LyubeznikResolution {
  GeneratorOrdering ordering;
  std::vector<std::vector<SymbolEntry>> levels;  // levels[s-1]: length-s symbols

  int length() const { return static_cast<int>(levels.size()); }
};

std::vector<DiffTerm> taylor_differential(const GeneratorOrdering& ord,
                                          const Symbol& sym);

/// All admissible symbols with their restricted Taylor differentials.
/// Capped at 24 generators (full enumeration feasibility).
LyubeznikResolution lyubeznik_resolution(const GeneratorOrdering& ord);

struct ComplexCheck {
  bool ok = true;
  Symbol offender;
  std::string reason;
  explicit operator bool() const { return ok; }
};

/// Checks that the admissible set is deletion-closed and that the double
/// boundary vanishes identically as a signed-monomial sum.
ComplexCheck verify_complex(const LyubeznikResolution& res);

enum class OrderingStrategy { exhaustive, paper, random };

struct LLengthOptions {
  OrderingStrategy strategy = OrderingStrategy::exhaustive;
  int samples = 64;         // random strategy only
  std::uint64_t seed = 0;   // random strategy only
  long budget = kDefaultBudget;
};

struct LLengthResult {
  int value = 0;
  bool exact = false;    // only a completed exhaustive search is exact
  bool complete = true;
  long orderings_tried = 0;
  std::vector<int> best_order;
  Symbol witness;
};

/// Minimum over the tried orderings of the maximal admissible length.
/// Exhaustive strategy is capped at 9 generators.
LLengthResult l_length(const MonomialIdeal& ideal, const LLengthOptions& opt);

}  // namespace aracert
