#include "aracert/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace aracert {

namespace {

std::uint64_t fnv1a(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[v & 0xf];
    v >>= 4;
  }
  return out;
}

}  // namespace

std::string ideal_digest(const MonomialIdeal& ideal) {
  std::string blob;
  for (const auto& name : ideal.ambient.names) blob += name + ",";
  blob += "|";
  for (SqfMonomial g : ideal.generators)
    blob += monomial_to_string(g, ideal.ambient) + ";";
  return hex64(fnv1a(blob));
}

std::string partition_digest(const SvPartition& part) {
  std::string blob;
  for (const auto& name : part.ambient.names) blob += name + ",";
  for (const auto& layer : part.sets) {
    blob += "|";
    for (SqfMonomial p : layer)
      blob += monomial_to_string(p, part.ambient) + "^" +
              std::to_string(part.exponent(p)) + ";";
  }
  return hex64(fnv1a(blob));
}

int expected_multiwhisker_value(int n, int k) {
  if (n < 3) throw std::invalid_argument("multiwhisker cycle needs n >= 3");
  if (k < 1) throw std::invalid_argument("whisker count must be >= 1");
  return (n + 1) / 2 + (n / 2) * k;
}

AraCertificate certify(const SimplicialComplex& dx,
                       const CertifyOptions& opt) {
  AraCertificate cert;
  cert.ideal = facet_ideal(dx);
  cert.digest = ideal_digest(cert.ideal);

  cert.covers = cover_summary(dx);
  cert.ara_lower = cert.covers.bight;
  for (SqfMonomial c : cert.covers.covers)
    if (c.degree() == cert.covers.bight) {
      cert.witness_cover = c;
      break;
    }

  if (opt.sv) {
    auto report = verify_sv_conditions(*opt.sv);
    auto radical = verify_radical_cover(*opt.sv, cert.ideal);
    if (report.conditions_ok && radical.ok) {
      UpperBound ub;
      ub.kind = "sv";
      ub.value = opt.sv->size();
      ub.partition = *opt.sv;
      ub.digest = partition_digest(*opt.sv);
      cert.uppers.push_back(std::move(ub));
    } else {
      cert.notes.push_back(
          report.conditions_ok
              ? "sv partition rejected: radical cover fails"
              : "sv partition rejected: lemma conditions fail");
    }
  }

  if (opt.lyu != LyuSource::none) {
    GeneratorOrdering ord =
        opt.lyu == LyuSource::whisker ? whisker_ordering(cert.ideal)
        : opt.lyu == LyuSource::lex   ? lex_ordering(cert.ideal)
                                      : canonical_ordering(cert.ideal);
    auto res = max_admissible_length(ord, opt.budget);
    if (res.complete) {
      UpperBound ub;
      ub.kind = "lyubeznik";
      ub.value = res.length;
      ub.order = ord.order;
      ub.witness_symbol = res.witness;
      cert.uppers.push_back(std::move(ub));
    } else {
      cert.exact = false;
      cert.notes.push_back("lyubeznik search truncated by budget");
    }
  }

  if (opt.lyu_exhaustive) {
    LLengthOptions lopt;
    lopt.strategy = OrderingStrategy::exhaustive;
    lopt.budget = opt.budget;
    auto res = l_length(cert.ideal, lopt);
    if (res.complete) {
      UpperBound ub;
      ub.kind = "lyubeznik";
      ub.value = res.value;
      ub.order = res.best_order;
      ub.witness_symbol = res.witness;
      cert.uppers.push_back(std::move(ub));
    } else {
      cert.exact = false;
      cert.notes.push_back("exhaustive ordering search truncated by budget");
    }
  }

  std::sort(cert.uppers.begin(), cert.uppers.end(),
            [](const UpperBound& a, const UpperBound& b) {
              if (a.kind != b.kind) return a.kind < b.kind;
              return a.value < b.value;
            });
  for (const auto& ub : cert.uppers)
    if (!cert.ara_upper || ub.value < *cert.ara_upper)
      cert.ara_upper = ub.value;

  cert.equal = cert.ara_upper && *cert.ara_upper == cert.ara_lower;
  cert.stci = cert.equal && cert.covers.height == *cert.ara_upper;
  return cert;
}

}  // namespace aracert
