#include <doctest.h>

#include "aracert/bounds.hpp"
#include "testutil.hpp"

using namespace aracert;

TEST_CASE("expected_multiwhisker_value") {
  CHECK(expected_multiwhisker_value(3, 1) == 3);
  CHECK(expected_multiwhisker_value(4, 2) == 6);
  CHECK(expected_multiwhisker_value(5, 3) == 9);
  CHECK_THROWS_AS(expected_multiwhisker_value(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(expected_multiwhisker_value(3, 0), std::invalid_argument);
}

TEST_CASE("certify sunlet with the sv strategy") {
  CertifyOptions opt;
  opt.sv = sunlet_sv(4);
  auto cert = certify(sunlet(4), opt);
  CHECK(cert.ara_lower == 4);
  REQUIRE(cert.ara_upper.has_value());
  CHECK(*cert.ara_upper == 4);
  CHECK(cert.equal);
  CHECK(cert.stci);
  CHECK(cert.exact);
  REQUIRE(cert.uppers.size() == 1);
  CHECK(cert.uppers[0].kind == "sv");
}

TEST_CASE("certify multiwhisker cycle: equal but not stci") {
  auto g = multiwhisker(cycle_graph(3), {2, 2, 2});
  CertifyOptions opt;
  opt.sv = multiwhisker_cycle_sv(3, 2);
  auto cert = certify(g, opt);
  CHECK(cert.ara_lower == 4);
  CHECK(*cert.ara_upper == 4);
  CHECK(cert.equal);
  CHECK_FALSE(cert.stci);  // height 3 < 4
  CHECK(cert.covers.height == 3);
}

TEST_CASE("certify grafted triangle with the lex ordering") {
  auto triangle = build_complex({"x1", "x2", "x3"}, {{"x1", "x2", "x3"}});
  auto grafted = graft(triangle, {GraftSpec::Mode::graft, {{1}, {1}, {1}}});
  CertifyOptions opt;
  opt.lyu = LyuSource::lex;
  auto cert = certify(grafted, opt);
  CHECK(cert.ara_lower == 3);
  CHECK(*cert.ara_upper == 3);
  CHECK(cert.equal);
  CHECK(cert.stci);
}

TEST_CASE("adding strategies only sharpens the upper bound") {
  auto dx = sunlet(4);
  CertifyOptions covers_only;
  auto base = certify(dx, covers_only);
  CHECK_FALSE(base.ara_upper.has_value());
  CHECK_FALSE(base.equal);

  CertifyOptions with_sv;
  with_sv.sv = sunlet_sv(4);
  auto sv_cert = certify(dx, with_sv);

  CertifyOptions with_both = with_sv;
  with_both.lyu = LyuSource::whisker;
  auto both = certify(dx, with_both);

  CHECK(base.ara_lower == sv_cert.ara_lower);
  CHECK(sv_cert.ara_lower == both.ara_lower);
  CHECK(*both.ara_upper <= *sv_cert.ara_upper);
  CHECK(both.uppers.size() == 2);
}

TEST_CASE("certificate witnesses re-verify to the stated bounds") {
  auto dx = sunlet(5);
  CertifyOptions opt;
  opt.sv = sunlet_sv(5);
  opt.lyu = LyuSource::whisker;
  auto cert = certify(dx, opt);

  for (const auto& ub : cert.uppers) {
    if (ub.kind == "sv") {
      REQUIRE(ub.partition.has_value());
      CHECK(verify_sv_conditions(*ub.partition).conditions_ok);
      CHECK(verify_radical_cover(*ub.partition, cert.ideal).ok);
      CHECK(ub.partition->size() == ub.value);
      CHECK(partition_digest(*ub.partition) == ub.digest);
    } else {
      GeneratorOrdering ord{cert.ideal, ub.order};
      CHECK(is_admissible(ord, ub.witness_symbol));
      CHECK(static_cast<int>(ub.witness_symbol.size()) == ub.value);
      CHECK(max_admissible_length(ord).length == ub.value);
    }
  }
  // the witness cover is a genuine maximal-size minimal cover
  CHECK(is_vertex_cover(dx, cert.witness_cover));
  CHECK(cert.witness_cover.degree() == cert.covers.bight);
}

TEST_CASE("a rejected partition leaves no upper bound") {
  auto part = sunlet_sv(3);
  part.sets[2].clear();
  part.sets[2].push_back(monomial_of({0, 3}));  // drops two whiskers
  CertifyOptions opt;
  opt.sv = part;
  auto cert = certify(sunlet(3), opt);
  CHECK(cert.uppers.empty());
  CHECK_FALSE(cert.equal);
  CHECK(cert.notes.size() == 1);
}

TEST_CASE("budget exhaustion is reported, not silently truncated") {
  CertifyOptions opt;
  opt.lyu = LyuSource::whisker;
  opt.budget = 2;
  auto cert = certify(sunlet(6), opt);
  CHECK(cert.uppers.empty());
  CHECK_FALSE(cert.exact);
  CHECK_FALSE(cert.equal);
  CHECK(cert.notes.size() == 1);
}

TEST_CASE("exhaustive ordering search closes small instances") {
  CertifyOptions opt;
  opt.lyu_exhaustive = true;
  auto cert = certify(sunlet(3), opt);
  CHECK(cert.ara_lower == 3);
  CHECK(*cert.ara_upper == 3);
  CHECK(cert.equal);
}

TEST_CASE("whisker certificates at desk scale") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 25; ++trial) {
    int n = testutil::rand_int(rng, 1, 6);
    auto g = testutil::random_graph(rng, n, 50);
    auto whiskered =
        partition_whisker(g, testutil::random_partition(rng, n));
    CertifyOptions opt;
    opt.lyu = LyuSource::whisker;
    auto cert = certify(whiskered, opt);
    CHECK(cert.ara_lower == n);
    CHECK(*cert.ara_upper == n);
    CHECK(cert.equal);
  }
}

TEST_CASE("graft certificates at desk scale") {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 20; ++trial) {
    auto base = testutil::random_complex(rng, 4, 4);
    int n = base.vertices.size();
    CertifyOptions opt;
    opt.lyu = LyuSource::lex;

    auto single = graft(
        base, testutil::random_graft_spec(rng, n, false, 1, 2));
    auto cert = certify(single, opt);
    CHECK(cert.equal);
    CHECK(cert.ara_lower == n);

    auto multi = multigraft(
        base, testutil::random_graft_spec(rng, n, true, 3, 2));
    auto mcert = certify(multi, opt);
    CHECK(mcert.equal);
  }
}
