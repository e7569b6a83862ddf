#include <doctest.h>

#include "aracert/covers.hpp"
#include "testutil.hpp"

using namespace aracert;

namespace {

SqfMonomial set_of(const SimplicialComplex& dx,
                   const std::vector<std::string>& labels) {
  return monomial_from_labels(labels, dx.vertices);
}

}  // namespace

TEST_CASE("is_vertex_cover") {
  auto c3 = cycle_graph(3);
  CHECK(is_vertex_cover(c3, set_of(c3, {"x1", "x2"})));
  CHECK_FALSE(is_vertex_cover(c3, set_of(c3, {"x1"})));

  auto s3 = sunlet(3);
  CHECK(is_vertex_cover(s3, set_of(s3, {"x1", "x2", "x3"})));

  CHECK_THROWS_AS(is_vertex_cover(c3, {VertexMask{1} << 10}),
                  std::invalid_argument);
}

TEST_CASE("minimal covers of the fixtures") {
  auto s3 = sunlet(3);
  auto covers = minimal_vertex_covers(s3);
  REQUIRE(covers.size() == 4);
  CHECK(covers[0] == set_of(s3, {"x1", "x2", "x3"}));
  CHECK(covers[1] == set_of(s3, {"x1", "x2", "y3"}));
  CHECK(covers[2] == set_of(s3, {"x1", "x3", "y2"}));
  CHECK(covers[3] == set_of(s3, {"x2", "x3", "y1"}));

  auto triangle = build_complex({"x1", "x2", "x3"}, {{"x1", "x2", "x3"}});
  auto grafted = graft(triangle, {GraftSpec::Mode::graft, {{1}, {1}, {1}}});
  auto gcovers = minimal_vertex_covers(grafted);
  CHECK(gcovers.size() == 7);
  for (SqfMonomial c : gcovers) CHECK(c.degree() == 3);

  auto single = build_complex({"x1", "x2"}, {{"x1", "x2"}});
  auto scovers = minimal_vertex_covers(single);
  REQUIRE(scovers.size() == 2);
  CHECK(scovers[0] == set_of(single, {"x1"}));
  CHECK(scovers[1] == set_of(single, {"x2"}));
}

TEST_CASE("exhaustive oracle") {
  auto c3 = cycle_graph(3);
  auto covers = minimal_vertex_covers_oracle(c3);
  REQUIRE(covers.size() == 3);
  CHECK(covers[0] == set_of(c3, {"x1", "x2"}));
  CHECK(covers[1] == set_of(c3, {"x1", "x3"}));
  CHECK(covers[2] == set_of(c3, {"x2", "x3"}));

  auto single = build_complex({"x1", "x2"}, {{"x1", "x2"}});
  CHECK(minimal_vertex_covers_oracle(single).size() == 2);

  for (SqfMonomial c : minimal_vertex_covers_oracle(sunlet(4)))
    CHECK(c.degree() == 4);

  SimplicialComplex too_big;
  too_big.vertices = make_table(testutil::numbered_labels(23));
  CHECK_THROWS_AS(minimal_vertex_covers_oracle(too_big),
                  std::invalid_argument);
}

TEST_CASE("cover_summary") {
  auto s5 = cover_summary(sunlet(5));
  CHECK(s5.height == 5);
  CHECK(s5.bight == 5);
  CHECK(s5.unmixed);

  auto mw = cover_summary(multiwhisker(cycle_graph(3), {2, 2, 2}));
  CHECK(mw.height == 3);
  CHECK(mw.bight == 4);
  CHECK_FALSE(mw.unmixed);

  auto triangle = build_complex({"x1", "x2", "x3"}, {{"x1", "x2", "x3"}});
  auto ts = cover_summary(triangle);
  CHECK(ts.height == 1);
  CHECK(ts.bight == 1);
  CHECK(ts.covers.size() == 3);

  auto empty = build_complex({"x1", "x2"}, {});
  auto es = cover_summary(empty);
  CHECK(es.height == 0);
  CHECK(es.bight == 0);
  REQUIRE(es.covers.size() == 1);
  CHECK(es.covers[0].empty());
  CHECK(es.unmixed);
}

TEST_CASE("enumeration matches the oracle on random complexes") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    auto dx = testutil::random_complex(rng, 12, 8);
    auto fast = minimal_vertex_covers(dx);
    auto slow = minimal_vertex_covers_oracle(dx);
    REQUIRE(fast.size() == slow.size());
    for (std::size_t i = 0; i < fast.size(); ++i) CHECK(fast[i] == slow[i]);
  }
}

TEST_CASE("returned covers are covers and are minimal") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 30; ++trial) {
    auto dx = testutil::random_complex(rng, 10, 7);
    for (SqfMonomial c : minimal_vertex_covers(dx)) {
      CHECK(is_vertex_cover(dx, c));
      for (int v : support_vector(c)) {
        SqfMonomial smaller{c.support & ~(VertexMask{1} << v)};
        CHECK_FALSE(is_vertex_cover(dx, smaller));
      }
    }
  }
}

TEST_CASE("fully clique-whiskered graphs are pure of height n") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    int n = testutil::rand_int(rng, 1, 8);
    auto g = testutil::random_graph(rng, n, 50);
    auto blocks = testutil::random_clique_partition(rng, g);
    auto summary = cover_summary(clique_whisker(g, blocks));
    CHECK(summary.height == n);
    CHECK(summary.bight == n);
    CHECK(summary.unmixed);
  }
}

TEST_CASE("whiskered graphs keep the base vertex cover") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 30; ++trial) {
    int n = testutil::rand_int(rng, 1, 7);
    auto g = testutil::random_graph(rng, n, 40);
    auto whiskered =
        partition_whisker(g, testutil::random_partition(rng, n));
    auto covers = minimal_vertex_covers(whiskered);
    SqfMonomial base{g.vertices.full_mask()};
    CHECK(std::find(covers.begin(), covers.end(), base) != covers.end());
    CHECK(cover_summary(whiskered).bight >= n);
  }
}

TEST_CASE("the named multiwhisker cover shows up") {
  for (int n : {3, 4, 5, 6}) {
    for (int k : {1, 2}) {
      auto g = multiwhisker(cycle_graph(n), std::vector<int>(n, k));
      SqfMonomial named;
      for (int j = 1; 2 * j - 1 <= n; ++j)
        named.support |= VertexMask{1} << (2 * j - 2);  // x_{2j-1}
      for (int j = 1; 2 * j <= n; ++j)
        for (int i = 1; i <= k; ++i)
          named.support |= monomial_from_labels(
                               {"y" + std::to_string(2 * j) + "." +
                                std::to_string(i)},
                               g.vertices)
                               .support;
      auto covers = minimal_vertex_covers(g);
      CHECK(std::find(covers.begin(), covers.end(), named) != covers.end());
    }
  }
}
