#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "cliques/clique.hpp"
#include "cliques/enumerate.hpp"
#include "oracle.hpp"

using namespace cliques;
using L = std::vector<std::tuple<int, int, std::string>>;

namespace {

const MagmaPtr Z = builtin_magma("Z");
const MagmaPtr D0 = builtin_magma("D0");

}  // namespace

TEST_CASE("a size-6 integer clique", "[clique]") {
  const Clique p = Clique::make(Z, 6, L{{1, 2, "-1"}, {1, 5, "1"}, {1, 7, "2"}, {3, 7, "3"}, {5, 6, "2"}, {5, 7, "2"}});
  CHECK(p.arity() == 6);
  CHECK(Z->label(p.base_label()) == "2");
  CHECK(Z->is_unit(p.label(2, 3)));
  CHECK(Z->label(p.edge_label(1)) == "-1");
  CHECK(Z->label(p.edge_label(5)) == "2");
  CHECK(Z->is_unit(p.edge_label(6)));
  CHECK(Z->label(p.label(5, 7)) == "2");
  CHECK(p.solid().size() == 6);
}

TEST_CASE("unit clique and bad constructions", "[clique]") {
  const Clique u = Clique::make(Z, 1, L{});
  CHECK(u == Clique::unit(Z));
  CHECK_THROWS_AS(Clique::make(D0, 2, L{{1, 3, "x"}}), Error);
  CHECK_THROWS_AS(Clique::make(D0, 2, L{{1, 4, "0"}}), Error);
  CHECK_THROWS_AS(Clique::make(D0, 2, L{{1, 3, "0"}, {1, 3, "0"}}), Error);
  CHECK_THROWS_AS(Clique::make(D0, 1, L{{1, 2, "0"}}), Error);
  // unit labels are dropped
  CHECK(Clique::make(D0, 2, L{{1, 2, "e"}}) == Clique::make(D0, 2, L{}));
}

TEST_CASE("composition examples over Z", "[clique]") {
  const Clique p = Clique::make(Z, 5, L{{1, 2, "1"}, {1, 5, "-2"}, {2, 3, "-2"}, {3, 5, "1"}});
  SECTION("first example") {
    const Clique q = Clique::make(Z, 3, L{{1, 3, "1"}, {1, 4, "3"}, {2, 4, "1"}, {3, 4, "2"}});
    const Clique want =
        Clique::make(Z, 7, L{{1, 2, "1"}, {1, 7, "-2"}, {2, 4, "1"}, {2, 5, "1"}, {3, 5, "1"}, {4, 5, "2"}, {5, 7, "1"}});
    CHECK(compose(p, 2, q) == want);
  }
  SECTION("second example: glued arc cancels") {
    const Clique q = Clique::make(Z, 3, L{{1, 3, "1"}, {1, 4, "2"}, {2, 4, "1"}, {3, 4, "2"}});
    const Clique want = Clique::make(Z, 7, L{{1, 2, "1"}, {1, 7, "-2"}, {2, 4, "1"}, {3, 5, "1"}, {4, 5, "2"}, {5, 7, "1"}});
    CHECK(compose(p, 2, q) == want);
  }
}

TEST_CASE("small hand compositions", "[clique]") {
  const Clique p = Clique::make(Z, 2, L{{1, 2, "2"}});
  const Clique q = Clique::make(Z, 2, L{{1, 3, "3"}});
  CHECK(compose(p, 1, q) == Clique::make(Z, 3, L{{1, 3, "5"}}));
  CHECK(compose(Clique::unit(Z), 1, p) == p);
  CHECK(compose(p, 2, Clique::unit(Z)) == p);
  CHECK_THROWS_AS(compose(p, 3, q), Error);
  CHECK_THROWS_AS(compose(p, 0, q), Error);
}

TEST_CASE("composition agrees with the dense oracle on all D0 pairs up to arity 3", "[clique]") {
  const auto all = all_cliques_up_to(D0, 3);
  std::size_t checked = 0;
  for (const auto& p : all)
    for (const auto& q : all)
      for (int i = 1; i <= p.arity(); ++i) {
        const auto want = oracle::sparse(D0, oracle::compose(D0, oracle::dense(p), i, oracle::dense(q)));
        REQUIRE(compose(p, i, q) == want);
        ++checked;
      }
  CHECK(checked == 73 * (1 + 2 * 8 + 3 * 64));
}

TEST_CASE("composition agrees with the dense oracle on random Z cliques", "[clique]") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> ar(1, 5);
  for (int s = 0; s < 300; ++s) {
    const Clique p = random_clique(Z, ar(rng), rng);
    const Clique q = random_clique(Z, ar(rng), rng);
    for (int i = 1; i <= p.arity(); ++i)
      REQUIRE(compose(p, i, q) == oracle::sparse(Z, oracle::compose(Z, oracle::dense(p), i, oracle::dense(q))));
  }
}

TEST_CASE("statistics agree with the oracle on every D0 clique up to arity 5", "[clique]") {
  for (int n = 1; n <= 5; ++n) {
    for_each_clique(D0, n, [&](const Clique& p) {
      const auto want = oracle::stats(oracle::dense(p), D0->unit().id);
      const auto got = stats(p);
      REQUIRE(got.crossing == want.crossing);
      REQUIRE(got.max_degree == want.max_degree);
      REQUIRE(got.acyclic == want.acyclic);
      REQUIRE(got.white == want.white);
      REQUIRE(got.bubble == want.bubble);
      REQUIRE(got.max_nesting == want.max_nesting);
      REQUIRE(got.nesting_free == (want.max_nesting == 0));
    });
  }
}

TEST_CASE("statistics on named examples", "[clique]") {
  const auto s0 = stats(Clique::make(D0, 3, L{}));
  CHECK(s0.crossing == 0);
  CHECK(s0.max_degree == 0);
  CHECK(s0.acyclic);
  CHECK(s0.nesting_free);
  CHECK(s0.white);
  CHECK(s0.bubble);
  const auto tri = stats(Clique::make(D0, 2, L{{1, 2, "0"}, {1, 3, "0"}, {2, 3, "0"}}));
  CHECK_FALSE(tri.acyclic);
  CHECK(tri.max_degree == 2);
  CHECK(stats(Clique::make(D0, 3, L{{1, 3, "0"}, {2, 4, "0"}})).crossing == 1);
  // base nests both edges
  CHECK_FALSE(stats(Clique::make(D0, 2, L{{1, 2, "0"}, {1, 3, "0"}})).nesting_free);
}

TEST_CASE("erase and boundary labels", "[clique]") {
  const Clique p = Clique::make(Z, 2, L{{2, 3, "1"}});
  CHECK(erase(p, 2) == Clique::make(Z, 2, L{}));
  CHECK(erase(Clique::make(Z, 2, L{}), 1) == Clique::make(Z, 2, L{}));
  CHECK(boundary_label(p, 2) == Z->parse("1"));
  CHECK(is_base(boundary_arc(4, 0), 4));
  CHECK(boundary_arc(4, 3) == Arc{3, 4});
}

TEST_CASE("rotation", "[clique]") {
  CHECK(rotate(Clique::unit(D0)) == Clique::unit(D0));
  CHECK(rotate(Clique::make(D0, 2, L{})) == Clique::make(D0, 2, L{}));
  // base (1,3) moves to edge (2,3); edge (1,2) moves to the base
  CHECK(rotate(Clique::make(D0, 2, L{{1, 3, "0"}})) == Clique::make(D0, 2, L{{2, 3, "0"}}));
  CHECK(rotate(Clique::make(D0, 2, L{{1, 2, "0"}})) == Clique::make(D0, 2, L{{1, 3, "0"}}));
  for (int n = 1; n <= 4; ++n) {
    for_each_clique(D0, n, [&](const Clique& p) {
      Clique c = p;
      for (int k = 0; k <= n; ++k) c = rotate(c);
      REQUIRE(c == p);
      REQUIRE(rotate_inverse(rotate(p)) == p);
    });
  }
}

TEST_CASE("dimension formula by enumeration", "[clique]") {
  for (int m = 1; m <= 3; ++m) {
    auto mg = m == 1 ? builtin_magma("N1") : m == 2 ? D0 : builtin_magma("D1");
    for (int n = 2; n <= 3; ++n) {
      std::uint64_t want = 1;
      for (int k = 0; k < arc_count(n); ++k) want *= static_cast<std::uint64_t>(m);
      CHECK(count_cliques(mg, n, [](const Clique&) { return true; }) == want);
    }
  }
  CHECK(count_cliques(D0, 4, [](const Clique&) { return true; }) == 1024);
}

TEST_CASE("enumeration guard", "[clique]") {
  CHECK_THROWS_MATCHES(all_cliques(D0, 7), Error,
                       Catch::Matchers::Predicate<Error>([](const Error& e) { return e.kind() == ErrorKind::guard; }));
  CHECK_THROWS_AS(all_cliques(Z, 2), Error);
}
