#include <random>

#include "brandt/error.hpp"
#include "brandt/map_table.hpp"
#include "brandt/near_semiring.hpp"
#include "doctest.h"

using namespace brandt;

namespace {
  MapTable random_map(BrandtSemigroup const& b, std::mt19937& rng) {
    std::uniform_int_distribution<int> pick(0, static_cast<int>(b.size()) - 1);
    std::vector<Code>                  entries(b.size());
    for (auto& e : entries) {
      e = static_cast<Code>(pick(rng));
    }
    return MapTable(b.n(), std::move(entries));
  }

  std::vector<CanonicalForm> all_forms(std::size_t n) {
    std::vector<CanonicalForm> out{canonical::ConstTheta{}};
    for (std::size_t p = 1; p <= n; ++p) {
      for (std::size_t q = 1; q <= n; ++q) {
        out.emplace_back(canonical::Const{p, q});
        for (std::size_t k = 1; k <= n; ++k) {
          for (std::size_t l = 1; l <= n; ++l) {
            out.emplace_back(canonical::Singleton{k, l, p, q});
          }
        }
        for (auto const& s : Permutation::all(n)) {
          out.emplace_back(canonical::NSupport{p, q, s});
        }
      }
    }
    return out;
  }
}  // namespace

TEST_CASE("map tables validate their entries") {
  CHECK_THROWS_AS(MapTable(2, {0, 1, 2}), InvalidArgument);
  CHECK_THROWS_AS(MapTable(2, {0, 1, 2, 3, 5}), InvalidArgument);
  CHECK_NOTHROW(MapTable(2, {0, 1, 2, 3, 4}));
}

TEST_CASE("pointwise sum and composition on examples") {
  BrandtSemigroup const b(2);
  auto const            c12 = MapTable::constant(b, b.encode(1, 2));
  auto const            c21 = MapTable::constant(b, b.encode(2, 1));
  auto const            c11 = MapTable::constant(b, b.encode(1, 1));
  auto const            ct  = MapTable::constant(b, theta_code);
  CHECK(map_add(b, c12, c21) == c11);
  CHECK(map_add(b, c12, c12) == ct);
  // x(fg) = (xf)g: a constant followed by anything is a constant.
  auto const id = MapTable::identity(b);
  CHECK(map_compose(c12, id) == c12);
  CHECK(map_compose(id, c12) == c12);
  auto const s = realize(b, canonical::Singleton{1, 2, 2, 2});
  CHECK(map_compose(c12, s) == MapTable::constant(b, b.encode(2, 2)));
  CHECK(map_compose(c21, s) == ct);
  CHECK(support(s) == std::vector<Code>{b.encode(1, 2)});
  CHECK(support(ct).empty());
  CHECK(support(c11).size() == b.size());
  CHECK_THROWS_AS(map_add(b, c12, MapTable::identity(BrandtSemigroup(3))),
                  InvalidArgument);
}

TEST_CASE("endomorphism check") {
  BrandtSemigroup const b(2);
  CHECK(is_endomorphism(b, MapTable::identity(b)));
  CHECK(is_endomorphism(b, MapTable::constant(b, theta_code)));
  // Constants onto non-idempotents are not homomorphisms.
  CHECK_FALSE(is_endomorphism(b, MapTable::constant(b, b.encode(1, 2))));
  CHECK(is_endomorphism(b, MapTable::constant(b, b.encode(1, 1))));
}

TEST_CASE("classify and realize round trip on every canonical form") {
  for (std::size_t n = 2; n <= 3; ++n) {
    CAPTURE(n);
    BrandtSemigroup const b(n);
    for (auto const& form : all_forms(n)) {
      MapTable const f = realize(b, form);
      REQUIRE(classify(b, f) == form);
      REQUIRE(parse_canonical_name(canonical_name(form)) == form);
    }
  }
}

TEST_CASE("n = 1: the singleton and the n-support map coincide") {
  BrandtSemigroup const b(1);
  auto const            s = realize(b, canonical::Singleton{1, 1, 1, 1});
  auto const            m = realize(b, canonical::NSupport{1, 1, Permutation::identity(1)});
  CHECK(s == m);
  CHECK(std::holds_alternative<canonical::NSupport>(classify(b, s)));
}

TEST_CASE("maps of other shapes") {
  BrandtSemigroup const b(2);
  CHECK(is_other(classify(b, MapTable::identity(b))));
  CHECK_THROWS_AS(realize(b, canonical::Other{}), InvalidArgument);
  CHECK_THROWS_AS(canonical_name(canonical::Other{}), InvalidArgument);
  CHECK_THROWS_AS(realize(b, canonical::Const{3, 1}), InvalidArgument);
}

TEST_CASE("canonical names") {
  CHECK(canonical_name(canonical::ConstTheta{}) == "c:t");
  CHECK(canonical_name(canonical::Const{1, 2}) == "c:1,2");
  CHECK(canonical_name(canonical::Singleton{1, 2, 2, 1}) == "s:1,2>2,1");
  CHECK(canonical_name(canonical::NSupport{1, 2, Permutation::from_word("21")})
        == "n:1,2;21");
  for (std::string bad : {"", "c:", "c:1", "x:1,1", "s:1,2>3", "n:1,2;", "c:1,2,3"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_canonical_name(bad), InvalidArgument);
  }
}

TEST_CASE("left distributivity of composition over the pointwise sum") {
  SUBCASE("exhaustive on A+(B_2)") {
    BrandtSemigroup const b(2);
    auto const            maps = additive_closure(b, affine_maps(b));
    REQUIRE(maps.size() == 29);
    for (auto const& f : maps) {
      for (auto const& g : maps) {
        for (auto const& h : maps) {
          REQUIRE(map_compose(f, map_add(b, g, h))
                  == map_add(b, map_compose(f, g), map_compose(f, h)));
        }
      }
    }
  }
  SUBCASE("random self-maps of B_3") {
    BrandtSemigroup const b(3);
    std::mt19937          rng(20240601);
    for (int i = 0; i < 2000; ++i) {
      auto const f = random_map(b, rng);
      auto const g = random_map(b, rng);
      auto const h = random_map(b, rng);
      REQUIRE(map_compose(f, map_add(b, g, h))
              == map_add(b, map_compose(f, g), map_compose(f, h)));
      REQUIRE(map_add(b, map_add(b, f, g), h) == map_add(b, f, map_add(b, g, h)));
      REQUIRE(map_compose(map_compose(f, g), h)
              == map_compose(f, map_compose(g, h)));
    }
  }
}

TEST_CASE("sums of constants and singleton maps") {
  BrandtSemigroup const b(3);
  auto const            ct = MapTable::constant(b, theta_code);
  for (std::size_t p = 1; p <= 3; ++p) {
    for (std::size_t q = 1; q <= 3; ++q) {
      auto const c = realize(b, canonical::Const{p, q});
      for (std::size_t k = 1; k <= 3; ++k) {
        for (std::size_t l = 1; l <= 3; ++l) {
          auto const s = realize(b, canonical::Singleton{k, l, p, q});
          for (std::size_t a = 1; a <= 3; ++a) {
            for (std::size_t r = 1; r <= 3; ++r) {
              auto const sum = map_add(b, s, realize(b, canonical::Const{a, r}));
              CHECK(sum
                    == (a == q ? realize(b, canonical::Singleton{k, l, p, r})
                               : ct));
            }
          }
        }
      }
      // Constants add like B_n.
      for (std::size_t r = 1; r <= 3; ++r) {
        auto const d = realize(b, canonical::Const{q, r});
        CHECK(map_add(b, c, d) == realize(b, canonical::Const{p, r}));
      }
    }
  }
}
