#include <algorithm>
#include <random>
#include <set>

#include "brandt/congruence.hpp"
#include "brandt/error.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace brandt;

namespace {
  std::vector<CompatibilityMode> const modes{CompatibilityMode::plus_only,
                                             CompatibilityMode::right_action,
                                             CompatibilityMode::two_sided};

  std::vector<std::vector<Index>> labels_of(std::vector<Congruence> const& cs) {
    std::vector<std::vector<Index>> out;
    for (auto const& c : cs) {
      out.push_back(c.labels());
    }
    std::sort(out.begin(), out.end());
    return out;
  }
}  // namespace

TEST_CASE("modes") {
  for (auto mode : modes) {
    CHECK(mode_from_string(to_string(mode)) == mode);
  }
  CHECK_THROWS_AS(mode_from_string("left"), InvalidArgument);
}

TEST_CASE("class arrays") {
  Congruence const c({0, 1, 0, 1, 4}, CompatibilityMode::plus_only);
  CHECK(c.number_of_classes() == 3);
  CHECK(c.related(0, 2));
  CHECK_FALSE(c.related(0, 1));
  CHECK(c.classes()
        == std::vector<std::vector<Index>>{{0, 2}, {1, 3}, {4}});
  CHECK(c.generating_pairs()
        == std::vector<std::pair<Index, Index>>{{2, 0}, {3, 1}});
  CHECK(Congruence::equality(5, c.mode()).is_finer_than(c));
  CHECK(c.is_finer_than(Congruence::universal(5, c.mode())));
  CHECK_FALSE(c.is_finer_than(Congruence::equality(5, c.mode())));
  CHECK_THROWS_AS(Congruence({1, 1}, c.mode()), InvalidArgument);
  CHECK_THROWS_AS(Congruence({0, 0, 1}, c.mode()), InvalidArgument);
}

TEST_CASE("closures on examples") {
  auto const t     = build_nsr(2);
  Index const theta = *t.xi_theta();
  Index const c11   = t.index_of("c:1,1");
  for (auto mode : modes) {
    CHECK(congruence_closure(t, {}, mode).is_equality());
    CHECK(congruence_closure(t, {{3, 3}}, mode).is_equality());
  }
  CHECK(congruence_closure(t, {{c11, theta}}, CompatibilityMode::plus_only)
        == nonzero_collapse(t, CompatibilityMode::plus_only));
  // Relating 0 to a map relates 0 to everything once products are allowed.
  CHECK(congruence_closure(t, {{0, c11}}, CompatibilityMode::right_action)
            .is_universal());
  CHECK(congruence_closure(t, {{0, theta}}, CompatibilityMode::two_sided)
            .is_universal());
  CHECK_THROWS_AS(
      congruence_closure(t, {{0, 99}}, CompatibilityMode::plus_only),
      InvalidArgument);
}

TEST_CASE("n = 1 lattices agree with exhaustive partition enumeration") {
  auto const t = build_nsr(1);
  CHECK(oracle::all_partitions(4).size() == 15);
  for (auto mode : modes) {
    CAPTURE(to_string(mode));
    auto const lattice = congruence_lattice(t, mode);
    CHECK(labels_of(lattice) == oracle::congruences_brute_force(t, mode));
  }
}

TEST_CASE("closures are congruences and the least ones") {
  auto const   t = build_nsr(2);
  std::mt19937 rng(7);
  std::uniform_int_distribution<Index> pick(0, static_cast<Index>(t.size()) - 1);
  auto const two_sided = congruence_lattice(t, CompatibilityMode::two_sided);
  for (auto mode : modes) {
    CAPTURE(to_string(mode));
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<std::pair<Index, Index>> pairs;
      for (int k = 0; k < 1 + trial % 3; ++k) {
        pairs.emplace_back(pick(rng), pick(rng));
      }
      Congruence const c = congruence_closure(t, pairs, mode);
      REQUIRE(is_compatible(t, c));
      REQUIRE(oracle::compatible_pairwise(t, c.labels(), mode));
      for (auto [a, b] : pairs) {
        REQUIRE(c.related(a, b));
      }
      // Least: every congruence of the lattice containing the pairs
      // contains c.
      if (mode == CompatibilityMode::two_sided) {
        for (auto const& d : two_sided) {
          bool const contains = std::all_of(
              pairs.begin(), pairs.end(),
              [&](auto const& p) { return d.related(p.first, p.second); });
          if (contains) {
            REQUIRE(c.is_finer_than(d));
          }
        }
      }
    }
  }
}

TEST_CASE("lattices for n = 2") {
  auto const t = build_nsr(2);
  SUBCASE("two-sided") {
    auto const lattice = congruence_lattice(t, CompatibilityMode::two_sided);
    auto const mode    = CompatibilityMode::two_sided;
    CHECK(lattice
          == std::vector<Congruence>{Congruence::equality(t.size(), mode),
                                     nonzero_collapse(t, mode),
                                     Congruence::universal(t.size(), mode)});
  }
  SUBCASE("every lattice element is compatible and joins stay inside") {
    for (auto mode : {CompatibilityMode::plus_only,
                      CompatibilityMode::right_action}) {
      auto const lattice = congruence_lattice(t, mode);
      auto const                         sorted = labels_of(lattice);
      std::set<std::vector<Index>> const set(sorted.begin(), sorted.end());
      CHECK(set.size() == lattice.size());
      CHECK(lattice.front().is_equality());
      CHECK(lattice.back().is_universal());
      for (std::size_t i = 0; i + 1 < lattice.size(); ++i) {
        CHECK(lattice[i].number_of_classes()
              >= lattice[i + 1].number_of_classes());
      }
      for (auto const& c : lattice) {
        REQUIRE(is_compatible(t, c));
      }
      for (std::size_t i = 0; i < lattice.size(); i += 7) {
        for (std::size_t j = 0; j < lattice.size(); j += 11) {
          REQUIRE(set.count(join(t, lattice[i], lattice[j]).labels()) == 1);
        }
      }
    }
  }
}

TEST_CASE("stronger modes give fewer congruences") {
  for (std::size_t n = 1; n <= 2; ++n) {
    auto const t     = build_nsr(n);
    auto const plus  = labels_of(congruence_lattice(t, CompatibilityMode::plus_only));
    auto const right = labels_of(congruence_lattice(t, CompatibilityMode::right_action));
    auto const both  = labels_of(congruence_lattice(t, CompatibilityMode::two_sided));
    CHECK(std::includes(plus.begin(), plus.end(), right.begin(), right.end()));
    CHECK(std::includes(right.begin(), right.end(), both.begin(), both.end()));
  }
}

TEST_CASE("principal congruences") {
  auto const t = build_nsr(2);
  for (auto mode : modes) {
    auto const principals = principal_congruences(t, mode);
    for (auto const& p : principals) {
      CHECK_FALSE(p.is_equality());
    }
    std::set<std::vector<Index>> direct;
    for (Index a = 0; a < t.size(); ++a) {
      for (Index b = a + 1; b < t.size(); ++b) {
        direct.insert(congruence_closure(t, {{a, b}}, mode).labels());
      }
    }
    auto const got = labels_of(principals);
    CHECK(std::vector<std::vector<Index>>(direct.begin(), direct.end()) == got);
  }
}

TEST_CASE("joins") {
  auto const t    = build_nsr(2);
  auto const mode = CompatibilityMode::plus_only;
  auto const x    = congruence_closure(t, {{2, 3}}, mode);
  auto const y    = congruence_closure(t, {{4, 7}}, mode);
  auto const z    = join(t, x, y);
  CHECK(x.is_finer_than(z));
  CHECK(y.is_finer_than(z));
  CHECK(z == congruence_closure(t, {{2, 3}, {4, 7}}, mode));
  CHECK(join(t, x, x) == x);
  CHECK_THROWS_AS(
      join(t, x, Congruence::equality(t.size(), CompatibilityMode::two_sided)),
      InvalidArgument);
}

TEST_CASE("kernels") {
  auto const t = build_nsr(2);
  auto const m = CompatibilityMode::two_sided;
  CHECK(kernel(Congruence::equality(t.size(), m), t) == std::vector<Index>{0});
  CHECK(kernel(nonzero_collapse(t, m), t) == std::vector<Index>{0});
  CHECK(kernel(Congruence::universal(t.size(), m), t).size() == t.size());
}

TEST_CASE("is_compatible rejects non-congruences") {
  auto const t = build_nsr(2);
  std::vector<Index> labels(t.size());
  for (Index i = 0; i < t.size(); ++i) {
    labels[i] = i;
  }
  labels[3] = 2;  // relate two constants and nothing else
  Congruence const c(labels, CompatibilityMode::plus_only);
  CHECK_FALSE(is_compatible(t, c));
  CHECK_FALSE(oracle::compatible_pairwise(t, labels, CompatibilityMode::plus_only));
}
