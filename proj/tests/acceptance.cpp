// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all
// pass.  Time limits are wall-clock seconds on the build machine.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <variant>

#include "brandt/congruence.hpp"
#include "brandt/identities.hpp"
#include "brandt/near_semiring.hpp"
#include "brandt/radicals.hpp"
#include "brandt/structure.hpp"
#include "oracles.hpp"

using namespace brandt;

namespace {
  constexpr double count_time_limit      = 5.0;
  constexpr double congruence_time_limit = 60.0;

  using Clock = std::chrono::steady_clock;

  double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
  }

  struct Outcome {
    bool        passed = true;
    std::string detail;

    void require(bool ok, std::string const& what) {
      if (!ok) {
        passed = false;
        detail += (detail.empty() ? "" : "; ") + what;
      }
    }
  };

  // Tables and right-action lattices are shared between criteria.
  struct Context {
    std::map<std::size_t, NearSemiringTable>       tables;
    std::map<std::size_t, std::vector<Congruence>> right;

    NearSemiringTable const& table(std::size_t n) {
      auto it = tables.find(n);
      if (it == tables.end()) {
        it = tables.emplace(n, build_nsr(n)).first;
      }
      return it->second;
    }

    std::vector<Congruence> const& right_lattice(std::size_t n) {
      auto it = right.find(n);
      if (it == right.end()) {
        it = right
                 .emplace(n, congruence_lattice(table(n),
                                                CompatibilityMode::right_action))
                 .first;
      }
      return it->second;
    }
  };

  std::string fixed(double x) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(2) << x;
    return s.str();
  }

  std::vector<Index> everything(NearSemiringTable const& t) {
    std::vector<Index> out(t.size());
    for (Index i = 0; i < t.size(); ++i) {
      out[i] = i;
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Criteria
  ////////////////////////////////////////////////////////////////////////

  Outcome element_counts(Context& ctx) {
    Outcome    o;
    auto const start = Clock::now();
    struct Expected {
      std::size_t n, count;
      Breakdown   breakdown;
    };
    for (Expected const& e : {Expected{1, 3, {2, 0, 1, 0}},
                              Expected{2, 29, {5, 16, 8, 0}},
                              Expected{3, 145, {10, 81, 54, 0}}}) {
      auto const& t = ctx.table(e.n);
      auto const  b = t.breakdown();
      o.require(t.size() - 1 == e.count,
                "|A+(B_" + std::to_string(e.n) + ")| = "
                    + std::to_string(t.size() - 1));
      o.require(b == e.breakdown,
                "breakdown for n = " + std::to_string(e.n) + " is "
                    + std::to_string(b.constants) + "/"
                    + std::to_string(b.singletons) + "/"
                    + std::to_string(b.n_support));
    }
    double const elapsed = seconds_since(start);
    o.require(elapsed < count_time_limit, "took " + fixed(elapsed) + " s");
    if (o.passed) {
      o.detail = "|A+(B_n)| = 3, 29, 145 with breakdowns 5/16/8 and 10/81/54 in "
                 + fixed(elapsed) + " s (limit " + fixed(count_time_limit)
                 + " s)";
    }
    return o;
  }

  Outcome congruence_theorem(Context& ctx) {
    Outcome     o;
    double      elapsed3 = 0;
    auto const  mode     = CompatibilityMode::two_sided;
    for (std::size_t n : {2, 3}) {
      auto const  start   = Clock::now();
      auto const& t       = ctx.table(n);
      auto const  lattice = congruence_lattice(t, mode);
      if (n == 3) {
        elapsed3 = seconds_since(start);
      }
      std::vector<Congruence> const expected{
          Congruence::equality(t.size(), mode), nonzero_collapse(t, mode),
          Congruence::universal(t.size(), mode)};
      o.require(lattice == expected,
                "n = " + std::to_string(n) + ": "
                    + std::to_string(lattice.size()) + " congruences");
      std::set<std::vector<Index>> ideals;
      for (auto const& c : lattice) {
        o.require(oracle::compatible_pairwise(t, c.labels(), mode),
                  "n = " + std::to_string(n) + ": incompatible congruence");
        ideals.insert(kernel(c, t));
      }
      o.require(ideals
                    == std::set<std::vector<Index>>{{t.zero()}, everything(t)},
                "n = " + std::to_string(n) + ": ideals differ from {0}, N");
    }
    o.require(elapsed3 < congruence_time_limit,
              "n = 3 took " + fixed(elapsed3) + " s");
    if (o.passed) {
      o.detail = "exactly equality, (A+ x A+) u {(0,0)}, universal for n = 2, "
                 "3; ideals {0}, N; n = 3 in "
                 + fixed(elapsed3) + " s (limit " + fixed(congruence_time_limit)
                 + " s)";
    }
    return o;
  }

  Outcome right_ideal_theorem(Context& ctx) {
    Outcome     o;
    std::string sizes;
    for (std::size_t n : {2, 3}) {
      auto const& t       = ctx.table(n);
      auto const& lattice = ctx.right_lattice(n);
      std::set<std::vector<Index>> kernels;
      for (auto const& c : lattice) {
        kernels.insert(kernel(c, t));
      }
      o.require(kernels
                    == std::set<std::vector<Index>>{{t.zero()}, everything(t)},
                "n = " + std::to_string(n) + ": "
                    + std::to_string(kernels.size()) + " distinct kernels");
      sizes += (sizes.empty() ? "" : ", ") + std::to_string(lattice.size());
    }
    if (o.passed) {
      o.detail = "kernels of all right-action congruences (" + sizes
                 + " for n = 2, 3) are exactly {0} and N";
    }
    return o;
  }

  Outcome collapse_lemma(Context& ctx) {
    Outcome    o;
    auto const mode = CompatibilityMode::plus_only;
    for (std::size_t n : {2, 3}) {
      auto const&           t = ctx.table(n);
      BrandtSemigroup const b(n);
      Congruence const      collapse = nonzero_collapse(t, mode);
      o.require(oracle::compatible_pairwise(t, collapse.labels(), mode),
                "n = " + std::to_string(n) + ": collapse is not a congruence");
      std::size_t constants = 0;
      for (Index f = 1; f < t.size(); ++f) {
        if (!std::holds_alternative<canonical::Const>(
                classify(b, t.element(f).map()))) {
          continue;
        }
        ++constants;
        o.require(congruence_closure(t, {{f, *t.xi_theta()}}, mode) == collapse,
                  "n = " + std::to_string(n) + ": (" + t.name(f)
                      + ", c:t) does not generate the collapse");
      }
      o.require(constants == n * n, "n = " + std::to_string(n) + ": "
                                        + std::to_string(constants)
                                        + " full-support constants");
      // A strictly coarser equivalence relates 0 to some nonzero a.
      for (Index a = 1; a < t.size(); ++a) {
        o.require(congruence_closure(t, collapse, {{t.zero(), a}}).is_universal(),
                  "n = " + std::to_string(n) + ": collapse + (0, " + t.name(a)
                      + ") is not universal");
      }
    }
    if (o.passed) {
      o.detail = "all 4 + 9 full-support constants generate (A+ x A+) u "
                 "{(0,0)}; every strictly coarser congruence is universal";
    }
    return o;
  }

  Outcome constant_action(Context& ctx) {
    Outcome o;
    for (std::size_t n : {2, 3}) {
      auto const&              t = ctx.table(n);
      auto const               C = build_constant_action(t);
      std::vector<Index> const zero_only{t.zero()};
      std::string const        at = "n = " + std::to_string(n) + ": ";
      std::vector<std::size_t> carrier;
      for (std::size_t s = 0; s < C.size(); ++s) {
        carrier.push_back(s);
        // sN computed directly from the action table.
        std::set<std::size_t> image;
        for (Index a = 0; a < t.size(); ++a) {
          image.insert(C.apply(s, a));
        }
        if (s == 0) {
          o.require(image == std::set<std::size_t>{0}, at + "0N != {0}");
          continue;
        }
        o.require(image.size() == C.size(), at + C.labels[s] + "N != C");
        o.require(annihilator(C, s) == zero_only,
                  at + "A(" + C.labels[s] + ") != {0}");
      }
      o.require(annihilator(C, carrier) == zero_only, at + "A(C) != {0}");
      auto const subs = n_subsemigroups(C);
      o.require(subs.size() == 2 && subs[0] == std::vector<std::size_t>{0}
                    && subs[1] == carrier,
                at + std::to_string(subs.size()) + " N-subsemigroups");
    }
    if (o.passed) {
      o.detail = "gN = C, 0N = {0}, A(g) = {0}, A(C) = {0}, N-subsemigroups "
                 "{0} and C, for n = 2, 3";
    }
    return o;
  }

  Outcome radicals(Context& ctx) {
    Outcome o;
    for (std::size_t n : {2, 3}) {
      auto const&       t  = ctx.table(n);
      std::string const at = "n = " + std::to_string(n) + ": ";
      RadicalReport const r = assemble_radical_report(
          n, compute_radical_premises(t, ctx.right_lattice(n)));
      for (auto const& id : r.failed_premises()) {
        o.require(false, at + "premise " + id + " failed");
      }
      o.require(r.J.size() == 10, at + std::to_string(r.J.size()) + " J radicals");
      for (auto const& e : r.J) {
        o.require(e.value == RadicalValue::zero_ideal, at + e.name + " != {0}");
      }
      for (auto const& e : r.R) {
        bool const low = e.name == "R0" || e.name == "R1";
        o.require(e.value == (low ? RadicalValue::zero_ideal : RadicalValue::whole),
                  at + e.name + " has the wrong value");
      }
      o.require(!has_left_identity(t).identity.has_value(),
                at + "left identity found");
      auto const collapse = nonzero_collapse(t, CompatibilityMode::right_action);
      o.require(kernel(collapse, t) == std::vector<Index>{t.zero()}
                    && modularity_witness(collapse, t).has_value(),
                at + "no modularity witness for (A+ x A+) u {(0,0)}");
    }
    if (o.passed) {
      o.detail = "J = {0} for all 10 types, R0 = R1 = {0}, R2 = R3 = N, all "
                 "premises hold, no left identity, modularity witness found";
    }
    return o;
  }

  Outcome oracle_equivalences(Context& ctx) {
    Outcome o;
    BrandtSemigroup const b(2);
    std::vector<std::vector<Code>> found;
    for (auto const& f : endomorphisms(b)) {
      found.emplace_back(f.entries().begin(), f.entries().end());
    }
    std::sort(found.begin(), found.end());
    auto const brute = oracle::endomorphisms_brute_force(2);
    o.require(found == brute, "End(B_2): " + std::to_string(found.size())
                                  + " by backtracking, "
                                  + std::to_string(brute.size())
                                  + " by brute force");

    auto const& t = ctx.table(1);
    o.require(oracle::all_partitions(t.size()).size() == 15,
              "partition count of a 4-set");
    for (auto mode : {CompatibilityMode::plus_only,
                      CompatibilityMode::right_action,
                      CompatibilityMode::two_sided}) {
      std::vector<std::vector<Index>> lattice;
      for (auto const& c : congruence_lattice(t, mode)) {
        lattice.push_back(c.labels());
      }
      std::sort(lattice.begin(), lattice.end());
      o.require(lattice == oracle::congruences_brute_force(t, mode),
                "n = 1 " + to_string(mode) + " lattice differs");
    }
    if (o.passed) {
      o.detail = "End(B_2) = brute force over 3125 maps ("
                 + std::to_string(brute.size())
                 + " endomorphisms); n = 1 lattices = filtered 15 partitions "
                   "in all three modes";
    }
    return o;
  }

  Outcome property_suite(Context& ctx) {
    Outcome o;
    for (std::size_t n : {1, 2, 3}) {
      auto const&       t  = ctx.table(n);
      std::string const at = "n = " + std::to_string(n) + ": ";
      auto const        m  = static_cast<Index>(t.size());
      std::size_t       bad_zero = 0, bad_add = 0, bad_mul = 0, bad_dist = 0;
      for (Index a = 0; a < m; ++a) {
        bad_zero += t.add(0, a) != a || t.add(a, 0) != a || t.mul(0, a) != 0
                    || t.mul(a, 0) != 0;
        for (Index x = 0; x < m; ++x) {
          for (Index y = 0; y < m; ++y) {
            bad_add += t.add(t.add(a, x), y) != t.add(a, t.add(x, y));
            bad_mul += t.mul(t.mul(a, x), y) != t.mul(a, t.mul(x, y));
            bad_dist += t.mul(a, t.add(x, y)) != t.add(t.mul(a, x), t.mul(a, y));
          }
        }
      }
      o.require(bad_zero == 0, at + "zero laws fail");
      o.require(bad_add == 0, at + "+ is not associative");
      o.require(bad_mul == 0, at + "composition is not associative");
      o.require(bad_dist == 0, at + "left distributivity fails");
    }

    auto const& t2 = ctx.table(2);
    auto const  w  = find_right_distributivity_failure(t2);
    o.require(w.has_value(), "no right-distributivity counterexample in A+(B_2)");
    std::string counterexample;
    if (w) {
      o.require(t2.mul(t2.add(w->g, w->h), w->f)
                    != t2.add(t2.mul(w->g, w->f), t2.mul(w->h, w->f)),
                "reported counterexample does not fail");
      counterexample = "f = " + t2.name(w->f) + ", g = " + t2.name(w->g)
                       + ", h = " + t2.name(w->h);
    }

    std::size_t instances = 0;
    for (std::size_t n : {2, 3}) {
      for (auto const& c : collapse_identities(BrandtSemigroup(n))) {
        instances += c.instances;
        o.require(c.holds(), "n = " + std::to_string(n) + ": identity " + c.name
                                 + " fails at "
                                 + c.first_failure.value_or("?"));
      }
    }
    if (o.passed) {
      o.detail = "laws exhaustive for n <= 3; right distributivity fails at "
                 + counterexample + "; " + std::to_string(instances)
                 + " identity instances hold";
    }
    return o;
  }
}  // namespace

int main() {
  Context ctx;
  std::vector<std::pair<std::string, std::function<Outcome(Context&)>>> const
      criteria{{"element counts", element_counts},
               {"congruence theorem", congruence_theorem},
               {"right-ideal theorem", right_ideal_theorem},
               {"plus-collapse lemma", collapse_lemma},
               {"constant action C", constant_action},
               {"radicals", radicals},
               {"oracle equivalences", oracle_equivalences},
               {"algebraic properties", property_suite}};

  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto const& [name, check] = criteria[i];
    Outcome o;
    try {
      o = check(ctx);
    } catch (std::exception const& e) {
      o.passed = false;
      o.detail = std::string("exception: ") + e.what();
    }
    all = all && o.passed;
    std::cout << (o.passed ? "PASS" : "FAIL") << " criterion " << i + 1 << " ("
              << name << "): " << o.detail << std::endl;
  }
  std::cout << (all ? "all criteria passed" : "some criteria failed")
            << std::endl;
  return all ? 0 : 1;
}
