#include "brandt/verify.hpp"

#include <algorithm>
#include <set>

#include "brandt/congruence.hpp"
#include "brandt/error.hpp"
#include "brandt/identities.hpp"
#include "brandt/radicals.hpp"
#include "brandt/structure.hpp"

namespace brandt {

  bool VerificationReport::passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](VerificationCheck const& c) { return c.passed; });
  }

  namespace {
    std::string str(std::size_t x) {
      return std::to_string(x);
    }

    std::string breakdown_string(Breakdown const& b) {
      return str(b.constants) + "/" + str(b.singletons) + "/" + str(b.n_support);
    }

    VerificationCheck count_check(NearSemiringTable const& t) {
      std::size_t const n         = t.n();
      std::size_t const nonzero   = t.size() - 1;
      Breakdown const   breakdown = t.breakdown();
      Breakdown         expected;
      std::size_t       expected_count = 0;
      if (n == 1) {
        expected       = {2, 0, 1, 0};
        expected_count = 3;
      } else {
        std::size_t fact = 1;
        for (std::size_t i = 2; i <= n; ++i) {
          fact *= i;
        }
        expected       = {n * n + 1, n * n * n * n, fact * n * n, 0};
        expected_count = static_cast<std::size_t>(a_plus_size_formula(n));
      }
      return {"count-theorem",
              n,
              nonzero == expected_count && breakdown == expected,
              "|A+(B_" + str(n) + ")| = " + str(nonzero) + " (expected "
                  + str(expected_count) + "), breakdown "
                  + breakdown_string(breakdown) + " (expected "
                  + breakdown_string(expected) + ")"};
    }

    VerificationCheck laws_check(NearSemiringTable const& t) {
      try {
        validate(t);
        return {"algebra-laws", t.n(), true,
                "associativity of + and composition, left distributivity, "
                "zero laws and agreement with the maps hold on "
                    + str(t.size()) + " elements"};
      } catch (InvariantViolation const& e) {
        return {"algebra-laws", t.n(), false, e.what()};
      }
    }

    VerificationCheck right_distributivity_check(NearSemiringTable const& t) {
      auto const w = find_right_distributivity_failure(t);
      if (!w) {
        return {"right-distributivity-fails", t.n(), false,
                "no triple with (g + h)f != gf + hf"};
      }
      return {"right-distributivity-fails", t.n(), true,
              "f = " + t.name(w->f) + ", g = " + t.name(w->g) + ", h = "
                  + t.name(w->h) + ": (g + h)f = "
                  + t.name(t.mul(t.add(w->g, w->h), w->f)) + ", gf + hf = "
                  + t.name(t.add(t.mul(w->g, w->f), t.mul(w->h, w->f)))};
    }

    VerificationCheck identities_check(NearSemiringTable const& t) {
      auto const  checks = collapse_identities(BrandtSemigroup(t.n()));
      bool        ok     = true;
      std::size_t total  = 0;
      std::string detail;
      for (IdentityCheck const& c : checks) {
        total += c.instances;
        if (!c.holds()) {
          ok = false;
          detail += c.name + " fails at " + c.first_failure.value_or("?") + "; ";
        }
      }
      if (ok) {
        detail = str(checks.size()) + " identity families, " + str(total)
                 + " instances";
      }
      return {"proof-identities", t.n(), ok, detail};
    }

    std::string describe_lattice(std::vector<Congruence> const& lattice) {
      if (lattice.size() > 8) {
        return str(lattice.size()) + " congruences";
      }
      std::string out;
      for (Congruence const& c : lattice) {
        out += (out.empty() ? "" : ", ") + str(c.number_of_classes());
      }
      return str(lattice.size()) + " congruences with class counts [" + out
             + "]";
    }

    VerificationCheck congruence_check(NearSemiringTable const&       t,
                                       std::vector<Congruence> const& lattice) {
      auto const mode     = CompatibilityMode::two_sided;
      auto const expected = std::vector<Congruence>{
          Congruence::equality(t.size(), mode),
          nonzero_collapse(t, mode),
          Congruence::universal(t.size(), mode)};
      bool ok = lattice == expected;
      for (Congruence const& c : lattice) {
        ok = ok && is_compatible(t, c);
      }
      std::set<std::vector<Index>> ideals;
      for (Congruence const& c : lattice) {
        ideals.insert(kernel(c, t));
      }
      return {"congruence-theorem", t.n(), ok,
              describe_lattice(lattice) + "; " + str(ideals.size())
                  + " distinct ideals"};
    }

    VerificationCheck right_ideal_check(NearSemiringTable const&       t,
                                        std::vector<Congruence> const& lattice) {
      std::set<std::vector<Index>> kernels;
      for (Congruence const& c : lattice) {
        kernels.insert(kernel(c, t));
      }
      std::vector<Index> all(t.size());
      for (Index i = 0; i < t.size(); ++i) {
        all[i] = i;
      }
      bool const ok = kernels == std::set<std::vector<Index>>{{t.zero()}, all};
      return {"rideal-theorem", t.n(), ok,
              describe_lattice(lattice) + "; kernels of sizes "
                  + [&] {
                      std::string s;
                      for (auto const& k : kernels) {
                        s += (s.empty() ? "" : ", ") + str(k.size());
                      }
                      return s;
                    }()};
    }

    VerificationCheck collapse_lemma_check(NearSemiringTable const& t) {
      auto const      mode     = CompatibilityMode::plus_only;
      Congruence const collapse = nonzero_collapse(t, mode);
      Index const      theta    = *t.xi_theta();
      BrandtSemigroup const b(t.n());
      bool             ok        = is_compatible(t, collapse);
      std::size_t      constants = 0;
      std::string      detail;
      for (Index f = 1; f < t.size(); ++f) {
        if (!std::holds_alternative<canonical::Const>(
                classify(b, t.element(f).map()))) {
          continue;
        }
        ++constants;
        if (congruence_closure(t, {{f, theta}}, mode) != collapse) {
          ok = false;
          detail += t.name(f) + " ~ c:t does not generate the collapse; ";
        }
      }
      // Anything strictly coarser relates 0 to a nonzero element.
      for (Index a = 1; a < t.size(); ++a) {
        if (!congruence_closure(t, collapse, {{t.zero(), a}}).is_universal()) {
          ok = false;
          detail += "collapse + (0, " + t.name(a) + ") is not universal; ";
        }
      }
      if (ok) {
        detail = "all " + str(constants)
                 + " full-support constants f: (f, c:t) generates "
                   "(A+ x A+) u {(0,0)}, whose only proper extension is "
                   "universal";
      }
      return {"plus-collapse-lemma", t.n(), ok && constants == t.n() * t.n(),
              detail};
    }

    VerificationCheck constants_check(NearSemiringTable const& t) {
      ActionStructure const C    = build_constant_action(t);
      MonogenicResult const mono = is_strongly_monogenic(C);
      std::vector<Index> const zero_only{t.zero()};
      bool                     ok = mono.holds;
      std::vector<std::size_t> carrier;
      for (std::size_t s = 0; s < C.size(); ++s) {
        carrier.push_back(s);
        if (s != 0) {
          ok = ok && annihilator(C, s) == zero_only
               && orbit(C, s).size() == C.size();
        }
      }
      ok       = ok && annihilator(C, carrier) == zero_only;
      auto subs = n_subsemigroups(C);
      ok = ok && subs.size() == 2 && subs[0] == std::vector<std::size_t>{0}
           && subs[1] == carrier;
      return {"annihilator-C", t.n(), ok,
              "|C| = " + str(C.size()) + ", " + str(mono.generators)
                  + " generators, A(g) = {0} for nonzero g, A(C) = {0}, "
                  + str(subs.size()) + " N-subsemigroups"};
    }

    VerificationCheck left_identity_check(NearSemiringTable const& t) {
      auto const r = has_left_identity(t);
      return {"left-identity", t.n(), !r.identity.has_value(),
              r.identity ? "left identity " + t.name(*r.identity)
                         : "none of the " + str(r.counterexamples.size())
                               + " elements is a left identity"};
    }

    VerificationCheck radicals_check(NearSemiringTable const&       t,
                                     std::vector<Congruence> const& right) {
      RadicalReport const r
          = assemble_radical_report(t.n(), compute_radical_premises(t, right));
      bool                ok = r.complete();
      for (RadicalEntry const& e : r.J) {
        ok = ok && e.value == RadicalValue::zero_ideal;
      }
      for (RadicalEntry const& e : r.R) {
        bool const low = e.name == "R0" || e.name == "R1";
        ok = ok && e.value == (low ? RadicalValue::zero_ideal : RadicalValue::whole);
      }
      std::string detail = str(r.J.size()) + " J radicals = {0}, R0 = R1 = {0}, "
                           "R2 = R3 = N; " + str(r.premises.size()) + " premises";
      if (!ok) {
        detail = "failed premises:";
        for (auto const& id : r.failed_premises()) {
          detail += " " + id;
        }
      }
      return {"radicals", t.n(), ok, detail};
    }
  }  // namespace

  VerificationReport verify_all(NearSemiringTable const& t) {
    VerificationReport out;
    out.checks.push_back(count_check(t));
    out.checks.push_back(laws_check(t));
    if (t.n() < 2) {
      return out;
    }
    out.checks.push_back(right_distributivity_check(t));
    out.checks.push_back(identities_check(t));
    out.checks.push_back(
        congruence_check(t, congruence_lattice(t, CompatibilityMode::two_sided)));
    auto const right = congruence_lattice(t, CompatibilityMode::right_action);
    out.checks.push_back(right_ideal_check(t, right));
    out.checks.push_back(collapse_lemma_check(t));
    out.checks.push_back(constants_check(t));
    out.checks.push_back(left_identity_check(t));
    out.checks.push_back(radicals_check(t, right));
    return out;
  }

}  // namespace brandt
