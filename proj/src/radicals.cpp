#include "brandt/radicals.hpp"

#include <algorithm>
#include <map>

#include "brandt/congruence.hpp"
#include "brandt/error.hpp"
#include "brandt/structure.hpp"

namespace brandt {

  std::string to_string(RadicalValue v) {
    return v == RadicalValue::zero_ideal ? "{0}" : "N";
  }

  bool RadicalReport::complete() const {
    auto has_value = [](RadicalEntry const& e) { return e.value.has_value(); };
    return std::all_of(J.begin(), J.end(), has_value)
           && std::all_of(R.begin(), R.end(), has_value)
           && failed_premises().empty();
  }

  std::vector<std::string> RadicalReport::failed_premises() const {
    std::vector<std::string> out;
    for (Premise const& p : premises) {
      if (!p.holds) {
        out.push_back(p.id);
      }
    }
    return out;
  }

  Premise const& RadicalReport::premise(std::string const& id) const {
    for (Premise const& p : premises) {
      if (p.id == id) {
        return p;
      }
    }
    throw InvalidArgument("no premise \"" + id + "\"");
  }

  std::vector<std::pair<int, int>> j_radical_types() {
    std::vector<std::pair<int, int>> out;
    for (int nu = 0; nu <= 1; ++nu) {
      for (int mu = 0; mu <= 3; ++mu) {
        out.emplace_back(nu, mu);
      }
    }
    out.emplace_back(2, 0);
    out.emplace_back(2, 1);
    return out;
  }

  namespace {
    std::string join_names(NearSemiringTable const&  t,
                           std::vector<Index> const& xs) {
      std::string out = "{";
      for (std::size_t i = 0; i < xs.size(); ++i) {
        out += (i ? ", " : "") + t.name(xs[i]);
      }
      return out + "}";
    }

    std::string j_name(std::pair<int, int> type) {
      return "(" + std::to_string(type.first) + ","
             + std::to_string(type.second) + ")";
    }

    // A -> B: the value of A is contained in the value of B.
    std::vector<std::pair<std::string, std::string>> containment_arrows() {
      return {{"(2,0)", "(2,1)"}, {"(1,0)", "(1,1)"}, {"(1,0)", "(2,0)"},
              {"(1,1)", "(2,1)"}, {"(1,1)", "(1,3)"}, {"(1,2)", "(1,3)"},
              {"(0,0)", "(0,1)"}, {"(0,0)", "(1,0)"}, {"(0,0)", "R1"},
              {"(0,1)", "(1,1)"}, {"(0,1)", "(0,3)"}, {"(0,2)", "(0,3)"},
              {"(0,2)", "(1,2)"}, {"(0,3)", "(1,3)"}, {"R0", "R1"},
              {"R1", "R3"},       {"R1", "(1,1)"},    {"R2", "R3"}};
    }
  }  // namespace

  std::vector<Premise> compute_radical_premises(NearSemiringTable const& t) {
    return compute_radical_premises(
        t, congruence_lattice(t, CompatibilityMode::right_action));
  }

  std::vector<Premise>
  compute_radical_premises(NearSemiringTable const&       t,
                           std::vector<Congruence> const& right) {
    for (Congruence const& c : right) {
      if (c.mode() != CompatibilityMode::right_action || c.size() != t.size()) {
        throw InvalidArgument("expected the right-action congruences of the "
                              "table");
      }
    }
    std::vector<Premise> out;
    std::vector<Index>   zero_only{t.zero()};
    std::vector<Index>   everything(t.size());
    for (Index i = 0; i < t.size(); ++i) {
      everything[i] = i;
    }

    // The N-semigroup C.
    std::optional<ActionStructure> C;
    try {
      C = build_constant_action(t);
      out.push_back({"action-axioms",
                     "C = {0} u constants is an N-semigroup under composition",
                     true,
                     std::to_string(C->size()) + " elements"});
    } catch (InvariantViolation const& e) {
      out.push_back({"action-axioms",
                     "C = {0} u constants is an N-semigroup under composition",
                     false,
                     e.what()});
      return out;
    }

    MonogenicResult const mono = is_strongly_monogenic(*C);
    out.push_back({"strongly-monogenic",
                   "C is strongly monogenic: gN = C for every nonzero g in C, "
                   "and 0N = {0}",
                   mono.holds,
                   mono.witness ? std::optional<std::string>(
                       "generator " + C->labels[*mono.witness] + "; "
                       + std::to_string(mono.generators) + " of "
                       + std::to_string(C->size() - 1) + " nonzero elements generate")
                                : std::nullopt});

    bool                       all_trivial = true;
    std::optional<std::string> bad_annihilator;
    std::vector<std::size_t>   carrier;
    std::vector<Index>         intersection = everything;
    for (std::size_t s = 0; s < C->size(); ++s) {
      carrier.push_back(s);
      std::vector<Index> const ann = annihilator(*C, s);
      std::vector<Index>       meet;
      std::set_intersection(intersection.begin(), intersection.end(),
                            ann.begin(), ann.end(), std::back_inserter(meet));
      intersection = std::move(meet);
      if (s != 0 && ann != zero_only) {
        all_trivial = false;
        if (!bad_annihilator) {
          bad_annihilator = "A(" + C->labels[s] + ") = " + join_names(t, ann);
        }
      }
    }
    out.push_back({"annihilator-elements",
                   "A(g) = {0} for every nonzero g in C",
                   all_trivial,
                   bad_annihilator});

    std::vector<Index> const direct = annihilator(*C, carrier);
    out.push_back({"annihilator-C",
                   "A(C) = {0}, both as the intersection of the A(g) and as "
                   "{a : Ca = 0}",
                   direct == zero_only && intersection == direct,
                   "A(C) = " + join_names(t, direct)});

    auto const subs = n_subsemigroups(*C);
    out.push_back({"subsemigroups-C",
                   "{0} and C are the only N-subsemigroups of C, so {0} is the "
                   "maximal proper one",
                   subs.size() == 2 && subs[0].size() == 1
                       && subs[1].size() == C->size(),
                   std::to_string(subs.size()) + " N-subsemigroups"});

    // Right ideals: zero classes of the right-action congruences.
    std::vector<std::vector<Index>> kernels;
    for (Congruence const& c : right) {
      kernels.push_back(kernel(c, t));
    }
    std::sort(kernels.begin(), kernels.end());
    kernels.erase(std::unique(kernels.begin(), kernels.end()), kernels.end());
    bool const only_trivial_ideals
        = kernels
          == std::vector<std::vector<Index>>{zero_only, everything};
    out.push_back({"right-ideals",
                   "the zero classes of the right-action congruences of N are "
                   "exactly {0} and N",
                   only_trivial_ideals,
                   std::to_string(right.size()) + " right-action congruences, "
                       + std::to_string(kernels.size()) + " distinct kernels"});
    out.push_back({"maximal-right-ideal",
                   "{0} is a maximal right ideal (the only right ideals are {0} "
                   "and N, and N != {0})",
                   only_trivial_ideals && t.size() > 1,
                   std::nullopt});

    // Operational modularity: the right-action congruence
    // (A+ x A+) u {(0, 0)} has kernel {0}, and some u has ux ~ x for all x.
    Congruence const collapse
        = nonzero_collapse(t, CompatibilityMode::right_action);
    bool const collapse_listed
        = std::find(right.begin(), right.end(), collapse) != right.end();
    auto const                 u = modularity_witness(collapse, t);
    std::optional<std::string> modular;
    if (!collapse_listed) {
      modular = "(A+ x A+) u {(0,0)} is not a right-action congruence";
    } else if (u) {
      modular = "u = " + t.name(*u) + " for (A+ x A+) u {(0,0)}";
    }
    out.push_back({"modular-zero-ideal",
                   "{0} is modular (operational surrogate: the right-action "
                   "congruence (A+ x A+) u {(0,0)} has kernel {0} and some u "
                   "with ux ~ x for all x)",
                   collapse_listed && kernel(collapse, t) == zero_only
                       && u.has_value(),
                   modular});

    LeftIdentityResult const left = has_left_identity(t);
    std::optional<std::string> left_witness;
    if (left.identity) {
      left_witness = "left identity " + t.name(*left.identity);
    } else if (!left.counterexamples.empty()) {
      auto [u, x]  = left.counterexamples.front();
      left_witness = t.name(u) + " * " + t.name(x) + " = "
                     + t.name(t.mul(u, x)) + " != " + t.name(x) + " (one of "
                     + std::to_string(left.counterexamples.size())
                     + " counterexamples)";
    }
    out.push_back({"left-identity",
                   "N has no left identity",
                   !left.identity.has_value(),
                   left_witness});

    auto const equality = Congruence::equality(t.size(),
                                               CompatibilityMode::plus_only);
    auto const lambda_u = modularity_witness(equality, t);
    out.push_back({"lambda-zero-not-modular",
                   "the identity morphism of (N, +) (from the equality "
                   "congruence) is not modular (operational surrogate: no u "
                   "with ux = x for all x)",
                   !lambda_u.has_value(),
                   lambda_u ? std::optional<std::string>("u = " + t.name(*lambda_u))
                            : std::nullopt});
    return out;
  }

  RadicalReport assemble_radical_report(std::size_t          n,
                                        std::vector<Premise> premises) {
    RadicalReport out;
    out.n        = n;
    out.premises = std::move(premises);

    std::map<std::string, bool> holds;
    for (Premise const& p : out.premises) {
      holds[p.id] = p.holds;
    }
    auto entry = [&](std::string                     name,
                     std::vector<std::string> const& ids,
                     RadicalValue                    value) {
      RadicalEntry e{std::move(name), std::nullopt, ids};
      bool ok = std::all_of(ids.begin(), ids.end(), [&](std::string const& id) {
        auto it = holds.find(id);
        return it != holds.end() && it->second;
      });
      if (ok) {
        e.value = value;
      }
      return e;
    };

    std::vector<std::string> const j_ids{"action-axioms",
                                         "strongly-monogenic",
                                         "annihilator-elements",
                                         "annihilator-C",
                                         "subsemigroups-C",
                                         "right-ideals",
                                         "maximal-right-ideal"};
    for (auto type : j_radical_types()) {
      out.J.push_back(entry(j_name(type), j_ids, RadicalValue::zero_ideal));
    }
    std::vector<std::string> const r01_ids{
        "right-ideals", "maximal-right-ideal", "modular-zero-ideal"};
    std::vector<std::string> const r23_ids{"right-ideals",
                                           "left-identity",
                                           "lambda-zero-not-modular"};
    out.R.push_back(entry("R0", r01_ids, RadicalValue::zero_ideal));
    out.R.push_back(entry("R1", r01_ids, RadicalValue::zero_ideal));
    out.R.push_back(entry("R2", r23_ids, RadicalValue::whole));
    out.R.push_back(entry("R3", r23_ids, RadicalValue::whole));

    // Containment order between the emitted values.
    std::map<std::string, RadicalValue> values;
    for (auto const* list : {&out.J, &out.R}) {
      for (RadicalEntry const& e : *list) {
        if (e.value) {
          values[e.name] = *e.value;
        }
      }
    }
    std::optional<std::string> broken;
    for (auto const& [from, to] : containment_arrows()) {
      auto f = values.find(from);
      auto g = values.find(to);
      if (f != values.end() && g != values.end()
          && f->second == RadicalValue::whole
          && g->second == RadicalValue::zero_ideal) {
        broken = from + " = N is not contained in " + to + " = {0}";
        break;
      }
    }
    out.premises.push_back({"containment-order",
                            "the emitted values respect the containment order "
                            "between the fourteen radicals",
                            !broken.has_value(),
                            broken});

    out.notes = {
        "J values: C is taken to be of type (nu, mu) for every listed pair "
        "(not re-derived here); each J(nu, mu) is an intersection of "
        "annihilators containing A(C) = {0}, and every annihilator contains 0, "
        "so J(nu, mu) = {0}.",
        "R0, R1: {0} is a maximal right ideal and is modular, so the "
        "intersection of the modular maximal right ideals is {0}.",
        "R2, R3: lambda-modularity is checked only for the normal "
        "subsemigroup {0}; no maximal lambda-modular right ideal exists, so "
        "the empty intersection gives N.",
        "Modularity premises are operational surrogates, not the general "
        "definitions."};
    return out;
  }

}  // namespace brandt
