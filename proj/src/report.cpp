#include "brandt/report.hpp"

#include <set>

#include "brandt/structure.hpp"

namespace brandt {

  using nlohmann::json;

  json names_json(NearSemiringTable const& t, std::vector<Index> const& xs) {
    json out = json::array();
    for (Index x : xs) {
      out.push_back(t.name(x));
    }
    return out;
  }

  json generation_json(NearSemiringTable const& t,
                       std::size_t              endomorphism_count,
                       std::size_t              affine_count) {
    Breakdown const b = t.breakdown();
    json            elements = json::array();
    for (Index i = 1; i < t.size(); ++i) {
      elements.push_back(t.name(i));
    }
    return {{"n", t.n()},
            {"count", t.size() - 1},
            {"total", t.size()},
            {"breakdown",
             {{"constants", b.constants},
              {"singletons", b.singletons},
              {"n_support", b.n_support}}},
            {"endomorphisms", endomorphism_count},
            {"affine", affine_count},
            {"formula",
             t.n() >= 2 ? json(a_plus_size_formula(t.n())) : json(nullptr)},
            {"elements", std::move(elements)}};
  }

  json formula_json(std::size_t n) {
    std::uint64_t fact = 1;
    for (std::uint64_t i = 2; i <= n; ++i) {
      fact *= i;
    }
    std::uint64_t const sq = static_cast<std::uint64_t>(n) * n;
    return {{"n", n},
            {"formula_only", true},
            {"count", a_plus_size_formula(n)},
            {"total", a_plus_size_formula(n) + 1},
            {"breakdown",
             {{"constants", sq + 1},
              {"singletons", sq * sq},
              {"n_support", fact * sq}}}};
  }

  json endomorphisms_json(BrandtSemigroup const&       b,
                          std::vector<MapTable> const& endos) {
    json domain = json::array();
    for (std::size_t c = 0; c < b.size(); ++c) {
      domain.push_back(b.decode(static_cast<Code>(c)).to_string());
    }
    json maps = json::array();
    for (MapTable const& f : endos) {
      json images = json::array();
      for (Code c : f.entries()) {
        images.push_back(b.decode(c).to_string());
      }
      maps.push_back(std::move(images));
    }
    return {{"n", b.n()},
            {"count", endos.size()},
            {"domain", std::move(domain)},
            {"maps", std::move(maps)}};
  }

  json lattice_json(NearSemiringTable const&       t,
                    CompatibilityMode              mode,
                    std::vector<Congruence> const& lattice,
                    bool                           with_partitions) {
    json list = json::array();
    for (Congruence const& c : lattice) {
      json entry = {{"classes", c.number_of_classes()},
                    {"kernel", names_json(t, kernel(c, t))},
                    {"is_equality", c.is_equality()},
                    {"is_universal", c.is_universal()}};
      if (with_partitions) {
        json partition = json::array();
        for (auto const& cls : c.classes()) {
          partition.push_back(names_json(t, cls));
        }
        entry["partition"] = std::move(partition);
      }
      list.push_back(std::move(entry));
    }
    return {{"mode", to_string(mode)},
            {"count", lattice.size()},
            {"congruences", std::move(list)}};
  }

  json right_ideals_json(NearSemiringTable const&       t,
                         std::vector<Congruence> const& lattice) {
    std::set<std::vector<Index>> kernels;
    for (Congruence const& c : lattice) {
      kernels.insert(kernel(c, t));
    }
    json ideals = json::array();
    for (auto const& k : kernels) {
      ideals.push_back(names_json(t, k));
    }
    return {{"n", t.n()},
            {"congruences", lattice.size()},
            {"count", kernels.size()},
            {"right_ideals", std::move(ideals)}};
  }

  json annihilators_json(NearSemiringTable const& t) {
    ActionStructure const C    = build_constant_action(t);
    MonogenicResult const mono = is_strongly_monogenic(C);
    json                  per_element = json::array();
    std::vector<std::size_t> carrier;
    for (std::size_t s = 0; s < C.size(); ++s) {
      carrier.push_back(s);
      per_element.push_back({{"element", C.labels[s]},
                             {"annihilator", names_json(t, annihilator(C, s))}});
    }
    json subsemigroups = json::array();
    for (auto const& sub : n_subsemigroups(C)) {
      json names = json::array();
      for (std::size_t s : sub) {
        names.push_back(C.labels[s]);
      }
      subsemigroups.push_back(std::move(names));
    }
    return {{"n", t.n()},
            {"carrier", C.labels},
            {"annihilators", std::move(per_element)},
            {"annihilator_of_C", names_json(t, annihilator(C, carrier))},
            {"strongly_monogenic", mono.holds},
            {"generator",
             mono.witness ? json(C.labels[*mono.witness]) : json(nullptr)},
            {"n_subsemigroups", std::move(subsemigroups)}};
  }

  json radicals_json(RadicalReport const& r) {
    auto value = [](RadicalEntry const& e) {
      return e.value ? json(to_string(*e.value)) : json(nullptr);
    };
    json J = json::object();
    for (RadicalEntry const& e : r.J) {
      J[e.name] = value(e);
    }
    json R = json::object();
    for (RadicalEntry const& e : r.R) {
      R[e.name] = value(e);
    }
    json premises = json::array();
    for (Premise const& p : r.premises) {
      premises.push_back({{"claim", p.claim},
                          {"holds", p.holds},
                          {"witness", p.witness ? json(*p.witness) : json(nullptr)}});
    }
    return {{"n", r.n},
            {"J", std::move(J)},
            {"R", std::move(R)},
            {"premises", std::move(premises)},
            {"notes", r.notes}};
  }

  json verification_json(std::size_t n, VerificationReport const& r) {
    json checks = json::array();
    for (VerificationCheck const& c : r.checks) {
      checks.push_back({{"id", c.id},
                        {"n", c.n},
                        {"passed", c.passed},
                        {"detail", c.detail}});
    }
    return {{"n", n}, {"passed", r.passed()}, {"checks", std::move(checks)}};
  }

}  // namespace brandt
