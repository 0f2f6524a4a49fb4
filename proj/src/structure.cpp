#include "brandt/structure.hpp"

#include <algorithm>
#include <set>

#include "brandt/error.hpp"

namespace brandt {

  void validate_action(ActionStructure const& act, NearSemiringTable const& t) {
    std::size_t const s_size = act.size();
    auto const        m      = static_cast<Index>(t.size());
    auto fail = [&](std::string const& law, std::size_t s) {
      throw InvariantViolation(law + " fails for carrier element "
                               + act.labels.at(s));
    };
    if (s_size == 0 || act.algebra_size != m || act.plus.size() != s_size * s_size
        || act.act.size() != s_size * m) {
      throw InvariantViolation("malformed action structure");
    }
    for (std::size_t s = 0; s < s_size; ++s) {
      if (act.add(s, 0) != s || act.add(0, s) != s) {
        fail("0_S is an additive identity", s);
      }
      for (std::size_t u = 0; u < s_size; ++u) {
        for (std::size_t v = 0; v < s_size; ++v) {
          if (act.add(act.add(s, u), v) != act.add(s, act.add(u, v))) {
            fail("associativity of +", s);
          }
        }
      }
      if (act.apply(s, t.zero()) != 0) {
        fail("s0 = 0_S", s);
      }
      for (Index a = 0; a < m; ++a) {
        std::size_t const sa = act.apply(s, a);
        for (Index b = 0; b < m; ++b) {
          if (act.apply(s, t.add(a, b)) != act.add(sa, act.apply(s, b))) {
            fail("s(a + b) = sa + sb", s);
          }
          if (act.apply(s, t.mul(a, b)) != act.apply(sa, b)) {
            fail("s(ab) = (sa)b", s);
          }
        }
      }
    }
  }

  ActionStructure build_constant_action(NearSemiringTable const& t,
                                        std::vector<Index>* carrier_index) {
    BrandtSemigroup const b(t.n());
    std::vector<Index>    carrier{t.zero()};
    std::optional<Index>  theta;
    for (Index i = 1; i < t.size(); ++i) {
      CanonicalForm const c = classify(b, t.element(i).map());
      if (std::holds_alternative<canonical::Const>(c)) {
        carrier.push_back(i);
      } else if (std::holds_alternative<canonical::ConstTheta>(c)) {
        theta = i;
      }
    }
    if (!theta) {
      throw InvariantViolation("the theta constant is missing");
    }
    std::sort(carrier.begin() + 1, carrier.end(), [&](Index x, Index y) {
      return t.element(x).map() < t.element(y).map();
    });
    carrier.push_back(*theta);

    std::vector<std::size_t> slot(t.size(), carrier.size());
    for (std::size_t s = 0; s < carrier.size(); ++s) {
      slot[carrier[s]] = s;
    }
    auto at = [&](Index i) {
      if (slot[i] == carrier.size()) {
        throw InvariantViolation("C is not closed: " + t.name(i)
                                 + " is not a constant");
      }
      return slot[i];
    };

    ActionStructure out;
    out.algebra_size = t.size();
    for (Index i : carrier) {
      out.labels.push_back(t.name(i));
    }
    for (Index x : carrier) {
      for (Index y : carrier) {
        out.plus.push_back(at(t.add(x, y)));
      }
    }
    for (Index x : carrier) {
      for (Index a = 0; a < t.size(); ++a) {
        out.act.push_back(at(t.mul(x, a)));
      }
    }
    validate_action(out, t);
    if (carrier_index != nullptr) {
      *carrier_index = std::move(carrier);
    }
    return out;
  }

  ActionStructure build_regular_action(NearSemiringTable const& t) {
    ActionStructure out;
    out.algebra_size = t.size();
    for (Index i = 0; i < t.size(); ++i) {
      out.labels.push_back(t.name(i));
    }
    out.plus.assign(t.add_table().begin(), t.add_table().end());
    out.act.assign(t.mul_table().begin(), t.mul_table().end());
    return out;
  }

  std::vector<Index> annihilator(ActionStructure const& act, std::size_t s) {
    std::vector<Index> out;
    for (Index a = 0; a < act.algebra_size; ++a) {
      if (act.apply(s, a) == 0) {
        out.push_back(a);
      }
    }
    return out;
  }

  std::vector<Index> annihilator(ActionStructure const&          act,
                                 std::vector<std::size_t> const& subset) {
    std::vector<Index> out;
    for (Index a = 0; a < act.algebra_size; ++a) {
      if (std::all_of(subset.begin(), subset.end(), [&](std::size_t s) {
            return act.apply(s, a) == 0;
          })) {
        out.push_back(a);
      }
    }
    return out;
  }

  std::vector<std::size_t> orbit(ActionStructure const& act, std::size_t s) {
    std::set<std::size_t> out;
    for (Index a = 0; a < act.algebra_size; ++a) {
      out.insert(act.apply(s, a));
    }
    return {out.begin(), out.end()};
  }

  MonogenicResult is_strongly_monogenic(ActionStructure const& act) {
    MonogenicResult out;
    out.zero_orbit_trivial = orbit(act, 0) == std::vector<std::size_t>{0};
    bool all_generate      = true;
    for (std::size_t s = 1; s < act.size(); ++s) {
      if (orbit(act, s).size() == act.size()) {
        ++out.generators;
        if (!out.witness) {
          out.witness = s;
        }
      } else {
        all_generate = false;
      }
    }
    out.holds = out.zero_orbit_trivial && all_generate && act.size() > 1;
    return out;
  }

  std::vector<std::vector<std::size_t>>
  n_subsemigroups(ActionStructure const& act, std::size_t max_carrier) {
    std::size_t const size = act.size();
    if (size > max_carrier) {
      throw InvalidArgument("carrier of " + std::to_string(size)
                            + " elements is too large to enumerate");
    }
    using Subset = std::vector<char>;

    // Closure of `in` plus `extra` under + and the action.
    auto close = [&](Subset in, std::size_t extra) {
      std::vector<std::size_t> members;
      for (std::size_t s = 0; s < size; ++s) {
        if (in[s]) {
          members.push_back(s);
        }
      }
      auto push = [&](std::size_t s) {
        if (!in[s]) {
          in[s] = 1;
          members.push_back(s);
        }
      };
      push(extra);
      for (std::size_t i = 0; i < members.size(); ++i) {
        std::size_t const s = members[i];
        for (std::size_t j = 0; j <= i; ++j) {
          push(act.add(s, members[j]));
          push(act.add(members[j], s));
        }
        for (Index a = 0; a < act.algebra_size; ++a) {
          push(act.apply(s, a));
        }
      }
      return in;
    };

    std::set<Subset>   seen;
    std::vector<Subset> queue{close(Subset(size, 0), 0)};
    seen.insert(queue.front());
    // Every N-subsemigroup is reached from {0} by adding its elements one at
    // a time and closing.
    for (std::size_t q = 0; q < queue.size(); ++q) {
      for (std::size_t x = 0; x < size; ++x) {
        if (queue[q][x]) {
          continue;
        }
        Subset next = close(queue[q], x);
        if (seen.insert(next).second) {
          queue.push_back(std::move(next));
        }
      }
    }

    std::vector<std::vector<std::size_t>> out;
    for (Subset const& s : queue) {
      std::vector<std::size_t> members;
      for (std::size_t x = 0; x < size; ++x) {
        if (s[x]) {
          members.push_back(x);
        }
      }
      out.push_back(std::move(members));
    }
    std::sort(out.begin(), out.end(), [](auto const& x, auto const& y) {
      return x.size() != y.size() ? x.size() < y.size() : x < y;
    });
    return out;
  }

  LeftIdentityResult has_left_identity(NearSemiringTable const& t) {
    LeftIdentityResult out;
    auto const         m = static_cast<Index>(t.size());
    for (Index u = 0; u < m; ++u) {
      std::optional<Index> bad;
      for (Index x = 0; x < m && !bad; ++x) {
        if (t.mul(u, x) != x) {
          bad = x;
        }
      }
      if (!bad) {
        out.identity = u;
        out.counterexamples.clear();
        return out;
      }
      out.counterexamples.emplace_back(u, *bad);
    }
    return out;
  }

  std::optional<Index> modularity_witness(Congruence const&        c,
                                          NearSemiringTable const& t) {
    auto const m = static_cast<Index>(t.size());
    for (Index u = 0; u < m; ++u) {
      bool ok = true;
      for (Index x = 0; x < m && ok; ++x) {
        ok = c.related(t.mul(u, x), x);
      }
      if (ok) {
        return u;
      }
    }
    return std::nullopt;
  }

}  // namespace brandt
