#ifndef BRANDT_RADICALS_HPP_
#define BRANDT_RADICALS_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "brandt/congruence.hpp"
#include "brandt/near_semiring.hpp"

namespace brandt {

  //! A machine-checked fact used to justify radical values.
  struct Premise {
    std::string                id;
    std::string                claim;
    bool                       holds = false;
    std::optional<std::string> witness;
  };

  enum class RadicalValue { zero_ideal, whole };

  //! "{0}" or "N".
  std::string to_string(RadicalValue v);

  struct RadicalEntry {
    std::string                 name;  // "(0,0)" ... "(2,1)", "R0" ... "R3"
    std::optional<RadicalValue> value;  // empty when a premise failed
    std::vector<std::string>    premise_ids;
  };

  struct RadicalReport {
    std::size_t               n = 0;
    std::vector<RadicalEntry> J;  // the ten (nu, mu) radicals
    std::vector<RadicalEntry> R;  // R0 .. R3
    std::vector<Premise>      premises;
    std::vector<std::string>  notes;

    //! Every radical has a value and every premise holds.
    [[nodiscard]] bool complete() const;
    //! Ids of the premises that failed.
    [[nodiscard]] std::vector<std::string> failed_premises() const;
    [[nodiscard]] Premise const&           premise(std::string const& id) const;
  };

  //! The (nu, mu) pairs of the J radicals: nu = 0, 1 with mu = 0..3, and
  //! nu = 2 with mu = 0, 1.
  std::vector<std::pair<int, int>> j_radical_types();

  //! Evaluate every premise on the tables.
  std::vector<Premise> compute_radical_premises(NearSemiringTable const& t);

  //! As above, reusing the already computed lattice of right-action
  //! congruences.
  std::vector<Premise>
  compute_radical_premises(NearSemiringTable const&       t,
                           std::vector<Congruence> const& right_lattice);

  //! Attach values to the radicals whose premises all hold, then check the
  //! emitted values against the radical containment order.
  RadicalReport assemble_radical_report(std::size_t          n,
                                        std::vector<Premise> premises);

  inline RadicalReport radical_report(NearSemiringTable const& t) {
    return assemble_radical_report(t.n(), compute_radical_premises(t));
  }

}  // namespace brandt

#endif  // BRANDT_RADICALS_HPP_
