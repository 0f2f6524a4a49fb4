#ifndef BRANDT_REPORT_HPP_
#define BRANDT_REPORT_HPP_

#include <cstddef>
#include <vector>

#include "json.hpp"

#include "brandt/congruence.hpp"
#include "brandt/near_semiring.hpp"
#include "brandt/radicals.hpp"
#include "brandt/verify.hpp"

namespace brandt {

  //! Names of a set of element indices.
  nlohmann::json names_json(NearSemiringTable const&  t,
                            std::vector<Index> const& xs);

  //! Element counts and names of N.
  nlohmann::json generation_json(NearSemiringTable const& t,
                                 std::size_t              endomorphism_count,
                                 std::size_t              affine_count);

  //! Counts from the size formula alone, for any n >= 2.
  nlohmann::json formula_json(std::size_t n);

  nlohmann::json endomorphisms_json(BrandtSemigroup const&       b,
                                    std::vector<MapTable> const& endos);

  //! {"mode", "count", "congruences": [{"classes", "kernel", "is_equality",
  //! "is_universal", "partition"}]}; "partition" is left out when
  //! `with_partitions` is false.
  nlohmann::json lattice_json(NearSemiringTable const&       t,
                              CompatibilityMode              mode,
                              std::vector<Congruence> const& lattice,
                              bool                           with_partitions);

  nlohmann::json right_ideals_json(NearSemiringTable const&       t,
                                   std::vector<Congruence> const& lattice);

  //! Annihilators and N-subsemigroups of the constant action C.
  nlohmann::json annihilators_json(NearSemiringTable const& t);

  //! {"n", "J", "R", "premises", "notes"}; a radical whose premises failed
  //! is reported as null.
  nlohmann::json radicals_json(RadicalReport const& r);

  nlohmann::json verification_json(std::size_t n, VerificationReport const& r);

  //! Partitions are printed in full up to this many elements.
  inline constexpr std::size_t partition_size_limit = 200;

}  // namespace brandt

#endif  // BRANDT_REPORT_HPP_
