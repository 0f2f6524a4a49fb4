#ifndef BRANDT_IDENTITIES_HPP_
#define BRANDT_IDENTITIES_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "brandt/brandt_semigroup.hpp"
#include "brandt/near_semiring.hpp"

namespace brandt {

  //! Outcome of one family of table identities, quantified over all values
  //! of its free indices.
  struct IdentityCheck {
    std::string                name;
    std::size_t                instances = 0;
    std::size_t                failures  = 0;
    std::optional<std::string> first_failure;

    [[nodiscard]] bool holds() const noexcept {
      return failures == 0 && instances > 0;
    }
  };

  //! The map identities behind the collapse arguments for A+(B_n): each
  //! family is an equation between sums and products of constants,
  //! singleton maps and n-support maps.  Requires n >= 2.
  std::vector<IdentityCheck> collapse_identities(BrandtSemigroup const& b);

  struct RightDistributivityWitness {
    Index f, g, h;  // (g + h)f != gf + hf
  };

  //! First triple (in index order) where right distributivity fails.
  std::optional<RightDistributivityWitness>
  find_right_distributivity_failure(NearSemiringTable const& t);

}  // namespace brandt

#endif  // BRANDT_IDENTITIES_HPP_
