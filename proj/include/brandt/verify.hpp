#ifndef BRANDT_VERIFY_HPP_
#define BRANDT_VERIFY_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "brandt/near_semiring.hpp"

namespace brandt {

  struct VerificationCheck {
    std::string id;
    std::size_t n = 0;
    bool        passed = false;
    std::string detail;
  };

  struct VerificationReport {
    std::vector<VerificationCheck> checks;

    [[nodiscard]] bool passed() const;
  };

  //! Recompute every classification result for the algebra `t` and compare
  //! it with the expected value.  The algebra-wide theorems (congruences,
  //! right ideals, radicals, ...) are checked for n >= 2; for n = 1 only
  //! the element list and the laws are checked.
  VerificationReport verify_all(NearSemiringTable const& t);

}  // namespace brandt

#endif  // BRANDT_VERIFY_HPP_
