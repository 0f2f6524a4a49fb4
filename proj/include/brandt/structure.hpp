#ifndef BRANDT_STRUCTURE_HPP_
#define BRANDT_STRUCTURE_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "brandt/congruence.hpp"
#include "brandt/near_semiring.hpp"

namespace brandt {

  //! A semigroup S with identity 0_S on which N acts from the right.
  //!
  //! Carrier elements are numbered 0..size()-1 with 0 the identity 0_S;
  //! `labels` holds a display name for each.
  struct ActionStructure {
    std::vector<std::string> labels;
    //! plus[s * size() + t] = s + t.
    std::vector<std::size_t> plus;
    //! act[s * |N| + a] = sa.
    std::vector<std::size_t> act;
    std::size_t              algebra_size = 0;

    [[nodiscard]] std::size_t size() const noexcept {
      return labels.size();
    }
    [[nodiscard]] std::size_t add(std::size_t s, std::size_t t) const {
      return plus[s * size() + t];
    }
    [[nodiscard]] std::size_t apply(std::size_t s, Index a) const {
      return act[s * algebra_size + a];
    }
  };

  //! Check that `act` is an N-semigroup for `t`: 0_S is an additive identity,
  //! + is associative, s(a + b) = sa + sb, s(ab) = (sa)b and s0 = 0_S.
  //! Throws InvariantViolation naming the first failure.
  void validate_action(ActionStructure const& act, NearSemiringTable const& t);

  //! The N-semigroup C: the zero together with the constant maps, acted on
  //! by composition.  Carrier order: 0, the constants onto pairs in
  //! lexicographic order, then the theta constant.  `carrier_index` receives
  //! the N-index of each carrier element when non-null.
  ActionStructure build_constant_action(NearSemiringTable const& t,
                                        std::vector<Index>* carrier_index
                                        = nullptr);

  //! N acting on N+ by right multiplication.
  ActionStructure build_regular_action(NearSemiringTable const& t);

  //! A(s) = {a : sa = 0_S}.
  std::vector<Index> annihilator(ActionStructure const& act, std::size_t s);

  //! A(T) = {a : Ta = 0_S}, computed directly.
  std::vector<Index> annihilator(ActionStructure const&          act,
                                 std::vector<std::size_t> const& subset);

  //! sN for a carrier element s, as a sorted carrier subset.
  std::vector<std::size_t> orbit(ActionStructure const& act, std::size_t s);

  struct MonogenicResult {
    bool                       holds = false;
    std::optional<std::size_t> witness;          // first nonzero generator
    std::size_t                generators  = 0;  // nonzero s with sN = S
    bool                       zero_orbit_trivial = false;  // 0N = {0}
  };

  //! Every nonzero s has sN = S, 0N = {0}, and there is a nonzero element.
  MonogenicResult is_strongly_monogenic(ActionStructure const& act);

  //! All N-subsemigroups: subsets T with 0_S in T, T + T in T and TN in T.
  //! Sorted by size, then lexicographically.  Throws InvalidArgument when
  //! the carrier has more than `max_carrier` elements.
  std::vector<std::vector<std::size_t>>
  n_subsemigroups(ActionStructure const& act, std::size_t max_carrier = 512);

  struct LeftIdentityResult {
    std::optional<Index> identity;
    //! For each u (when no identity exists): some x with ux != x.
    std::vector<std::pair<Index, Index>> counterexamples;
  };

  //! Search for u with ux = x for all x.
  LeftIdentityResult has_left_identity(NearSemiringTable const& t);

  //! Some u with (ux, x) in c for every x, if one exists.
  std::optional<Index> modularity_witness(Congruence const&        c,
                                          NearSemiringTable const& t);

}  // namespace brandt

#endif  // BRANDT_STRUCTURE_HPP_
