#ifndef BRANDT_CONGRUENCE_HPP_
#define BRANDT_CONGRUENCE_HPP_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "brandt/near_semiring.hpp"

namespace brandt {

  //! Which translations a congruence must respect.
  enum class CompatibilityMode {
    plus_only,     // a ~ b => a + c ~ b + c and c + a ~ c + b
    right_action,  // plus_only, and a ~ b => ac ~ bc
    two_sided      // right_action, and a ~ b => ca ~ cb
  };

  //! "plus", "right", "twosided".
  std::string to_string(CompatibilityMode mode);
  //! Inverse of to_string; throws InvalidArgument.
  CompatibilityMode mode_from_string(std::string const& s);

  //! An equivalence on the indices of a NearSemiringTable, stored as the
  //! array sending every index to the least index in its class.
  class Congruence {
   public:
    //! Throws InvalidArgument if `labels` is not a canonical class array.
    Congruence(std::vector<Index> labels, CompatibilityMode mode);

    static Congruence equality(std::size_t size, CompatibilityMode mode);
    static Congruence universal(std::size_t size, CompatibilityMode mode);

    [[nodiscard]] CompatibilityMode mode() const noexcept {
      return _mode;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return _labels.size();
    }
    [[nodiscard]] std::vector<Index> const& labels() const noexcept {
      return _labels;
    }
    [[nodiscard]] Index label(Index a) const noexcept {
      return _labels[a];
    }
    [[nodiscard]] bool related(Index a, Index b) const noexcept {
      return _labels[a] == _labels[b];
    }
    [[nodiscard]] std::size_t number_of_classes() const noexcept;
    [[nodiscard]] bool        is_equality() const noexcept;
    [[nodiscard]] bool        is_universal() const noexcept;
    //! Classes in order of their least members.
    [[nodiscard]] std::vector<std::vector<Index>> classes() const;
    //! Pairs (a, label(a)) for a != label(a); they generate the partition.
    [[nodiscard]] std::vector<std::pair<Index, Index>> generating_pairs() const;
    //! Every pair of this is a pair of `that`.
    [[nodiscard]] bool is_finer_than(Congruence const& that) const noexcept;

    bool operator==(Congruence const& that) const noexcept {
      return _labels == that._labels;
    }

   private:
    std::vector<Index> _labels;
    CompatibilityMode  _mode;
  };

  //! Least congruence of the given mode containing `pairs`.
  //!
  //! Union-find with a merge worklist: every pair that merges two classes
  //! enqueues its translates by every element.
  Congruence congruence_closure(NearSemiringTable const&                  t,
                                std::vector<std::pair<Index, Index>> const& pairs,
                                CompatibilityMode                         mode);

  //! Least congruence containing `base` (already a congruence of the mode)
  //! and `pairs`.
  Congruence congruence_closure(NearSemiringTable const&                  t,
                                Congruence const&                         base,
                                std::vector<std::pair<Index, Index>> const& pairs);

  //! Least congruence containing both.  Throws InvalidArgument if the modes
  //! differ.
  Congruence join(NearSemiringTable const& t,
                  Congruence const&        x,
                  Congruence const&        y);

  //! Direct check, independent of the closure bookkeeping, that `c` is an
  //! equivalence compatible with every translation of its mode.
  bool is_compatible(NearSemiringTable const& t, Congruence const& c);

  //! {closure({(a, b)}) : a < b}, duplicate-free, in lattice order.
  std::vector<Congruence> principal_congruences(NearSemiringTable const& t,
                                                CompatibilityMode        mode);

  //! Every congruence of the given mode, finest first: ordered by
  //! decreasing number of classes, then by class array.
  std::vector<Congruence> congruence_lattice(NearSemiringTable const& t,
                                             CompatibilityMode        mode);

  //! The class of the zero.
  std::vector<Index> kernel(Congruence const& c, NearSemiringTable const& t);

  //! (A+ x A+) u {(0, 0)}: all nonzero elements in one class.
  Congruence nonzero_collapse(NearSemiringTable const& t,
                              CompatibilityMode        mode);

}  // namespace brandt

#endif  // BRANDT_CONGRUENCE_HPP_
