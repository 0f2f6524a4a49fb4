#ifndef BRANDT_NEAR_SEMIRING_HPP_
#define BRANDT_NEAR_SEMIRING_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "brandt/brandt_semigroup.hpp"
#include "brandt/map_table.hpp"

namespace brandt {

  //! Index of an element of a NearSemiringTable.
  using Index = std::uint32_t;

  //! An element of N = A+(B_n) u {0}: the adjoined zero, or a map.
  class NsrElement {
   public:
    NsrElement() = default;  // the adjoined zero
    explicit NsrElement(MapTable map) : _map(std::move(map)) {}

    [[nodiscard]] bool is_zero() const noexcept {
      return !_map.has_value();
    }
    //! Only valid when !is_zero().
    [[nodiscard]] MapTable const& map() const {
      return *_map;
    }

    bool operator==(NsrElement const&) const = default;

   private:
    std::optional<MapTable> _map;
  };

  //! Sizes of the three shape classes of A+(B_n).
  struct Breakdown {
    std::size_t constants  = 0;  // including the theta constant
    std::size_t singletons = 0;
    std::size_t n_support  = 0;
    std::size_t other      = 0;

    bool operator==(Breakdown const&) const = default;
  };

  //! A finite zero-symmetric near-semiring given by its Cayley tables.
  //!
  //! The constructor only checks shapes; call `validate` (or use
  //! `build_nsr` / `load_cache`, which do) to check the algebraic laws.
  class NearSemiringTable {
   public:
    NearSemiringTable(std::size_t             n,
                      std::vector<NsrElement> elements,
                      std::vector<Index>      add,
                      std::vector<Index>      mul);

    [[nodiscard]] std::size_t n() const noexcept {
      return _n;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return _elements.size();
    }
    [[nodiscard]] Index add(Index a, Index b) const noexcept {
      return _add[a * size() + b];
    }
    [[nodiscard]] Index mul(Index a, Index b) const noexcept {
      return _mul[a * size() + b];
    }
    [[nodiscard]] NsrElement const& element(Index i) const {
      return _elements.at(i);
    }
    [[nodiscard]] std::vector<NsrElement> const& elements() const noexcept {
      return _elements;
    }
    [[nodiscard]] std::vector<Index> const& add_table() const noexcept {
      return _add;
    }
    [[nodiscard]] std::vector<Index> const& mul_table() const noexcept {
      return _mul;
    }
    [[nodiscard]] Index zero() const noexcept {
      return 0;
    }
    //! Index of the theta constant, if present.
    [[nodiscard]] std::optional<Index> xi_theta() const noexcept {
      return _xi_theta;
    }

    //! Canonical name of element i ("0" for the zero).
    [[nodiscard]] std::string name(Index i) const;
    //! Index of a named element; throws InvalidArgument if absent.
    [[nodiscard]] Index index_of(std::string const& name) const;
    //! Index of a map; throws InvalidArgument if absent.
    [[nodiscard]] Index index_of(MapTable const& f) const;

    [[nodiscard]] Breakdown breakdown() const;

   private:
    std::size_t              _n;
    std::vector<NsrElement>  _elements;
    std::vector<Index>       _add;
    std::vector<Index>       _mul;
    std::optional<Index>     _xi_theta;
    std::vector<std::string> _names;
  };

  //! Check every law of a zero-symmetric near-semiring, plus (when every
  //! nonzero element is a map) that the tables agree with pointwise addition
  //! and composition.  Throws InvariantViolation naming the first failure.
  void validate(NearSemiringTable const& t);

  //! Semigroup endomorphisms of B_n in lexicographic order.
  std::vector<MapTable> endomorphisms(BrandtSemigroup const& b);

  //! {g + xi_c : g in End(B_n), c in B_n}, sorted and duplicate-free.
  std::vector<MapTable> affine_maps(BrandtSemigroup const& b);

  //! Closure of `gens` under map_add, sorted.  Throws InvalidArgument if
  //! gens is empty.
  std::vector<MapTable> additive_closure(BrandtSemigroup const&       b,
                                         std::vector<MapTable> const& gens);

  //! (n! + 1) n^2 + n^4 + 1, the size of A+(B_n) for n >= 2.  Throws
  //! InvalidArgument if the value does not fit in 64 bits.
  std::uint64_t a_plus_size_formula(std::size_t n);

  //! Build N = A+(B_n) u {0} with its tables.  Elements are ordered: zero,
  //! then the theta constant, then the remaining constants, singleton maps
  //! and n-support maps, each group in lexicographic order of its indices.
  //! Throws InvariantViolation if generation produces a map of unknown shape
  //! or the tables break a law.
  NearSemiringTable build_nsr(std::size_t n);

}  // namespace brandt

#endif  // BRANDT_NEAR_SEMIRING_HPP_
