#ifndef BRANDT_MAP_TABLE_HPP_
#define BRANDT_MAP_TABLE_HPP_

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "brandt/brandt_semigroup.hpp"

namespace brandt {

  //! A total map B_n -> B_n, stored as the image code of every code.
  //!
  //! Arguments are written on the left: `compose(f, g)` is "apply f, then g",
  //! so that x(fg) = (xf)g.
  class MapTable {
   public:
    //! Throws InvalidArgument unless entries.size() == n^2 + 1 and every
    //! entry is a valid code.
    MapTable(std::size_t n, std::vector<Code> entries);

    static MapTable constant(BrandtSemigroup const& b, Code c);
    static MapTable identity(BrandtSemigroup const& b);

    [[nodiscard]] std::size_t n() const noexcept {
      return _n;
    }
    [[nodiscard]] Code operator[](Code x) const noexcept {
      return _entries[x];
    }
    [[nodiscard]] std::span<Code const> entries() const noexcept {
      return _entries;
    }
    [[nodiscard]] std::size_t hash() const noexcept;

    bool operator==(MapTable const&) const = default;
    auto operator<=>(MapTable const& that) const {
      return _entries <=> that._entries;
    }

   private:
    std::size_t       _n;
    std::vector<Code> _entries;
  };

  struct MapTableHash {
    std::size_t operator()(MapTable const& f) const noexcept {
      return f.hash();
    }
  };

  //! x(f + g) = xf + xg.
  MapTable map_add(BrandtSemigroup const& b, MapTable const& f,
                   MapTable const& g);

  //! x(fg) = (xf)g.
  MapTable map_compose(MapTable const& f, MapTable const& g);

  //! Codes x with xf != theta, in increasing order.
  std::vector<Code> support(MapTable const& f);

  //! True iff (a + b)f = af + bf for all a, b.
  bool is_endomorphism(BrandtSemigroup const& b, MapTable const& f);

  ////////////////////////////////////////////////////////////////////////
  // Canonical forms of the elements of A+(B_n)
  ////////////////////////////////////////////////////////////////////////

  namespace canonical {

    //! The constant map onto theta.
    struct ConstTheta {
      auto operator<=>(ConstTheta const&) const = default;
    };

    //! The constant map onto (p, q).
    struct Const {
      std::size_t p, q;
      auto        operator<=>(Const const&) const = default;
    };

    //! The map sending (k, l) to (p, q) and everything else to theta.
    struct Singleton {
      std::size_t k, l, p, q;
      auto        operator<=>(Singleton const&) const = default;
    };

    //! The map sending (i, p) to (i sigma, q) for all i, everything else to
    //! theta.
    struct NSupport {
      std::size_t p, q;
      Permutation sigma;
      auto        operator<=>(NSupport const&) const = default;
    };

    //! A map of none of the shapes above.
    struct Other {
      auto operator<=>(Other const&) const = default;
    };

  }  // namespace canonical

  using CanonicalForm = std::variant<canonical::ConstTheta,
                                     canonical::Const,
                                     canonical::Singleton,
                                     canonical::NSupport,
                                     canonical::Other>;

  //! Recognise which canonical shape `f` has.  For n = 1 the singleton map
  //! (1,1) -> (1,1) coincides with (1, 1; id) and is reported as NSupport.
  CanonicalForm classify(BrandtSemigroup const& b, MapTable const& f);

  //! Build the table of a canonical form.  Throws InvalidArgument for Other
  //! or for indices outside [n].
  MapTable realize(BrandtSemigroup const& b, CanonicalForm const& c);

  //! Stable element names: "c:t", "c:p,q", "s:k,l>p,q", "n:p,q;word".
  //! Throws InvalidArgument for Other.
  std::string canonical_name(CanonicalForm const& c);

  //! Inverse of canonical_name (not validated against any n).
  CanonicalForm parse_canonical_name(std::string const& name);

  [[nodiscard]] inline bool is_other(CanonicalForm const& c) noexcept {
    return std::holds_alternative<canonical::Other>(c);
  }

}  // namespace brandt

#endif  // BRANDT_MAP_TABLE_HPP_
