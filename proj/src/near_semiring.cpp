#include "brandt/near_semiring.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>
#include <unordered_set>

#include "brandt/error.hpp"

namespace brandt {

  ////////////////////////////////////////////////////////////////////////
  // NearSemiringTable
  ////////////////////////////////////////////////////////////////////////

  NearSemiringTable::NearSemiringTable(std::size_t             n,
                                       std::vector<NsrElement> elements,
                                       std::vector<Index>      add,
                                       std::vector<Index>      mul)
      : _n(n),
        _elements(std::move(elements)),
        _add(std::move(add)),
        _mul(std::move(mul)) {
    std::size_t const m = _elements.size();
    if (m == 0 || !_elements[0].is_zero()) {
      throw InvalidArgument("element 0 of a near-semiring table must be zero");
    }
    if (_add.size() != m * m || _mul.size() != m * m) {
      throw InvalidArgument("Cayley tables must be " + std::to_string(m) + "x"
                            + std::to_string(m));
    }
    for (auto const* table : {&_add, &_mul}) {
      for (Index x : *table) {
        if (x >= m) {
          throw InvalidArgument("Cayley table entry " + std::to_string(x)
                                + " is out of range");
        }
      }
    }
    BrandtSemigroup const b(n);
    _names.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
      NsrElement const& e = _elements[i];
      if (e.is_zero()) {
        if (i != 0) {
          throw InvalidArgument("the zero occurs twice");
        }
        _names.emplace_back("0");
        continue;
      }
      if (e.map().n() != n) {
        throw InvalidArgument("element " + std::to_string(i)
                              + " is a map over the wrong B_n");
      }
      CanonicalForm const c = classify(b, e.map());
      if (std::holds_alternative<canonical::ConstTheta>(c)) {
        _xi_theta = static_cast<Index>(i);
      }
      _names.push_back(is_other(c) ? "?" + std::to_string(i)
                                   : canonical_name(c));
    }
  }

  std::string NearSemiringTable::name(Index i) const {
    return _names.at(i);
  }

  Index NearSemiringTable::index_of(std::string const& name) const {
    auto it = std::find(_names.begin(), _names.end(), name);
    if (it == _names.end()) {
      throw InvalidArgument("no element named \"" + name + "\"");
    }
    return static_cast<Index>(it - _names.begin());
  }

  Index NearSemiringTable::index_of(MapTable const& f) const {
    for (std::size_t i = 1; i < _elements.size(); ++i) {
      if (_elements[i].map() == f) {
        return static_cast<Index>(i);
      }
    }
    throw InvalidArgument("map is not an element of the near-semiring");
  }

  Breakdown NearSemiringTable::breakdown() const {
    BrandtSemigroup const b(_n);
    Breakdown             out;
    for (auto const& e : _elements) {
      if (e.is_zero()) {
        continue;
      }
      CanonicalForm const c = classify(b, e.map());
      switch (c.index()) {
        case 0:
        case 1:
          ++out.constants;
          break;
        case 2:
          ++out.singletons;
          break;
        case 3:
          ++out.n_support;
          break;
        default:
          ++out.other;
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // validate
  ////////////////////////////////////////////////////////////////////////

  namespace {
    [[noreturn]] void violated(NearSemiringTable const& t,
                               std::string const&       law,
                               std::initializer_list<Index> witness) {
      std::string msg = law + " fails at (";
      bool        first = true;
      for (Index i : witness) {
        msg += (first ? "" : ", ") + t.name(i);
        first = false;
      }
      throw InvariantViolation(msg + ")");
    }
  }  // namespace

  void validate(NearSemiringTable const& t) {
    auto const m = static_cast<Index>(t.size());
    Index const z = t.zero();

    std::unordered_set<MapTable, MapTableHash> seen;
    for (Index i = 1; i < m; ++i) {
      if (!seen.insert(t.element(i).map()).second) {
        violated(t, "duplicate-free element list", {i});
      }
    }

    for (Index a = 0; a < m; ++a) {
      if (t.add(a, z) != a || t.add(z, a) != a) {
        violated(t, "additive identity 0", {a});
      }
      if (t.mul(a, z) != z || t.mul(z, a) != z) {
        violated(t, "multiplicative zero 0", {a});
      }
    }

    for (Index a = 0; a < m; ++a) {
      for (Index b = 0; b < m; ++b) {
        Index const ab_add = t.add(a, b);
        Index const ab_mul = t.mul(a, b);
        for (Index c = 0; c < m; ++c) {
          if (t.add(ab_add, c) != t.add(a, t.add(b, c))) {
            violated(t, "associativity of +", {a, b, c});
          }
          if (t.mul(ab_mul, c) != t.mul(a, t.mul(b, c))) {
            violated(t, "associativity of composition", {a, b, c});
          }
          if (t.mul(a, t.add(b, c)) != t.add(ab_mul, t.mul(a, c))) {
            violated(t, "left distributivity", {a, b, c});
          }
        }
      }
    }

    // Agreement with the maps themselves.
    BrandtSemigroup const b(t.n());
    std::unordered_map<MapTable, Index, MapTableHash> index;
    for (Index i = 1; i < m; ++i) {
      index.emplace(t.element(i).map(), i);
    }
    auto lookup = [&](MapTable const& f) -> std::optional<Index> {
      auto it = index.find(f);
      if (it == index.end()) {
        return std::nullopt;
      }
      return it->second;
    };
    for (Index x = 1; x < m; ++x) {
      MapTable const& f = t.element(x).map();
      for (Index y = 1; y < m; ++y) {
        MapTable const& g = t.element(y).map();
        if (lookup(map_add(b, f, g)) != t.add(x, y)) {
          violated(t, "+ table agrees with pointwise addition", {x, y});
        }
        if (lookup(map_compose(f, g)) != t.mul(x, y)) {
          violated(t, "composition table agrees with map composition", {x, y});
        }
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Generation
  ////////////////////////////////////////////////////////////////////////

  namespace {
    constexpr int unassigned = -1;

    class EndomorphismSearch {
     public:
      explicit EndomorphismSearch(BrandtSemigroup const& b)
          : _b(b), _gens(b.generators()), _image(b.size(), unassigned) {}

      std::vector<MapTable> run() {
        extend(0);
        std::sort(_found.begin(), _found.end());
        return std::move(_found);
      }

     private:
      // Fills in every image forced by (x + y)g = xg + yg for assigned x, y.
      // Returns false on a contradiction.
      bool propagate(std::vector<int>& image) const {
        auto const m       = static_cast<Code>(_b.size());
        bool       changed = true;
        while (changed) {
          changed = false;
          for (Code x = 0; x < m; ++x) {
            if (image[x] == unassigned) {
              continue;
            }
            for (Code y = 0; y < m; ++y) {
              if (image[y] == unassigned) {
                continue;
              }
              Code const sum = _b.add(x, y);
              int const  img = _b.add(static_cast<Code>(image[x]),
                                     static_cast<Code>(image[y]));
              if (image[sum] == unassigned) {
                image[sum] = img;
                changed    = true;
              } else if (image[sum] != img) {
                return false;
              }
            }
          }
        }
        return true;
      }

      void extend(std::size_t k) {
        if (k == _gens.size()) {
          // Every image is assigned and every pair has been checked.
          std::vector<Code> entries(_image.begin(), _image.end());
          _found.emplace_back(_b.n(), std::move(entries));
          return;
        }
        Code const g = _gens[k];
        if (_image[g] != unassigned) {
          extend(k + 1);
          return;
        }
        for (std::size_t c = 0; c < _b.size(); ++c) {
          std::vector<int> saved = _image;
          _image[g]              = static_cast<int>(c);
          if (propagate(_image)) {
            extend(k + 1);
          }
          _image = std::move(saved);
        }
      }

      BrandtSemigroup const& _b;
      std::vector<Code>      _gens;
      std::vector<int>       _image;
      std::vector<MapTable>  _found;
    };

    void sort_unique(std::vector<MapTable>& v) {
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
    }
  }  // namespace

  std::vector<MapTable> endomorphisms(BrandtSemigroup const& b) {
    if (b.additive_closure(b.generators()).size() != b.size()) {
      throw InvariantViolation("generating set does not generate B_n");
    }
    return EndomorphismSearch(b).run();
  }

  std::vector<MapTable> affine_maps(BrandtSemigroup const& b) {
    std::vector<MapTable> out;
    for (MapTable const& g : endomorphisms(b)) {
      for (std::size_t c = 0; c < b.size(); ++c) {
        out.push_back(
            map_add(b, g, MapTable::constant(b, static_cast<Code>(c))));
      }
    }
    sort_unique(out);
    return out;
  }

  std::vector<MapTable> additive_closure(BrandtSemigroup const&       b,
                                         std::vector<MapTable> const& gens) {
    if (gens.empty()) {
      throw InvalidArgument("additive closure of an empty set");
    }
    std::unordered_set<MapTable, MapTableHash> seen;
    std::vector<MapTable>                      out;
    auto insert = [&](MapTable f) {
      if (seen.insert(f).second) {
        out.push_back(std::move(f));
      }
    };
    for (MapTable const& g : gens) {
      insert(g);
    }
    // Worklist: each new element is added to every earlier one on both sides.
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        MapTable left  = map_add(b, out[i], out[j]);
        MapTable right = map_add(b, out[j], out[i]);
        insert(std::move(left));
        insert(std::move(right));
      }
    }
    sort_unique(out);
    return out;
  }

  std::uint64_t a_plus_size_formula(std::size_t n) {
    using u64          = std::uint64_t;
    constexpr u64 max  = std::numeric_limits<u64>::max();
    auto          mul  = [&](u64 x, u64 y) {
      if (y != 0 && x > max / y) {
        throw InvalidArgument("count overflows 64 bits for n = "
                              + std::to_string(n));
      }
      return x * y;
    };
    auto plus = [&](u64 x, u64 y) {
      if (x > max - y) {
        throw InvalidArgument("count overflows 64 bits for n = "
                              + std::to_string(n));
      }
      return x + y;
    };
    u64 fact = 1;
    for (u64 i = 2; i <= n; ++i) {
      fact = mul(fact, i);
    }
    u64 const sq = mul(n, n);
    return plus(plus(mul(plus(fact, 1), sq), mul(sq, sq)), 1);
  }

  NearSemiringTable build_nsr(std::size_t n) {
    BrandtSemigroup const b(n);
    std::vector<MapTable> maps = additive_closure(b, affine_maps(b));

    std::vector<std::pair<CanonicalForm, MapTable>> classified;
    classified.reserve(maps.size());
    for (MapTable& f : maps) {
      CanonicalForm c = classify(b, f);
      if (is_other(c)) {
        throw InvariantViolation(
            "additive closure produced a map of unknown shape");
      }
      classified.emplace_back(std::move(c), std::move(f));
    }
    std::sort(classified.begin(),
              classified.end(),
              [](auto const& x, auto const& y) { return x.first < y.first; });

    std::vector<NsrElement> elements;
    elements.reserve(classified.size() + 1);
    elements.emplace_back();
    std::unordered_map<MapTable, Index, MapTableHash> index;
    for (auto& [c, f] : classified) {
      index.emplace(f, static_cast<Index>(elements.size()));
      elements.emplace_back(std::move(f));
    }

    std::size_t const  m = elements.size();
    std::vector<Index> add(m * m, 0);
    std::vector<Index> mul(m * m, 0);
    auto               lookup = [&](MapTable const& f) {
      auto it = index.find(f);
      if (it == index.end()) {
        throw InvariantViolation("A+(B_n) is not closed under the operations");
      }
      return it->second;
    };
    for (std::size_t x = 0; x < m; ++x) {
      for (std::size_t y = 0; y < m; ++y) {
        if (x == 0) {
          add[x * m + y] = static_cast<Index>(y);
        } else if (y == 0) {
          add[x * m + y] = static_cast<Index>(x);
        } else {
          MapTable const& f = elements[x].map();
          MapTable const& g = elements[y].map();
          add[x * m + y]    = lookup(map_add(b, f, g));
          mul[x * m + y]    = lookup(map_compose(f, g));
        }
      }
    }
    NearSemiringTable out(n, std::move(elements), std::move(add), std::move(mul));
    validate(out);
    return out;
  }

}  // namespace brandt
