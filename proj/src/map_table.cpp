#include "brandt/map_table.hpp"

#include <charconv>
#include <optional>

#include "brandt/error.hpp"

namespace brandt {

  namespace {
    void check_same_n(std::size_t n1, std::size_t n2) {
      if (n1 != n2) {
        throw InvalidArgument("maps over B_" + std::to_string(n1) + " and B_"
                              + std::to_string(n2) + " cannot be combined");
      }
    }

    template <typename... Ts>
    struct overloaded : Ts... {
      using Ts::operator()...;
    };
    template <typename... Ts>
    overloaded(Ts...) -> overloaded<Ts...>;
  }  // namespace

  MapTable::MapTable(std::size_t n, std::vector<Code> entries)
      : _n(n), _entries(std::move(entries)) {
    std::size_t const m = n * n + 1;
    if (n == 0 || _entries.size() != m) {
      throw InvalidArgument("a map on B_" + std::to_string(n) + " needs "
                            + std::to_string(m) + " entries, found "
                            + std::to_string(_entries.size()));
    }
    for (Code c : _entries) {
      if (c >= m) {
        throw InvalidArgument("map entry " + std::to_string(c)
                              + " is not a code of B_" + std::to_string(n));
      }
    }
  }

  MapTable MapTable::constant(BrandtSemigroup const& b, Code c) {
    return MapTable(b.n(), std::vector<Code>(b.size(), c));
  }

  MapTable MapTable::identity(BrandtSemigroup const& b) {
    std::vector<Code> entries(b.size());
    for (std::size_t x = 0; x < entries.size(); ++x) {
      entries[x] = static_cast<Code>(x);
    }
    return MapTable(b.n(), std::move(entries));
  }

  std::size_t MapTable::hash() const noexcept {
    // FNV-1a over the entries.
    std::size_t h = 14695981039346656037ULL;
    for (Code c : _entries) {
      h ^= c;
      h *= 1099511628211ULL;
    }
    return h;
  }

  MapTable map_add(BrandtSemigroup const& b, MapTable const& f,
                   MapTable const& g) {
    check_same_n(b.n(), f.n());
    check_same_n(f.n(), g.n());
    std::vector<Code> out(b.size());
    for (std::size_t x = 0; x < out.size(); ++x) {
      out[x] = b.add(f[static_cast<Code>(x)], g[static_cast<Code>(x)]);
    }
    return MapTable(b.n(), std::move(out));
  }

  MapTable map_compose(MapTable const& f, MapTable const& g) {
    check_same_n(f.n(), g.n());
    std::vector<Code> out(f.entries().size());
    for (std::size_t x = 0; x < out.size(); ++x) {
      out[x] = g[f[static_cast<Code>(x)]];
    }
    return MapTable(f.n(), std::move(out));
  }

  std::vector<Code> support(MapTable const& f) {
    std::vector<Code> out;
    for (std::size_t x = 0; x < f.entries().size(); ++x) {
      if (f.entries()[x] != theta_code) {
        out.push_back(static_cast<Code>(x));
      }
    }
    return out;
  }

  bool is_endomorphism(BrandtSemigroup const& b, MapTable const& f) {
    check_same_n(b.n(), f.n());
    auto const m = static_cast<Code>(b.size());
    for (Code x = 0; x < m; ++x) {
      for (Code y = 0; y < m; ++y) {
        if (f[b.add(x, y)] != b.add(f[x], f[y])) {
          return false;
        }
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // classify / realize
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // (p, q; sigma) if f has that shape.
    std::optional<canonical::NSupport>
    match_n_support(BrandtSemigroup const& b,
                    MapTable const&        f,
                    std::vector<Code> const& supp) {
      std::size_t const n = b.n();
      if (supp.size() != n) {
        return std::nullopt;
      }
      std::size_t const p = b.decode(supp.front()).col();
      std::size_t const q = b.decode(f[supp.front()]).col();
      std::vector<std::size_t> images(n);
      for (std::size_t i = 1; i <= n; ++i) {
        BrandtElement const img = b.decode(f[b.encode(i, p)]);
        if (img.is_theta() || img.col() != q) {
          return std::nullopt;
        }
        images[i - 1] = img.row();
      }
      try {
        return canonical::NSupport{p, q, Permutation(std::move(images))};
      } catch (InvalidArgument const&) {
        return std::nullopt;
      }
    }
  }  // namespace

  CanonicalForm classify(BrandtSemigroup const& b, MapTable const& f) {
    check_same_n(b.n(), f.n());
    std::vector<Code> const supp = support(f);

    if (supp.empty()) {
      return canonical::ConstTheta{};
    }
    if (supp.size() == b.size()) {
      Code const c = f[0];
      for (Code x : supp) {
        if (f[x] != c) {
          return canonical::Other{};
        }
      }
      BrandtElement const e = b.decode(c);
      return canonical::Const{e.row(), e.col()};
    }
    // Checked before the singleton shape: at n = 1 both have support {(1,1)}.
    if (auto ns = match_n_support(b, f, supp)) {
      return *ns;
    }
    if (supp.size() == 1) {
      BrandtElement const from = b.decode(supp.front());
      BrandtElement const to   = b.decode(f[supp.front()]);
      return canonical::Singleton{from.row(), from.col(), to.row(), to.col()};
    }
    return canonical::Other{};
  }

  MapTable realize(BrandtSemigroup const& b, CanonicalForm const& c) {
    std::size_t const n = b.n();
    return std::visit(
        overloaded{
            [&](canonical::ConstTheta const&) {
              return MapTable::constant(b, theta_code);
            },
            [&](canonical::Const const& x) {
              return MapTable::constant(b, b.encode(x.p, x.q));
            },
            [&](canonical::Singleton const& x) {
              std::vector<Code> entries(b.size(), theta_code);
              entries[b.encode(x.k, x.l)] = b.encode(x.p, x.q);
              return MapTable(n, std::move(entries));
            },
            [&](canonical::NSupport const& x) {
              if (x.sigma.degree() != n) {
                throw InvalidArgument("permutation degree does not match n");
              }
              std::vector<Code> entries(b.size(), theta_code);
              for (std::size_t i = 1; i <= n; ++i) {
                entries[b.encode(i, x.p)] = b.encode(x.sigma(i), x.q);
              }
              return MapTable(n, std::move(entries));
            },
            [&](canonical::Other const&) -> MapTable {
              throw InvalidArgument("cannot realize a map of unknown shape");
            }},
        c);
  }

  ////////////////////////////////////////////////////////////////////////
  // Names
  ////////////////////////////////////////////////////////////////////////

  std::string canonical_name(CanonicalForm const& c) {
    auto s = [](std::size_t x) { return std::to_string(x); };
    return std::visit(
        overloaded{
            [](canonical::ConstTheta const&) { return std::string("c:t"); },
            [&](canonical::Const const& x) {
              return "c:" + s(x.p) + "," + s(x.q);
            },
            [&](canonical::Singleton const& x) {
              return "s:" + s(x.k) + "," + s(x.l) + ">" + s(x.p) + ","
                     + s(x.q);
            },
            [&](canonical::NSupport const& x) {
              return "n:" + s(x.p) + "," + s(x.q) + ";" + x.sigma.word();
            },
            [](canonical::Other const&) -> std::string {
              throw InvalidArgument("a map of unknown shape has no name");
            }},
        c);
  }

  namespace {
    class NameParser {
     public:
      explicit NameParser(std::string const& name) : _name(name), _pos(0) {}

      std::size_t number() {
        std::size_t value = 0;
        auto const* first = _name.data() + _pos;
        auto const* last  = _name.data() + _name.size();
        auto [ptr, ec]    = std::from_chars(first, last, value);
        if (ec != std::errc() || ptr == first) {
          fail();
        }
        _pos += static_cast<std::size_t>(ptr - first);
        return value;
      }

      void expect(char c) {
        if (_pos >= _name.size() || _name[_pos] != c) {
          fail();
        }
        ++_pos;
      }

      std::string rest() {
        std::string out = _name.substr(_pos);
        _pos            = _name.size();
        return out;
      }

      void finish() const {
        if (_pos != _name.size()) {
          fail();
        }
      }

      [[noreturn]] void fail() const {
        throw InvalidArgument("malformed element name \"" + _name + "\"");
      }

     private:
      std::string const& _name;
      std::size_t        _pos;
    };
  }  // namespace

  CanonicalForm parse_canonical_name(std::string const& name) {
    NameParser in(name);
    if (name == "c:t") {
      return canonical::ConstTheta{};
    }
    if (name.size() < 2 || name[1] != ':') {
      in.fail();
    }
    char const kind = name[0];
    in.expect(kind);
    in.expect(':');
    if (kind == 'c') {
      std::size_t const p = in.number();
      in.expect(',');
      std::size_t const q = in.number();
      in.finish();
      return canonical::Const{p, q};
    }
    if (kind == 's') {
      std::size_t const k = in.number();
      in.expect(',');
      std::size_t const l = in.number();
      in.expect('>');
      std::size_t const p = in.number();
      in.expect(',');
      std::size_t const q = in.number();
      in.finish();
      return canonical::Singleton{k, l, p, q};
    }
    if (kind == 'n') {
      std::size_t const p = in.number();
      in.expect(',');
      std::size_t const q = in.number();
      in.expect(';');
      return canonical::NSupport{p, q, Permutation::from_word(in.rest())};
    }
    in.fail();
  }

}  // namespace brandt
