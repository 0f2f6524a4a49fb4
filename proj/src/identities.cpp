#include "brandt/identities.hpp"

#include <functional>

#include "brandt/error.hpp"
#include "brandt/map_table.hpp"

namespace brandt {

  namespace {
    class IdentityRecorder {
     public:
      explicit IdentityRecorder(BrandtSemigroup const& b) : _b(b) {}

      MapTable xi(std::size_t p, std::size_t q) const {
        return realize(_b, canonical::Const{p, q});
      }
      MapTable xi_theta() const {
        return realize(_b, canonical::ConstTheta{});
      }
      MapTable sis(std::size_t k, std::size_t l, std::size_t p,
                   std::size_t q) const {
        return realize(_b, canonical::Singleton{k, l, p, q});
      }
      MapTable ns(std::size_t p, std::size_t q, Permutation const& s) const {
        return realize(_b, canonical::NSupport{p, q, s});
      }
      MapTable plus(MapTable const& f, MapTable const& g) const {
        return map_add(_b, f, g);
      }
      MapTable times(MapTable const& f, MapTable const& g) const {
        return map_compose(f, g);
      }

      void begin(std::string name) {
        _checks.push_back({std::move(name), 0, 0, std::nullopt});
      }

      // `where` describes the instance, evaluated only on failure.
      void expect(MapTable const& lhs, MapTable const& rhs,
                  std::function<std::string()> const& where) {
        IdentityCheck& c = _checks.back();
        ++c.instances;
        if (lhs != rhs) {
          ++c.failures;
          if (!c.first_failure) {
            c.first_failure = where();
          }
        }
      }

      std::vector<IdentityCheck> result() && {
        return std::move(_checks);
      }

     private:
      BrandtSemigroup const&     _b;
      std::vector<IdentityCheck> _checks;
    };

    std::string idx(std::initializer_list<std::size_t> xs) {
      std::string out;
      for (std::size_t x : xs) {
        out += (out.empty() ? "" : ",") + std::to_string(x);
      }
      return out;
    }
  }  // namespace

  std::vector<IdentityCheck> collapse_identities(BrandtSemigroup const& b) {
    std::size_t const n = b.n();
    if (n < 2) {
      throw InvalidArgument("collapse identities need n >= 2");
    }
    IdentityRecorder   r(b);
    auto const         perms = Permutation::all(n);
    Permutation const  id    = Permutation::identity(n);
    MapTable const     zero  = r.xi_theta();

    // xi(p,q) = xi(p,p0) + xi(p0,q0) + xi(q0,q).
    r.begin("constant-chain");
    for (std::size_t p = 1; p <= n; ++p) {
      for (std::size_t q = 1; q <= n; ++q) {
        for (std::size_t p0 = 1; p0 <= n; ++p0) {
          for (std::size_t q0 = 1; q0 <= n; ++q0) {
            r.expect(r.xi(p, q),
                     r.plus(r.plus(r.xi(p, p0), r.xi(p0, q0)), r.xi(q0, q)),
                     [&] { return "p,q,p0,q0 = " + idx({p, q, p0, q0}); });
          }
        }
      }
    }

    // (k,l;s) = (k,p;s) + xi(p,l), and the right summand absorbs theta.
    r.begin("n-support-split");
    for (std::size_t k = 1; k <= n; ++k) {
      for (std::size_t l = 1; l <= n; ++l) {
        for (std::size_t p = 1; p <= n; ++p) {
          for (auto const& s : perms) {
            r.expect(r.ns(k, l, s), r.plus(r.ns(k, p, s), r.xi(p, l)), [&] {
              return "k,l,p = " + idx({k, l, p}) + " s = " + s.word();
            });
            r.expect(zero, r.plus(r.ns(k, p, s), zero), [&] {
              return "theta absorbs, k,p = " + idx({k, p});
            });
          }
        }
      }
    }

    // [(k,l)->(p,q)] = xi(p,q) + (l,q;s) whenever k s = q.
    r.begin("singleton-split");
    for (std::size_t k = 1; k <= n; ++k) {
      for (std::size_t l = 1; l <= n; ++l) {
        for (std::size_t p = 1; p <= n; ++p) {
          for (std::size_t q = 1; q <= n; ++q) {
            for (auto const& s : perms) {
              if (s(k) != q) {
                continue;
              }
              r.expect(r.sis(k, l, p, q), r.plus(r.xi(p, q), r.ns(l, q, s)),
                       [&] {
                         return "k,l,p,q = " + idx({k, l, p, q})
                                + " s = " + s.word();
                       });
            }
          }
        }
      }
    }

    // Products of a constant with a singleton or n-support map.
    r.begin("constant-times-shape");
    for (std::size_t k = 1; k <= n; ++k) {
      for (std::size_t l = 1; l <= n; ++l) {
        for (std::size_t p = 1; p <= n; ++p) {
          for (std::size_t q = 1; q <= n; ++q) {
            r.expect(r.times(r.xi(k, l), r.sis(k, l, p, q)), r.xi(p, q),
                     [&] { return "k,l,p,q = " + idx({k, l, p, q}); });
            r.expect(r.times(r.xi(k, l), zero), zero,
                     [&] { return "k,l = " + idx({k, l}); });
            for (auto const& s : perms) {
              r.expect(r.times(r.xi(k, p), r.ns(p, q, s)), r.xi(s(k), q), [&] {
                return "k,p,q = " + idx({k, p, q}) + " s = " + s.word();
              });
            }
          }
        }
      }
    }

    // Two singleton maps.
    r.begin("singleton-pairs");
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = 1; j <= n; ++j) {
        for (std::size_t k = 1; k <= n; ++k) {
          for (std::size_t l = 1; l <= n; ++l) {
            for (std::size_t u = 1; u <= n; ++u) {
              for (std::size_t v = 1; v <= n; ++v) {
                auto where = [&] { return "i,j,k,l,u,v = " + idx({i, j, k, l, u, v}); };
                // Different sources: the second summand only fires off (i,j).
                for (std::size_t s = 1; s <= n; ++s) {
                  for (std::size_t t = 1; t <= n; ++t) {
                    if (s == i && t == j) {
                      continue;
                    }
                    r.expect(r.plus(r.sis(i, j, k, l), r.sis(s, t, v, v)), zero,
                             where);
                  }
                }
                r.expect(r.plus(r.sis(i, j, u, v), r.sis(i, j, v, v)),
                         r.sis(i, j, u, v), where);
                r.expect(r.plus(r.sis(i, j, k, k), r.sis(i, j, k, l)),
                         r.sis(i, j, k, l), where);
                if (k != u) {
                  r.expect(r.plus(r.sis(i, j, k, k), r.sis(i, j, u, v)), zero,
                           where);
                }
                if (l != v) {
                  r.expect(r.plus(r.sis(i, j, k, l), r.sis(i, j, v, v)), zero,
                           where);
                }
              }
            }
          }
        }
      }
    }

    // Two n-support maps.
    r.begin("n-support-pairs");
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = 1; j <= n; ++j) {
        for (std::size_t k = 1; k <= n; ++k) {
          for (auto const& s : perms) {
            auto where = [&] { return "i,j,k = " + idx({i, j, k}) + " s = " + s.word(); };
            r.expect(r.plus(r.ns(i, j, s), r.xi(j, j)), r.ns(i, j, s), where);
            for (std::size_t l = 1; l <= n; ++l) {
              if (l != j) {
                r.expect(r.plus(r.ns(k, l, s), r.xi(j, j)), zero, where);
              }
            }
            if (i != k) {
              r.expect(r.times(r.ns(k, k, id), r.ns(i, j, s)), zero, where);
            }
            r.expect(r.times(r.ns(k, k, id), r.ns(k, j, s)), r.ns(k, j, s),
                     where);
            r.expect(r.times(r.xi(k, i), r.ns(i, j, s)), r.xi(s(k), j), where);
            r.expect(r.plus(r.xi(s(k), s(k)), r.xi(s(k), j)), r.xi(s(k), j),
                     where);
            for (auto const& rho : perms) {
              if (s(k) != rho(k)) {
                r.expect(r.plus(r.xi(s(k), s(k)), r.xi(rho(k), j)), zero,
                         where);
              }
            }
          }
        }
      }
    }

    // Mixed shapes.
    r.begin("mixed-shapes");
    for (std::size_t k = 1; k <= n; ++k) {
      for (std::size_t l = 1; l <= n; ++l) {
        for (std::size_t p = 1; p <= n; ++p) {
          for (std::size_t q = 1; q <= n; ++q) {
            MapTable const f = r.sis(k, l, p, q);
            auto where = [&] { return "k,l,p,q = " + idx({k, l, p, q}); };
            for (std::size_t s = 1; s <= n; ++s) {
              for (std::size_t t = 1; t <= n; ++t) {
                if (s != k || t != l) {
                  r.expect(r.times(r.xi(s, t), f), zero, where);
                }
                r.expect(r.times(r.xi(s, t), r.xi(p, q)), r.xi(p, q), where);
              }
            }
            r.expect(r.plus(r.sis(k, l, p, p), r.xi(p, q)), f, where);
            for (std::size_t i = 1; i <= n; ++i) {
              if (i == l) {
                continue;
              }
              for (std::size_t j = 1; j <= n; ++j) {
                for (auto const& s : perms) {
                  r.expect(r.plus(r.sis(k, l, p, p), r.ns(i, j, s)), zero,
                           where);
                  r.expect(r.times(r.xi(i, i), f), zero, where);
                  r.expect(r.times(r.xi(i, i), r.ns(i, j, s)), r.xi(s(i), j),
                           where);
                }
              }
            }
          }
        }
      }
    }
    return std::move(r).result();
  }

  std::optional<RightDistributivityWitness>
  find_right_distributivity_failure(NearSemiringTable const& t) {
    auto const m = static_cast<Index>(t.size());
    for (Index f = 0; f < m; ++f) {
      for (Index g = 0; g < m; ++g) {
        for (Index h = 0; h < m; ++h) {
          if (t.mul(t.add(g, h), f) != t.add(t.mul(g, f), t.mul(h, f))) {
            return RightDistributivityWitness{f, g, h};
          }
        }
      }
    }
    return std::nullopt;
  }

}  // namespace brandt
