#include "brandt/congruence.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <thread>
#include <unordered_set>

#include "brandt/error.hpp"

namespace brandt {

  std::string to_string(CompatibilityMode mode) {
    switch (mode) {
      case CompatibilityMode::plus_only:
        return "plus";
      case CompatibilityMode::right_action:
        return "right";
      case CompatibilityMode::two_sided:
        return "twosided";
    }
    return "?";
  }

  CompatibilityMode mode_from_string(std::string const& s) {
    if (s == "plus") {
      return CompatibilityMode::plus_only;
    }
    if (s == "right") {
      return CompatibilityMode::right_action;
    }
    if (s == "twosided") {
      return CompatibilityMode::two_sided;
    }
    throw InvalidArgument("unknown compatibility mode \"" + s + "\"");
  }

  ////////////////////////////////////////////////////////////////////////
  // Congruence
  ////////////////////////////////////////////////////////////////////////

  Congruence::Congruence(std::vector<Index> labels, CompatibilityMode mode)
      : _labels(std::move(labels)), _mode(mode) {
    for (std::size_t i = 0; i < _labels.size(); ++i) {
      Index const l = _labels[i];
      if (l > i || _labels[l] != l) {
        throw InvalidArgument("not a canonical class array at index "
                              + std::to_string(i));
      }
    }
  }

  Congruence Congruence::equality(std::size_t size, CompatibilityMode mode) {
    std::vector<Index> labels(size);
    std::iota(labels.begin(), labels.end(), Index(0));
    return Congruence(std::move(labels), mode);
  }

  Congruence Congruence::universal(std::size_t size, CompatibilityMode mode) {
    return Congruence(std::vector<Index>(size, 0), mode);
  }

  std::size_t Congruence::number_of_classes() const noexcept {
    std::size_t count = 0;
    for (std::size_t i = 0; i < _labels.size(); ++i) {
      count += (_labels[i] == i);
    }
    return count;
  }

  bool Congruence::is_equality() const noexcept {
    return number_of_classes() == _labels.size();
  }

  bool Congruence::is_universal() const noexcept {
    return number_of_classes() == 1;
  }

  std::vector<std::vector<Index>> Congruence::classes() const {
    std::vector<std::vector<Index>> out;
    std::vector<std::size_t>        slot(_labels.size());
    for (std::size_t i = 0; i < _labels.size(); ++i) {
      if (_labels[i] == i) {
        slot[i] = out.size();
        out.emplace_back();
      }
      out[slot[_labels[i]]].push_back(static_cast<Index>(i));
    }
    return out;
  }

  std::vector<std::pair<Index, Index>> Congruence::generating_pairs() const {
    std::vector<std::pair<Index, Index>> out;
    for (std::size_t i = 0; i < _labels.size(); ++i) {
      if (_labels[i] != i) {
        out.emplace_back(static_cast<Index>(i), _labels[i]);
      }
    }
    return out;
  }

  bool Congruence::is_finer_than(Congruence const& that) const noexcept {
    for (std::size_t i = 0; i < _labels.size(); ++i) {
      if (!that.related(static_cast<Index>(i), _labels[i])) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Closure
  ////////////////////////////////////////////////////////////////////////

  namespace {
    class UnionFind {
     public:
      explicit UnionFind(std::vector<Index> parent)
          : _parent(std::move(parent)), _rank(_parent.size(), 0) {}

      Index find(Index x) {
        Index root = x;
        while (_parent[root] != root) {
          root = _parent[root];
        }
        while (_parent[x] != root) {
          Index next = _parent[x];
          _parent[x] = root;
          x          = next;
        }
        return root;
      }

      // False if already in one class.
      bool unite(Index x, Index y) {
        x = find(x);
        y = find(y);
        if (x == y) {
          return false;
        }
        if (_rank[x] < _rank[y]) {
          std::swap(x, y);
        }
        _parent[y] = x;
        if (_rank[x] == _rank[y]) {
          ++_rank[x];
        }
        return true;
      }

      std::vector<Index> canonical_labels() {
        std::size_t const  m = _parent.size();
        std::vector<Index> least(m, static_cast<Index>(m));
        std::vector<Index> out(m);
        for (std::size_t i = 0; i < m; ++i) {
          Index r = find(static_cast<Index>(i));
          if (least[r] == m) {
            least[r] = static_cast<Index>(i);
          }
          out[i] = least[r];
        }
        return out;
      }

     private:
      std::vector<Index>        _parent;
      std::vector<std::uint8_t> _rank;
    };

    Congruence close(NearSemiringTable const&                    t,
                     std::vector<Index>                          start,
                     std::vector<std::pair<Index, Index>> const& pairs,
                     CompatibilityMode                           mode) {
      auto const m = static_cast<Index>(t.size());
      for (auto [a, b] : pairs) {
        if (a >= m || b >= m) {
          throw InvalidArgument("pair index out of range");
        }
      }
      bool const right = mode != CompatibilityMode::plus_only;
      bool const left  = mode == CompatibilityMode::two_sided;

      UnionFind                            uf(std::move(start));
      std::vector<std::pair<Index, Index>> work(pairs.rbegin(), pairs.rend());
      while (!work.empty()) {
        auto [a, b] = work.back();
        work.pop_back();
        if (!uf.unite(a, b)) {
          continue;
        }
        auto push = [&](Index x, Index y) {
          if (uf.find(x) != uf.find(y)) {
            work.emplace_back(x, y);
          }
        };
        for (Index c = 0; c < m; ++c) {
          push(t.add(a, c), t.add(b, c));
          push(t.add(c, a), t.add(c, b));
          if (right) {
            push(t.mul(a, c), t.mul(b, c));
          }
          if (left) {
            push(t.mul(c, a), t.mul(c, b));
          }
        }
      }
      return Congruence(uf.canonical_labels(), mode);
    }

    struct LabelsHash {
      std::size_t operator()(std::vector<Index> const& v) const noexcept {
        std::size_t h = 14695981039346656037ULL;
        for (Index x : v) {
          h ^= x;
          h *= 1099511628211ULL;
        }
        return h;
      }
    };

    // Finest first: more classes, then smaller class array.
    bool lattice_less(Congruence const& x, Congruence const& y) {
      std::size_t const cx = x.number_of_classes();
      std::size_t const cy = y.number_of_classes();
      if (cx != cy) {
        return cx > cy;
      }
      return x.labels() < y.labels();
    }
  }  // namespace

  Congruence congruence_closure(NearSemiringTable const& t,
                                std::vector<std::pair<Index, Index>> const& pairs,
                                CompatibilityMode mode) {
    return close(t, Congruence::equality(t.size(), mode).labels(), pairs, mode);
  }

  Congruence congruence_closure(NearSemiringTable const& t,
                                Congruence const&        base,
                                std::vector<std::pair<Index, Index>> const& pairs) {
    if (base.size() != t.size()) {
      throw InvalidArgument("congruence and table sizes differ");
    }
    // base seeds the union-find; only the new pairs are enqueued.
    return close(t, base.labels(), pairs, base.mode());
  }

  Congruence join(NearSemiringTable const& t,
                  Congruence const&        x,
                  Congruence const&        y) {
    if (x.mode() != y.mode()) {
      throw InvalidArgument("cannot join congruences of different modes");
    }
    if (y.is_finer_than(x)) {
      return x;
    }
    return congruence_closure(t, x, y.generating_pairs());
  }

  bool is_compatible(NearSemiringTable const& t, Congruence const& c) {
    auto const m = static_cast<Index>(t.size());
    if (c.size() != m) {
      return false;
    }
    // Equivalence: labels name a fixed point shared by the whole class.
    for (Index a = 0; a < m; ++a) {
      if (c.label(c.label(a)) != c.label(a) || c.label(a) > a) {
        return false;
      }
    }
    bool const right = c.mode() != CompatibilityMode::plus_only;
    bool const left  = c.mode() == CompatibilityMode::two_sided;
    for (Index a = 0; a < m; ++a) {
      Index const b = c.label(a);
      if (a == b) {
        continue;
      }
      for (Index x = 0; x < m; ++x) {
        if (!c.related(t.add(a, x), t.add(b, x))
            || !c.related(t.add(x, a), t.add(x, b))) {
          return false;
        }
        if (right && !c.related(t.mul(a, x), t.mul(b, x))) {
          return false;
        }
        if (left && !c.related(t.mul(x, a), t.mul(x, b))) {
          return false;
        }
      }
    }
    return true;
  }

  namespace {
    struct Principal {
      Congruence              congruence;
      std::pair<Index, Index> generator;
    };

    // Rows a of the pair triangle are split round-robin between workers,
    // each with a private seen-set; the results are merged in worker order.
    std::vector<Principal> principals_with_generators(NearSemiringTable const& t,
                                                      CompatibilityMode mode) {
      auto const     m = static_cast<Index>(t.size());
      unsigned const workers
          = std::max(1u, std::min(std::thread::hardware_concurrency(), 16u));
      std::vector<std::vector<Principal>> found(workers);
      auto                                work = [&](unsigned w) {
        std::unordered_set<std::vector<Index>, LabelsHash> seen;
        for (Index a = w; a < m; a += workers) {
          for (Index b = a + 1; b < m; ++b) {
            Congruence c = congruence_closure(t, {{a, b}}, mode);
            if (seen.insert(c.labels()).second) {
              found[w].push_back({std::move(c), {a, b}});
            }
          }
        }
      };
      if (workers == 1) {
        work(0);
      } else {
        std::vector<std::jthread> threads;
        for (unsigned w = 0; w < workers; ++w) {
          threads.emplace_back(work, w);
        }
      }

      std::unordered_set<std::vector<Index>, LabelsHash> seen;
      std::vector<Principal>                             out;
      for (auto& part : found) {
        for (Principal& p : part) {
          if (seen.insert(p.congruence.labels()).second) {
            out.push_back(std::move(p));
          }
        }
      }
      std::sort(out.begin(), out.end(), [](auto const& x, auto const& y) {
        return lattice_less(x.congruence, y.congruence);
      });
      return out;
    }
  }  // namespace

  std::vector<Congruence> principal_congruences(NearSemiringTable const& t,
                                                CompatibilityMode        mode) {
    std::vector<Congruence> out;
    for (Principal& p : principals_with_generators(t, mode)) {
      out.push_back(std::move(p.congruence));
    }
    return out;
  }

  std::vector<Congruence> congruence_lattice(NearSemiringTable const& t,
                                             CompatibilityMode        mode) {
    std::vector<Principal> const principals
        = principals_with_generators(t, mode);

    std::unordered_set<std::vector<Index>, LabelsHash> seen;
    std::vector<Congruence>                            out;
    std::deque<std::size_t>                            frontier;
    auto insert = [&](Congruence c) {
      if (seen.insert(c.labels()).second) {
        frontier.push_back(out.size());
        out.push_back(std::move(c));
      }
    };
    insert(Congruence::equality(t.size(), mode));
    for (Principal const& p : principals) {
      insert(p.congruence);
    }
    // Close under joins with the principal congruences.  The join of x
    // with Cg(a, b) is the closure of x and the single pair (a, b).
    while (!frontier.empty()) {
      std::size_t const i = frontier.front();
      frontier.pop_front();
      for (Principal const& p : principals) {
        if (out[i].related(p.generator.first, p.generator.second)) {
          continue;
        }
        insert(congruence_closure(t, out[i], {p.generator}));
      }
    }
    std::sort(out.begin(), out.end(), lattice_less);
    return out;
  }

  std::vector<Index> kernel(Congruence const& c, NearSemiringTable const& t) {
    std::vector<Index> out;
    for (Index a = 0; a < t.size(); ++a) {
      if (c.related(a, t.zero())) {
        out.push_back(a);
      }
    }
    return out;
  }

  Congruence nonzero_collapse(NearSemiringTable const& t,
                              CompatibilityMode        mode) {
    std::vector<Index> labels(t.size(), 1);
    labels[0] = 0;
    return Congruence(std::move(labels), mode);
  }

}  // namespace brandt
