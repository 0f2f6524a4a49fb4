#include "brandt/brandt_semigroup.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "brandt/error.hpp"

namespace brandt {

  std::string BrandtElement::to_string() const {
    if (is_theta()) {
      return "t";
    }
    return std::to_string(row()) + "," + std::to_string(col());
  }

  ////////////////////////////////////////////////////////////////////////
  // Permutation
  ////////////////////////////////////////////////////////////////////////

  Permutation::Permutation(std::vector<std::size_t> images)
      : _images(std::move(images)) {
    std::size_t const    n = _images.size();
    std::vector<std::uint8_t> seen(n + 1, 0);
    for (std::size_t x : _images) {
      if (x < 1 || x > n || seen[x]) {
        throw InvalidArgument("not a permutation of [" + std::to_string(n)
                              + "]");
      }
      seen[x] = 1;
    }
  }

  Permutation Permutation::identity(std::size_t n) {
    std::vector<std::size_t> images(n);
    std::iota(images.begin(), images.end(), std::size_t(1));
    return Permutation(std::move(images));
  }

  bool Permutation::is_identity() const noexcept {
    for (std::size_t i = 0; i < _images.size(); ++i) {
      if (_images[i] != i + 1) {
        return false;
      }
    }
    return true;
  }

  std::string Permutation::word() const {
    if (degree() > 9) {
      throw InvalidArgument("permutation words need degree <= 9");
    }
    std::string out;
    for (std::size_t x : _images) {
      out.push_back(static_cast<char>('0' + x));
    }
    return out;
  }

  Permutation Permutation::from_word(std::string const& word) {
    if (word.empty()) {
      throw InvalidArgument("empty permutation word");
    }
    std::vector<std::size_t> images;
    for (char c : word) {
      if (c < '1' || c > '9') {
        throw InvalidArgument("bad permutation word \"" + word + "\"");
      }
      images.push_back(static_cast<std::size_t>(c - '0'));
    }
    return Permutation(std::move(images));
  }

  std::vector<Permutation> Permutation::all(std::size_t n) {
    std::vector<std::size_t> images(n);
    std::iota(images.begin(), images.end(), std::size_t(1));
    std::vector<Permutation> out;
    do {
      out.emplace_back(images);
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // BrandtSemigroup
  ////////////////////////////////////////////////////////////////////////

  BrandtSemigroup::BrandtSemigroup(std::size_t n) : _n(n) {
    if (n == 0) {
      throw InvalidArgument("B_n needs n >= 1");
    }
    if (n > 255) {
      throw InvalidArgument("n = " + std::to_string(n) + " is too large");
    }
    std::size_t const m = size();
    _add.assign(m * m, theta_code);
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = 1; j <= n; ++j) {
        for (std::size_t l = 1; l <= n; ++l) {
          _add[encode(i, j) * m + encode(j, l)] = encode(i, l);
        }
      }
    }
  }

  bool BrandtSemigroup::contains(BrandtElement const& a) const noexcept {
    return a.is_theta()
           || (a.row() >= 1 && a.row() <= _n && a.col() >= 1 && a.col() <= _n);
  }

  Code BrandtSemigroup::encode(BrandtElement const& a) const {
    if (!contains(a)) {
      throw InvalidArgument("(" + a.to_string() + ") is not an element of B_"
                            + std::to_string(_n));
    }
    if (a.is_theta()) {
      return theta_code;
    }
    return static_cast<Code>((a.row() - 1) * _n + a.col());
  }

  BrandtElement BrandtSemigroup::decode(Code c) const {
    if (c >= size()) {
      throw InvalidArgument("code " + std::to_string(c)
                            + " is out of range for B_" + std::to_string(_n));
    }
    if (c == theta_code) {
      return BrandtElement::theta();
    }
    return BrandtElement((c - 1) / _n + 1, (c - 1) % _n + 1);
  }

  BrandtElement BrandtSemigroup::add(BrandtElement const& a,
                                     BrandtElement const& b) const {
    return decode(add(encode(a), encode(b)));
  }

  std::vector<Code> BrandtSemigroup::generators() const {
    std::vector<Code> out;
    for (std::size_t i = 1; i <= _n; ++i) {
      out.push_back(encode(i, i % _n + 1));
    }
    if (_n == 1) {
      out.push_back(theta_code);
    }
    return out;
  }

  std::vector<Code>
  BrandtSemigroup::additive_closure(std::vector<Code> const& codes) const {
    std::vector<std::uint8_t> in(size(), 0);
    std::vector<Code>    out;
    for (Code c : codes) {
      if (!in[c]) {
        in[c] = 1;
        out.push_back(c);
      }
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        for (Code s : {add(out[i], out[j]), add(out[j], out[i])}) {
          if (!in[s]) {
            in[s] = 1;
            out.push_back(s);
          }
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

}  // namespace brandt
