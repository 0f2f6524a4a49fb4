#ifndef BRANDT_BRANDT_SEMIGROUP_HPP_
#define BRANDT_BRANDT_SEMIGROUP_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace brandt {

  //! Flat code of an element of B_n: 0 is theta, (i-1)*n + j is (i, j).
  using Code = std::uint16_t;

  inline constexpr Code theta_code = 0;

  //! An element of the Brandt semigroup B_n: either theta or a pair (row, col)
  //! with 1 <= row, col <= n.  The value does not carry n; validity is checked
  //! by the BrandtSemigroup that encodes or adds it.
  class BrandtElement {
   public:
    struct Pair {
      std::size_t row;
      std::size_t col;
      auto operator<=>(Pair const&) const = default;
    };

    constexpr BrandtElement() noexcept = default;
    constexpr BrandtElement(std::size_t row, std::size_t col) noexcept
        : _pair(Pair{row, col}) {}

    static constexpr BrandtElement theta() noexcept {
      return BrandtElement();
    }

    [[nodiscard]] constexpr bool is_theta() const noexcept {
      return !_pair.has_value();
    }
    // Only meaningful when !is_theta().
    [[nodiscard]] constexpr std::size_t row() const noexcept {
      return _pair->row;
    }
    [[nodiscard]] constexpr std::size_t col() const noexcept {
      return _pair->col;
    }

    bool operator==(BrandtElement const&) const = default;

    //! "t" for theta, "i,j" for a pair.
    [[nodiscard]] std::string to_string() const;

   private:
    std::optional<Pair> _pair;
  };

  //! A permutation of [n] = {1, ..., n}, stored as its image word.
  class Permutation {
   public:
    //! Throws InvalidArgument unless `images` is a bijection on 1..n.
    explicit Permutation(std::vector<std::size_t> images);

    static Permutation identity(std::size_t n);

    [[nodiscard]] std::size_t degree() const noexcept {
      return _images.size();
    }
    //! Image of i, 1 <= i <= n.
    [[nodiscard]] std::size_t operator()(std::size_t i) const {
      return _images[i - 1];
    }
    [[nodiscard]] std::vector<std::size_t> const& images() const noexcept {
      return _images;
    }
    [[nodiscard]] bool is_identity() const noexcept;

    //! Image word, e.g. "213".  Requires n <= 9.
    [[nodiscard]] std::string word() const;
    static Permutation from_word(std::string const& word);

    //! All n! permutations in lexicographic order of their image words.
    static std::vector<Permutation> all(std::size_t n);

    auto operator<=>(Permutation const&) const = default;

   private:
    std::vector<std::size_t> _images;
  };

  //! The Brandt semigroup B_n with its flat encoding.
  class BrandtSemigroup {
   public:
    //! Throws InvalidArgument if n == 0 or B_n does not fit in Code.
    explicit BrandtSemigroup(std::size_t n);

    [[nodiscard]] std::size_t n() const noexcept {
      return _n;
    }
    //! |B_n| = n^2 + 1.
    [[nodiscard]] std::size_t size() const noexcept {
      return _n * _n + 1;
    }

    [[nodiscard]] Code encode(BrandtElement const& a) const;
    [[nodiscard]] BrandtElement decode(Code c) const;
    [[nodiscard]] Code encode(std::size_t row, std::size_t col) const {
      return encode(BrandtElement(row, col));
    }

    [[nodiscard]] bool contains(BrandtElement const& a) const noexcept;

    //! (i, j) + (j, l) = (i, l); every other sum is theta.
    [[nodiscard]] BrandtElement add(BrandtElement const& a,
                                    BrandtElement const& b) const;

    //! Same operation on codes, without range checks.
    [[nodiscard]] Code add(Code a, Code b) const noexcept {
      return _add[a * size() + b];
    }

    //! The additive generating set {(1,2), (2,3), ..., (n-1,n), (n,1)}; for
    //! n = 1 the idempotent (1,1) does not generate theta, so theta is
    //! appended.
    [[nodiscard]] std::vector<Code> generators() const;

    //! Smallest subset of B_n containing `codes` closed under addition.
    [[nodiscard]] std::vector<Code>
    additive_closure(std::vector<Code> const& codes) const;

    bool operator==(BrandtSemigroup const& that) const noexcept {
      return _n == that._n;
    }

   private:
    std::size_t       _n;
    std::vector<Code> _add;
  };

}  // namespace brandt

#endif  // BRANDT_BRANDT_SEMIGROUP_HPP_
