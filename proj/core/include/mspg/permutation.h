#ifndef MSPG_PERMUTATION_H_
#define MSPG_PERMUTATION_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

/**
 * @file permutation.h
 * @brief Permutations of {0, ..., n-1}.
 *
 * Action convention: permutations act on the right and products are read
 * left to right, i.e. `compose(p, q)` (also written `p * q`) maps
 * i to q(p(i)): first p, then q. With this convention the conjugate
 * x^g = g^-1 x g relabels the points of x by g, and the commutator is
 * [a, b] = a^-1 b^-1 a b.
 *
 * Points are stored 0-based. Cycle notation, both when parsing and when
 * printing, is 1-based.
 */

namespace mspg {

using Point = std::uint32_t;

class Permutation {
 public:
  /// The identity on zero points.
  Permutation() = default;

  /// The identity on `degree` points.
  explicit Permutation(std::size_t degree);

  /// Throws PreconditionError unless `images` is a bijection of
  /// {0, ..., images.size()-1}.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree) { return Permutation(degree); }

  std::size_t degree() const noexcept { return images_.size(); }

  Point operator[](Point i) const noexcept { return images_[i]; }

  std::span<Point const> images() const noexcept { return images_; }

  bool is_identity() const noexcept;

  /// Order of the permutation as a group element.
  std::uint64_t order() const;

  /// Smallest point moved, or degree() if this is the identity.
  Point first_moved() const noexcept;

  Permutation operator*(Permutation const &rhs) const;

  /// Builds from images known to be a bijection; no validation.
  static Permutation from_images_unchecked(std::vector<Point> images) {
    Permutation p;
    p.images_ = std::move(images);
    return p;
  }

  friend bool operator==(Permutation const &, Permutation const &) = default;
  friend std::strong_ordering operator<=>(Permutation const &lhs,
                                          Permutation const &rhs) = default;

 private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(Permutation const &p) const noexcept;
};

/// i -> q(p(i)). Throws DegreeMismatch.
Permutation compose(Permutation const &p, Permutation const &q);

Permutation inverse(Permutation const &p);

/// g^-1 p g. Throws DegreeMismatch.
Permutation conjugate(Permutation const &p, Permutation const &g);

/// a^-1 b^-1 a b. Throws DegreeMismatch.
Permutation commutator(Permutation const &a, Permutation const &b);

/// Parses a product of cycles such as "(1 2 3)(4 5)" over 1-based points
/// not exceeding `degree`. Cycles need not be disjoint; the result is their
/// left-to-right product. Empty text and "()" give the identity.
/// Throws ParseError.
Permutation parse_cycles(std::string_view text, std::size_t degree);

/// Canonical disjoint-cycle form, 1-based, each cycle starting at its
/// smallest point, cycles ordered by that point. The identity prints as
/// "()".
std::string to_cycles(Permutation const &p);

}  // namespace mspg

#endif  // MSPG_PERMUTATION_H_
