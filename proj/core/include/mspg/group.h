#ifndef MSPG_GROUP_H_
#define MSPG_GROUP_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mspg/permutation.h"

/**
 * @file group.h
 * @brief Permutation groups given by generators, backed by a stabilizer
 * chain built with the deterministic Schreier-Sims algorithm.
 */

namespace mspg {

/// Default upper bound on the number of elements Group::elements() will
/// materialize.
inline constexpr std::size_t kDefaultEnumerationCap = 20000;

class Group {
 public:
  /// The trivial group on one point.
  Group() : Group(1, {}) {}

  /// Throws DegreeMismatch if some generator does not have degree `degree`.
  /// An empty generator list yields the trivial group.
  Group(std::size_t degree, std::vector<Permutation> generators);

  static Group trivial(std::size_t degree) { return Group(degree, {}); }

  std::size_t degree() const noexcept { return degree_; }

  std::vector<Permutation> const &generators() const noexcept {
    return generators_;
  }

  /// Product of the transversal sizes along the chain.
  std::uint64_t order() const noexcept { return order_; }

  /// Membership by sifting; false for a permutation of another degree.
  bool contains(Permutation const &p) const;

  /// Every element exactly once, sorted lexicographically by image
  /// sequence (so the identity comes first). Throws CapExceeded when
  /// order() > cap.
  std::vector<Permutation> elements(std::size_t cap = kDefaultEnumerationCap) const;

  std::span<Point const> base() const noexcept { return base_; }

  /// Union of the strong generators stored at every level of the chain.
  std::vector<Permutation> strong_generators() const;

  /// Orbit sizes of the chain, one per base point.
  std::vector<std::size_t> transversal_sizes() const;

  /// Every generator of `sub` lies in this group (degrees must agree).
  bool contains_group(Group const &sub) const;

 private:
  struct Level {
    Point base;
    std::vector<Permutation> strong;         // generators introduced here
    std::vector<Point> orbit;                // orbit of `base`, BFS order
    std::vector<std::int32_t> slot;          // point -> index into reps, -1
    std::vector<Permutation> reps;           // reps[k] maps base to orbit[k]
  };

  struct SiftResult {
    Permutation residue;
    std::size_t level;
  };

  SiftResult sift(Permutation g, std::size_t from) const;
  void rebuild_orbit(std::size_t level);
  bool check_level(std::size_t level);
  void schreier_sims();
  void insert(Permutation residue, std::size_t level);

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::vector<Level> levels_;
  std::vector<Point> base_;
  std::uint64_t order_ = 1;
};

/// Same degree and same element set.
bool same_group(Group const &a, Group const &b);

/// ⟨seed⟩ as a subgroup of `g`. Throws PreconditionError if some seed
/// element is not in `g`, DegreeMismatch on degree disagreement.
Group generated_subgroup(Group const &g, std::vector<Permutation> const &seed);

/// [A, B] = ⟨[a, b] : a in A, b in B⟩. Starts from the commutators of the
/// generators and closes under conjugation by the generators of A and B.
/// Throws PreconditionError unless A and B are subgroups of `g`.
Group commutator_subgroup(Group const &g, Group const &a, Group const &b);

}  // namespace mspg

#endif  // MSPG_GROUP_H_
