#ifndef MSPG_PERMUTABILITY_H_
#define MSPG_PERMUTABILITY_H_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mspg/group.h"
#include "mspg/lattice.h"

/**
 * @file permutability.h
 * @brief Setwise permutability of subgroups, mutual and total
 * permutability, and msp-permutability.
 *
 * Two subgroups U, V permute (UV = VU as sets) iff UV is a subgroup, iff
 * |⟨U, V⟩| · |U ∩ V| = |U| · |V|. The lattice engine decides permutability
 * with that identity; the Group-level product_is_subgroup() also
 * materializes both products and checks that the two answers agree.
 */

namespace mspg {

/// Failing pair of an msp check: sylow_a is a Sylow p-subgroup of A,
/// sylow_b a Sylow q-subgroup of B, and u·v is not a subgroup, where either
/// u ≤ sylow_a and v = sylow_b, or u = sylow_a and v ≤ sylow_b.
struct MspFailure {
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  NodeId sylow_a = 0;
  NodeId sylow_b = 0;
  NodeId u = 0;
  NodeId v = 0;
};

struct MspVerdict {
  bool holds = false;
  bool product_is_subgroup = false;
  std::optional<MspFailure> failing_pair;
};

/// A pair of subgroups (u, v) with uv ≠ vu.
using NonPermutingPair = std::pair<NodeId, NodeId>;

/**
 * Permutability predicates over the subgroups of one lattice, with pair
 * caches. Not thread-safe; use one engine per worker.
 */
class PermutabilityEngine {
 public:
  explicit PermutabilityEngine(SubgroupLattice const &lat);

  SubgroupLattice const &lattice() const noexcept { return *lat_; }

  /// uv = vu as sets.
  bool permutes(NodeId u, NodeId v);

  /// Order of the set uv, |u||v| / |u ∩ v|.
  std::uint64_t product_size(NodeId u, NodeId v) const;

  /// uB = Bu for all u ≤ a and aV = Va for all v ≤ b. The witness is the
  /// first non-permuting pair found.
  std::optional<NonPermutingPair> mutual_failure(NodeId a, NodeId b);
  bool mutually_permutable(NodeId a, NodeId b) { return !mutual_failure(a, b); }

  /// uv = vu for all u ≤ a, v ≤ b.
  std::optional<NonPermutingPair> total_failure(NodeId a, NodeId b);
  bool totally_permutable(NodeId a, NodeId b) { return !total_failure(a, b); }

  /// ab is a subgroup, and every Sylow p-subgroup of a is mutually
  /// permutable with every Sylow q-subgroup of b for all primes p ≠ q.
  /// All Sylow subgroups are quantified, not one per prime.
  MspVerdict msp(NodeId a, NodeId b);

  /// msp() with the answer only; cached per unordered pair.
  bool msp_holds(NodeId a, NodeId b);

 private:
  std::size_t slot(NodeId u, NodeId v) const { return std::size_t{u} * n_ + v; }

  SubgroupLattice const *lat_;
  std::size_t n_;
  std::vector<std::int8_t> permutes_;
  std::vector<std::int8_t> mutual_;
  std::vector<std::int8_t> msp_;
  std::vector<std::vector<std::pair<std::uint64_t, std::vector<NodeId>>>> sylow_cache_;

  std::vector<NodeId> const &sylows(NodeId h, std::uint64_t p);
};

/// Group-level verdicts, with subgroups spelled out.
struct GroupMspFailure {
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  Group sylow_a, sylow_b, u, v;
};

struct GroupMspVerdict {
  bool holds = false;
  bool product_is_subgroup = false;
  std::optional<GroupMspFailure> failing_pair;
};

/// AB is a subgroup. Decided both setwise (AB = BA) and by the order
/// identity; throws std::logic_error if the two disagree. Throws
/// DegreeMismatch for different degrees.
bool product_is_subgroup(Group const &a, Group const &b);

/// Setwise product {ab}, sorted; small groups only.
std::vector<Permutation> setwise_product(Group const &a, Group const &b);

/// Mutual/total permutability of A and B inside ⟨A, B⟩; the witness is a
/// non-permuting pair (U, V).
std::optional<std::pair<Group, Group>> mutual_failure(Group const &a, Group const &b);
bool mutually_permutable(Group const &a, Group const &b);
std::optional<std::pair<Group, Group>> total_failure(Group const &a, Group const &b);
bool totally_permutable(Group const &a, Group const &b);

/// Throws PreconditionError unless A, B ≤ G.
GroupMspVerdict msp_permutable(Group const &g, Group const &a, Group const &b);

}  // namespace mspg

#endif  // MSPG_PERMUTABILITY_H_
