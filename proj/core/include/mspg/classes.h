#ifndef MSPG_CLASSES_H_
#define MSPG_CLASSES_H_

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mspg/element_set.h"
#include "mspg/group.h"
#include "mspg/lattice.h"

/**
 * @file classes.h
 * @brief Membership predicates for the group classes used by the harness.
 *
 * Inclusions that the predicates must respect:
 *   supersoluble (U) ⊆ wU ⊆ vU ⊆ D (ordered Sylow tower of supersoluble
 *   type) ⊆ soluble.
 */

namespace mspg {

enum class ClassTag {
  kSoluble,
  kNilpotent,
  kMetanilpotent,
  kSupersoluble,  // U
  kWU,            // every Sylow subgroup is P-subnormal
  kVU,            // every primary cyclic subgroup is P-subnormal
  kTowerD,        // ordered Sylow tower of supersoluble type
  kPClosed,
  kPNilpotent,
};

struct ClassId {
  ClassTag tag = ClassTag::kSoluble;
  std::uint64_t p = 0;  // only for kPClosed / kPNilpotent

  /// "U", "wU", "vU", "D", "soluble", "nilpotent", "metanilpotent",
  /// "p-closed:<p>", "p-nilpotent:<p>".
  std::string name() const;

  /// Inverse of name(); std::nullopt for unknown tags or a non-prime p.
  static std::optional<ClassId> parse(std::string_view text);

  friend auto operator<=>(ClassId const &, ClassId const &) = default;
};

inline constexpr ClassId kClassU{ClassTag::kSupersoluble};
inline constexpr ClassId kClassWU{ClassTag::kWU};
inline constexpr ClassId kClassVU{ClassTag::kVU};
inline constexpr ClassId kClassD{ClassTag::kTowerD};
inline constexpr ClassId kClassSoluble{ClassTag::kSoluble};
inline constexpr ClassId kClassNilpotent{ClassTag::kNilpotent};

struct PSubnormalResult {
  bool holds = false;
  /// h = chain.front() < ... < chain.back() = parent, prime indices.
  std::vector<NodeId> chain;
};

/// Breadth-first search for a chain of prime-index steps from h up to
/// parent in the lattice graph. h = parent counts as P-subnormal.
PSubnormalResult is_P_subnormal(SubgroupLattice const &lat, NodeId parent, NodeId h);

/// Both readings of the w-supersolubility characterization: an ordered
/// Sylow tower of supersoluble type plus either all metanilpotent
/// subgroups supersoluble, or all biprimary subgroups supersoluble.
struct WUCharacterization {
  bool tower = false;
  bool metanilpotent_subgroups_supersoluble = false;
  bool biprimary_subgroups_supersoluble = false;
  bool metanilpotent_variant() const { return tower && metanilpotent_subgroups_supersoluble; }
  bool biprimary_variant() const { return tower && biprimary_subgroups_supersoluble; }
};

/**
 * Memoizing evaluator of class predicates for the subgroups of one
 * lattice. Not thread-safe: use one evaluator per worker.
 */
class ClassEvaluator {
 public:
  explicit ClassEvaluator(SubgroupLattice const &lat);

  SubgroupLattice const &lattice() const noexcept { return *lat_; }

  bool in_class(NodeId h, ClassId c);

  bool is_soluble(NodeId h);
  bool is_nilpotent(NodeId h);
  bool is_metanilpotent(NodeId h);
  bool is_supersoluble(NodeId h);
  bool is_p_closed(NodeId h, std::uint64_t p);
  bool is_p_nilpotent(NodeId h, std::uint64_t p);
  bool has_tower(NodeId h);
  bool is_wU(NodeId h);
  bool is_vU(NodeId h);

  /// w-supersolubility checking one Sylow subgroup per prime only.
  bool is_wU_one_per_prime(NodeId h);

  bool is_biprimary(NodeId h) const;
  bool is_primary_cyclic(NodeId h);

  WUCharacterization wU_characterization(NodeId h);
  /// Tower plus every biprimary subgroup with a cyclic Sylow subgroup
  /// supersoluble.
  bool vU_characterization(NodeId h);

  /// Nodes P-subnormal in h, as a bitset over node ids (downward search
  /// along prime-index edges from h).
  ElementSet const &p_subnormal_set(NodeId h);

  /// Normal subgroups of h, ascending.
  std::vector<NodeId> const &normal_subgroups(NodeId h);

 private:
  using Memo = std::vector<std::int8_t>;
  template <typename F>
  bool memo(Memo &m, NodeId h, F &&compute);

  SubgroupLattice const *lat_;
  Memo soluble_, nilpotent_, metanilpotent_, supersoluble_, tower_, wu_, vu_,
      primary_cyclic_;
  std::map<std::uint64_t, Memo> p_closed_, p_nilpotent_;
  std::vector<std::optional<ElementSet>> p_subnormal_;
  std::vector<std::optional<std::vector<NodeId>>> normals_;
};

/// Group-level predicates. Results are memoized process-wide per
/// (generators, class); the memo is safe for concurrent use.
bool in_class(Group const &g, ClassId c);
bool is_supersoluble(Group const &g);
bool is_p_closed(Group const &g, std::uint64_t p);
bool is_p_nilpotent(Group const &g, std::uint64_t p);
bool is_wU(Group const &g);
bool is_vU(Group const &g);
bool is_metanilpotent(Group const &g);
bool is_biprimary(Group const &g);
bool is_primary_cyclic(Group const &g);
WUCharacterization wU_characterization(Group const &g);
bool vU_characterization(Group const &g);
PSubnormalResult is_P_subnormal(Group const &g, Group const &h);

}  // namespace mspg

#endif  // MSPG_CLASSES_H_
