#ifndef MSPG_GROUP_TABLE_H_
#define MSPG_GROUP_TABLE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "mspg/element_set.h"
#include "mspg/group.h"
#include "mspg/permutation.h"

namespace mspg {

using ElementId = std::uint32_t;

/// Upper bound on the order of a group whose full Cayley table is built.
inline constexpr std::size_t kDefaultTableCap = 4096;

/**
 * Enumerated group with a full multiplication table. Element ids follow
 * the canonical element order of Group::elements(), so id 0 is the
 * identity. Immutable after construction.
 */
class GroupTable {
 public:
  explicit GroupTable(Group group, std::size_t cap = kDefaultTableCap);

  Group const &group() const noexcept { return group_; }
  std::size_t size() const noexcept { return elements_.size(); }

  Permutation const &element(ElementId id) const { return elements_[id]; }
  std::vector<Permutation> const &elements() const noexcept { return elements_; }

  std::optional<ElementId> find(Permutation const &p) const;

  /// Throws PreconditionError if p is not an element.
  ElementId id(Permutation const &p) const;

  static constexpr ElementId identity() noexcept { return 0; }

  /// Product in the left-to-right convention: first a, then b.
  ElementId mul(ElementId a, ElementId b) const noexcept {
    return mul_[static_cast<std::size_t>(a) * elements_.size() + b];
  }
  ElementId inv(ElementId a) const noexcept { return inv_[a]; }

  /// g^-1 x g
  ElementId conj(ElementId x, ElementId g) const noexcept {
    return mul(mul(inv(g), x), g);
  }

  /// a^-1 b^-1 a b
  ElementId comm(ElementId a, ElementId b) const noexcept {
    return mul(mul(inv(a), inv(b)), mul(a, b));
  }

  ElementId power(ElementId x, std::uint64_t k) const noexcept;

  std::uint64_t element_order(ElementId x) const noexcept { return orders_[x]; }

  /// Ids of the generators of group(), identity generators dropped.
  std::vector<ElementId> const &generator_ids() const noexcept { return gens_; }

  /// Subgroup generated by the given elements.
  ElementSet closure(std::span<ElementId const> gens) const;

  /// Extends the subgroup `base` by elements; `base` must be a subgroup.
  ElementSet closure(ElementSet const &base, std::span<ElementId const> base_gens,
                     std::span<ElementId const> extra) const;

  /// Setwise product {a b : a in A, b in B}.
  ElementSet product(ElementSet const &a, ElementSet const &b) const;

  /// H^g as a set.
  ElementSet conjugate(ElementSet const &h, ElementId g) const;

  ElementSet empty_set() const { return ElementSet(size()); }
  ElementSet singleton(ElementId x) const {
    auto s = empty_set();
    s.insert(x);
    return s;
  }

 private:
  Group group_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, ElementId, PermutationHash> index_;
  std::vector<ElementId> mul_;
  std::vector<ElementId> inv_;
  std::vector<std::uint64_t> orders_;
  std::vector<ElementId> gens_;
};

}  // namespace mspg

#endif  // MSPG_GROUP_TABLE_H_
