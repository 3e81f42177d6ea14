#ifndef MSPG_LATTICE_H_
#define MSPG_LATTICE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mspg/element_set.h"
#include "mspg/group.h"
#include "mspg/group_table.h"

namespace mspg {

using NodeId = std::uint32_t;

inline constexpr std::size_t kDefaultLatticeCap = 400;

enum class LatticeMethod {
  /// Layered cyclic extension: a subgroup H is extended by every element
  /// g of N_G(H) whose image in N_G(H)/H has prime order. This reaches every
  /// soluble subgroup. If the whole group is not reached it is insoluble,
  /// and a join-extension pass (H -> ⟨H, g⟩ for every g) completes the
  /// lattice.
  kCyclicExtension,
  /// Join-extension from the trivial group only: H -> ⟨H, g⟩ for every
  /// subgroup found so far and every g outside it. Complete because every
  /// non-trivial subgroup is ⟨M, g⟩ for one of its maximal subgroups M.
  /// Slower; used as a cross-check.
  kSubsetClosure,
};

struct LatticeOptions {
  std::size_t cap = kDefaultLatticeCap;
  LatticeMethod method = LatticeMethod::kCyclicExtension;
};

/**
 * All subgroups of a small group. Nodes are sorted canonically by
 * (order, sorted element-id list), so node 0 is the trivial subgroup and
 * the last node is the whole group. Immutable after construction and safe
 * to share between threads.
 */
class SubgroupLattice {
 public:
  /// Throws CapExceeded if the group order exceeds options.cap.
  explicit SubgroupLattice(Group group, LatticeOptions options = {});

  GroupTable const &table() const noexcept { return table_; }
  Group const &group() const noexcept { return table_.group(); }

  std::size_t size() const noexcept { return nodes_.size(); }
  NodeId trivial() const noexcept { return 0; }
  NodeId top() const noexcept { return static_cast<NodeId>(nodes_.size() - 1); }

  ElementSet const &elements(NodeId h) const { return nodes_[h].elements; }
  std::uint64_t order(NodeId h) const { return nodes_[h].order; }
  std::vector<ElementId> const &generators(NodeId h) const { return nodes_[h].gens; }

  /// Normal in the whole group.
  bool is_normal(NodeId h) const { return nodes_[h].normal; }

  /// small ≤ big
  bool contains(NodeId big, NodeId small) const { return below_[big].contains(small); }

  /// Targets of prime-index edges h -> k (h < k, |k : h| prime).
  std::vector<NodeId> const &prime_index_up(NodeId h) const { return up_[h]; }
  std::vector<NodeId> const &prime_index_down(NodeId k) const { return down_[k]; }

  /// All prime-index edges (h, k), sorted.
  std::vector<std::pair<NodeId, NodeId>> prime_index_edges() const;

  std::optional<NodeId> find(ElementSet const &s) const;

  /// Throws PreconditionError if `s` is not a subgroup.
  NodeId node(ElementSet const &s) const;

  /// Node of a subgroup given as a Group of the same degree. Throws
  /// PreconditionError if it is not contained in group().
  NodeId node_of(Group const &h) const;

  NodeId generate(std::span<ElementId const> gens) const;
  NodeId intersection(NodeId a, NodeId b) const;
  NodeId join(NodeId a, NodeId b) const;
  NodeId conjugate(NodeId h, ElementId g) const;

  /// Nodes contained in h, ascending.
  std::vector<NodeId> subgroups_of(NodeId h) const;
  /// Nodes containing h, ascending.
  std::vector<NodeId> overgroups_of(NodeId h) const;

  /// Node set {k : k ≤ h} as a bitset over node ids.
  ElementSet const &below(NodeId h) const { return below_[h]; }

  Group as_group(NodeId h) const;
  std::vector<Permutation> element_list(NodeId h) const;

 private:
  struct Node {
    ElementSet elements;
    std::uint64_t order = 0;
    std::vector<ElementId> gens;
    bool normal = false;
  };

  void build_cyclic_extension();
  void build_subset_closure();
  bool add_candidate(ElementSet set, std::vector<ElementId> gens);
  void join_extension_pass(std::size_t from);
  void finalize();

  GroupTable table_;
  std::vector<Node> nodes_;
  std::unordered_map<ElementSet, NodeId, ElementSetHash> index_;
  std::vector<ElementSet> below_;
  std::vector<std::vector<NodeId>> up_;
  std::vector<std::vector<NodeId>> down_;
};

}  // namespace mspg

#endif  // MSPG_LATTICE_H_
