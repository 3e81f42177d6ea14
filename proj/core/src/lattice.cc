#include "mspg/lattice.h"

#include <algorithm>
#include <numeric>

#include "mspg/error.h"
#include "mspg/number_theory.h"

namespace mspg {

namespace {

GroupTable make_table(Group group, LatticeOptions const &options) {
  if (group.order() > options.cap) {
    throw CapExceeded("group of order " + std::to_string(group.order()) +
                      " exceeds lattice cap " + std::to_string(options.cap));
  }
  return GroupTable(std::move(group), std::max(options.cap, kDefaultTableCap));
}

}  // namespace

SubgroupLattice::SubgroupLattice(Group group, LatticeOptions options)
    : table_(make_table(std::move(group), options)) {
  if (options.method == LatticeMethod::kCyclicExtension)
    build_cyclic_extension();
  else
    build_subset_closure();
  finalize();
}

bool SubgroupLattice::add_candidate(ElementSet set, std::vector<ElementId> gens) {
  if (index_.contains(set))
    return false;
  auto id = static_cast<NodeId>(nodes_.size());
  index_.emplace(set, id);
  Node node;
  node.order = set.count();
  node.elements = std::move(set);
  node.gens = std::move(gens);
  nodes_.push_back(std::move(node));
  return true;
}

void SubgroupLattice::build_cyclic_extension() {
  auto const n = table_.size();
  add_candidate(table_.singleton(GroupTable::identity()), {});
  for (ElementId g = 1; g < n; ++g) {
    std::vector<ElementId> gens{g};
    add_candidate(table_.closure(gens), gens);
  }

  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    // copies: nodes_ may reallocate while we append
    auto const h = nodes_[i].elements;
    auto const hgens = nodes_[i].gens;

    auto covered = h;
    for (ElementId g = 0; g < n; ++g) {
      if (covered.contains(g))
        continue;
      bool normalizes = std::all_of(hgens.begin(), hgens.end(), [&](ElementId x) {
        return h.contains(table_.conj(x, g));
      });
      if (!normalizes)
        continue;

      // smallest k with g^k in H; ⟨H, g⟩ = H⟨g⟩ has index k over H
      std::uint64_t k = 1;
      ElementId power = g;
      std::vector<ElementId> cosets{GroupTable::identity()};
      while (!h.contains(power)) {
        cosets.push_back(power);
        power = table_.mul(power, g);
        ++k;
      }
      if (!is_prime(k))
        continue;

      auto extended = table_.empty_set();
      h.for_each([&](std::size_t x) {
        for (auto c : cosets)
          extended.insert(table_.mul(static_cast<ElementId>(x), c));
      });
      covered |= extended;
      auto gens = hgens;
      gens.push_back(g);
      add_candidate(std::move(extended), std::move(gens));
    }
  }

  if (!index_.contains(ElementSet::full(n)))
    join_extension_pass(0);
}

void SubgroupLattice::build_subset_closure() {
  add_candidate(table_.singleton(GroupTable::identity()), {});
  join_extension_pass(0);
}

void SubgroupLattice::join_extension_pass(std::size_t from) {
  auto const n = table_.size();
  for (std::size_t i = from; i < nodes_.size(); ++i) {
    auto const h = nodes_[i].elements;
    auto const hgens = nodes_[i].gens;
    for (ElementId g = 0; g < n; ++g) {
      if (h.contains(g))
        continue;
      std::vector<ElementId> extra{g};
      auto k = table_.closure(h, hgens, extra);
      if (index_.contains(k))
        continue;
      auto gens = hgens;
      gens.push_back(g);
      add_candidate(std::move(k), std::move(gens));
    }
  }
}

void SubgroupLattice::finalize() {
  std::vector<std::size_t> perm(nodes_.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    if (nodes_[a].order != nodes_[b].order)
      return nodes_[a].order < nodes_[b].order;
    return lex_less(nodes_[a].elements, nodes_[b].elements);
  });
  std::vector<Node> sorted;
  sorted.reserve(nodes_.size());
  for (auto i : perm)
    sorted.push_back(std::move(nodes_[i]));
  nodes_ = std::move(sorted);

  index_.clear();
  for (NodeId i = 0; i < nodes_.size(); ++i)
    index_.emplace(nodes_[i].elements, i);

  auto const &ggens = table_.generator_ids();
  for (auto &node : nodes_) {
    node.normal = std::all_of(ggens.begin(), ggens.end(), [&](ElementId g) {
      return std::all_of(node.gens.begin(), node.gens.end(), [&](ElementId x) {
        return node.elements.contains(table_.conj(x, g));
      });
    });
  }

  auto const s = nodes_.size();
  below_.assign(s, ElementSet(s));
  up_.assign(s, {});
  down_.assign(s, {});
  for (NodeId k = 0; k < s; ++k) {
    below_[k].insert(k);
    for (NodeId h = 0; h < k; ++h) {
      if (nodes_[k].order % nodes_[h].order != 0 || nodes_[k].order == nodes_[h].order)
        continue;
      if (!nodes_[h].elements.is_subset_of(nodes_[k].elements))
        continue;
      below_[k].insert(h);
      if (is_prime(nodes_[k].order / nodes_[h].order)) {
        up_[h].push_back(k);
        down_[k].push_back(h);
      }
    }
  }
  for (auto &v : up_)
    std::sort(v.begin(), v.end());
}

std::vector<std::pair<NodeId, NodeId>> SubgroupLattice::prime_index_edges() const {
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId h = 0; h < up_.size(); ++h) {
    for (auto k : up_[h])
      edges.emplace_back(h, k);
  }
  return edges;
}

std::optional<NodeId> SubgroupLattice::find(ElementSet const &s) const {
  auto it = index_.find(s);
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

NodeId SubgroupLattice::node(ElementSet const &s) const {
  auto found = find(s);
  if (!found)
    throw PreconditionError("element set is not a subgroup");
  return *found;
}

NodeId SubgroupLattice::node_of(Group const &h) const {
  if (h.degree() != group().degree())
    throw DegreeMismatch("subgroup degree differs from the lattice group");
  std::vector<ElementId> gens;
  for (auto const &g : h.generators()) {
    auto id = table_.find(g);
    if (!id)
      throw PreconditionError("subgroup is not contained in the group");
    gens.push_back(*id);
  }
  return generate(gens);
}

NodeId SubgroupLattice::generate(std::span<ElementId const> gens) const {
  return node(table_.closure(gens));
}

NodeId SubgroupLattice::intersection(NodeId a, NodeId b) const {
  return node(elements(a) & elements(b));
}

NodeId SubgroupLattice::join(NodeId a, NodeId b) const {
  if (contains(a, b))
    return a;
  if (contains(b, a))
    return b;
  return node(table_.closure(elements(a), generators(a), generators(b)));
}

NodeId SubgroupLattice::conjugate(NodeId h, ElementId g) const {
  return node(table_.conjugate(elements(h), g));
}

std::vector<NodeId> SubgroupLattice::subgroups_of(NodeId h) const {
  std::vector<NodeId> out;
  below_[h].for_each([&](std::size_t k) { out.push_back(static_cast<NodeId>(k)); });
  return out;
}

std::vector<NodeId> SubgroupLattice::overgroups_of(NodeId h) const {
  std::vector<NodeId> out;
  for (NodeId k = h; k < nodes_.size(); ++k) {
    if (below_[k].contains(h))
      out.push_back(k);
  }
  return out;
}

Group SubgroupLattice::as_group(NodeId h) const {
  std::vector<Permutation> gens;
  for (auto g : nodes_[h].gens)
    gens.push_back(table_.element(g));
  return Group(group().degree(), std::move(gens));
}

std::vector<Permutation> SubgroupLattice::element_list(NodeId h) const {
  std::vector<Permutation> out;
  nodes_[h].elements.for_each([&](std::size_t x) { out.push_back(table_.element(static_cast<ElementId>(x))); });
  return out;
}

}  // namespace mspg
