#include "mspg/group_table.h"

#include "mspg/error.h"

namespace mspg {

GroupTable::GroupTable(Group group, std::size_t cap) : group_(std::move(group)) {
  if (group_.order() > cap) {
    throw CapExceeded("group of order " + std::to_string(group_.order()) +
                      " exceeds table cap " + std::to_string(cap));
  }
  elements_ = group_.elements(cap);
  auto const n = elements_.size();
  index_.reserve(n * 2);
  for (std::size_t i = 0; i < n; ++i)
    index_.emplace(elements_[i], static_cast<ElementId>(i));

  // Row a of the table is obtained from the permutation image of right
  // multiplication; computing compose() once per pair dominates anyway.
  mul_.resize(n * n);
  std::vector<Point> buffer(group_.degree());
  for (std::size_t a = 0; a < n; ++a) {
    auto const &pa = elements_[a];
    for (std::size_t b = 0; b < n; ++b) {
      auto const &pb = elements_[b];
      for (Point i = 0; i < buffer.size(); ++i)
        buffer[i] = pb[pa[i]];
      auto it = index_.find(Permutation::from_images_unchecked(buffer));
      mul_[a * n + b] = it->second;
    }
  }

  inv_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (mul_[a * n + b] == identity()) {
        inv_[a] = static_cast<ElementId>(b);
        break;
      }
    }
  }

  orders_.resize(n);
  for (std::size_t a = 0; a < n; ++a)
    orders_[a] = elements_[a].order();

  for (auto const &g : group_.generators()) {
    if (!g.is_identity())
      gens_.push_back(index_.at(g));
  }
}

std::optional<ElementId> GroupTable::find(Permutation const &p) const {
  auto it = index_.find(p);
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

ElementId GroupTable::id(Permutation const &p) const {
  auto found = find(p);
  if (!found)
    throw PreconditionError("permutation " + to_cycles(p) + " is not in the group");
  return *found;
}

ElementId GroupTable::power(ElementId x, std::uint64_t k) const noexcept {
  ElementId result = identity();
  ElementId base = x;
  while (k) {
    if (k & 1u)
      result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

ElementSet GroupTable::closure(std::span<ElementId const> gens) const {
  auto base = singleton(identity());
  return closure(base, {}, gens);
}

ElementSet GroupTable::closure(ElementSet const &base,
                               std::span<ElementId const> base_gens,
                               std::span<ElementId const> extra) const {
  std::vector<ElementId> gens(base_gens.begin(), base_gens.end());
  bool any_new = false;
  for (auto x : extra) {
    if (!base.contains(x))
      any_new = true;
    gens.push_back(x);
  }
  if (!any_new)
    return base;

  // Orbit of the identity under right multiplication by all generators;
  // the base subgroup is already closed so it seeds the queue.
  auto result = base;
  std::vector<ElementId> queue;
  result.for_each([&](std::size_t i) { queue.push_back(static_cast<ElementId>(i)); });
  if (base_gens.empty() && base.count() > 1) {
    // generators of the base are unknown; use all of its elements
    for (auto i : queue)
      gens.push_back(i);
  }
  for (std::size_t k = 0; k < queue.size(); ++k) {
    auto x = queue[k];
    for (auto g : gens) {
      auto y = mul(x, g);
      if (!result.contains(y)) {
        result.insert(y);
        queue.push_back(y);
      }
    }
  }
  return result;
}

ElementSet GroupTable::product(ElementSet const &a, ElementSet const &b) const {
  auto out = empty_set();
  auto bs = b.to_vector();
  a.for_each([&](std::size_t x) {
    for (auto y : bs)
      out.insert(mul(static_cast<ElementId>(x), y));
  });
  return out;
}

ElementSet GroupTable::conjugate(ElementSet const &h, ElementId g) const {
  auto out = empty_set();
  auto gi = inv(g);
  h.for_each([&](std::size_t x) {
    out.insert(mul(mul(gi, static_cast<ElementId>(x)), g));
  });
  return out;
}

}  // namespace mspg
