#include "mspg/group.h"

#include <algorithm>

#include "mspg/error.h"

namespace mspg {

Group::Group(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)) {
  if (degree_ == 0)
    throw PreconditionError("group degree must be positive");
  for (auto const &g : generators_) {
    if (g.degree() != degree_) {
      throw DegreeMismatch("generator of degree " + std::to_string(g.degree()) +
                           " in a group of degree " + std::to_string(degree_));
    }
  }
  for (auto const &g : generators_) {
    auto [residue, level] = sift(g, 0);
    if (!residue.is_identity())
      insert(std::move(residue), level);
  }
  schreier_sims();

  order_ = 1;
  base_.clear();
  for (auto const &level : levels_) {
    order_ *= level.orbit.size();
    base_.push_back(level.base);
  }
}

Group::SiftResult Group::sift(Permutation g, std::size_t from) const {
  for (std::size_t i = from; i < levels_.size(); ++i) {
    auto const &level = levels_[i];
    auto x = g[level.base];
    auto k = level.slot[x];
    if (k < 0)
      return {std::move(g), i};
    g = g * inverse(level.reps[static_cast<std::size_t>(k)]);
  }
  return {std::move(g), levels_.size()};
}

void Group::insert(Permutation residue, std::size_t level) {
  if (level == levels_.size()) {
    Level fresh;
    fresh.base = residue.first_moved();
    levels_.push_back(std::move(fresh));
  }
  levels_[level].strong.push_back(std::move(residue));
  for (std::size_t i = 0; i <= level; ++i)
    rebuild_orbit(i);
}

void Group::rebuild_orbit(std::size_t i) {
  auto &level = levels_[i];
  level.orbit.assign(1, level.base);
  level.slot.assign(degree_, -1);
  level.reps.assign(1, Permutation(degree_));
  level.slot[level.base] = 0;

  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    auto y = level.orbit[k];
    for (std::size_t j = i; j < levels_.size(); ++j) {
      for (auto const &s : levels_[j].strong) {
        auto z = s[y];
        if (level.slot[z] >= 0)
          continue;
        level.slot[z] = static_cast<std::int32_t>(level.orbit.size());
        level.orbit.push_back(z);
        level.reps.push_back(level.reps[k] * s);
      }
    }
  }
}

// Sifts every Schreier generator of level i through the levels below. On
// the first non-trivial residue the residue is inserted and true returned.
bool Group::check_level(std::size_t i) {
  for (std::size_t k = 0; k < levels_[i].orbit.size(); ++k) {
    for (std::size_t j = i; j < levels_.size(); ++j) {
      for (std::size_t s = 0; s < levels_[j].strong.size(); ++s) {
        auto const &level = levels_[i];
        auto const &gen = levels_[j].strong[s];
        auto image = gen[level.orbit[k]];
        auto schreier = level.reps[k] * gen *
                        inverse(level.reps[static_cast<std::size_t>(level.slot[image])]);
        auto [residue, at] = sift(std::move(schreier), i + 1);
        if (!residue.is_identity()) {
          insert(std::move(residue), at);
          return true;
        }
      }
    }
  }
  return false;
}

void Group::schreier_sims() {
  if (levels_.empty())
    return;
  std::size_t i = levels_.size();
  while (i > 0) {
    if (check_level(i - 1)) {
      // a deeper level gained a generator; re-verify from the bottom
      i = levels_.size();
      continue;
    }
    --i;
  }
}

bool Group::contains(Permutation const &p) const {
  if (p.degree() != degree_)
    return false;
  auto [residue, level] = sift(p, 0);
  (void)level;
  return residue.is_identity();
}

std::vector<Permutation> Group::elements(std::size_t cap) const {
  if (order_ > cap) {
    throw CapExceeded("group of order " + std::to_string(order_) +
                      " exceeds enumeration cap " + std::to_string(cap));
  }
  std::vector<Permutation> result{Permutation(degree_)};
  // element = t_k * ... * t_1 * t_0 with t_i from the level-i transversal
  for (std::size_t i = levels_.size(); i-- > 0;) {
    std::vector<Permutation> next;
    next.reserve(result.size() * levels_[i].reps.size());
    for (auto const &prefix : result) {
      for (auto const &rep : levels_[i].reps)
        next.push_back(prefix * rep);
    }
    result = std::move(next);
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<Permutation> Group::strong_generators() const {
  std::vector<Permutation> result;
  for (auto const &level : levels_)
    result.insert(result.end(), level.strong.begin(), level.strong.end());
  return result;
}

std::vector<std::size_t> Group::transversal_sizes() const {
  std::vector<std::size_t> result;
  for (auto const &level : levels_)
    result.push_back(level.orbit.size());
  return result;
}

bool Group::contains_group(Group const &sub) const {
  if (sub.degree() != degree_)
    return false;
  return std::all_of(sub.generators().begin(), sub.generators().end(),
                     [this](auto const &g) { return contains(g); });
}

bool same_group(Group const &a, Group const &b) {
  return a.degree() == b.degree() && a.order() == b.order() &&
         a.contains_group(b);
}

Group generated_subgroup(Group const &g, std::vector<Permutation> const &seed) {
  for (auto const &s : seed) {
    if (s.degree() != g.degree())
      throw DegreeMismatch("seed element has the wrong degree");
    if (!g.contains(s))
      throw PreconditionError("seed element " + to_cycles(s) +
                              " is not in the group");
  }
  return Group(g.degree(), seed);
}

Group commutator_subgroup(Group const &g, Group const &a, Group const &b) {
  if (!g.contains_group(a) || !g.contains_group(b))
    throw PreconditionError("commutator_subgroup: arguments are not subgroups");

  std::vector<Permutation> gens;
  for (auto const &x : a.generators()) {
    for (auto const &y : b.generators()) {
      auto c = commutator(x, y);
      if (!c.is_identity())
        gens.push_back(std::move(c));
    }
  }
  Group current(g.degree(), gens);

  std::vector<Permutation> conjugators = a.generators();
  conjugators.insert(conjugators.end(), b.generators().begin(), b.generators().end());

  bool grown = true;
  while (grown) {
    grown = false;
    for (std::size_t i = 0; i < gens.size() && !grown; ++i) {
      for (auto const &x : conjugators) {
        auto c = conjugate(gens[i], x);
        if (!current.contains(c)) {
          gens.push_back(std::move(c));
          current = Group(g.degree(), gens);
          grown = true;
          break;
        }
      }
    }
  }
  return current;
}

}  // namespace mspg
