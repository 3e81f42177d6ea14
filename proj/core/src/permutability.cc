#include "mspg/permutability.h"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "mspg/error.h"
#include "mspg/number_theory.h"
#include "mspg/structure.h"

namespace mspg {

PermutabilityEngine::PermutabilityEngine(SubgroupLattice const &lat)
    : lat_(&lat),
      n_(lat.size()),
      permutes_(n_ * n_, -1),
      mutual_(n_ * n_, -1),
      msp_(n_ * n_, -1),
      sylow_cache_(n_) {}

std::uint64_t PermutabilityEngine::product_size(NodeId u, NodeId v) const {
  auto meet = lat_->elements(u).intersection_count(lat_->elements(v));
  return lat_->order(u) * lat_->order(v) / meet;
}

bool PermutabilityEngine::permutes(NodeId u, NodeId v) {
  auto &cached = permutes_[slot(u, v)];
  if (cached >= 0)
    return cached == 1;
  bool value;
  if (lat_->contains(u, v) || lat_->contains(v, u) || lat_->is_normal(u) || lat_->is_normal(v)) {
    value = true;
  } else {
    auto size = product_size(u, v);
    value = lat_->order(lat_->top()) % size == 0 && lat_->order(lat_->join(u, v)) == size;
  }
  cached = value ? 1 : 0;
  permutes_[slot(v, u)] = cached;
  return value;
}

std::optional<NonPermutingPair> PermutabilityEngine::mutual_failure(NodeId a, NodeId b) {
  auto &cached = mutual_[slot(a, b)];
  if (cached == 1)
    return std::nullopt;
  std::optional<NonPermutingPair> failure;
  lat_->below(a).for_each([&](std::size_t u) {
    if (!failure && !permutes(static_cast<NodeId>(u), b))
      failure = NonPermutingPair{static_cast<NodeId>(u), b};
  });
  if (!failure) {
    lat_->below(b).for_each([&](std::size_t v) {
      if (!failure && !permutes(a, static_cast<NodeId>(v)))
        failure = NonPermutingPair{a, static_cast<NodeId>(v)};
    });
  }
  cached = failure ? 0 : 1;
  return failure;
}

std::optional<NonPermutingPair> PermutabilityEngine::total_failure(NodeId a, NodeId b) {
  auto us = lat_->subgroups_of(a);
  auto vs = lat_->subgroups_of(b);
  for (auto u : us) {
    for (auto v : vs) {
      if (!permutes(u, v))
        return NonPermutingPair{u, v};
    }
  }
  return std::nullopt;
}

std::vector<NodeId> const &PermutabilityEngine::sylows(NodeId h, std::uint64_t p) {
  auto &entries = sylow_cache_[h];
  for (auto const &[prime, nodes] : entries) {
    if (prime == p)
      return nodes;
  }
  entries.emplace_back(p, sylow_nodes(*lat_, h, p));
  return entries.back().second;
}

MspVerdict PermutabilityEngine::msp(NodeId a, NodeId b) {
  MspVerdict verdict;
  verdict.product_is_subgroup = permutes(a, b);
  if (!verdict.product_is_subgroup)
    return verdict;

  auto const pa = prime_divisors(lat_->order(a));
  auto const pb = prime_divisors(lat_->order(b));

  auto check = [&](std::uint64_t p, std::uint64_t q, NodeId sp, NodeId sq) {
    if (auto bad = mutual_failure(sp, sq)) {
      verdict.failing_pair = MspFailure{p, q, sp, sq, bad->first, bad->second};
      return false;
    }
    return true;
  };

  // one representative pair per (p, q) first: most failures show up there
  for (auto p : pa) {
    for (auto q : pb) {
      if (p != q && !check(p, q, sylows(a, p).front(), sylows(b, q).front()))
        return verdict;
    }
  }
  for (auto p : pa) {
    for (auto q : pb) {
      if (p == q)
        continue;
      for (auto sp : sylows(a, p)) {
        for (auto sq : sylows(b, q)) {
          if (!check(p, q, sp, sq))
            return verdict;
        }
      }
    }
  }
  verdict.holds = true;
  return verdict;
}

bool PermutabilityEngine::msp_holds(NodeId a, NodeId b) {
  auto &cached = msp_[slot(a, b)];
  if (cached < 0)
    cached = msp(a, b).holds ? 1 : 0;
  return cached == 1;
}

// Group-level

namespace {

void require_same_degree(Group const &a, Group const &b) {
  if (a.degree() != b.degree())
    throw DegreeMismatch("groups have different degrees");
}

Group join_group(Group const &a, Group const &b) {
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Group(a.degree(), std::move(gens));
}

}  // namespace

std::vector<Permutation> setwise_product(Group const &a, Group const &b) {
  require_same_degree(a, b);
  std::set<Permutation> out;
  auto ea = a.elements();
  auto eb = b.elements();
  for (auto const &x : ea) {
    for (auto const &y : eb)
      out.insert(x * y);
  }
  return {out.begin(), out.end()};
}

bool product_is_subgroup(Group const &a, Group const &b) {
  require_same_degree(a, b);
  bool setwise = setwise_product(a, b) == setwise_product(b, a);

  std::uint64_t meet = 0;
  for (auto const &x : a.elements()) {
    if (b.contains(x))
      ++meet;
  }
  bool by_order = join_group(a, b).order() * meet == a.order() * b.order();
  if (setwise != by_order)
    throw std::logic_error("product_is_subgroup: setwise and order criteria disagree");
  return setwise;
}

std::optional<std::pair<Group, Group>> mutual_failure(Group const &a, Group const &b) {
  require_same_degree(a, b);
  SubgroupLattice lat(join_group(a, b));
  PermutabilityEngine engine(lat);
  auto bad = engine.mutual_failure(lat.node_of(a), lat.node_of(b));
  if (!bad)
    return std::nullopt;
  return std::pair{lat.as_group(bad->first), lat.as_group(bad->second)};
}

bool mutually_permutable(Group const &a, Group const &b) { return !mutual_failure(a, b); }

std::optional<std::pair<Group, Group>> total_failure(Group const &a, Group const &b) {
  require_same_degree(a, b);
  SubgroupLattice lat(join_group(a, b));
  PermutabilityEngine engine(lat);
  auto bad = engine.total_failure(lat.node_of(a), lat.node_of(b));
  if (!bad)
    return std::nullopt;
  return std::pair{lat.as_group(bad->first), lat.as_group(bad->second)};
}

bool totally_permutable(Group const &a, Group const &b) { return !total_failure(a, b); }

GroupMspVerdict msp_permutable(Group const &g, Group const &a, Group const &b) {
  SubgroupLattice lat(g);
  PermutabilityEngine engine(lat);
  auto v = engine.msp(lat.node_of(a), lat.node_of(b));
  GroupMspVerdict out{v.holds, v.product_is_subgroup, std::nullopt};
  if (v.failing_pair) {
    auto const &f = *v.failing_pair;
    out.failing_pair = GroupMspFailure{f.p,
                                       f.q,
                                       lat.as_group(f.sylow_a),
                                       lat.as_group(f.sylow_b),
                                       lat.as_group(f.u),
                                       lat.as_group(f.v)};
  }
  return out;
}

}  // namespace mspg
