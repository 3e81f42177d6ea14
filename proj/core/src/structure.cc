#include "mspg/structure.h"

#include <algorithm>

#include "mspg/error.h"
#include "mspg/number_theory.h"

namespace mspg {

namespace {

void require_sub(SubgroupLattice const &lat, NodeId parent, NodeId h) {
  if (!lat.contains(parent, h))
    throw PreconditionError("subgroup is not contained in the parent");
}

}  // namespace

bool is_abelian(SubgroupLattice const &lat, NodeId parent) {
  auto const &t = lat.table();
  auto const &gens = lat.generators(parent);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (t.mul(gens[i], gens[j]) != t.mul(gens[j], gens[i]))
        return false;
    }
  }
  return true;
}

bool is_cyclic(SubgroupLattice const &lat, NodeId parent) {
  auto const &t = lat.table();
  auto const order = lat.order(parent);
  bool found = false;
  lat.elements(parent).for_each([&](std::size_t x) {
    if (t.element_order(static_cast<ElementId>(x)) == order)
      found = true;
  });
  return found;
}

bool is_elementary_abelian(SubgroupLattice const &lat, NodeId parent) {
  auto const order = lat.order(parent);
  if (order == 1)
    return true;
  if (!is_prime_power(order) || !is_abelian(lat, parent))
    return false;
  auto const p = prime_divisors(order).front();
  bool ok = true;
  lat.elements(parent).for_each([&](std::size_t x) {
    auto o = lat.table().element_order(static_cast<ElementId>(x));
    if (o != 1 && o != p)
      ok = false;
  });
  return ok;
}

bool is_normal(SubgroupLattice const &lat, NodeId parent, NodeId h) {
  require_sub(lat, parent, h);
  if (parent == lat.top())
    return lat.is_normal(h);
  auto const &t = lat.table();
  auto const &hs = lat.elements(h);
  for (auto g : lat.generators(parent)) {
    for (auto x : lat.generators(h)) {
      if (!hs.contains(t.conj(x, g)))
        return false;
    }
  }
  return true;
}

NodeId normalizer(SubgroupLattice const &lat, NodeId parent, NodeId h) {
  require_sub(lat, parent, h);
  auto const &t = lat.table();
  auto const &hs = lat.elements(h);
  auto const &hgens = lat.generators(h);
  auto out = t.empty_set();
  lat.elements(parent).for_each([&](std::size_t g) {
    bool ok = std::all_of(hgens.begin(), hgens.end(), [&](ElementId x) {
      return hs.contains(t.conj(x, static_cast<ElementId>(g)));
    });
    if (ok)
      out.insert(g);
  });
  return lat.node(out);
}

NodeId centralizer(SubgroupLattice const &lat, NodeId parent, ElementSet const &s) {
  auto const &t = lat.table();
  auto members = s.to_vector();
  auto out = t.empty_set();
  lat.elements(parent).for_each([&](std::size_t g) {
    auto ge = static_cast<ElementId>(g);
    bool ok = std::all_of(members.begin(), members.end(), [&](ElementId x) {
      return t.mul(x, ge) == t.mul(ge, x);
    });
    if (ok)
      out.insert(g);
  });
  return lat.node(out);
}

NodeId center(SubgroupLattice const &lat, NodeId parent) {
  auto gens = lat.table().empty_set();
  for (auto g : lat.generators(parent))
    gens.insert(g);
  return centralizer(lat, parent, gens);
}

NodeId commutator_subgroup(SubgroupLattice const &lat, NodeId a, NodeId b) {
  auto const &t = lat.table();
  auto as = lat.elements(a).to_vector();
  auto bs = lat.elements(b).to_vector();
  auto comms = t.empty_set();
  for (auto x : as) {
    for (auto y : bs)
      comms.insert(t.comm(x, y));
  }
  auto gens = comms.to_vector();
  return lat.generate(gens);
}

NodeId derived_subgroup(SubgroupLattice const &lat, NodeId parent) {
  return commutator_subgroup(lat, parent, parent);
}

std::vector<NodeId> derived_series(SubgroupLattice const &lat, NodeId parent) {
  std::vector<NodeId> series{parent};
  for (;;) {
    auto next = derived_subgroup(lat, series.back());
    if (next == series.back())
      break;
    series.push_back(next);
  }
  return series;
}

bool is_soluble(SubgroupLattice const &lat, NodeId parent) {
  return derived_series(lat, parent).back() == lat.trivial();
}

std::vector<NodeId> lower_central_series(SubgroupLattice const &lat, NodeId parent) {
  std::vector<NodeId> series{parent};
  for (;;) {
    auto next = commutator_subgroup(lat, series.back(), parent);
    if (next == series.back())
      break;
    series.push_back(next);
  }
  return series;
}

bool is_nilpotent(SubgroupLattice const &lat, NodeId parent) {
  return lower_central_series(lat, parent).back() == lat.trivial();
}

bool is_quotient_nilpotent(SubgroupLattice const &lat, NodeId parent, NodeId n) {
  require_sub(lat, parent, n);
  auto x = parent;
  for (;;) {
    auto next = lat.join(commutator_subgroup(lat, x, parent), n);
    if (next == x)
      break;
    x = next;
  }
  return x == n;
}

std::vector<NodeId> sylow_nodes(SubgroupLattice const &lat, NodeId parent, std::uint64_t p) {
  if (!is_prime(p))
    throw PreconditionError(std::to_string(p) + " is not prime");
  auto const target = p_part(lat.order(parent), p);
  std::vector<NodeId> out;
  for (auto k : lat.subgroups_of(parent)) {
    if (lat.order(k) == target)
      out.push_back(k);
  }
  return out;
}

NodeId o_p(SubgroupLattice const &lat, NodeId parent, std::uint64_t p) {
  auto sylows = sylow_nodes(lat, parent, p);
  auto acc = lat.elements(sylows.front());
  for (auto s : sylows)
    acc &= lat.elements(s);
  return lat.node(acc);
}

NodeId fitting(SubgroupLattice const &lat, NodeId parent) {
  auto acc = lat.trivial();
  for (auto p : prime_divisors(lat.order(parent)))
    acc = lat.join(acc, o_p(lat, parent, p));
  return acc;
}

NodeId fitting_by_scan(SubgroupLattice const &lat, NodeId parent) {
  auto best = lat.trivial();
  for (auto k : lat.subgroups_of(parent)) {
    if (lat.order(k) > lat.order(best) && is_normal(lat, parent, k) &&
        is_nilpotent(lat, k))
      best = k;
  }
  return best;
}

std::vector<NodeId> maximal_subgroups(SubgroupLattice const &lat, NodeId parent) {
  auto subs = lat.subgroups_of(parent);
  std::vector<NodeId> out;
  for (auto k : subs) {
    if (k == parent)
      continue;
    bool maximal = true;
    for (auto m : subs) {
      if (m != parent && m != k && lat.contains(m, k)) {
        maximal = false;
        break;
      }
    }
    if (maximal)
      out.push_back(k);
  }
  return out;
}

NodeId frattini(SubgroupLattice const &lat, NodeId parent) {
  auto acc = lat.elements(parent);
  for (auto m : maximal_subgroups(lat, parent))
    acc &= lat.elements(m);
  return lat.node(acc);
}

NodeId core(SubgroupLattice const &lat, NodeId parent, NodeId h) {
  require_sub(lat, parent, h);
  auto const &t = lat.table();
  auto acc = lat.elements(h);
  lat.elements(parent).for_each([&](std::size_t g) {
    acc &= t.conjugate(lat.elements(h), static_cast<ElementId>(g));
  });
  return lat.node(acc);
}

NodeId core_by_normal_scan(SubgroupLattice const &lat, NodeId parent, NodeId h) {
  require_sub(lat, parent, h);
  auto best = lat.trivial();
  for (auto k : lat.subgroups_of(h)) {
    if (lat.order(k) > lat.order(best) && is_normal(lat, parent, k))
      best = k;
  }
  return best;
}

std::vector<NodeId> normal_subgroups(SubgroupLattice const &lat, NodeId parent) {
  std::vector<NodeId> out;
  for (auto k : lat.subgroups_of(parent)) {
    if (is_normal(lat, parent, k))
      out.push_back(k);
  }
  return out;
}

std::vector<NodeId> minimal_normal_subgroups(SubgroupLattice const &lat, NodeId parent) {
  auto normals = normal_subgroups(lat, parent);
  std::vector<NodeId> out;
  for (auto k : normals) {
    if (k == lat.trivial())
      continue;
    bool minimal = std::none_of(normals.begin(), normals.end(), [&](NodeId m) {
      return m != lat.trivial() && m != k && lat.contains(k, m);
    });
    if (minimal)
      out.push_back(k);
  }
  return out;
}

ChiefSeries chief_series(SubgroupLattice const &lat, NodeId parent) {
  auto normals = normal_subgroups(lat, parent);
  ChiefSeries series;
  series.terms.push_back(lat.trivial());
  while (series.terms.back() != parent) {
    auto current = series.terms.back();
    for (auto k : normals) {
      if (k != current && lat.contains(k, current)) {
        series.factor_orders.push_back(lat.order(k) / lat.order(current));
        series.terms.push_back(k);
        break;
      }
    }
  }
  return series;
}

std::vector<NodeId> primitivators(SubgroupLattice const &lat, NodeId parent) {
  std::vector<NodeId> out;
  for (auto m : maximal_subgroups(lat, parent)) {
    if (core(lat, parent, m) == lat.trivial())
      out.push_back(m);
  }
  return out;
}

PrimitivityResult is_primitive(SubgroupLattice const &lat, NodeId parent) {
  auto prims = primitivators(lat, parent);
  PrimitivityResult result;
  if (!prims.empty()) {
    result.primitive = true;
    result.primitivator = prims.front();
  }
  return result;
}

PrimitiveStructureCheck verify_primitive_soluble_structure(SubgroupLattice const &lat,
                                                           NodeId parent, NodeId m) {
  PrimitiveStructureCheck check;
  auto prims = primitivators(lat, parent);
  if (!is_soluble(lat, parent)) {
    check.precondition_note = "group is not soluble";
    return check;
  }
  if (std::find(prims.begin(), prims.end(), m) == prims.end()) {
    check.precondition_note = "subgroup is not a primitivator";
    return check;
  }
  check.precondition = true;

  check.frattini_trivial = frattini(lat, parent) == lat.trivial();

  auto f = fitting(lat, parent);
  auto f_order = lat.order(f);
  if (is_prime_power(f_order)) {
    check.p = prime_divisors(f_order).front();
    for (auto x = f_order; x > 1; x /= check.p)
      ++check.n;
    auto cf = centralizer(lat, parent, lat.elements(f));
    check.fitting_self_centralizing = cf == f && o_p(lat, parent, check.p) == f;
    check.fitting_elementary_abelian = is_elementary_abelian(lat, f);
  }

  auto minimal = minimal_normal_subgroups(lat, parent);
  check.unique_minimal_normal = minimal.size() == 1 && minimal.front() == f;

  check.semidirect = lat.intersection(f, m) == lat.trivial() &&
                     lat.order(f) * lat.order(m) == lat.order(parent);
  check.o_p_of_m_trivial = check.p != 0 && o_p(lat, m, check.p) == lat.trivial();
  return check;
}

// Group-level conveniences

namespace {

std::vector<Group> as_groups(SubgroupLattice const &lat, std::vector<NodeId> const &nodes) {
  std::vector<Group> out;
  for (auto k : nodes)
    out.push_back(lat.as_group(k));
  return out;
}

}  // namespace

bool is_normal(Group const &g, Group const &h) {
  SubgroupLattice lat(g);
  return is_normal(lat, lat.top(), lat.node_of(h));
}

Group normalizer(Group const &g, Group const &h) {
  SubgroupLattice lat(g);
  return lat.as_group(normalizer(lat, lat.top(), lat.node_of(h)));
}

Group centralizer(Group const &g, std::vector<Permutation> const &s) {
  SubgroupLattice lat(g);
  auto set = lat.table().empty_set();
  for (auto const &x : s)
    set.insert(lat.table().id(x));
  return lat.as_group(centralizer(lat, lat.top(), set));
}

Group center(Group const &g) {
  SubgroupLattice lat(g);
  return lat.as_group(center(lat, lat.top()));
}

Group derived_subgroup(Group const &g) { return commutator_subgroup(g, g, g); }

std::vector<Group> derived_series(Group const &g) {
  std::vector<Group> series{g};
  for (;;) {
    auto next = derived_subgroup(series.back());
    if (next.order() == series.back().order())
      break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_soluble(Group const &g) { return derived_series(g).back().order() == 1; }

std::vector<Group> lower_central_series(Group const &g) {
  std::vector<Group> series{g};
  for (;;) {
    auto next = commutator_subgroup(g, series.back(), g);
    if (next.order() == series.back().order())
      break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_nilpotent(Group const &g) { return lower_central_series(g).back().order() == 1; }

Group fitting(Group const &g) {
  SubgroupLattice lat(g);
  return lat.as_group(fitting(lat, lat.top()));
}

Group o_p(Group const &g, std::uint64_t p) {
  SubgroupLattice lat(g);
  return lat.as_group(o_p(lat, lat.top(), p));
}

std::vector<Group> maximal_subgroups(Group const &g) {
  SubgroupLattice lat(g);
  return as_groups(lat, maximal_subgroups(lat, lat.top()));
}

Group frattini(Group const &g) {
  SubgroupLattice lat(g);
  return lat.as_group(frattini(lat, lat.top()));
}

Group core(Group const &g, Group const &h) {
  SubgroupLattice lat(g);
  return lat.as_group(core(lat, lat.top(), lat.node_of(h)));
}

std::vector<Group> minimal_normal_subgroups(Group const &g) {
  SubgroupLattice lat(g);
  return as_groups(lat, minimal_normal_subgroups(lat, lat.top()));
}

std::vector<std::uint64_t> chief_factor_orders(Group const &g) {
  SubgroupLattice lat(g);
  return chief_series(lat, lat.top()).factor_orders;
}

}  // namespace mspg
