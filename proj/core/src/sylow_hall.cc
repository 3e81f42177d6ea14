#include "mspg/sylow_hall.h"

#include <algorithm>

#include "mspg/error.h"
#include "mspg/number_theory.h"
#include "mspg/structure.h"

namespace mspg {

NodeId sylow_subgroup(SubgroupLattice const &lat, NodeId parent, std::uint64_t p) {
  return sylow_nodes(lat, parent, p).front();
}

NodeId sylow_subgroup_greedy(SubgroupLattice const &lat, NodeId parent, std::uint64_t p) {
  if (!is_prime(p))
    throw PreconditionError(std::to_string(p) + " is not prime");
  auto const &t = lat.table();
  auto const target = p_part(lat.order(parent), p);
  auto current = lat.trivial();
  while (lat.order(current) < target) {
    auto n = normalizer(lat, parent, current);
    auto const &ps = lat.elements(current);
    std::optional<ElementId> pick;
    lat.elements(n).for_each([&](std::size_t g) {
      if (pick || ps.contains(g))
        return;
      if (ps.contains(t.power(static_cast<ElementId>(g), p)))
        pick = static_cast<ElementId>(g);
    });
    // p divides |N(P) : P| whenever P is not yet Sylow, so Cauchy's theorem
    // in N(P)/P guarantees a pick
    auto gens = lat.generators(current);
    gens.push_back(*pick);
    current = lat.generate(gens);
  }
  return current;
}

std::vector<NodeId> conjugacy_orbit(SubgroupLattice const &lat, NodeId parent, NodeId h) {
  std::vector<NodeId> orbit{h};
  auto seen = ElementSet(lat.size());
  seen.insert(h);
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (auto g : lat.generators(parent)) {
      auto k = lat.conjugate(orbit[i], g);
      if (!seen.contains(k)) {
        seen.insert(k);
        orbit.push_back(k);
      }
    }
  }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

std::vector<NodeId> sylow_conjugates(SubgroupLattice const &lat, NodeId parent, std::uint64_t p) {
  return conjugacy_orbit(lat, parent, sylow_subgroup(lat, parent, p));
}

std::vector<NodeId> hall_subgroups(SubgroupLattice const &lat, NodeId parent,
                                   std::vector<std::uint64_t> const &pi) {
  auto const target = pi_part(lat.order(parent), pi);
  std::vector<NodeId> out;
  for (auto k : lat.subgroups_of(parent)) {
    if (lat.order(k) == target)
      out.push_back(k);
  }
  return out;
}

HallPropertyRecord hall_property_record(SubgroupLattice const &lat, NodeId parent,
                                        std::vector<std::uint64_t> const &pi) {
  HallPropertyRecord record;
  record.pi = pi;
  record.witnesses = hall_subgroups(lat, parent, pi);
  record.e_holds = !record.witnesses.empty();
  if (!record.e_holds)
    return record;

  auto orbit = conjugacy_orbit(lat, parent, record.witnesses.front());
  record.c_holds = true;
  for (auto h : record.witnesses) {
    if (!std::binary_search(orbit.begin(), orbit.end(), h)) {
      record.c_holds = false;
      record.failure_witness = h;
      return record;
    }
  }

  record.d_holds = true;
  for (auto k : lat.subgroups_of(parent)) {
    auto primes = prime_divisors(lat.order(k));
    bool pi_group = std::all_of(primes.begin(), primes.end(), [&](std::uint64_t q) {
      return std::find(pi.begin(), pi.end(), q) != pi.end();
    });
    if (!pi_group)
      continue;
    bool covered = std::any_of(record.witnesses.begin(), record.witnesses.end(),
                               [&](NodeId h) { return lat.contains(h, k); });
    if (!covered) {
      record.d_holds = false;
      record.failure_witness = k;
      break;
    }
  }
  return record;
}

SylowTower supersoluble_sylow_tower(SubgroupLattice const &lat, NodeId parent) {
  SylowTower tower;
  tower.primes = prime_divisors(lat.order(parent));
  std::reverse(tower.primes.begin(), tower.primes.end());
  auto normals = normal_subgroups(lat, parent);

  std::vector<std::uint64_t> prefix;
  for (auto p : tower.primes) {
    prefix.push_back(p);
    auto const target = pi_part(lat.order(parent), prefix);
    auto it = std::find_if(normals.begin(), normals.end(),
                           [&](NodeId k) { return lat.order(k) == target; });
    if (it == normals.end())
      return tower;
    tower.chain.push_back(*it);
  }
  tower.holds = true;
  return tower;
}

Group sylow_subgroup(Group const &g, std::uint64_t p) {
  SubgroupLattice lat(g);
  return lat.as_group(sylow_subgroup(lat, lat.top(), p));
}

std::vector<Group> sylow_conjugates(Group const &g, std::uint64_t p) {
  SubgroupLattice lat(g);
  std::vector<Group> out;
  for (auto k : sylow_conjugates(lat, lat.top(), p))
    out.push_back(lat.as_group(k));
  return out;
}

std::vector<Group> hall_subgroups(Group const &g, std::vector<std::uint64_t> const &pi) {
  SubgroupLattice lat(g);
  std::vector<Group> out;
  for (auto k : hall_subgroups(lat, lat.top(), pi))
    out.push_back(lat.as_group(k));
  return out;
}

bool has_supersoluble_sylow_tower(Group const &g) {
  SubgroupLattice lat(g);
  return supersoluble_sylow_tower(lat, lat.top()).holds;
}

}  // namespace mspg
