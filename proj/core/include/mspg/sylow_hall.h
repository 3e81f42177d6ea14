#ifndef MSPG_SYLOW_HALL_H_
#define MSPG_SYLOW_HALL_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "mspg/group.h"
#include "mspg/lattice.h"

namespace mspg {

/// A Sylow p-subgroup of parent by lattice lookup (the canonically first);
/// the trivial subgroup when p ∤ |parent|. Throws PreconditionError if p
/// is not prime.
NodeId sylow_subgroup(SubgroupLattice const &lat, NodeId parent, std::uint64_t p);

/// A Sylow p-subgroup grown greedily: extend the current p-subgroup P by an
/// element of N(P) \ P whose p-th power lies in P until the p-part is
/// reached. Does not consult the lattice node list.
NodeId sylow_subgroup_greedy(SubgroupLattice const &lat, NodeId parent, std::uint64_t p);

/// Orbit of sylow_subgroup() under conjugation by parent, ascending.
std::vector<NodeId> sylow_conjugates(SubgroupLattice const &lat, NodeId parent, std::uint64_t p);

/// Orbit of h under conjugation by parent, ascending.
std::vector<NodeId> conjugacy_orbit(SubgroupLattice const &lat, NodeId parent, NodeId h);

/// Subgroups of parent whose order is the π-part of |parent| (may be empty).
std::vector<NodeId> hall_subgroups(SubgroupLattice const &lat, NodeId parent,
                                   std::vector<std::uint64_t> const &pi);

struct HallPropertyRecord {
  std::vector<std::uint64_t> pi;
  bool e_holds = false;
  bool c_holds = false;
  bool d_holds = false;
  std::vector<NodeId> witnesses;  // all Hall π-subgroups
  /// For C: a Hall subgroup not conjugate to witnesses.front(). For D: a
  /// π-subgroup lying in no Hall π-subgroup.
  std::optional<NodeId> failure_witness;
};

HallPropertyRecord hall_property_record(SubgroupLattice const &lat, NodeId parent,
                                        std::vector<std::uint64_t> const &pi);

struct SylowTower {
  bool holds = false;
  /// Primes of |parent| in decreasing order.
  std::vector<std::uint64_t> primes;
  /// chain[k] is the normal Hall subgroup for primes[0..k]; on failure the
  /// chain stops before the first missing term.
  std::vector<NodeId> chain;
};

/// Ordered Sylow tower of supersoluble type: for the largest prime the
/// Sylow subgroup is normal and the quotient again has the property.
/// Equivalently parent has a normal Hall subgroup for every prefix of its
/// primes taken in decreasing order.
SylowTower supersoluble_sylow_tower(SubgroupLattice const &lat, NodeId parent);

Group sylow_subgroup(Group const &g, std::uint64_t p);
std::vector<Group> sylow_conjugates(Group const &g, std::uint64_t p);
std::vector<Group> hall_subgroups(Group const &g, std::vector<std::uint64_t> const &pi);
bool has_supersoluble_sylow_tower(Group const &g);

}  // namespace mspg

#endif  // MSPG_SYLOW_HALL_H_
