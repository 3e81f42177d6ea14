#ifndef MSPG_STRUCTURE_H_
#define MSPG_STRUCTURE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mspg/element_set.h"
#include "mspg/group.h"
#include "mspg/lattice.h"

/**
 * @file structure.h
 * @brief Subgroup-level structure computed on a SubgroupLattice.
 *
 * Every function takes a `parent` node and works inside that subgroup, so
 * the same lattice answers questions about the whole group (parent =
 * lat.top()) and about any of its subgroups. Arguments that must be
 * subgroups of the parent are checked and PreconditionError is thrown
 * otherwise. The overloads taking a Group build a lattice first.
 */

namespace mspg {

struct ChiefSeries {
  std::vector<NodeId> terms;                 // trivial ... parent
  std::vector<std::uint64_t> factor_orders;  // |terms[i+1] : terms[i]|
};

bool is_abelian(SubgroupLattice const &lat, NodeId parent);
bool is_cyclic(SubgroupLattice const &lat, NodeId parent);
bool is_elementary_abelian(SubgroupLattice const &lat, NodeId parent);

/// h is normal in parent (h ≤ parent required).
bool is_normal(SubgroupLattice const &lat, NodeId parent, NodeId h);
NodeId normalizer(SubgroupLattice const &lat, NodeId parent, NodeId h);
NodeId centralizer(SubgroupLattice const &lat, NodeId parent, ElementSet const &s);
NodeId center(SubgroupLattice const &lat, NodeId parent);

/// [A, B] for subgroups A, B of the lattice group.
NodeId commutator_subgroup(SubgroupLattice const &lat, NodeId a, NodeId b);
NodeId derived_subgroup(SubgroupLattice const &lat, NodeId parent);
/// parent, parent', parent'', ... down to the first repeated term.
std::vector<NodeId> derived_series(SubgroupLattice const &lat, NodeId parent);
bool is_soluble(SubgroupLattice const &lat, NodeId parent);

/// parent = γ1 ≥ γ2 = [γ1, parent] ≥ ... down to the first repeated term.
std::vector<NodeId> lower_central_series(SubgroupLattice const &lat, NodeId parent);
bool is_nilpotent(SubgroupLattice const &lat, NodeId parent);

/// parent / n is nilpotent, for n normal in parent; decided on the series
/// X_0 = parent, X_{i+1} = [X_i, parent] n.
bool is_quotient_nilpotent(SubgroupLattice const &lat, NodeId parent, NodeId n);

/// Sylow p-subgroups of parent, found by lattice scan (ascending ids).
std::vector<NodeId> sylow_nodes(SubgroupLattice const &lat, NodeId parent, std::uint64_t p);

/// O_p(parent): the core of a Sylow p-subgroup; trivial when p ∤ |parent|.
NodeId o_p(SubgroupLattice const &lat, NodeId parent, std::uint64_t p);

/// Join of O_p(parent) over the primes dividing |parent|.
NodeId fitting(SubgroupLattice const &lat, NodeId parent);

/// Largest normal nilpotent subgroup by direct scan; equals fitting().
NodeId fitting_by_scan(SubgroupLattice const &lat, NodeId parent);

std::vector<NodeId> maximal_subgroups(SubgroupLattice const &lat, NodeId parent);
NodeId frattini(SubgroupLattice const &lat, NodeId parent);

/// Intersection of the parent-conjugates of h.
NodeId core(SubgroupLattice const &lat, NodeId parent, NodeId h);
/// Largest subgroup of h normal in parent; equals core().
NodeId core_by_normal_scan(SubgroupLattice const &lat, NodeId parent, NodeId h);

/// Normal subgroups of parent, ascending.
std::vector<NodeId> normal_subgroups(SubgroupLattice const &lat, NodeId parent);
std::vector<NodeId> minimal_normal_subgroups(SubgroupLattice const &lat, NodeId parent);

/// Built by repeatedly taking the canonically first (lowest id) normal
/// subgroup of parent strictly above the current term; this is a minimal
/// normal subgroup of the current quotient pulled back.
ChiefSeries chief_series(SubgroupLattice const &lat, NodeId parent);

/// Maximal subgroups of parent with trivial core, ascending.
std::vector<NodeId> primitivators(SubgroupLattice const &lat, NodeId parent);

struct PrimitivityResult {
  bool primitive = false;
  std::optional<NodeId> primitivator;  // the canonically first one
};

PrimitivityResult is_primitive(SubgroupLattice const &lat, NodeId parent);

/// Outcome of checking the structure of a soluble primitive group G with
/// primitivator M:
/// (1) Φ(G) = 1; (2) F(G) = C_G(F(G)) = O_p(G), elementary abelian of
/// order p^n; (3) F(G) is the unique minimal normal subgroup;
/// (4) G = F(G) ⋊ M and O_p(M) = 1.
struct PrimitiveStructureCheck {
  bool precondition = false;  // parent soluble and m a primitivator
  std::string precondition_note;
  bool frattini_trivial = false;
  bool fitting_self_centralizing = false;  // F = C_G(F) = O_p
  bool fitting_elementary_abelian = false;
  std::uint64_t p = 0;
  std::uint64_t n = 0;
  bool unique_minimal_normal = false;  // and equal to F(G)
  bool semidirect = false;             // F ∩ M = 1, F M = G
  bool o_p_of_m_trivial = false;

  bool all_hold() const {
    return precondition && frattini_trivial && fitting_self_centralizing &&
           fitting_elementary_abelian && unique_minimal_normal && semidirect &&
           o_p_of_m_trivial;
  }
};

PrimitiveStructureCheck verify_primitive_soluble_structure(SubgroupLattice const &lat,
                                                           NodeId parent, NodeId m);

/// Group-level conveniences; each builds a lattice of `g` (default cap).
bool is_normal(Group const &g, Group const &h);
Group normalizer(Group const &g, Group const &h);
Group centralizer(Group const &g, std::vector<Permutation> const &s);
Group center(Group const &g);
Group derived_subgroup(Group const &g);
std::vector<Group> derived_series(Group const &g);
bool is_soluble(Group const &g);
std::vector<Group> lower_central_series(Group const &g);
bool is_nilpotent(Group const &g);
Group fitting(Group const &g);
Group o_p(Group const &g, std::uint64_t p);
std::vector<Group> maximal_subgroups(Group const &g);
Group frattini(Group const &g);
Group core(Group const &g, Group const &h);
std::vector<Group> minimal_normal_subgroups(Group const &g);
std::vector<std::uint64_t> chief_factor_orders(Group const &g);

}  // namespace mspg

#endif  // MSPG_STRUCTURE_H_
