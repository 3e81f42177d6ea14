#ifndef MSPG_TESTS_ORACLES_H_
#define MSPG_TESTS_ORACLES_H_

/**
 * @file oracles.h
 * @brief Brute-force reference implementations used only by the tests.
 *
 * Everything here works on explicit std::set<Permutation> element sets and
 * shares no code with the library beyond Permutation arithmetic, so the
 * library's tables, lattices and stabilizer chains are checked against an
 * independent computation.
 */

#include <cstdint>
#include <set>
#include <vector>

#include "mspg/group.h"
#include "mspg/permutation.h"

namespace oracle {

using mspg::Permutation;
using Set = std::set<Permutation>;

Permutation identity(std::size_t degree);

/// Closure of the generators under composition by breadth-first search.
Set closure(std::size_t degree, std::vector<Permutation> const &gens);
Set elements(mspg::Group const &g);

/// Sign by counting transpositions in the cycle decomposition.
bool is_even(Permutation const &p);

Set product(Set const &a, Set const &b);
Set intersect(Set const &a, Set const &b);
bool subset(Set const &small, Set const &big);
Set conjugate(Set const &h, Permutation const &g);
bool is_normal(Set const &g, Set const &h);

/// Every subgroup of g: cyclic subgroups joined pairwise until nothing new
/// appears.
std::vector<Set> all_subgroups(Set const &g);

Set center(Set const &g);
Set centralizer(Set const &g, Set const &s);
Set normalizer(Set const &g, Set const &h);
Set derived(Set const &g);
bool is_abelian(Set const &g);
bool is_soluble(Set const &g);
bool is_nilpotent(Set const &g);
/// Intersection of all conjugates.
Set core(Set const &g, Set const &h);
/// Intersection of the maximal subgroups.
Set frattini(Set const &g, std::vector<Set> const &subgroups);
std::uint64_t element_order(Permutation const &p);
std::vector<std::uint64_t> sorted_element_orders(Set const &g);

/// A chain 1 = G_0 < ... < G_n = G of normal subgroups of G with prime
/// indices, searched depth-first.
bool is_supersoluble(Set const &g);

/// AB is a subgroup, decided setwise.
bool permutes(Set const &a, Set const &b);
/// UB = BU and AV = VA for all U <= A, V <= B.
bool mutually_permutable(Set const &a, Set const &b);
/// The definition, with Sylow subgroups found by scanning all subgroups.
bool msp(Set const &g, Set const &a, Set const &b);

}  // namespace oracle

#endif  // MSPG_TESTS_ORACLES_H_
