#ifndef MSPG_CONSTRUCTORS_H_
#define MSPG_CONSTRUCTORS_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mspg/group.h"

/**
 * @file constructors.h
 * @brief Standard families, products, quotients, the built-in catalog and
 * the generator file format.
 *
 * Generator file format:
 *
 *     # comment
 *     degree 3
 *     (1 2 3)
 *     (1 2)
 *
 * The first non-comment line is "degree N"; every further non-blank line is
 * one generator in 1-based cycle notation. "#" starts a comment anywhere.
 */

namespace mspg {

/// Cyclic group of order n on n points. Throws PreconditionError if n < 1.
Group cyclic(std::uint64_t n);

/// E_{p^t} as t disjoint p-cycles. Throws PreconditionError unless p is
/// prime and t ≥ 1.
Group elementary_abelian(std::uint64_t p, std::uint64_t t);

/// Dihedral group of order 2m: the symmetries of an m-gon for m ≥ 3,
/// C2 for m = 1 and C2 × C2 on four points for m = 2.
Group dihedral(std::uint64_t m);

Group symmetric(std::uint64_t n);
Group alternating(std::uint64_t n);

/// Right regular representation of the quaternion group on 8 points.
Group quaternion8();

/// G × H on degree(G) + degree(H) points, G moving the first block.
Group direct_product(Group const &g, Group const &h);

/**
 * Semidirect product N ⋊ H. `action[j]` lists the images of
 * normal_part.generators() under the automorphism by which
 * acting_part.generators()[j] acts (conjugation h^-1 n h).
 */
struct ActionSpec {
  Group normal_part;
  Group acting_part;
  std::vector<std::vector<Permutation>> action;
};

struct SemidirectProduct {
  Group group;
  Group normal;  // image of normal_part, normal in group
  Group acting;  // image of acting_part, complement to normal
};

/**
 * Realized by the right regular action on the pairs (h, n), with
 * (h1, n1)(h2, n2) = (h1 h2, n1^h2 n2). Throws PreconditionError if an
 * action does not extend to an automorphism of normal_part, or if the
 * assignment of automorphisms is not a homomorphism of acting_part.
 */
SemidirectProduct semidirect_product(ActionSpec const &spec);

/// C_n ⋊ C_m with the generator of C_m acting as x ↦ x^r.
SemidirectProduct cyclic_semidirect(std::uint64_t n, std::uint64_t m, std::uint64_t r);

/// G/N as the action of G on the right cosets of N, with the projection.
struct Quotient {
  Group group;
  /// Cosets are numbered by their smallest element.
  std::vector<Permutation> domain;  // elements of G, canonical order
  std::vector<Permutation> image;   // image[i] is the coset action of domain[i]

  /// Throws PreconditionError if g is not in G.
  Permutation const &project(Permutation const &g) const;
};

/// Throws PreconditionError unless N is a normal subgroup of G.
Quotient quotient_as_group(Group const &g, Group const &n);

/// element order -> number of elements of that order.
std::map<std::uint64_t, std::uint64_t> element_order_statistics(Group const &g);

/// How a catalog entry was built.
struct Recipe {
  /// cyclic, elementary_abelian, dihedral, symmetric, alternating,
  /// quaternion8, cyclic_semidirect, direct_product or file.
  std::string family;
  std::vector<std::uint64_t> params;
  std::vector<Recipe> factors;  // direct_product
  std::string path;             // file

  std::string to_string() const;
  Group build() const;

  /// Inverse of to_string(), e.g. "direct_product(symmetric(3), cyclic(2))".
  /// Throws ParseError.
  static Recipe parse(std::string_view text);
};

struct CatalogEntry {
  std::string name;
  Group group;
  Recipe provenance;
};

/**
 * Built-in catalog with every group of order ≤ max_order among: cyclic
 * groups, dihedral groups (m ≥ 3), elementary abelian groups of rank ≥ 2,
 * S3, S4, A4, A5, Q8, the Frobenius groups C5:C4, C7:C3, C7:C6, the group
 * C3:C4, and the direct products X x Y of two non-trivial members (X
 * listed before or equal to Y). Isomorphic duplicates are kept. Sorted
 * by order, ties in construction order.
 */
std::vector<CatalogEntry> standard_catalog(std::uint64_t max_order);

/// Throws ParseError (with the line number) on malformed input,
/// DegreeMismatch is reported as a ParseError too.
Group parse_group_text(std::string_view text);
std::string format_group_text(CatalogEntry const &entry);

/// The entry name is the file stem. Throws IoError or ParseError.
CatalogEntry load_group(std::filesystem::path const &path);
/// Throws IoError.
void save_group(CatalogEntry const &entry, std::filesystem::path const &path);

/// Manifest: one "name<TAB>file" line per entry, file relative to the
/// manifest directory; "#" comments allowed.
void write_catalog(std::vector<CatalogEntry> const &entries, std::filesystem::path const &dir);
std::vector<CatalogEntry> load_manifest(std::filesystem::path const &manifest);

}  // namespace mspg

#endif  // MSPG_CONSTRUCTORS_H_
