#ifndef MSPG_HARNESS_H_
#define MSPG_HARNESS_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mspg/classes.h"
#include "mspg/constructors.h"
#include "mspg/lattice.h"
#include "mspg/permutability.h"
#include "mspg/sylow_hall.h"

/**
 * @file harness.h
 * @brief Factorization enumeration and the statement checkers run over the
 * catalog.
 *
 * Every statement is checked one instance at a time through a check_*
 * function that returns kNotHit when the hypothesis fails, kHolds or
 * kViolated otherwise. The campaign and replay_violation() call the same
 * functions.
 */

namespace mspg {

/// Stable statement ids accepted on the command line, in report order.
std::vector<std::string> const &theorem_ids();

/// Maps an id or alias ("ll_4_1_21" -> "l_commprod", "l11'" ->
/// "l_normalizer") to its stable id; nullopt if unknown.
std::optional<std::string> canonical_theorem_id(std::string_view id);

/// Unordered factor pair, a ≤ b by node id.
using Factorization = std::pair<NodeId, NodeId>;

/**
 * Everything the checks need about one group: its lattice, class and
 * permutability engines, and lazily built quotients G/N. Not thread-safe;
 * the campaign gives each worker its own contexts.
 */
class GroupContext {
 public:
  /// Throws CapExceeded if the lattice cap is exceeded.
  GroupContext(std::string name, Group group, LatticeOptions options = {});
  GroupContext(GroupContext const &) = delete;
  GroupContext &operator=(GroupContext const &) = delete;
  ~GroupContext();

  std::string const &name() const noexcept { return name_; }
  SubgroupLattice const &lattice() const noexcept { return lat_; }
  ClassEvaluator &classes() noexcept { return eval_; }
  PermutabilityEngine &perm() noexcept { return perm_; }
  NodeId top() const noexcept { return lat_.top(); }
  LatticeOptions const &options() const noexcept { return options_; }

  std::vector<NodeId> const &normal_subgroups();
  NodeId core(NodeId h);
  NodeId centralizer(NodeId h);
  NodeId normalizer(NodeId h);

  /// Hall π-subgroups of h (π sorted ascending).
  std::vector<NodeId> const &hall(NodeId h, std::vector<std::uint64_t> const &pi);
  HallPropertyRecord const &hall_record(std::vector<std::uint64_t> const &pi);

  struct QuotientView {
    std::unique_ptr<SubgroupLattice> lat;
    std::unique_ptr<ClassEvaluator> eval;
    std::unique_ptr<PermutabilityEngine> perm;
    std::vector<ElementId> element_map;  // G element id -> G/N element id
    std::vector<std::int64_t> images;    // G node -> G/N node, -1 unknown
  };

  /// G/N for N normal in G.
  QuotientView &quotient(NodeId n);
  /// hN/N as a node of quotient(n).
  NodeId image(NodeId n, NodeId h);
  bool quotient_in_class(NodeId n, ClassId f);

 private:
  std::string name_;
  LatticeOptions options_;
  SubgroupLattice lat_;
  ClassEvaluator eval_;
  PermutabilityEngine perm_;
  std::optional<std::vector<NodeId>> normals_;
  std::vector<std::int64_t> core_, centralizer_, normalizer_;
  std::map<std::pair<NodeId, std::vector<std::uint64_t>>, std::vector<NodeId>> hall_;
  std::map<std::vector<std::uint64_t>, HallPropertyRecord> hall_records_;
  std::map<NodeId, std::unique_ptr<QuotientView>> quotients_;
};

/**
 * All unordered pairs {A, B} of subgroups with AB = G, trivial ones
 * (A = G) included. With dedup only the canonical pair of each
 * G-conjugacy class of pairs is kept: the lexicographically least
 * (min, max) node-id pair in the orbit. Sorted ascending.
 */
std::vector<Factorization> enumerate_factorizations(SubgroupLattice const &lat, bool dedup);

struct FactorizationRecord {
  std::string group_name;
  NodeId a = 0;
  NodeId b = 0;
  MspVerdict msp;
  struct Flags {
    ClassId cls;
    bool a = false, b = false, g = false;
  };
  std::vector<Flags> class_flags;
};

FactorizationRecord make_factorization_record(GroupContext &ctx, Factorization f,
                                              std::vector<ClassId> const &classes);

enum class Outcome { kNotHit, kHolds, kViolated };

/// G = AB msp, A, B in f  =>  G in f.
Outcome check_th2(GroupContext &ctx, NodeId a, NodeId b, ClassId f);
/// G = AB msp, A, B soluble  =>  G soluble.
Outcome check_l12(GroupContext &ctx, NodeId a, NodeId b);
/// part 1: p-closed for the greatest prime; 2: r-nilpotent for the
/// smallest prime; 3: ordered Sylow tower of supersoluble type.
Outcome check_l11(GroupContext &ctx, NodeId a, NodeId b, int part);
/// G/N = (AN/N)(BN/N) is an msp product, for N normal.
Outcome check_l10_quotient(GroupContext &ctx, NodeId a, NodeId b, NodeId n);
/// A ≤ H  =>  H = A(H ∩ B) is an msp product.
Outcome check_l10_intermediate(GroupContext &ctx, NodeId a, NodeId b, NodeId h);
/// G in D_π  =>  some Hall π-subgroups satisfy G_π = A_π B_π, msp.
Outcome check_l10_hall(GroupContext &ctx, NodeId a, NodeId b, std::vector<std::uint64_t> const &pi);
/// Sylow p-subgroup P normal and abelian  =>  P ∩ A, P ∩ B normal.
Outcome check_l7(GroupContext &ctx, NodeId a, NodeId b, std::uint64_t p);
/// G = HK, L normal in H, L ≤ K  =>  L ≤ core(K).
Outcome check_l13(GroupContext &ctx, NodeId h, NodeId k, NodeId l);
/// [A, B] = 1, A, B in f  =>  AB in f.
Outcome check_commprod(GroupContext &ctx, NodeId a, NodeId b, ClassId f);
/// E cyclic normal, G/E in f  =>  G in f.
Outcome check_skiba(GroupContext &ctx, NodeId e, ClassId f);
/// G not in f, G/N in f for all N ≠ 1 normal  =>  G primitive.
Outcome check_l3(GroupContext &ctx, ClassId f);
/// G soluble primitive, m a primitivator  =>  the four structure statements.
Outcome check_l4(GroupContext &ctx, NodeId m);
/// G = P ⋊ M soluble primitive with P the Sylow p-subgroup, M = AB, B
/// normalizing every subgroup of P  =>  part 1: B cyclic of order dividing
/// p-1; part 2: [A, B] = 1.
Outcome check_normalizer(GroupContext &ctx, NodeId m, NodeId a, NodeId b, int part);

/// A subgroup spelled out for reports and replay.
struct NamedSubgroup {
  std::string label;
  std::vector<std::string> elements;  // cycle notation, canonical order
  std::uint64_t order = 0;
};

/// One serialized check instance: a violation or a negative control.
struct InstanceRecord {
  std::string theorem_id;  // report id, e.g. "th2.U"
  std::string part;        // "" when the statement has a single part
  std::string group_name;
  std::size_t degree = 1;
  std::vector<std::string> generators;
  std::string class_name;             // "" if the statement has no class
  std::vector<std::uint64_t> primes;  // p for l7, π for l10(3)
  std::vector<NamedSubgroup> subgroups;
  std::optional<bool> msp;
  std::string detail;
  /// A failure of a cited external result rather than of the statement.
  bool external = false;
};

struct PartCounts {
  std::uint64_t instances = 0;
  std::uint64_t hits = 0;
  std::uint64_t violations = 0;
};

struct SkipRecord {
  std::string group_name;
  std::string reason;
};

struct VerificationReport {
  std::string theorem_id;
  std::string statement;
  std::uint64_t groups_scanned = 0;
  std::uint64_t factorizations_scanned = 0;
  std::uint64_t instances = 0;
  std::uint64_t hypothesis_hits = 0;
  std::vector<InstanceRecord> violations;
  std::vector<InstanceRecord> negative_controls;
  std::uint64_t negative_control_count = 0;
  std::vector<SkipRecord> skipped;
  std::map<std::string, PartCounts> parts;
  double seconds = 0;

  /// "verified", "verified-with-skips" or "violated".
  std::string status() const;
  /// Appends `other` (same theorem id); used to merge per-group results.
  void merge(VerificationReport const &other);
};

struct CampaignConfig {
  std::uint64_t max_order = 60;
  std::size_t lattice_cap = kDefaultLatticeCap;
  /// Classes for th2; each must be one of U, wU, vU, D.
  std::vector<ClassId> classes{kClassU, kClassWU, kClassVU};
  /// Stable ids; empty means all.
  std::vector<std::string> theorems;
  std::vector<std::filesystem::path> group_files;
  /// Restrict the standard catalog to these names; empty means all.
  std::vector<std::string> catalog_names;
  bool use_standard_catalog = true;
  bool dedup = true;
  unsigned workers = 1;
  /// Record wall-clock seconds; off by default so bundles are
  /// byte-identical across runs.
  bool timing = false;
};

/// Throws PreconditionError for unknown theorem ids, classes outside
/// {U, wU, vU, D}, max_order < 1 or workers < 1.
void validate(CampaignConfig const &config);

/// Standard catalog (filtered) followed by the group files. Throws
/// PreconditionError for unknown catalog names, IoError / ParseError for
/// unreadable group files, PreconditionError for duplicate names.
std::vector<CatalogEntry> campaign_catalog(CampaignConfig const &config);

struct GroupSummary {
  std::string name;
  std::string provenance;
  std::uint64_t order = 0;
  std::size_t degree = 0;
  bool skipped = false;
  std::string skip_reason;
  std::size_t lattice_nodes = 0;
  std::size_t factorizations = 0;
  std::size_t msp_factorizations = 0;
  std::vector<std::pair<std::string, bool>> classes;
  WUCharacterization wu;
  bool vu_characterization = false;
  /// The two readings of the wU characterization disagree here.
  bool wu_variants_disagree = false;
};

struct CampaignResult {
  std::vector<VerificationReport> reports;
  std::vector<GroupSummary> groups;

  std::uint64_t total_violations() const;
  bool has_skips() const;
};

CampaignResult run_campaign(CampaignConfig const &config, std::vector<CatalogEntry> const &catalog);

/// Report ids the config selects, in report order.
std::vector<std::string> selected_reports(CampaignConfig const &config);

std::string report_json(VerificationReport const &report, CampaignConfig const &config);
std::string groups_json(CampaignResult const &result, CampaignConfig const &config);
/// Tab-separated: theorem_id, groups, factorizations, hits, violations,
/// seconds ("-" without timing).
std::string summary_tsv(CampaignResult const &result, CampaignConfig const &config);

/// Writes <dir>/summary.tsv, <dir>/groups.json and one
/// <dir>/reports/<id>.json per report. Throws IoError.
void write_bundle(CampaignResult const &result, CampaignConfig const &config,
                  std::filesystem::path const &dir);

std::string instance_json(InstanceRecord const &record);
/// Throws ParseError on malformed input.
InstanceRecord parse_instance_json(std::string_view text);

struct ReplayResult {
  Outcome outcome = Outcome::kNotHit;
  std::string detail;
  bool reproduced() const { return outcome == Outcome::kViolated; }
};

/// Rebuilds the group and the named subgroups of a record and re-runs its
/// single check.
ReplayResult replay_violation(InstanceRecord const &record, LatticeOptions options = {});

/// Builds the record of a check instance; used for violations and
/// negative controls, and by tests to exercise replay.
InstanceRecord make_instance_record(GroupContext &ctx, std::string theorem_id, std::string part,
                                    std::string class_name, std::vector<std::uint64_t> primes,
                                    std::vector<std::pair<std::string, NodeId>> const &subgroups,
                                    std::string detail);

}  // namespace mspg

#endif  // MSPG_HARNESS_H_
