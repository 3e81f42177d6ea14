#include "mspg/harness.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <fstream>
#include <functional>
#include <iomanip>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "mspg/error.h"
#include "mspg/number_theory.h"
#include "mspg/structure.h"

namespace mspg {

using Json = nlohmann::ordered_json;

namespace {

std::vector<std::string> const kTheoremIds = {"th2", "corollary", "l12", "l11",
                                              "l10", "l7", "l13", "l_commprod",
                                              "l_skiba", "l3", "l4", "l_normalizer"};

std::vector<ClassId> const kSaturatedClasses = {kClassU, kClassWU, kClassVU};
std::vector<ClassId> const kCommprodClasses = {kClassU, kClassWU, kClassVU, kClassSoluble,
                                               kClassNilpotent};

/// Negative controls kept per report and group; the rest are only counted.
constexpr std::size_t kNegativeControlsPerGroup = 3;

std::string statement_of(std::string const &id) {
  if (id.starts_with("th2.")) {
    auto f = id.substr(4);
    return "G = AB with A, B msp-permutable and A, B in " + f + " implies G in " + f;
  }
  static std::map<std::string, std::string> const text = {
      {"corollary",
       "G = AB with A, B msp-permutable: (1) A, B in U implies G in U; (2) A, B in wU "
       "implies G in wU; (3) A, B in vU implies G in vU"},
      {"l12", "G = AB with A, B msp-permutable and soluble implies G soluble"},
      {"l11",
       "G = AB with A, B msp-permutable, p the greatest and r the smallest prime of |G|: "
       "(1) A, B p-closed implies G p-closed; (2) A, B r-nilpotent implies G r-nilpotent; "
       "(3) A, B with an ordered Sylow tower of supersoluble type implies the same for G"},
      {"l10",
       "G = AB with A, B msp-permutable: (1) G/N = (AN/N)(BN/N) is an msp-permutable "
       "product for every normal N; (2) H = A(H n B) is an msp-permutable product for "
       "A <= H <= G; (3) if G is D_pi there are Hall pi-subgroups with G_pi = A_pi B_pi "
       "msp-permutable"},
      {"l7",
       "G = AB with A, B msp-permutable and a normal abelian Sylow p-subgroup P implies "
       "P n A and P n B normal in G"},
      {"l13", "G = HK, L normal in H and L <= K implies L <= core_G(K)"},
      {"l_commprod", "A, B in F and [A, B] = 1 implies AB in F"},
      {"l_skiba", "E cyclic normal in G and G/E in F implies G in F"},
      {"l3", "G not in F and G/N in F for every non-trivial normal N implies G primitive"},
      {"l4",
       "G soluble primitive with primitivator M: (1) Phi(G) = 1; (2) F(G) = C_G(F(G)) = "
       "O_p(G) elementary abelian; (3) F(G) is the unique minimal normal subgroup; "
       "(4) G = F(G) x| M and O_p(M) = 1"},
      {"l_normalizer",
       "G = P x| M soluble primitive with P a Sylow p-subgroup, M = AB and B normalizing "
       "every subgroup of P: (1) B is cyclic of order dividing p - 1; (2) [A, B] = 1"},
  };
  return text.at(id);
}

bool is_factorization(GroupContext &ctx, NodeId a, NodeId b) {
  return ctx.perm().product_size(a, b) == ctx.lattice().order(ctx.top());
}

bool msp_factorization(GroupContext &ctx, NodeId a, NodeId b) {
  return is_factorization(ctx, a, b) && ctx.perm().msp_holds(a, b);
}

Outcome conclude(bool conclusion) { return conclusion ? Outcome::kHolds : Outcome::kViolated; }

}  // namespace

std::vector<std::string> const &theorem_ids() { return kTheoremIds; }

std::optional<std::string> canonical_theorem_id(std::string_view id) {
  if (id == "ll_4_1_21")
    return "l_commprod";
  if (id == "l11'" || id == "l11′")
    return "l_normalizer";
  for (auto const &t : kTheoremIds) {
    if (t == id)
      return t;
  }
  return std::nullopt;
}

// GroupContext

GroupContext::GroupContext(std::string name, Group group, LatticeOptions options)
    : name_(std::move(name)),
      options_(options),
      lat_(std::move(group), options),
      eval_(lat_),
      perm_(lat_),
      core_(lat_.size(), -1),
      centralizer_(lat_.size(), -1),
      normalizer_(lat_.size(), -1) {}

GroupContext::~GroupContext() = default;

std::vector<NodeId> const &GroupContext::normal_subgroups() {
  if (!normals_)
    normals_ = mspg::normal_subgroups(lat_, top());
  return *normals_;
}

NodeId GroupContext::core(NodeId h) {
  if (core_[h] < 0)
    core_[h] = mspg::core(lat_, top(), h);
  return static_cast<NodeId>(core_[h]);
}

NodeId GroupContext::centralizer(NodeId h) {
  if (centralizer_[h] < 0)
    centralizer_[h] = mspg::centralizer(lat_, top(), lat_.elements(h));
  return static_cast<NodeId>(centralizer_[h]);
}

NodeId GroupContext::normalizer(NodeId h) {
  if (normalizer_[h] < 0)
    normalizer_[h] = mspg::normalizer(lat_, top(), h);
  return static_cast<NodeId>(normalizer_[h]);
}

std::vector<NodeId> const &GroupContext::hall(NodeId h, std::vector<std::uint64_t> const &pi) {
  auto key = std::pair{h, pi};
  auto it = hall_.find(key);
  if (it == hall_.end())
    it = hall_.emplace(key, hall_subgroups(lat_, h, pi)).first;
  return it->second;
}

HallPropertyRecord const &GroupContext::hall_record(std::vector<std::uint64_t> const &pi) {
  auto it = hall_records_.find(pi);
  if (it == hall_records_.end())
    it = hall_records_.emplace(pi, hall_property_record(lat_, top(), pi)).first;
  return it->second;
}

GroupContext::QuotientView &GroupContext::quotient(NodeId n) {
  auto it = quotients_.find(n);
  if (it != quotients_.end())
    return *it->second;
  if (!lat_.is_normal(n))
    throw PreconditionError("quotient by a non-normal subgroup");
  auto q = quotient_as_group(lat_.group(), lat_.as_group(n));
  auto view = std::make_unique<QuotientView>();
  view->lat = std::make_unique<SubgroupLattice>(q.group, options_);
  view->eval = std::make_unique<ClassEvaluator>(*view->lat);
  view->perm = std::make_unique<PermutabilityEngine>(*view->lat);
  view->element_map.reserve(q.image.size());
  for (auto const &x : q.image)
    view->element_map.push_back(view->lat->table().id(x));
  view->images.assign(lat_.size(), -1);
  return *quotients_.emplace(n, std::move(view)).first->second;
}

NodeId GroupContext::image(NodeId n, NodeId h) {
  auto &q = quotient(n);
  if (q.images[h] < 0) {
    std::vector<ElementId> gens;
    for (auto g : lat_.generators(h))
      gens.push_back(q.element_map[g]);
    q.images[h] = q.lat->generate(gens);
  }
  return static_cast<NodeId>(q.images[h]);
}

bool GroupContext::quotient_in_class(NodeId n, ClassId f) {
  auto &q = quotient(n);
  return q.eval->in_class(q.lat->top(), f);
}

// Factorizations

std::vector<Factorization> enumerate_factorizations(SubgroupLattice const &lat, bool dedup) {
  auto const order = lat.order(lat.top());
  std::vector<Factorization> all;
  for (NodeId a = 0; a < lat.size(); ++a) {
    for (NodeId b = a; b < lat.size(); ++b) {
      auto meet = lat.elements(a).intersection_count(lat.elements(b));
      if (lat.order(a) * lat.order(b) == order * meet)
        all.emplace_back(a, b);
    }
  }
  if (!dedup)
    return all;

  auto const &gens = lat.table().generator_ids();
  std::vector<std::vector<NodeId>> conj(lat.size());
  for (NodeId h = 0; h < lat.size(); ++h) {
    if (lat.is_normal(h)) {
      conj[h].assign(gens.size(), h);
      continue;
    }
    for (auto g : gens)
      conj[h].push_back(lat.conjugate(h, g));
  }

  std::set<Factorization> seen;
  std::vector<Factorization> kept;
  for (auto const &f : all) {
    if (seen.contains(f))
      continue;
    std::vector<Factorization> orbit{f};
    seen.insert(f);
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (std::size_t k = 0; k < gens.size(); ++k) {
        auto x = conj[orbit[i].first][k];
        auto y = conj[orbit[i].second][k];
        Factorization next{std::min(x, y), std::max(x, y)};
        if (seen.insert(next).second)
          orbit.push_back(next);
      }
    }
    kept.push_back(*std::min_element(orbit.begin(), orbit.end()));
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

FactorizationRecord make_factorization_record(GroupContext &ctx, Factorization f,
                                              std::vector<ClassId> const &classes) {
  FactorizationRecord r;
  r.group_name = ctx.name();
  r.a = f.first;
  r.b = f.second;
  r.msp = ctx.perm().msp(f.first, f.second);
  for (auto c : classes) {
    r.class_flags.push_back({c, ctx.classes().in_class(f.first, c),
                             ctx.classes().in_class(f.second, c),
                             ctx.classes().in_class(ctx.top(), c)});
  }
  return r;
}

// Checks

Outcome check_th2(GroupContext &ctx, NodeId a, NodeId b, ClassId f) {
  if (!msp_factorization(ctx, a, b))
    return Outcome::kNotHit;
  auto &e = ctx.classes();
  if (!e.in_class(a, f) || !e.in_class(b, f))
    return Outcome::kNotHit;
  return conclude(e.in_class(ctx.top(), f));
}

Outcome check_l12(GroupContext &ctx, NodeId a, NodeId b) {
  return check_th2(ctx, a, b, kClassSoluble);
}

Outcome check_l11(GroupContext &ctx, NodeId a, NodeId b, int part) {
  auto const primes = prime_divisors(ctx.lattice().order(ctx.top()));
  if (primes.empty() || !msp_factorization(ctx, a, b))
    return Outcome::kNotHit;
  auto &e = ctx.classes();
  ClassId c;
  switch (part) {
    case 1:
      c = ClassId{ClassTag::kPClosed, primes.back()};
      break;
    case 2:
      c = ClassId{ClassTag::kPNilpotent, primes.front()};
      break;
    case 3:
      c = kClassD;
      break;
    default:
      throw PreconditionError("l11 has parts 1 to 3");
  }
  if (!e.in_class(a, c) || !e.in_class(b, c))
    return Outcome::kNotHit;
  return conclude(e.in_class(ctx.top(), c));
}

Outcome check_l10_quotient(GroupContext &ctx, NodeId a, NodeId b, NodeId n) {
  if (!ctx.lattice().is_normal(n) || !msp_factorization(ctx, a, b))
    return Outcome::kNotHit;
  auto &q = ctx.quotient(n);
  auto an = ctx.image(n, a);
  auto bn = ctx.image(n, b);
  bool product = q.perm->product_size(an, bn) == q.lat->order(q.lat->top());
  return conclude(product && q.perm->msp_holds(an, bn));
}

Outcome check_l10_intermediate(GroupContext &ctx, NodeId a, NodeId b, NodeId h) {
  auto const &lat = ctx.lattice();
  if (!lat.contains(h, a) || !msp_factorization(ctx, a, b))
    return Outcome::kNotHit;
  auto hb = lat.intersection(h, b);
  return conclude(ctx.perm().product_size(a, hb) == lat.order(h) && ctx.perm().msp_holds(a, hb));
}

Outcome check_l10_hall(GroupContext &ctx, NodeId a, NodeId b,
                       std::vector<std::uint64_t> const &pi) {
  if (!msp_factorization(ctx, a, b) || !ctx.hall_record(pi).d_holds)
    return Outcome::kNotHit;
  auto const target = pi_part(ctx.lattice().order(ctx.top()), pi);
  for (auto ah : ctx.hall(a, pi)) {
    for (auto bh : ctx.hall(b, pi)) {
      if (ctx.perm().product_size(ah, bh) == target && ctx.perm().permutes(ah, bh) &&
          ctx.perm().msp_holds(ah, bh))
        return Outcome::kHolds;
    }
  }
  return Outcome::kViolated;
}

Outcome check_l7(GroupContext &ctx, NodeId a, NodeId b, std::uint64_t p) {
  auto const &lat = ctx.lattice();
  if (!is_prime(p) || !msp_factorization(ctx, a, b))
    return Outcome::kNotHit;
  auto s = sylow_subgroup(lat, ctx.top(), p);
  if (!lat.is_normal(s) || !is_abelian(lat, s))
    return Outcome::kNotHit;
  return conclude(lat.is_normal(lat.intersection(s, a)) && lat.is_normal(lat.intersection(s, b)));
}

Outcome check_l13(GroupContext &ctx, NodeId h, NodeId k, NodeId l) {
  auto const &lat = ctx.lattice();
  if (!is_factorization(ctx, h, k) || !lat.contains(k, l) || !lat.contains(h, l) ||
      !is_normal(lat, h, l))
    return Outcome::kNotHit;
  return conclude(lat.contains(ctx.core(k), l));
}

Outcome check_commprod(GroupContext &ctx, NodeId a, NodeId b, ClassId f) {
  if (!ctx.lattice().contains(ctx.centralizer(b), a))
    return Outcome::kNotHit;
  auto &e = ctx.classes();
  if (!e.in_class(a, f) || !e.in_class(b, f))
    return Outcome::kNotHit;
  return conclude(e.in_class(ctx.lattice().join(a, b), f));
}

Outcome check_skiba(GroupContext &ctx, NodeId e, ClassId f) {
  auto const &lat = ctx.lattice();
  if (!lat.is_normal(e) || !is_cyclic(lat, e) || !ctx.quotient_in_class(e, f))
    return Outcome::kNotHit;
  return conclude(ctx.classes().in_class(ctx.top(), f));
}

Outcome check_l3(GroupContext &ctx, ClassId f) {
  auto const &lat = ctx.lattice();
  if (ctx.classes().in_class(ctx.top(), f))
    return Outcome::kNotHit;
  for (auto n : ctx.normal_subgroups()) {
    if (n != lat.trivial() && !ctx.quotient_in_class(n, f))
      return Outcome::kNotHit;
  }
  return conclude(is_primitive(lat, ctx.top()).primitive);
}

Outcome check_l4(GroupContext &ctx, NodeId m) {
  auto const &lat = ctx.lattice();
  if (!ctx.classes().is_soluble(ctx.top()))
    return Outcome::kNotHit;
  auto prims = primitivators(lat, ctx.top());
  if (!std::binary_search(prims.begin(), prims.end(), m))
    return Outcome::kNotHit;
  return conclude(verify_primitive_soluble_structure(lat, ctx.top(), m).all_hold());
}

Outcome check_normalizer(GroupContext &ctx, NodeId m, NodeId a, NodeId b, int part) {
  auto const &lat = ctx.lattice();
  auto const g = ctx.top();
  if (!ctx.classes().is_soluble(g))
    return Outcome::kNotHit;
  auto prims = primitivators(lat, g);
  if (!std::binary_search(prims.begin(), prims.end(), m))
    return Outcome::kNotHit;
  auto f = fitting(lat, g);
  auto primes = prime_divisors(lat.order(f));
  if (primes.size() != 1)
    return Outcome::kNotHit;
  auto const p = primes.front();
  // P = F(G) is the normal Sylow p-subgroup complemented by M
  if (lat.order(f) != p_part(lat.order(g), p) || lat.intersection(f, m) != lat.trivial() ||
      ctx.perm().product_size(f, m) != lat.order(g))
    return Outcome::kNotHit;
  if (!lat.contains(m, a) || !lat.contains(m, b) ||
      ctx.perm().product_size(a, b) != lat.order(m))
    return Outcome::kNotHit;
  for (auto x : lat.subgroups_of(f)) {
    if (!lat.contains(ctx.normalizer(x), b))
      return Outcome::kNotHit;
  }
  switch (part) {
    case 1:
      return conclude(is_cyclic(lat, b) && (p - 1) % lat.order(b) == 0);
    case 2:
      return conclude(lat.contains(ctx.centralizer(b), a));
    default:
      throw PreconditionError("l_normalizer has parts 1 and 2");
  }
}

// Reports

std::string VerificationReport::status() const {
  if (!violations.empty())
    return "violated";
  return skipped.empty() ? "verified" : "verified-with-skips";
}

void VerificationReport::merge(VerificationReport const &other) {
  groups_scanned += other.groups_scanned;
  factorizations_scanned += other.factorizations_scanned;
  instances += other.instances;
  hypothesis_hits += other.hypothesis_hits;
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  negative_controls.insert(negative_controls.end(), other.negative_controls.begin(),
                           other.negative_controls.end());
  negative_control_count += other.negative_control_count;
  skipped.insert(skipped.end(), other.skipped.begin(), other.skipped.end());
  for (auto const &[k, v] : other.parts) {
    auto &mine = parts[k];
    mine.instances += v.instances;
    mine.hits += v.hits;
    mine.violations += v.violations;
  }
  seconds += other.seconds;
}

std::uint64_t CampaignResult::total_violations() const {
  std::uint64_t n = 0;
  for (auto const &r : reports)
    n += r.violations.size();
  return n;
}

bool CampaignResult::has_skips() const {
  return std::any_of(reports.begin(), reports.end(),
                     [](VerificationReport const &r) { return !r.skipped.empty(); });
}

void validate(CampaignConfig const &config) {
  if (config.max_order < 1)
    throw PreconditionError("max-order must be at least 1");
  if (config.workers < 1)
    throw PreconditionError("workers must be at least 1");
  if (config.lattice_cap < 1)
    throw PreconditionError("lattice-cap must be at least 1");
  for (auto const &t : config.theorems) {
    if (t != "all" && !canonical_theorem_id(t))
      throw PreconditionError("unknown theorem id '" + t + "'");
  }
  for (auto const &c : config.classes) {
    if (c.tag != ClassTag::kSupersoluble && c.tag != ClassTag::kWU && c.tag != ClassTag::kVU &&
        c.tag != ClassTag::kTowerD)
      throw PreconditionError("class '" + c.name() + "' is not one of U, wU, vU, D");
  }
}

std::vector<std::string> selected_reports(CampaignConfig const &config) {
  std::set<std::string> wanted;
  bool all = config.theorems.empty();
  for (auto const &t : config.theorems) {
    if (t == "all")
      all = true;
    else if (auto id = canonical_theorem_id(t))
      wanted.insert(*id);
  }
  std::vector<std::string> out;
  for (auto const &id : kTheoremIds) {
    if (!all && !wanted.contains(id))
      continue;
    if (id == "th2") {
      for (auto const &c : config.classes)
        out.push_back("th2." + c.name());
    } else {
      out.push_back(id);
    }
  }
  return out;
}

std::vector<CatalogEntry> campaign_catalog(CampaignConfig const &config) {
  std::vector<CatalogEntry> out;
  if (config.use_standard_catalog) {
    auto standard = standard_catalog(config.max_order);
    if (config.catalog_names.empty()) {
      out = std::move(standard);
    } else {
      for (auto const &name : config.catalog_names) {
        auto it = std::find_if(standard.begin(), standard.end(),
                               [&](CatalogEntry const &e) { return e.name == name; });
        if (it == standard.end())
          throw PreconditionError("no catalog group named '" + name + "' of order <= " +
                                  std::to_string(config.max_order));
        out.push_back(*it);
      }
    }
  }
  for (auto const &path : config.group_files)
    out.push_back(load_group(path));
  std::set<std::string> names;
  for (auto const &e : out) {
    if (!names.insert(e.name).second)
      throw PreconditionError("duplicate group name '" + e.name + "'");
  }
  return out;
}

// Instance records

InstanceRecord make_instance_record(GroupContext &ctx, std::string theorem_id, std::string part,
                                    std::string class_name, std::vector<std::uint64_t> primes,
                                    std::vector<std::pair<std::string, NodeId>> const &subgroups,
                                    std::string detail) {
  auto const &lat = ctx.lattice();
  InstanceRecord r;
  r.theorem_id = std::move(theorem_id);
  r.part = std::move(part);
  r.group_name = ctx.name();
  r.degree = lat.group().degree();
  for (auto const &g : lat.group().generators())
    r.generators.push_back(to_cycles(g));
  r.class_name = std::move(class_name);
  r.primes = std::move(primes);
  for (auto const &[label, node] : subgroups) {
    NamedSubgroup s{label, {}, lat.order(node)};
    for (auto const &x : lat.element_list(node))
      s.elements.push_back(to_cycles(x));
    r.subgroups.push_back(std::move(s));
  }
  r.detail = std::move(detail);
  return r;
}

namespace {

Json to_json(InstanceRecord const &r) {
  Json j;
  j["theorem_id"] = r.theorem_id;
  j["part"] = r.part;
  j["group"] = {{"name", r.group_name}, {"degree", r.degree}, {"generators", r.generators}};
  j["class"] = r.class_name;
  j["primes"] = r.primes;
  Json subs = Json::array();
  for (auto const &s : r.subgroups)
    subs.push_back({{"label", s.label}, {"order", s.order}, {"elements", s.elements}});
  j["subgroups"] = std::move(subs);
  j["msp"] = r.msp ? Json(*r.msp) : Json(nullptr);
  j["detail"] = r.detail;
  j["external"] = r.external;
  return j;
}

InstanceRecord from_json(Json const &j) {
  InstanceRecord r;
  r.theorem_id = j.at("theorem_id").get<std::string>();
  r.part = j.value("part", "");
  auto const &g = j.at("group");
  r.group_name = g.at("name").get<std::string>();
  r.degree = g.at("degree").get<std::size_t>();
  r.generators = g.at("generators").get<std::vector<std::string>>();
  r.class_name = j.value("class", "");
  if (j.contains("primes"))
    r.primes = j.at("primes").get<std::vector<std::uint64_t>>();
  for (auto const &s : j.at("subgroups")) {
    r.subgroups.push_back({s.at("label").get<std::string>(),
                           s.at("elements").get<std::vector<std::string>>(),
                           s.value("order", std::uint64_t{0})});
  }
  if (j.contains("msp") && !j.at("msp").is_null())
    r.msp = j.at("msp").get<bool>();
  r.detail = j.value("detail", "");
  r.external = j.value("external", false);
  return r;
}

Json config_json(CampaignConfig const &config) {
  Json c;
  c["max_order"] = config.max_order;
  c["lattice_cap"] = config.lattice_cap;
  Json classes = Json::array();
  for (auto const &cl : config.classes)
    classes.push_back(cl.name());
  c["classes"] = std::move(classes);
  c["theorems"] = selected_reports(config);
  c["standard_catalog"] = config.use_standard_catalog;
  c["catalog_names"] = config.catalog_names;
  Json files = Json::array();
  for (auto const &p : config.group_files)
    files.push_back(p.string());
  c["group_files"] = std::move(files);
  c["dedup"] = config.dedup;
  return c;
}

std::string format_seconds(double s) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(3) << s;
  return out.str();
}

}  // namespace

std::string instance_json(InstanceRecord const &record) { return to_json(record).dump(2); }

InstanceRecord parse_instance_json(std::string_view text) {
  try {
    return from_json(Json::parse(text));
  } catch (Json::exception const &e) {
    throw ParseError(std::string("instance record: ") + e.what());
  }
}

std::string report_json(VerificationReport const &r, CampaignConfig const &config) {
  Json j;
  j["theorem_id"] = r.theorem_id;
  j["statement"] = r.statement;
  j["status"] = r.status();
  j["config"] = config_json(config);
  j["groups_scanned"] = r.groups_scanned;
  j["factorizations_scanned"] = r.factorizations_scanned;
  j["instances"] = r.instances;
  j["hypothesis_hits"] = r.hypothesis_hits;
  j["violation_count"] = r.violations.size();
  Json parts = Json::object();
  for (auto const &[k, v] : r.parts)
    parts[k] = {{"instances", v.instances}, {"hits", v.hits}, {"violations", v.violations}};
  j["parts"] = std::move(parts);
  Json violations = Json::array();
  for (auto const &v : r.violations)
    violations.push_back(to_json(v));
  j["violations"] = std::move(violations);
  j["negative_control_count"] = r.negative_control_count;
  Json controls = Json::array();
  for (auto const &v : r.negative_controls)
    controls.push_back(to_json(v));
  j["negative_controls"] = std::move(controls);
  Json skipped = Json::array();
  for (auto const &s : r.skipped)
    skipped.push_back({{"group", s.group_name}, {"reason", s.reason}});
  j["skipped"] = std::move(skipped);
  j["seconds"] = config.timing ? Json(r.seconds) : Json(nullptr);
  return j.dump(2) + "\n";
}

std::string groups_json(CampaignResult const &result, CampaignConfig const &config) {
  Json j;
  j["config"] = config_json(config);
  Json groups = Json::array();
  std::uint64_t disagreements = 0;
  for (auto const &g : result.groups) {
    Json e;
    e["name"] = g.name;
    e["provenance"] = g.provenance;
    e["order"] = g.order;
    e["degree"] = g.degree;
    if (g.skipped) {
      e["skipped"] = g.skip_reason;
      groups.push_back(std::move(e));
      continue;
    }
    e["lattice_nodes"] = g.lattice_nodes;
    e["factorizations"] = g.factorizations;
    e["msp_factorizations"] = g.msp_factorizations;
    Json classes = Json::object();
    for (auto const &[name, member] : g.classes)
      classes[name] = member;
    e["classes"] = std::move(classes);
    e["wU_characterization"] = {
        {"tower", g.wu.tower},
        {"metanilpotent_variant", g.wu.metanilpotent_variant()},
        {"biprimary_variant", g.wu.biprimary_variant()},
        {"variants_disagree", g.wu_variants_disagree}};
    e["vU_characterization"] = g.vu_characterization;
    disagreements += g.wu_variants_disagree ? 1 : 0;
    groups.push_back(std::move(e));
  }
  j["wU_variant_disagreements"] = disagreements;
  j["groups"] = std::move(groups);
  return j.dump(2) + "\n";
}

std::string summary_tsv(CampaignResult const &result, CampaignConfig const &config) {
  std::ostringstream out;
  out << "theorem_id\tgroups\tfactorizations\thits\tviolations\tseconds\n";
  for (auto const &r : result.reports) {
    out << r.theorem_id << "\t" << r.groups_scanned << "\t" << r.factorizations_scanned << "\t"
        << r.hypothesis_hits << "\t" << r.violations.size() << "\t"
        << (config.timing ? format_seconds(r.seconds) : "-") << "\n";
  }
  return out.str();
}

void write_bundle(CampaignResult const &result, CampaignConfig const &config,
                  std::filesystem::path const &dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir / "reports", ec);
  if (ec)
    throw IoError("cannot create " + (dir / "reports").string() + ": " + ec.message());
  auto write = [](std::filesystem::path const &path, std::string const &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
      throw IoError("cannot write " + path.string());
    out << text;
    if (!out)
      throw IoError("write failed: " + path.string());
  };
  for (auto const &r : result.reports)
    write(dir / "reports" / (r.theorem_id + ".json"), report_json(r, config));
  write(dir / "groups.json", groups_json(result, config));
  write(dir / "summary.tsv", summary_tsv(result, config));
}

// Campaign

namespace {

struct GroupOutcome {
  GroupSummary summary;
  std::map<std::string, VerificationReport> reports;
};

class GroupScan {
 public:
  GroupScan(CatalogEntry const &entry, CampaignConfig const &config,
            std::vector<std::string> const &ids)
      : entry_(entry), config_(config), ids_(ids) {}

  GroupOutcome run();

 private:
  VerificationReport &report(std::string const &id) { return out_.reports.at(id); }
  bool selected(std::string const &id) const { return out_.reports.contains(id); }

  template <typename F>
  void timed(std::string const &id, F &&body) {
    auto start = std::chrono::steady_clock::now();
    body(report(id));
    report(id).seconds +=
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }

  void tally(VerificationReport &r, std::string const &part, Outcome o,
             std::function<InstanceRecord()> const &record) {
    ++r.instances;
    auto &pc = r.parts[part.empty() ? "all" : part];
    ++pc.instances;
    if (o == Outcome::kNotHit)
      return;
    ++r.hypothesis_hits;
    ++pc.hits;
    if (o == Outcome::kViolated) {
      ++pc.violations;
      r.violations.push_back(record());
    }
  }

  InstanceRecord record(std::string const &id, std::string const &part,
                        std::string const &class_name, std::vector<std::uint64_t> primes,
                        std::vector<std::pair<std::string, NodeId>> const &subs,
                        std::string detail) {
    return make_instance_record(*ctx_, id, part, class_name, std::move(primes), subs,
                                std::move(detail));
  }

  void add_msp_witness(InstanceRecord &r, NodeId a, NodeId b) {
    auto v = ctx_->perm().msp(a, b);
    r.msp = v.holds;
    if (!v.failing_pair) {
      r.detail += v.product_is_subgroup ? "" : "; AB is not a subgroup";
      return;
    }
    auto const &f = *v.failing_pair;
    auto w = make_instance_record(*ctx_, "", "", "", {},
                                  {{"sylow_a", f.sylow_a},
                                   {"sylow_b", f.sylow_b},
                                   {"u", f.u},
                                   {"v", f.v}},
                                  "");
    r.subgroups.insert(r.subgroups.end(), w.subgroups.begin(), w.subgroups.end());
    r.primes = {f.p, f.q};
    r.detail += "; Sylow " + std::to_string(f.p) + "- and " + std::to_string(f.q) +
                "-subgroups not mutually permutable: |u v| = " +
                std::to_string(ctx_->perm().product_size(f.u, f.v)) + " and u v is not a subgroup";
  }

  void negative_control(VerificationReport &r, std::size_t &kept, std::string const &id,
                        std::string const &class_name, NodeId a, NodeId b,
                        std::string const &detail) {
    ++r.negative_control_count;
    if (kept >= kNegativeControlsPerGroup)
      return;
    ++kept;
    auto rec = record(id, "", class_name, {}, {{"A", a}, {"B", b}}, detail);
    add_msp_witness(rec, a, b);
    r.negative_controls.push_back(std::move(rec));
  }

  void scan_th2(std::string const &id, ClassId f);
  void scan_corollary();
  void scan_l12();
  void scan_l11();
  void scan_l10();
  void scan_l7();
  void scan_l13();
  void scan_commprod();
  void scan_skiba();
  void scan_l3();
  void scan_l4();
  void scan_normalizer();
  void summarize();

  CatalogEntry const &entry_;
  CampaignConfig const &config_;
  std::vector<std::string> const &ids_;
  GroupOutcome out_;
  std::unique_ptr<GroupContext> ctx_;
  std::vector<Factorization> facts_;
  std::vector<Factorization> msp_facts_;
};

GroupOutcome GroupScan::run() {
  auto &s = out_.summary;
  s.name = entry_.name;
  s.provenance = entry_.provenance.to_string();
  s.order = entry_.group.order();
  s.degree = entry_.group.degree();
  for (auto const &id : ids_) {
    VerificationReport r;
    r.theorem_id = id;
    r.statement = statement_of(id);
    out_.reports.emplace(id, std::move(r));
  }

  try {
    ctx_ = std::make_unique<GroupContext>(entry_.name, entry_.group,
                                          LatticeOptions{config_.lattice_cap,
                                                         LatticeMethod::kCyclicExtension});
  } catch (CapExceeded const &e) {
    s.skipped = true;
    s.skip_reason = e.what();
    for (auto &[id, r] : out_.reports)
      r.skipped.push_back({entry_.name, e.what()});
    return std::move(out_);
  }

  facts_ = enumerate_factorizations(ctx_->lattice(), config_.dedup);
  for (auto const &f : facts_) {
    if (ctx_->perm().msp_holds(f.first, f.second))
      msp_facts_.push_back(f);
  }
  for (auto &[id, r] : out_.reports)
    r.groups_scanned = 1;

  for (auto const &c : config_.classes) {
    auto id = "th2." + c.name();
    if (selected(id))
      scan_th2(id, c);
  }
  if (selected("corollary"))
    scan_corollary();
  if (selected("l12"))
    scan_l12();
  if (selected("l11"))
    scan_l11();
  if (selected("l10"))
    scan_l10();
  if (selected("l7"))
    scan_l7();
  if (selected("l13"))
    scan_l13();
  if (selected("l_commprod"))
    scan_commprod();
  if (selected("l_skiba"))
    scan_skiba();
  if (selected("l3"))
    scan_l3();
  if (selected("l4"))
    scan_l4();
  if (selected("l_normalizer"))
    scan_normalizer();
  summarize();
  return std::move(out_);
}

void GroupScan::scan_th2(std::string const &id, ClassId f) {
  timed(id, [&](VerificationReport &r) {
    r.factorizations_scanned += facts_.size();
    std::size_t kept = 0;
    auto &e = ctx_->classes();
    auto const g = ctx_->top();
    for (auto [a, b] : facts_) {
      auto o = check_th2(*ctx_, a, b, f);
      tally(r, "", o, [&] {
        return record(id, "", f.name(), {}, {{"A", a}, {"B", b}}, "G is not in " + f.name());
      });
      if (o == Outcome::kNotHit && e.in_class(a, f) && e.in_class(b, f) && !e.in_class(g, f))
        negative_control(r, kept, id, f.name(), a, b,
                         "A, B in " + f.name() + ", msp fails, G not in " + f.name());
    }
  });
}

void GroupScan::scan_corollary() {
  timed("corollary", [&](VerificationReport &r) {
    r.factorizations_scanned += facts_.size();
    for (std::size_t i = 0; i < kSaturatedClasses.size(); ++i) {
      auto f = kSaturatedClasses[i];
      auto part = std::to_string(i + 1);
      for (auto [a, b] : facts_) {
        tally(r, part, check_th2(*ctx_, a, b, f), [&] {
          return record("corollary", part, f.name(), {}, {{"A", a}, {"B", b}},
                        "G is not in " + f.name());
        });
      }
    }
  });
}

void GroupScan::scan_l12() {
  timed("l12", [&](VerificationReport &r) {
    r.factorizations_scanned += facts_.size();
    std::size_t kept = 0;
    auto &e = ctx_->classes();
    for (auto [a, b] : facts_) {
      auto o = check_l12(*ctx_, a, b);
      tally(r, "", o, [&] {
        return record("l12", "", "soluble", {}, {{"A", a}, {"B", b}}, "G is not soluble");
      });
      if (o == Outcome::kNotHit && e.is_soluble(a) && e.is_soluble(b) &&
          !e.is_soluble(ctx_->top()))
        negative_control(r, kept, "l12", "soluble", a, b,
                         "A, B soluble, msp fails, G insoluble");
    }
  });
}

void GroupScan::scan_l11() {
  timed("l11", [&](VerificationReport &r) {
    r.factorizations_scanned += facts_.size();
    auto const primes = prime_divisors(ctx_->lattice().order(ctx_->top()));
    for (int part = 1; part <= 3; ++part) {
      for (auto [a, b] : facts_) {
        tally(r, std::to_string(part), check_l11(*ctx_, a, b, part), [&] {
          std::string what = part == 1   ? "G is not p-closed"
                             : part == 2 ? "G is not r-nilpotent"
                                         : "G has no ordered Sylow tower of supersoluble type";
          std::vector<std::uint64_t> p;
          if (part == 1)
            p = {primes.back()};
          if (part == 2)
            p = {primes.front()};
          return record("l11", std::to_string(part), "", p, {{"A", a}, {"B", b}}, what);
        });
      }
    }
  });
}

void GroupScan::scan_l10() {
  timed("l10", [&](VerificationReport &r) {
    r.factorizations_scanned += facts_.size();
    auto const &lat = ctx_->lattice();
    auto const primes = prime_divisors(lat.order(ctx_->top()));
    // non-msp factorizations are not hits for any part
    r.instances += facts_.size() - msp_facts_.size();

    for (auto [a, b] : msp_facts_) {
      for (auto n : ctx_->normal_subgroups()) {
        tally(r, "1", check_l10_quotient(*ctx_, a, b, n), [&] {
          return record("l10", "1", "", {}, {{"A", a}, {"B", b}, {"N", n}},
                        "(AN/N)(BN/N) is not an msp-permutable factorization of G/N");
        });
      }
      for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
        for (auto h : lat.overgroups_of(x)) {
          tally(r, "2", check_l10_intermediate(*ctx_, x, y, h), [&] {
            return record("l10", "2", "", {}, {{"A", x}, {"B", y}, {"H", h}},
                          "H = A(H n B) fails or is not msp-permutable");
          });
        }
        if (a == b)
          break;
      }
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << primes.size()); ++mask) {
        std::vector<std::uint64_t> pi;
        for (std::size_t i = 0; i < primes.size(); ++i) {
          if (mask >> i & 1)
            pi.push_back(primes[i]);
        }
        tally(r, "3", check_l10_hall(*ctx_, a, b, pi), [&] {
          auto rec = record("l10", "3", "", pi, {{"A", a}, {"B", b}},
                            "no Hall pi-subgroups with G_pi = A_pi B_pi msp-permutable");
          rec.external = true;
          return rec;
        });
      }
    }
  });
}

void GroupScan::scan_l7() {
  timed("l7", [&](VerificationReport &r) {
    r.factorizations_scanned += facts_.size();
    auto const primes = prime_divisors(ctx_->lattice().order(ctx_->top()));
    for (auto [a, b] : facts_) {
      for (auto p : primes) {
        tally(r, "", check_l7(*ctx_, a, b, p), [&] {
          return record("l7", "", "", {p}, {{"A", a}, {"B", b}},
                        "P n A or P n B is not normal in G");
        });
      }
    }
  });
}

void GroupScan::scan_l13() {
  timed("l13", [&](VerificationReport &r) {
    r.factorizations_scanned += facts_.size();
    auto const &lat = ctx_->lattice();
    for (auto [a, b] : facts_) {
      auto meet = lat.intersection(a, b);
      for (auto [h, k] : {std::pair{a, b}, std::pair{b, a}}) {
        for (auto l : lat.subgroups_of(meet)) {
          tally(r, "", check_l13(*ctx_, h, k, l), [&] {
            return record("l13", "", "", {}, {{"H", h}, {"K", k}, {"L", l}},
                          "L is not contained in the core of K");
          });
        }
        if (a == b)
          break;
      }
    }
  });
}

void GroupScan::scan_commprod() {
  timed("l_commprod", [&](VerificationReport &r) {
    auto const &lat = ctx_->lattice();
    std::vector<std::pair<NodeId, NodeId>> commuting;
    for (NodeId b = 0; b < lat.size(); ++b) {
      auto c = ctx_->centralizer(b);
      for (NodeId a = 0; a <= b; ++a) {
        if (lat.contains(c, a))
          commuting.emplace_back(a, b);
      }
    }
    auto const all_pairs = static_cast<std::uint64_t>(lat.size()) * (lat.size() + 1) / 2;
    for (auto f : kCommprodClasses) {
      auto part = f.name();
      r.instances += all_pairs - commuting.size();
      r.parts[part].instances += all_pairs - commuting.size();
      for (auto [a, b] : commuting) {
        tally(r, part, check_commprod(*ctx_, a, b, f), [&] {
          return record("l_commprod", part, f.name(), {}, {{"A", a}, {"B", b}},
                        "AB is not in " + f.name());
        });
      }
    }
  });
}

void GroupScan::scan_skiba() {
  timed("l_skiba", [&](VerificationReport &r) {
    for (auto f : kSaturatedClasses) {
      for (auto e : ctx_->normal_subgroups()) {
        tally(r, f.name(), check_skiba(*ctx_, e, f), [&] {
          return record("l_skiba", f.name(), f.name(), {}, {{"E", e}},
                        "G/E in " + f.name() + " but G is not");
        });
      }
    }
  });
}

void GroupScan::scan_l3() {
  timed("l3", [&](VerificationReport &r) {
    for (auto f : kSaturatedClasses) {
      tally(r, f.name(), check_l3(*ctx_, f), [&] {
        return record("l3", f.name(), f.name(), {}, {}, "G is not primitive");
      });
    }
  });
}

void GroupScan::scan_l4() {
  timed("l4", [&](VerificationReport &r) {
    auto const &lat = ctx_->lattice();
    for (auto m : primitivators(lat, ctx_->top())) {
      tally(r, "", check_l4(*ctx_, m), [&] {
        auto c = verify_primitive_soluble_structure(lat, ctx_->top(), m);
        std::string what;
        if (!c.frattini_trivial)
          what += " (1)";
        if (!c.fitting_self_centralizing || !c.fitting_elementary_abelian)
          what += " (2)";
        if (!c.unique_minimal_normal)
          what += " (3)";
        if (!c.semidirect || !c.o_p_of_m_trivial)
          what += " (4)";
        return record("l4", "", "", {c.p}, {{"M", m}}, "failed statements:" + what);
      });
    }
  });
}

void GroupScan::scan_normalizer() {
  timed("l_normalizer", [&](VerificationReport &r) {
    auto const &lat = ctx_->lattice();
    auto const g = ctx_->top();
    auto prims = primitivators(lat, g);
    if (prims.empty() || !ctx_->classes().is_soluble(g)) {
      r.parts["1"];
      r.parts["2"];
      return;
    }
    for (auto m : prims) {
      auto subs = lat.subgroups_of(m);
      for (auto a : subs) {
        for (auto b : subs) {
          if (ctx_->perm().product_size(a, b) != lat.order(m))
            continue;
          ++r.factorizations_scanned;
          for (int part = 1; part <= 2; ++part) {
            tally(r, std::to_string(part), check_normalizer(*ctx_, m, a, b, part), [&] {
              return record("l_normalizer", std::to_string(part), "", {},
                            {{"M", m}, {"A", a}, {"B", b}},
                            part == 1 ? "B is not cyclic of order dividing p - 1"
                                      : "[A, B] is not trivial");
            });
          }
        }
      }
    }
  });
}

void GroupScan::summarize() {
  auto &s = out_.summary;
  auto &e = ctx_->classes();
  auto const g = ctx_->top();
  s.lattice_nodes = ctx_->lattice().size();
  s.factorizations = facts_.size();
  s.msp_factorizations = msp_facts_.size();
  for (auto c : {kClassU, kClassWU, kClassVU, kClassD, kClassSoluble, kClassNilpotent,
                 ClassId{ClassTag::kMetanilpotent}})
    s.classes.emplace_back(c.name(), e.in_class(g, c));
  s.wu = e.wU_characterization(g);
  s.vu_characterization = e.vU_characterization(g);
  s.wu_variants_disagree = s.wu.metanilpotent_variant() != s.wu.biprimary_variant();
}

}  // namespace

CampaignResult run_campaign(CampaignConfig const &config,
                            std::vector<CatalogEntry> const &catalog) {
  validate(config);
  auto const ids = selected_reports(config);
  std::vector<GroupOutcome> outcomes(catalog.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (;;) {
      auto i = next.fetch_add(1);
      if (i >= catalog.size())
        return;
      try {
        outcomes[i] = GroupScan(catalog[i], config, ids).run();
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure)
          failure = std::current_exception();
        next = catalog.size();
        return;
      }
    }
  };

  auto const n = std::min<std::size_t>(config.workers, std::max<std::size_t>(catalog.size(), 1));
  if (n <= 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (std::size_t t = 0; t < n; ++t)
      threads.emplace_back(worker);
    for (auto &t : threads)
      t.join();
  }
  if (failure)
    std::rethrow_exception(failure);

  CampaignResult result;
  for (auto const &id : ids) {
    VerificationReport r;
    r.theorem_id = id;
    r.statement = statement_of(id);
    for (auto const &o : outcomes)
      r.merge(o.reports.at(id));
    result.reports.push_back(std::move(r));
  }
  for (auto &o : outcomes)
    result.groups.push_back(std::move(o.summary));
  return result;
}

// Replay

ReplayResult replay_violation(InstanceRecord const &record, LatticeOptions options) {
  std::vector<Permutation> gens;
  for (auto const &g : record.generators)
    gens.push_back(parse_cycles(g, record.degree));
  GroupContext ctx(record.group_name, Group(record.degree, std::move(gens)), options);
  auto const &lat = ctx.lattice();

  std::map<std::string, NodeId> nodes;
  for (auto const &s : record.subgroups) {
    auto set = lat.table().empty_set();
    for (auto const &x : s.elements)
      set.insert(lat.table().id(parse_cycles(x, record.degree)));
    nodes[s.label] = lat.node(set);
  }
  auto node = [&](std::string const &label) {
    auto it = nodes.find(label);
    if (it == nodes.end())
      throw ParseError("instance record lacks subgroup '" + label + "'");
    return it->second;
  };
  auto cls = [&] {
    auto c = ClassId::parse(record.class_name);
    if (!c)
      throw ParseError("instance record has unknown class '" + record.class_name + "'");
    return *c;
  };
  auto part = [&] {
    if (record.part.empty() ||
        !std::all_of(record.part.begin(), record.part.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw ParseError("instance record has no numeric part");
    return std::stoi(record.part);
  };
  auto prime = [&] {
    if (record.primes.empty())
      throw ParseError("instance record lacks a prime");
    return record.primes.front();
  };

  auto const &id = record.theorem_id;
  Outcome o;
  if (id.starts_with("th2.")) {
    o = check_th2(ctx, node("A"), node("B"), cls());
  } else if (id == "corollary") {
    o = check_th2(ctx, node("A"), node("B"), kSaturatedClasses.at(static_cast<std::size_t>(part() - 1)));
  } else if (id == "l12") {
    o = check_l12(ctx, node("A"), node("B"));
  } else if (id == "l11") {
    o = check_l11(ctx, node("A"), node("B"), part());
  } else if (id == "l10") {
    switch (part()) {
      case 1:
        o = check_l10_quotient(ctx, node("A"), node("B"), node("N"));
        break;
      case 2:
        o = check_l10_intermediate(ctx, node("A"), node("B"), node("H"));
        break;
      case 3:
        o = check_l10_hall(ctx, node("A"), node("B"), record.primes);
        break;
      default:
        throw ParseError("l10 has parts 1 to 3");
    }
  } else if (id == "l7") {
    o = check_l7(ctx, node("A"), node("B"), prime());
  } else if (id == "l13") {
    o = check_l13(ctx, node("H"), node("K"), node("L"));
  } else if (id == "l_commprod") {
    o = check_commprod(ctx, node("A"), node("B"), cls());
  } else if (id == "l_skiba") {
    o = check_skiba(ctx, node("E"), cls());
  } else if (id == "l3") {
    o = check_l3(ctx, cls());
  } else if (id == "l4") {
    o = check_l4(ctx, node("M"));
  } else if (id == "l_normalizer") {
    o = check_normalizer(ctx, node("M"), node("A"), node("B"), part());
  } else {
    throw ParseError("instance record has unknown theorem id '" + id + "'");
  }

  ReplayResult result;
  result.outcome = o;
  result.detail = o == Outcome::kViolated ? "violation reproduced"
                  : o == Outcome::kHolds  ? "statement holds on this instance"
                                          : "hypothesis not satisfied";
  return result;
}

}  // namespace mspg
