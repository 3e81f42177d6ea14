#include "cli.h"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "mspg/error.h"
#include "mspg/harness.h"
#include "mspg/number_theory.h"
#include "mspg/structure.h"

namespace mspg::cli {
namespace {

namespace fs = std::filesystem;

struct Options {
  std::uint64_t max_order = 60;
  std::size_t lattice_cap = kDefaultLatticeCap;
  std::vector<std::string> classes{"U", "wU", "vU"};
  std::vector<std::string> theorems{"all"};
  std::vector<std::string> groups;
  std::string catalog = "standard";
  std::string out;
  unsigned workers = 1;
  bool no_dedup = false;
  bool timing = false;
  std::string target;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

template <typename T>
std::string join(std::vector<T> const &items, std::string const &sep) {
  std::ostringstream out;
  for (std::size_t i = 0; i < items.size(); ++i)
    out << (i ? sep : "") << items[i];
  return out.str();
}

std::vector<ClassId> parse_classes(std::vector<std::string> const &names) {
  std::vector<ClassId> out;
  for (auto const &n : names) {
    auto c = ClassId::parse(n);
    if (!c)
      throw PreconditionError("unknown class '" + n + "'");
    out.push_back(*c);
  }
  return out;
}

/// A file path, a recipe such as "symmetric(3)", or a standard catalog name.
CatalogEntry resolve_target(std::string const &target, std::uint64_t max_order) {
  if (fs::is_regular_file(target))
    return load_group(target);
  if (target.find('(') != std::string::npos) {
    auto recipe = Recipe::parse(target);
    return CatalogEntry{target, recipe.build(), recipe};
  }
  for (auto &e : standard_catalog(max_order)) {
    if (e.name == target)
      return e;
  }
  throw PreconditionError("'" + target + "' is neither a group file, a recipe nor a catalog "
                          "name of order <= " + std::to_string(max_order));
}

std::string describe(SubgroupLattice const &lat, NodeId h) {
  if (h == lat.trivial())
    return "1";
  std::vector<std::string> gens;
  for (auto g : lat.generators(h))
    gens.push_back(to_cycles(lat.table().element(g)));
  return "<" + join(gens, ", ") + ">";
}

/// "order 3, <(1 2 3)>", or "order 1" for the trivial subgroup.
std::string show(SubgroupLattice const &lat, NodeId h) {
  auto text = "order " + std::to_string(lat.order(h));
  return h == lat.trivial() ? text : text + ", " + describe(lat, h);
}

std::string series(SubgroupLattice const &lat, std::vector<NodeId> const &terms) {
  std::vector<std::uint64_t> orders;
  for (auto t : terms)
    orders.push_back(lat.order(t));
  return join(orders, " > ");
}

int cmd_analyze(Options const &o, std::ostream &out) {
  auto entry = resolve_target(o.target, o.max_order);
  GroupContext ctx(entry.name, entry.group, LatticeOptions{o.lattice_cap});
  auto const &lat = ctx.lattice();
  auto const g = ctx.top();
  auto &e = ctx.classes();
  auto const primes = prime_divisors(lat.order(g));

  out << "group: " << entry.name << "\n";
  out << "provenance: " << entry.provenance.to_string() << "\n";
  out << "degree: " << entry.group.degree() << "\n";
  out << "generators: ";
  std::vector<std::string> gens;
  for (auto const &x : entry.group.generators())
    gens.push_back(to_cycles(x));
  out << (gens.empty() ? "none" : join(gens, " ")) << "\n";
  out << "order: " << lat.order(g) << "\n";
  out << "primes: " << (primes.empty() ? "none" : join(primes, ",")) << "\n";
  out << "subgroups: " << lat.size() << " (normal: " << ctx.normal_subgroups().size() << ")\n";
  auto z = center(lat, g);
  out << "centre: " << show(lat, z) << "\n";
  out << "derived series: " << series(lat, derived_series(lat, g)) << "\n";
  auto f = fitting(lat, g);
  out << "Fitting: " << show(lat, f) << "\n";
  auto phi = frattini(lat, g);
  out << "Frattini: " << show(lat, phi) << "\n";
  auto chief = chief_series(lat, g);
  out << "chief factors: "
      << (chief.factor_orders.empty() ? "none" : join(chief.factor_orders, ",")) << "\n";
  for (auto p : primes) {
    auto s = sylow_subgroup(lat, g, p);
    auto count = sylow_conjugates(lat, g, p).size();
    out << "Sylow " << p << ": order " << lat.order(s) << ", count " << count
        << (lat.is_normal(s) ? ", normal" : "") << (is_cyclic(lat, s) ? ", cyclic" : "")
        << (is_abelian(lat, s) ? ", abelian" : "") << "\n";
  }
  out << "soluble: " << yes_no(e.is_soluble(g)) << "\n";
  out << "nilpotent: " << yes_no(e.is_nilpotent(g)) << "\n";
  out << "metanilpotent: " << yes_no(e.is_metanilpotent(g)) << "\n";
  out << "supersoluble: " << yes_no(e.is_supersoluble(g)) << "\n";
  out << "wU: " << yes_no(e.is_wU(g)) << "\n";
  out << "vU: " << yes_no(e.is_vU(g)) << "\n";
  for (auto p : primes) {
    out << p << "-closed: " << yes_no(e.is_p_closed(g, p)) << ", " << p
        << "-nilpotent: " << yes_no(e.is_p_nilpotent(g, p)) << "\n";
  }
  auto tower = supersoluble_sylow_tower(lat, g);
  out << "tower: " << yes_no(tower.holds);
  if (!tower.primes.empty())
    out << " (primes " << join(tower.primes, " > ") << ")";
  out << "\n";
  auto prim = is_primitive(lat, g);
  out << "primitive: " << yes_no(prim.primitive);
  if (prim.primitivator)
    out << " (primitivator of order " << lat.order(*prim.primitivator) << ")";
  out << "\n";
  return kOk;
}

int cmd_factorize(Options const &o, std::ostream &out) {
  auto entry = resolve_target(o.target, o.max_order);
  auto classes = parse_classes(o.classes);
  GroupContext ctx(entry.name, entry.group, LatticeOptions{o.lattice_cap});
  auto const &lat = ctx.lattice();
  auto facts = enumerate_factorizations(lat, !o.no_dedup);

  out << "group: " << entry.name << ", order " << lat.order(ctx.top()) << ", "
      << facts.size() << (o.no_dedup ? " factorizations" : " factorizations up to conjugacy")
      << "\n";
  std::size_t hits = 0;
  for (auto f : facts) {
    auto rec = make_factorization_record(ctx, f, classes);
    out << "A = " << describe(lat, rec.a) << " [" << lat.order(rec.a) << "]  B = "
        << describe(lat, rec.b) << " [" << lat.order(rec.b) << "]  msp: "
        << yes_no(rec.msp.holds);
    bool hit = rec.msp.holds;
    for (auto const &fl : rec.class_flags) {
      out << "  " << fl.cls.name() << ": " << yes_no(fl.a) << "/" << yes_no(fl.b) << "/"
          << yes_no(fl.g);
      if (fl.cls == kClassU)
        hit = hit && fl.a && fl.b;
    }
    if (hit && std::find(classes.begin(), classes.end(), kClassU) != classes.end()) {
      out << "  [msp+U hit]";
      ++hits;
    }
    out << "\n";
    if (rec.msp.failing_pair) {
      auto const &w = *rec.msp.failing_pair;
      out << "  witness: Sylow " << w.p << "-subgroup " << describe(lat, w.sylow_a)
          << " of A and Sylow " << w.q << "-subgroup " << describe(lat, w.sylow_b)
          << " of B: " << describe(lat, w.u) << " and " << describe(lat, w.v)
          << " do not permute\n";
    }
  }
  out << "class flags are A/B/G\n";
  if (std::find(classes.begin(), classes.end(), kClassU) != classes.end())
    out << "msp+U hits: " << hits << "\n";
  return kOk;
}

CampaignConfig campaign_config(Options const &o) {
  CampaignConfig c;
  c.max_order = o.max_order;
  c.lattice_cap = o.lattice_cap;
  c.classes = parse_classes(o.classes);
  c.theorems = o.theorems;
  for (auto const &g : o.groups)
    c.group_files.emplace_back(g);
  if (o.catalog == "none") {
    c.use_standard_catalog = false;
  } else if (o.catalog != "standard") {
    std::stringstream in(o.catalog);
    for (std::string name; std::getline(in, name, ',');) {
      if (!name.empty())
        c.catalog_names.push_back(name);
    }
  }
  c.dedup = !o.no_dedup;
  c.workers = o.workers;
  c.timing = o.timing;
  return c;
}

/// Writes the bundle next to its destination first so a failure never
/// leaves a partial bundle at `dir`.
void write_bundle_atomically(CampaignResult const &result, CampaignConfig const &config,
                             fs::path const &dir) {
  auto staging = dir;
  staging += ".partial";
  std::error_code ec;
  fs::remove_all(staging, ec);
  try {
    write_bundle(result, config, staging);
    fs::remove_all(dir, ec);
    if (ec)
      throw IoError("cannot replace " + dir.string() + ": " + ec.message());
    fs::rename(staging, dir, ec);
    if (ec)
      throw IoError("cannot move bundle to " + dir.string() + ": " + ec.message());
  } catch (...) {
    fs::remove_all(staging, ec);
    throw;
  }
}

int cmd_verify(Options const &o, std::ostream &out) {
  auto config = campaign_config(o);
  validate(config);
  auto catalog = campaign_catalog(config);
  auto result = run_campaign(config, catalog);
  if (!o.out.empty())
    write_bundle_atomically(result, config, o.out);

  out << summary_tsv(result, config);
  for (auto const &r : result.reports)
    out << r.theorem_id << ": " << r.status() << "\n";
  std::size_t skipped = 0;
  for (auto const &g : result.groups)
    skipped += g.skipped ? 1 : 0;
  out << "groups: " << result.groups.size() << ", skipped: " << skipped
      << ", violations: " << result.total_violations() << "\n";
  if (!o.out.empty())
    out << "bundle: " << o.out << "\n";
  return result.total_violations() ? kViolations : kOk;
}

int cmd_catalog(Options const &o, std::ostream &out) {
  auto entries = standard_catalog(o.max_order);
  for (auto const &e : entries) {
    out << e.name << "\t" << e.group.order() << "\t" << e.group.degree() << "\t"
        << e.provenance.to_string() << "\n";
  }
  if (!o.out.empty()) {
    write_catalog(entries, o.out);
    out << "wrote " << entries.size() << " groups to " << o.out << "\n";
  }
  return kOk;
}

int cmd_export(Options const &o, std::ostream &out) {
  auto entry = resolve_target(o.target, o.max_order);
  if (o.out.empty() || o.out == "-") {
    out << format_group_text(entry);
  } else {
    save_group(entry, o.out);
  }
  return kOk;
}

}  // namespace

int run(std::vector<std::string> const &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Mutually sylow-permutable products: group analysis and verification campaigns"};
  app.require_subcommand(1);
  Options o;

  auto const theorem_check = CLI::Validator(
      [](std::string &s) -> std::string {
        if (s == "all" || canonical_theorem_id(s))
          return {};
        return "unknown theorem id '" + s + "'";
      },
      "THEOREM");
  auto const class_check = CLI::Validator(
      [](std::string &s) -> std::string {
        auto c = ClassId::parse(s);
        if (!c)
          return "unknown class '" + s + "'";
        return {};
      },
      "CLASS");
  auto const campaign_class_check = CLI::Validator(
      [](std::string &s) -> std::string {
        auto c = ClassId::parse(s);
        if (!c || (c->tag != ClassTag::kSupersoluble && c->tag != ClassTag::kWU &&
                   c->tag != ClassTag::kVU && c->tag != ClassTag::kTowerD))
          return "class '" + s + "' is not one of U, wU, vU, D";
        return {};
      },
      "CLASS");

  auto add_common = [&](CLI::App *sub) {
    sub->add_option("--max-order", o.max_order, "Largest catalog group order")
        ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 20));
    sub->add_option("--lattice-cap", o.lattice_cap, "Largest subgroup lattice to build")
        ->check(CLI::PositiveNumber);
  };

  auto *analyze = app.add_subcommand("analyze", "Structural dossier of one group");
  analyze->add_option("group", o.target, "Group file, recipe such as symmetric(3), or catalog name")
      ->required();
  add_common(analyze);

  auto *factorize = app.add_subcommand("factorize", "Factorizations G = AB with msp verdicts");
  factorize->add_option("group", o.target, "Group file, recipe or catalog name")->required();
  add_common(factorize);
  factorize->add_option("--classes", o.classes, "Classes to flag")
      ->delimiter(',')
      ->check(class_check);
  factorize->add_flag("--no-dedup", o.no_dedup, "List every factorization, not one per conjugacy class");

  auto *verify = app.add_subcommand("verify", "Run a verification campaign");
  add_common(verify);
  verify->add_option("--classes", o.classes, "Classes for th2 (U, wU, vU, D)")
      ->delimiter(',')
      ->check(campaign_class_check);
  verify->add_option("--theorems", o.theorems, "Theorem ids, or all")
      ->delimiter(',')
      ->check(theorem_check);
  verify->add_option("--group", o.groups, "Extra group file (repeatable)");
  verify->add_option("--catalog", o.catalog,
                     "standard, none, or a comma-separated list of catalog names");
  verify->add_option("--out", o.out, "Bundle directory");
  verify->add_option("--workers", o.workers, "Worker threads")->check(CLI::Range(1u, 256u));
  verify->add_flag("--no-dedup", o.no_dedup, "Scan every factorization, not one per conjugacy class");
  verify->add_flag("--timing", o.timing, "Record wall-clock seconds in the bundle");

  auto *catalog = app.add_subcommand("catalog", "List the standard catalog, optionally writing it");
  add_common(catalog);
  catalog->add_option("--out", o.out, "Directory for group files and manifest.txt");

  auto *exp = app.add_subcommand("export", "Write a group in the generator file format");
  exp->add_option("group", o.target, "Group file, recipe or catalog name")->required();
  add_common(exp);
  exp->add_option("--out", o.out, "Output file (default: standard output)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (CLI::ParseError const &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    if (*analyze)
      return cmd_analyze(o, out);
    if (*factorize)
      return cmd_factorize(o, out);
    if (*verify)
      return cmd_verify(o, out);
    if (*catalog)
      return cmd_catalog(o, out);
    if (*exp)
      return cmd_export(o, out);
  } catch (IoError const &e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  } catch (ParseError const &e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  } catch (Error const &e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  }
  return kConfigError;
}

}  // namespace mspg::cli
