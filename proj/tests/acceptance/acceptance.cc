/**
 * @file acceptance.cc
 * @brief One PASS/FAIL line per acceptance criterion. Exit status is the
 * number of failed criteria.
 */
#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "cli.h"
#include "mspg/classes.h"
#include "mspg/constructors.h"
#include "mspg/harness.h"
#include "mspg/structure.h"
#include "mspg/sylow_hall.h"
#include "oracles.h"
#include "test_util.h"

namespace fs = std::filesystem;
using mspg::NodeId;
using mspg::SubgroupLattice;

namespace {

/// Collects failure messages for one criterion; the first few are printed.
struct Check {
  std::vector<std::string> failures;
  std::size_t checked = 0;

  void expect(bool ok, std::string const &what) {
    ++checked;
    if (!ok)
      failures.push_back(what);
  }
};

std::string slurp(fs::path const &p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::map<std::string, std::string> bundle_files(fs::path const &dir) {
  std::map<std::string, std::string> out;
  if (!fs::exists(dir))
    return out;
  for (auto const &e : fs::recursive_directory_iterator(dir)) {
    if (e.is_regular_file())
      out[fs::relative(e.path(), dir).string()] = slurp(e.path());
  }
  return out;
}

int run_cli(std::vector<std::string> const &args) {
  std::ostringstream out, err;
  int code = mspg::cli::run(args, out, err);
  if (code != 0)
    std::cerr << err.str();
  return code;
}

fs::path work_dir() {
  static fs::path dir = [] {
    auto d = fs::temp_directory_path() / "mspg_acceptance";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

void engine_oracle_equivalence(Check &c) {
  for (auto const &e : mspg::standard_catalog(200)) {
    c.expect(e.group.order() == oracle::elements(e.group).size(),
             e.name + ": stabilizer chain order differs from closure");
  }
  for (auto const &e : mspg::standard_catalog(48)) {
    SubgroupLattice fast(e.group);
    SubgroupLattice slow(e.group, {mspg::kDefaultLatticeCap, mspg::LatticeMethod::kSubsetClosure});
    bool same = fast.size() == slow.size();
    for (NodeId h = 0; same && h < fast.size(); ++h)
      same = fast.element_list(h) == slow.element_list(h);
    c.expect(same, e.name + ": cyclic-extension lattice differs from subset closure");
  }
}

void spot_values(Check &c) {
  auto count = [](mspg::Group const &g) {
    return oracle::all_subgroups(oracle::elements(g)).size();
  };
  c.expect(count(mspg::symmetric(3)) == 6, "|subgroups(S3)| != 6");
  c.expect(count(mspg::elementary_abelian(2, 2)) == 5, "|subgroups(E4)| != 5");
  c.expect(SubgroupLattice(mspg::symmetric(3)).size() == 6, "library: |subgroups(S3)| != 6");
  c.expect(SubgroupLattice(mspg::elementary_abelian(2, 2)).size() == 5,
           "library: |subgroups(E4)| != 5");

  auto d8 = oracle::elements(mspg::dihedral(4));
  c.expect(oracle::frattini(d8, oracle::all_subgroups(d8)).size() == 2, "|Phi(D8)| != 2");
  c.expect(mspg::frattini(mspg::dihedral(4)).order() == 2, "library: |Phi(D8)| != 2");

  // F(S4): the largest normal nilpotent subgroup
  auto s4 = oracle::elements(mspg::symmetric(4));
  auto subs = oracle::all_subgroups(s4);
  oracle::Set fit;
  for (auto const &h : subs) {
    if (oracle::is_normal(s4, h) && oracle::is_nilpotent(h) && h.size() > fit.size())
      fit = h;
  }
  auto v4 = oracle::elements(testutil::group(4, {"(1 2)(3 4)", "(1 3)(2 4)"}));
  c.expect(fit == v4, "F(S4) != V4");
  c.expect(oracle::elements(mspg::fitting(mspg::symmetric(4))) == v4, "library: F(S4) != V4");

  // chief factors: descend through maximal G-normal subgroups
  std::vector<oracle::Set> normals;
  for (auto const &h : subs) {
    if (oracle::is_normal(s4, h))
      normals.push_back(h);
  }
  std::multiset<std::uint64_t> factors;
  for (oracle::Set m = s4; m.size() > 1;) {
    oracle::Set next;
    for (auto const &n : normals) {
      if (n.size() < m.size() && oracle::subset(n, m) && n.size() > next.size())
        next = n;
    }
    factors.insert(m.size() / next.size());
    m = next;
  }
  c.expect(factors == std::multiset<std::uint64_t>{2, 3, 4}, "S4 chief factors != {4,3,2}");
  auto lib = mspg::chief_factor_orders(mspg::symmetric(4));
  c.expect(std::multiset<std::uint64_t>(lib.begin(), lib.end()) == factors,
           "library: S4 chief factors differ");

  auto a5 = oracle::elements(mspg::alternating(5));
  bool order20 = false;
  for (auto const &h : oracle::all_subgroups(a5))
    order20 = order20 || h.size() == 20;
  c.expect(!order20, "A5 has a Hall {2,5}-subgroup");
  SubgroupLattice a5l(mspg::alternating(5));
  c.expect(mspg::hall_subgroups(a5l, a5l.top(), {2, 5}).empty(),
           "library: A5 has a Hall {2,5}-subgroup");
}

void class_chain(Check &c) {
  for (auto const &e : mspg::standard_catalog(60)) {
    SubgroupLattice lat(e.group);
    mspg::ClassEvaluator ev(lat);
    for (NodeId h = 0; h < lat.size(); ++h) {
      bool u = ev.is_supersoluble(h), w = ev.is_wU(h), v = ev.is_vU(h), d = ev.has_tower(h);
      c.expect((!u || w) && (!w || v) && (!v || d),
               e.name + " node " + std::to_string(h) + ": class chain broken");
    }
    auto g = lat.top();
    auto wc = ev.wU_characterization(g);
    c.expect(ev.is_wU(g) == wc.metanilpotent_variant(), e.name + ": wU vs metanilpotent reading");
    c.expect(ev.is_wU(g) == wc.biprimary_variant(), e.name + ": wU vs biprimary reading");
    c.expect(ev.is_vU(g) == ev.vU_characterization(g), e.name + ": vU characterization");
  }
}

void default_campaign(Check &c, fs::path const &bundle) {
  c.expect(run_cli({"verify", "--out", bundle.string()}) == 0, "verify exited non-zero");
  std::set<std::string> want;
  for (auto const &id : mspg::selected_reports(mspg::CampaignConfig{}))
    want.insert(id);
  std::set<std::string> seen;
  for (auto const &e : fs::directory_iterator(bundle / "reports")) {
    auto j = nlohmann::json::parse(slurp(e.path()));
    std::string id = j["theorem_id"];
    seen.insert(id);
    c.expect(j["violation_count"] == 0, id + ": violations");
    c.expect(j["status"] == "verified", id + ": status " + std::string(j["status"]));
    if (id == "th2.U")
      c.expect(j["hypothesis_hits"].get<std::uint64_t>() > 0, "th2.U has no hypothesis hits");
  }
  c.expect(seen == want, "report set differs from the selected statements");
}

std::vector<mspg::InstanceRecord> controls(fs::path const &report) {
  std::vector<mspg::InstanceRecord> out;
  if (!fs::exists(report))
    return out;
  auto j = nlohmann::json::parse(slurp(report));
  for (auto const &r : j["negative_controls"])
    out.push_back(mspg::parse_instance_json(r.dump()));
  return out;
}

/// Element sets of the group and of the records' A and B, rebuilt from text.
struct Rebuilt {
  oracle::Set g, a, b;
};

Rebuilt rebuild(mspg::InstanceRecord const &r) {
  Rebuilt out;
  out.g = oracle::elements(testutil::group(r.degree, r.generators));
  for (auto const &s : r.subgroups) {
    oracle::Set set;
    for (auto const &x : s.elements)
      set.insert(testutil::perm(x, r.degree));
    if (s.label == "A")
      out.a = set;
    if (s.label == "B")
      out.b = set;
  }
  return out;
}

void negative_controls(Check &c, fs::path const &bundle) {
  bool a4 = false;
  for (auto const &r : controls(bundle / "reports" / "th2.U.json")) {
    if (r.group_name != "A4")
      continue;
    auto x = rebuild(r);
    a4 = a4 || (r.msp == false && oracle::product(x.a, x.b).size() == 12 &&
                !oracle::msp(x.g, x.a, x.b) && !oracle::is_supersoluble(x.g));
  }
  c.expect(a4, "no A4 = V4 C3 control with msp false and G not in U");

  bool a5 = false;
  for (auto const &r : controls(bundle / "reports" / "l12.json")) {
    if (r.group_name != "A5")
      continue;
    auto x = rebuild(r);
    a5 = a5 || (r.msp == false && oracle::product(x.a, x.b).size() == 60 &&
                oracle::is_soluble(x.a) && oracle::is_soluble(x.b) &&
                !oracle::msp(x.g, x.a, x.b) && !oracle::is_soluble(x.g));
  }
  c.expect(a5, "no A5 = A4 C5 control with soluble factors, msp false and G insoluble");
}

void determinism(Check &c, fs::path const &first) {
  auto one = work_dir() / "workers2_a", two = work_dir() / "workers2_b";
  c.expect(run_cli({"verify", "--workers", "2", "--out", one.string()}) == 0, "run 2 failed");
  c.expect(run_cli({"verify", "--workers", "2", "--out", two.string()}) == 0, "run 3 failed");
  auto base = bundle_files(first);
  c.expect(!base.empty(), "empty bundle");
  c.expect(bundle_files(one) == bundle_files(two), "two workers=2 runs differ");
  c.expect(bundle_files(one) == base, "workers=2 differs from workers=1");
}

void closure(Check &c) {
  for (auto const &e : mspg::standard_catalog(60)) {
    mspg::GroupContext ctx(e.name, e.group);
    auto const &lat = ctx.lattice();
    for (auto f : {mspg::kClassU, mspg::kClassWU, mspg::kClassVU}) {
      if (!ctx.classes().in_class(ctx.top(), f))
        continue;
      for (NodeId h = 0; h < lat.size(); ++h)
        c.expect(ctx.classes().in_class(h, f), e.name + ": subgroup leaves " + f.name());
      for (auto n : ctx.normal_subgroups())
        c.expect(ctx.quotient_in_class(n, f), e.name + ": quotient leaves " + f.name());
    }
  }
}

}  // namespace

int main() {
  auto bundle = work_dir() / "default";
  std::vector<std::pair<std::string, std::function<void(Check &)>>> criteria = {
      {"engine oracle equivalence", engine_oracle_equivalence},
      {"known-value spot checks", spot_values},
      {"class chain and characterizations", class_chain},
      {"default campaign, zero violations", [&](Check &c) { default_campaign(c, bundle); }},
      {"negative controls", [&](Check &c) { negative_controls(c, bundle); }},
      {"deterministic bundles", [&](Check &c) { determinism(c, bundle); }},
      {"subgroup and quotient closure", closure},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].second(c);
    } catch (std::exception const &e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = c.failures.empty() && c.checked > 0;
    failed += ok ? 0 : 1;
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << i + 1 << ": " << criteria[i].first
              << " (" << c.checked << " checks, " << std::fixed << std::setprecision(1) << secs
              << " s)\n";
    for (std::size_t k = 0; k < c.failures.size() && k < 5; ++k)
      std::cout << "      " << c.failures[k] << "\n";
  }
  fs::remove_all(work_dir());
  return failed;
}
