#include "mspg/classes.h"

#include <algorithm>
#include <deque>
#include <mutex>
#include <unordered_map>

#include "mspg/error.h"
#include "mspg/number_theory.h"
#include "mspg/structure.h"
#include "mspg/sylow_hall.h"

namespace mspg {

std::string ClassId::name() const {
  switch (tag) {
    case ClassTag::kSoluble:
      return "soluble";
    case ClassTag::kNilpotent:
      return "nilpotent";
    case ClassTag::kMetanilpotent:
      return "metanilpotent";
    case ClassTag::kSupersoluble:
      return "U";
    case ClassTag::kWU:
      return "wU";
    case ClassTag::kVU:
      return "vU";
    case ClassTag::kTowerD:
      return "D";
    case ClassTag::kPClosed:
      return "p-closed:" + std::to_string(p);
    case ClassTag::kPNilpotent:
      return "p-nilpotent:" + std::to_string(p);
  }
  return "?";
}

std::optional<ClassId> ClassId::parse(std::string_view text) {
  static const std::pair<std::string_view, ClassTag> plain[] = {
      {"soluble", ClassTag::kSoluble},   {"nilpotent", ClassTag::kNilpotent},
      {"metanilpotent", ClassTag::kMetanilpotent},
      {"U", ClassTag::kSupersoluble},    {"wU", ClassTag::kWU},
      {"vU", ClassTag::kVU},             {"D", ClassTag::kTowerD},
  };
  for (auto const &[name, tag] : plain) {
    if (text == name)
      return ClassId{tag};
  }
  auto with_prime = [&](std::string_view prefix, ClassTag tag) -> std::optional<ClassId> {
    if (!text.starts_with(prefix))
      return std::nullopt;
    auto digits = text.substr(prefix.size());
    if (digits.empty() || digits.size() > 9 ||
        !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
      return std::nullopt;
    std::uint64_t p = std::stoull(std::string(digits));
    if (!is_prime(p))
      return std::nullopt;
    return ClassId{tag, p};
  };
  if (auto c = with_prime("p-closed:", ClassTag::kPClosed))
    return c;
  return with_prime("p-nilpotent:", ClassTag::kPNilpotent);
}

PSubnormalResult is_P_subnormal(SubgroupLattice const &lat, NodeId parent, NodeId h) {
  if (!lat.contains(parent, h))
    throw PreconditionError("subgroup is not contained in the parent");
  PSubnormalResult result;
  std::vector<std::int64_t> pred(lat.size(), -2);
  std::deque<NodeId> queue{h};
  pred[h] = -1;
  while (!queue.empty()) {
    auto k = queue.front();
    queue.pop_front();
    if (k == parent) {
      result.holds = true;
      for (std::int64_t x = k; x >= 0; x = pred[static_cast<std::size_t>(x)])
        result.chain.push_back(static_cast<NodeId>(x));
      std::reverse(result.chain.begin(), result.chain.end());
      return result;
    }
    for (auto up : lat.prime_index_up(k)) {
      if (pred[up] != -2 || !lat.contains(parent, up))
        continue;
      pred[up] = k;
      queue.push_back(up);
    }
  }
  return result;
}

ClassEvaluator::ClassEvaluator(SubgroupLattice const &lat)
    : lat_(&lat),
      soluble_(lat.size(), -1),
      nilpotent_(lat.size(), -1),
      metanilpotent_(lat.size(), -1),
      supersoluble_(lat.size(), -1),
      tower_(lat.size(), -1),
      wu_(lat.size(), -1),
      vu_(lat.size(), -1),
      primary_cyclic_(lat.size(), -1),
      p_subnormal_(lat.size()),
      normals_(lat.size()) {}

template <typename F>
bool ClassEvaluator::memo(Memo &m, NodeId h, F &&compute) {
  if (m[h] < 0)
    m[h] = compute() ? 1 : 0;
  return m[h] == 1;
}

std::vector<NodeId> const &ClassEvaluator::normal_subgroups(NodeId h) {
  if (!normals_[h])
    normals_[h] = mspg::normal_subgroups(*lat_, h);
  return *normals_[h];
}

ElementSet const &ClassEvaluator::p_subnormal_set(NodeId h) {
  if (!p_subnormal_[h]) {
    ElementSet seen(lat_->size());
    seen.insert(h);
    std::vector<NodeId> stack{h};
    while (!stack.empty()) {
      auto k = stack.back();
      stack.pop_back();
      for (auto down : lat_->prime_index_down(k)) {
        if (!seen.contains(down)) {
          seen.insert(down);
          stack.push_back(down);
        }
      }
    }
    p_subnormal_[h] = std::move(seen);
  }
  return *p_subnormal_[h];
}

bool ClassEvaluator::is_soluble(NodeId h) {
  return memo(soluble_, h, [&] { return mspg::is_soluble(*lat_, h); });
}

bool ClassEvaluator::is_nilpotent(NodeId h) {
  return memo(nilpotent_, h, [&] { return mspg::is_nilpotent(*lat_, h); });
}

bool ClassEvaluator::is_metanilpotent(NodeId h) {
  return memo(metanilpotent_, h, [&] {
    return is_quotient_nilpotent(*lat_, h, fitting(*lat_, h));
  });
}

bool ClassEvaluator::is_supersoluble(NodeId h) {
  return memo(supersoluble_, h, [&] {
    auto const &normals = normal_subgroups(h);
    // chief series: canonically first normal subgroup above each term
    NodeId current = lat_->trivial();
    while (current != h) {
      auto it = std::find_if(normals.begin(), normals.end(), [&](NodeId k) {
        return k != current && lat_->contains(k, current);
      });
      if (!is_prime(lat_->order(*it) / lat_->order(current)))
        return false;
      current = *it;
    }
    return true;
  });
}

bool ClassEvaluator::is_p_closed(NodeId h, std::uint64_t p) {
  auto &m = p_closed_[p];
  if (m.empty())
    m.assign(lat_->size(), -1);
  return memo(m, h, [&] {
    return mspg::is_normal(*lat_, h, sylow_subgroup(*lat_, h, p));
  });
}

bool ClassEvaluator::is_p_nilpotent(NodeId h, std::uint64_t p) {
  if (!is_prime(p))
    throw PreconditionError(std::to_string(p) + " is not prime");
  auto &m = p_nilpotent_[p];
  if (m.empty())
    m.assign(lat_->size(), -1);
  return memo(m, h, [&] {
    auto const target = lat_->order(h) / p_part(lat_->order(h), p);
    auto const &normals = normal_subgroups(h);
    return std::any_of(normals.begin(), normals.end(),
                       [&](NodeId k) { return lat_->order(k) == target; });
  });
}

bool ClassEvaluator::has_tower(NodeId h) {
  return memo(tower_, h, [&] {
    auto primes = prime_divisors(lat_->order(h));
    std::reverse(primes.begin(), primes.end());
    auto const &normals = normal_subgroups(h);
    std::vector<std::uint64_t> prefix;
    for (auto p : primes) {
      prefix.push_back(p);
      auto const target = pi_part(lat_->order(h), prefix);
      if (std::none_of(normals.begin(), normals.end(),
                       [&](NodeId k) { return lat_->order(k) == target; }))
        return false;
    }
    return true;
  });
}

bool ClassEvaluator::is_wU(NodeId h) {
  return memo(wu_, h, [&] {
    auto const &sub = p_subnormal_set(h);
    for (auto p : prime_divisors(lat_->order(h))) {
      for (auto s : sylow_nodes(*lat_, h, p)) {
        if (!sub.contains(s))
          return false;
      }
    }
    return true;
  });
}

bool ClassEvaluator::is_wU_one_per_prime(NodeId h) {
  auto const &sub = p_subnormal_set(h);
  for (auto p : prime_divisors(lat_->order(h))) {
    if (!sub.contains(sylow_subgroup(*lat_, h, p)))
      return false;
  }
  return true;
}

bool ClassEvaluator::is_vU(NodeId h) {
  return memo(vu_, h, [&] {
    auto const &sub = p_subnormal_set(h);
    for (auto k : lat_->subgroups_of(h)) {
      if (is_primary_cyclic(k) && !sub.contains(k))
        return false;
    }
    return true;
  });
}

bool ClassEvaluator::is_biprimary(NodeId h) const {
  return prime_divisors(lat_->order(h)).size() == 2;
}

bool ClassEvaluator::is_primary_cyclic(NodeId h) {
  return memo(primary_cyclic_, h, [&] {
    return is_prime_power(lat_->order(h)) && is_cyclic(*lat_, h);
  });
}

WUCharacterization ClassEvaluator::wU_characterization(NodeId h) {
  WUCharacterization result;
  result.tower = has_tower(h);
  result.metanilpotent_subgroups_supersoluble = true;
  result.biprimary_subgroups_supersoluble = true;
  for (auto k : lat_->subgroups_of(h)) {
    if (result.metanilpotent_subgroups_supersoluble && is_metanilpotent(k) &&
        !is_supersoluble(k))
      result.metanilpotent_subgroups_supersoluble = false;
    if (result.biprimary_subgroups_supersoluble && is_biprimary(k) && !is_supersoluble(k))
      result.biprimary_subgroups_supersoluble = false;
  }
  return result;
}

bool ClassEvaluator::vU_characterization(NodeId h) {
  if (!has_tower(h))
    return false;
  for (auto k : lat_->subgroups_of(h)) {
    if (!is_biprimary(k) || is_supersoluble(k))
      continue;
    bool cyclic_sylow = false;
    for (auto p : prime_divisors(lat_->order(k))) {
      if (is_cyclic(*lat_, sylow_subgroup(*lat_, k, p)))
        cyclic_sylow = true;
    }
    if (cyclic_sylow)
      return false;
  }
  return true;
}

bool ClassEvaluator::in_class(NodeId h, ClassId c) {
  switch (c.tag) {
    case ClassTag::kSoluble:
      return is_soluble(h);
    case ClassTag::kNilpotent:
      return is_nilpotent(h);
    case ClassTag::kMetanilpotent:
      return is_metanilpotent(h);
    case ClassTag::kSupersoluble:
      return is_supersoluble(h);
    case ClassTag::kWU:
      return is_wU(h);
    case ClassTag::kVU:
      return is_vU(h);
    case ClassTag::kTowerD:
      return has_tower(h);
    case ClassTag::kPClosed:
      return is_p_closed(h, c.p);
    case ClassTag::kPNilpotent:
      return is_p_nilpotent(h, c.p);
  }
  return false;
}

// Group-level predicates

namespace {

std::string group_key(Group const &g) {
  std::string key = std::to_string(g.degree()) + "|";
  for (auto const &x : g.generators())
    key += to_cycles(x) + ";";
  return key;
}

std::mutex memo_mutex;
std::unordered_map<std::string, bool> class_memo;

}  // namespace

bool in_class(Group const &g, ClassId c) {
  auto key = group_key(g) + c.name();
  {
    std::lock_guard lock(memo_mutex);
    if (auto it = class_memo.find(key); it != class_memo.end())
      return it->second;
  }
  SubgroupLattice lat(g);
  ClassEvaluator eval(lat);
  bool value = eval.in_class(lat.top(), c);
  std::lock_guard lock(memo_mutex);
  class_memo.emplace(std::move(key), value);
  return value;
}

bool is_supersoluble(Group const &g) { return in_class(g, kClassU); }
bool is_p_closed(Group const &g, std::uint64_t p) {
  if (!is_prime(p))
    throw PreconditionError(std::to_string(p) + " is not prime");
  return in_class(g, ClassId{ClassTag::kPClosed, p});
}
bool is_p_nilpotent(Group const &g, std::uint64_t p) {
  if (!is_prime(p))
    throw PreconditionError(std::to_string(p) + " is not prime");
  return in_class(g, ClassId{ClassTag::kPNilpotent, p});
}
bool is_wU(Group const &g) { return in_class(g, kClassWU); }
bool is_vU(Group const &g) { return in_class(g, kClassVU); }
bool is_metanilpotent(Group const &g) { return in_class(g, ClassId{ClassTag::kMetanilpotent}); }
bool is_biprimary(Group const &g) { return prime_divisors(g.order()).size() == 2; }

bool is_primary_cyclic(Group const &g) {
  SubgroupLattice lat(g);
  ClassEvaluator eval(lat);
  return eval.is_primary_cyclic(lat.top());
}

WUCharacterization wU_characterization(Group const &g) {
  SubgroupLattice lat(g);
  ClassEvaluator eval(lat);
  return eval.wU_characterization(lat.top());
}

bool vU_characterization(Group const &g) {
  SubgroupLattice lat(g);
  ClassEvaluator eval(lat);
  return eval.vU_characterization(lat.top());
}

PSubnormalResult is_P_subnormal(Group const &g, Group const &h) {
  SubgroupLattice lat(g);
  return is_P_subnormal(lat, lat.top(), lat.node_of(h));
}

}  // namespace mspg
