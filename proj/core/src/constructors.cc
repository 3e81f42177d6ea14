#include "mspg/constructors.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

#include "mspg/error.h"
#include "mspg/group_table.h"
#include "mspg/number_theory.h"

namespace mspg {

namespace {

Permutation cycle_on(std::size_t degree, std::size_t first, std::size_t length) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  for (std::size_t i = 0; i < length; ++i)
    images[first + i] = static_cast<Point>(first + (i + 1) % length);
  return Permutation::from_images_unchecked(std::move(images));
}

Permutation transposition(std::size_t degree, Point a, Point b) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::swap(images[a], images[b]);
  return Permutation::from_images_unchecked(std::move(images));
}

Permutation shifted(Permutation const &p, std::size_t offset, std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  for (std::size_t i = 0; i < p.degree(); ++i)
    images[offset + i] = static_cast<Point>(offset + p[static_cast<Point>(i)]);
  return Permutation::from_images_unchecked(std::move(images));
}

Permutation power(Permutation const &x, std::uint64_t k) {
  Permutation result(x.degree());
  for (std::uint64_t i = 0; i < k; ++i)
    result = result * x;
  return result;
}

std::string_view trim(std::string_view s) {
  auto const ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos)
    return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::string file_name_for(std::string const &name) {
  std::string out;
  for (char c : name) {
    bool keep = std::isalnum(static_cast<unsigned char>(c)) || c == '^' || c == '-' || c == '_';
    out += keep ? c : '_';
  }
  return out + ".gens";
}

}  // namespace

Group cyclic(std::uint64_t n) {
  if (n < 1)
    throw PreconditionError("cyclic: n must be positive");
  if (n == 1)
    return Group::trivial(1);
  return Group(n, {cycle_on(n, 0, n)});
}

Group elementary_abelian(std::uint64_t p, std::uint64_t t) {
  if (!is_prime(p))
    throw PreconditionError("elementary_abelian: " + std::to_string(p) + " is not prime");
  if (t < 1)
    throw PreconditionError("elementary_abelian: rank must be positive");
  std::size_t degree = p * t;
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < t; ++i)
    gens.push_back(cycle_on(degree, i * p, p));
  return Group(degree, std::move(gens));
}

Group dihedral(std::uint64_t m) {
  if (m < 1)
    throw PreconditionError("dihedral: m must be positive");
  if (m == 1)
    return cyclic(2);
  if (m == 2)
    return elementary_abelian(2, 2);
  std::vector<Point> reflection(m);
  for (std::size_t i = 0; i < m; ++i)
    reflection[i] = static_cast<Point>((m - i) % m);
  return Group(m, {cycle_on(m, 0, m), Permutation(std::move(reflection))});
}

Group symmetric(std::uint64_t n) {
  if (n < 1)
    throw PreconditionError("symmetric: n must be positive");
  if (n == 1)
    return Group::trivial(1);
  if (n == 2)
    return Group(2, {transposition(2, 0, 1)});
  return Group(n, {cycle_on(n, 0, n), transposition(n, 0, 1)});
}

Group alternating(std::uint64_t n) {
  if (n < 1)
    throw PreconditionError("alternating: n must be positive");
  std::vector<Permutation> gens;
  for (std::size_t i = 2; i < n; ++i)
    gens.push_back(transposition(n, 0, 1) * transposition(n, 0, static_cast<Point>(i)));
  return Group(n, std::move(gens));
}

Group quaternion8() {
  // element index = unit + 4 * sign, units 1, i, j, k
  static constexpr int kUnit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int kSign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  auto mul = [](int a, int b) {
    int ua = a % 4, ub = b % 4;
    int sign = (a / 4 + b / 4 + kSign[ua][ub]) % 2;
    return kUnit[ua][ub] + 4 * sign;
  };
  auto right = [&](int g) {
    std::vector<Point> images(8);
    for (int x = 0; x < 8; ++x)
      images[x] = static_cast<Point>(mul(x, g));
    return Permutation(std::move(images));
  };
  return Group(8, {right(1), right(2)});
}

Group direct_product(Group const &g, Group const &h) {
  std::size_t degree = g.degree() + h.degree();
  std::vector<Permutation> gens;
  for (auto const &x : g.generators())
    gens.push_back(shifted(x, 0, degree));
  for (auto const &x : h.generators())
    gens.push_back(shifted(x, g.degree(), degree));
  return Group(degree, std::move(gens));
}

SemidirectProduct semidirect_product(ActionSpec const &spec) {
  GroupTable n(spec.normal_part);
  GroupTable h(spec.acting_part);
  auto const &n_gens = spec.normal_part.generators();
  auto const &h_gens = spec.acting_part.generators();
  if (spec.action.size() != h_gens.size())
    throw PreconditionError("semidirect_product: one action per acting generator required");

  // extend each generator assignment to a map on the elements of N
  std::vector<Permutation> sigma;  // sigma[j] as a permutation of N's element ids
  for (std::size_t j = 0; j < h_gens.size(); ++j) {
    auto const &images = spec.action[j];
    if (images.size() != n_gens.size())
      throw PreconditionError("semidirect_product: action must give one image per generator");
    std::vector<ElementId> image_ids;
    for (auto const &x : images) {
      auto id = n.find(x);
      if (!id)
        throw PreconditionError("semidirect_product: action image outside the normal part");
      image_ids.push_back(*id);
    }
    std::vector<ElementId> gen_ids;
    for (auto const &x : n_gens)
      gen_ids.push_back(n.id(x));

    std::vector<std::int64_t> map(n.size(), -1);
    map[GroupTable::identity()] = GroupTable::identity();
    std::vector<ElementId> queue{GroupTable::identity()};
    for (std::size_t q = 0; q < queue.size(); ++q) {
      auto x = queue[q];
      for (std::size_t k = 0; k < gen_ids.size(); ++k) {
        auto y = n.mul(x, gen_ids[k]);
        auto fy = n.mul(static_cast<ElementId>(map[x]), image_ids[k]);
        if (map[y] < 0) {
          map[y] = fy;
          queue.push_back(y);
        } else if (map[y] != fy) {
          throw PreconditionError("semidirect_product: action " + std::to_string(j) +
                                  " is not a homomorphism");
        }
      }
    }
    // homomorphic on generators from every element, so a homomorphism;
    // bijective iff injective
    std::vector<Point> images_of(n.size());
    std::vector<bool> hit(n.size(), false);
    for (std::size_t x = 0; x < n.size(); ++x) {
      if (hit[map[x]])
        throw PreconditionError("semidirect_product: action " + std::to_string(j) +
                                " is not bijective");
      hit[map[x]] = true;
      images_of[x] = static_cast<Point>(map[x]);
    }
    sigma.push_back(Permutation::from_images_unchecked(std::move(images_of)));
  }

  // the map h_j -> sigma_j must extend to a homomorphism H -> Aut(N): the
  // diagonal subgroup {(h, sigma(h))} has order |H| exactly then
  {
    std::size_t degree = spec.acting_part.degree() + n.size();
    std::vector<Permutation> diagonal;
    for (std::size_t j = 0; j < h_gens.size(); ++j) {
      auto left = shifted(h_gens[j], 0, degree);
      auto right = shifted(sigma[j], spec.acting_part.degree(), degree);
      diagonal.push_back(left * right);
    }
    if (Group(degree, std::move(diagonal)).order() != h.size())
      throw PreconditionError("semidirect_product: action does not respect the relations of "
                              "the acting part");
  }

  std::vector<ElementId> h_gen_ids;
  for (auto const &x : h_gens)
    h_gen_ids.push_back(h.id(x));

  std::size_t const nn = n.size();
  std::size_t const degree = h.size() * nn;
  auto point = [nn](std::size_t hi, std::size_t ni) { return static_cast<Point>(hi * nn + ni); };

  std::vector<Permutation> normal_gens;
  for (auto const &x : n_gens) {
    auto xi = n.id(x);
    std::vector<Point> images(degree);
    for (std::size_t hi = 0; hi < h.size(); ++hi) {
      for (std::size_t ni = 0; ni < nn; ++ni)
        images[point(hi, ni)] = point(hi, n.mul(static_cast<ElementId>(ni), xi));
    }
    normal_gens.push_back(Permutation::from_images_unchecked(std::move(images)));
  }
  std::vector<Permutation> acting_gens;
  for (std::size_t j = 0; j < h_gen_ids.size(); ++j) {
    std::vector<Point> images(degree);
    for (std::size_t hi = 0; hi < h.size(); ++hi) {
      for (std::size_t ni = 0; ni < nn; ++ni)
        images[point(hi, ni)] =
            point(h.mul(static_cast<ElementId>(hi), h_gen_ids[j]), sigma[j][static_cast<Point>(ni)]);
    }
    acting_gens.push_back(Permutation::from_images_unchecked(std::move(images)));
  }

  auto all = normal_gens;
  all.insert(all.end(), acting_gens.begin(), acting_gens.end());
  return SemidirectProduct{Group(degree, std::move(all)), Group(degree, std::move(normal_gens)),
                           Group(degree, std::move(acting_gens))};
}

SemidirectProduct cyclic_semidirect(std::uint64_t n, std::uint64_t m, std::uint64_t r) {
  auto normal = cyclic(n);
  auto acting = cyclic(m);
  std::vector<std::vector<Permutation>> action;
  for (std::size_t j = 0; j < acting.generators().size(); ++j) {
    action.emplace_back();
    for (auto const &x : normal.generators())
      action.back().push_back(power(x, r));
  }
  return semidirect_product(ActionSpec{normal, acting, std::move(action)});
}

Permutation const &Quotient::project(Permutation const &g) const {
  auto it = std::lower_bound(domain.begin(), domain.end(), g);
  if (it == domain.end() || *it != g)
    throw PreconditionError("project: element not in the group");
  return image[static_cast<std::size_t>(it - domain.begin())];
}

Quotient quotient_as_group(Group const &g, Group const &n) {
  if (n.degree() != g.degree() || !g.contains_group(n))
    throw PreconditionError("quotient: N is not a subgroup of G");
  for (auto const &x : n.generators()) {
    for (auto const &y : g.generators()) {
      if (!n.contains(conjugate(x, y)))
        throw PreconditionError("quotient: N is not normal in G");
    }
  }
  GroupTable t(g);
  auto n_elements = n.elements();
  std::vector<ElementId> n_ids;
  for (auto const &x : n_elements)
    n_ids.push_back(t.id(x));

  std::vector<std::int64_t> label(t.size(), -1);
  std::vector<ElementId> reps;
  for (ElementId x = 0; x < t.size(); ++x) {
    if (label[x] >= 0)
      continue;
    for (auto k : n_ids)
      label[t.mul(k, x)] = static_cast<std::int64_t>(reps.size());
    reps.push_back(x);
  }

  auto action = [&](ElementId x) {
    std::vector<Point> images(reps.size());
    for (std::size_t c = 0; c < reps.size(); ++c)
      images[c] = static_cast<Point>(label[t.mul(reps[c], x)]);
    return Permutation::from_images_unchecked(std::move(images));
  };

  Quotient q;
  q.domain = t.elements();
  for (ElementId x = 0; x < t.size(); ++x)
    q.image.push_back(action(x));
  std::vector<Permutation> gens;
  for (auto const &x : g.generators())
    gens.push_back(action(t.id(x)));
  q.group = Group(reps.size(), std::move(gens));
  return q;
}

std::map<std::uint64_t, std::uint64_t> element_order_statistics(Group const &g) {
  std::map<std::uint64_t, std::uint64_t> stats;
  for (auto const &x : g.elements())
    ++stats[x.order()];
  return stats;
}

std::string Recipe::to_string() const {
  if (family == "file")
    return "file(" + path + ")";
  std::string out = family + "(";
  bool first = true;
  for (auto p : params) {
    out += (first ? "" : ", ") + std::to_string(p);
    first = false;
  }
  for (auto const &f : factors) {
    out += (first ? "" : ", ") + f.to_string();
    first = false;
  }
  return out + ")";
}

namespace {

class RecipeParser {
 public:
  explicit RecipeParser(std::string_view text) : text_(text) {}

  Recipe parse_all() {
    auto r = parse_one();
    skip_space();
    if (pos_ != text_.size())
      fail("trailing characters");
    return r;
  }

 private:
  [[noreturn]] void fail(std::string const &what) const {
    throw ParseError("recipe '" + std::string(text_) + "': " + what + " at column " +
                     std::to_string(pos_ + 1));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Recipe parse_one() {
    skip_space();
    auto start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    Recipe r;
    r.family = std::string(text_.substr(start, pos_ - start));
    if (r.family.empty())
      fail("expected a family name");
    if (!eat('('))
      fail("expected '('");
    if (r.family == "file") {
      auto close = text_.rfind(')');
      if (close == std::string_view::npos || close < pos_)
        fail("expected ')'");
      r.path = std::string(text_.substr(pos_, close - pos_));
      pos_ = close + 1;
      return r;
    }
    if (eat(')'))
      return r;
    do {
      skip_space();
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        std::uint64_t v = 0;
        auto [end, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), v);
        if (ec != std::errc())
          fail("bad number");
        pos_ = static_cast<std::size_t>(end - text_.data());
        r.params.push_back(v);
      } else {
        r.factors.push_back(parse_one());
      }
    } while (eat(','));
    if (!eat(')'))
      fail("expected ')'");
    return r;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Recipe Recipe::parse(std::string_view text) { return RecipeParser(text).parse_all(); }

Group Recipe::build() const {
  auto need = [&](std::size_t k) {
    if (params.size() != k)
      throw PreconditionError("recipe " + family + " expects " + std::to_string(k) +
                              " parameters");
  };
  if (family == "cyclic") {
    need(1);
    return cyclic(params[0]);
  }
  if (family == "elementary_abelian") {
    need(2);
    return elementary_abelian(params[0], params[1]);
  }
  if (family == "dihedral") {
    need(1);
    return dihedral(params[0]);
  }
  if (family == "symmetric") {
    need(1);
    return symmetric(params[0]);
  }
  if (family == "alternating") {
    need(1);
    return alternating(params[0]);
  }
  if (family == "quaternion8") {
    need(0);
    return quaternion8();
  }
  if (family == "cyclic_semidirect") {
    need(3);
    return cyclic_semidirect(params[0], params[1], params[2]).group;
  }
  if (family == "direct_product") {
    if (factors.size() != 2)
      throw PreconditionError("recipe direct_product expects two factors");
    return direct_product(factors[0].build(), factors[1].build());
  }
  if (family == "file")
    return load_group(path).group;
  throw PreconditionError("unknown recipe family '" + family + "'");
}

std::vector<CatalogEntry> standard_catalog(std::uint64_t max_order) {
  if (max_order < 1)
    throw PreconditionError("standard_catalog: max_order must be positive");

  struct Base {
    std::string name;
    std::uint64_t order;
    Recipe recipe;
  };
  std::vector<Base> base;
  auto add = [&](std::string name, std::uint64_t order, Recipe recipe) {
    if (order <= max_order)
      base.push_back({std::move(name), order, std::move(recipe)});
  };

  for (std::uint64_t n = 1; n <= max_order; ++n)
    add("C" + std::to_string(n), n, {"cyclic", {n}, {}, {}});
  for (std::uint64_t m = 3; 2 * m <= max_order; ++m)
    add("D" + std::to_string(2 * m), 2 * m, {"dihedral", {m}, {}, {}});
  for (std::uint64_t p = 2; p * p <= max_order; ++p) {
    if (!is_prime(p))
      continue;
    std::uint64_t order = p * p;
    for (std::uint64_t t = 2; order <= max_order; ++t, order *= p)
      add("E" + std::to_string(p) + "^" + std::to_string(t), order,
          {"elementary_abelian", {p, t}, {}, {}});
  }
  add("S3", 6, {"symmetric", {3}, {}, {}});
  add("S4", 24, {"symmetric", {4}, {}, {}});
  add("A4", 12, {"alternating", {4}, {}, {}});
  add("A5", 60, {"alternating", {5}, {}, {}});
  add("Q8", 8, {"quaternion8", {}, {}, {}});
  add("C5:C4", 20, {"cyclic_semidirect", {5, 4, 2}, {}, {}});
  add("C7:C3", 21, {"cyclic_semidirect", {7, 3, 2}, {}, {}});
  add("C7:C6", 42, {"cyclic_semidirect", {7, 6, 3}, {}, {}});
  add("C3:C4", 12, {"cyclic_semidirect", {3, 4, 2}, {}, {}});

  std::vector<Base> all = base;
  for (std::size_t i = 0; i < base.size(); ++i) {
    for (std::size_t j = i; j < base.size(); ++j) {
      auto const &x = base[i];
      auto const &y = base[j];
      if (x.order < 2 || y.order < 2 || x.order * y.order > max_order)
        continue;
      all.push_back({x.name + "x" + y.name, x.order * y.order,
                     Recipe{"direct_product", {}, {x.recipe, y.recipe}, {}}});
    }
  }
  std::stable_sort(all.begin(), all.end(),
                   [](Base const &a, Base const &b) { return a.order < b.order; });

  std::vector<CatalogEntry> out;
  out.reserve(all.size());
  for (auto &b : all)
    out.push_back({b.name, b.recipe.build(), b.recipe});
  return out;
}

Group parse_group_text(std::string_view text) {
  std::optional<std::size_t> degree;
  std::vector<Permutation> gens;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos)
      end = text.size();
    auto line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty())
      continue;
    if (!degree) {
      if (!line.starts_with("degree"))
        throw ParseError("expected 'degree N'", line_no);
      auto rest = trim(line.substr(6));
      std::size_t value = 0;
      auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
      if (ec != std::errc() || ptr != rest.data() + rest.size() || value < 1 ||
          rest.empty())
        throw ParseError("expected a positive degree after 'degree'", line_no);
      degree = value;
      continue;
    }
    try {
      gens.push_back(parse_cycles(line, *degree));
    } catch (ParseError const &e) {
      throw ParseError(e.what(), line_no);
    }
  }
  if (!degree)
    throw ParseError("missing 'degree N' line", line_no ? line_no : 1);
  return Group(*degree, std::move(gens));
}

std::string format_group_text(CatalogEntry const &entry) {
  std::ostringstream out;
  out << "# " << entry.name << "\n";
  if (!entry.provenance.family.empty())
    out << "# " << entry.provenance.to_string() << "\n";
  out << "# order " << entry.group.order() << "\n";
  out << "degree " << entry.group.degree() << "\n";
  for (auto const &g : entry.group.generators())
    out << to_cycles(g) << "\n";
  return out.str();
}

CatalogEntry load_group(std::filesystem::path const &path) {
  std::ifstream in(path);
  if (!in)
    throw IoError("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  Group g;
  try {
    g = parse_group_text(buffer.str());
  } catch (ParseError const &e) {
    throw ParseError(path.string() + (e.line() ? ":" + std::to_string(e.line()) : "") + ": " +
                         e.detail(),
                     e.line());
  }
  return CatalogEntry{path.stem().string(), std::move(g), Recipe{"file", {}, {}, path.string()}};
}

void save_group(CatalogEntry const &entry, std::filesystem::path const &path) {
  std::ofstream out(path);
  if (!out)
    throw IoError("cannot write " + path.string());
  out << format_group_text(entry);
  if (!out)
    throw IoError("write failed: " + path.string());
}

void write_catalog(std::vector<CatalogEntry> const &entries, std::filesystem::path const &dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec)
    throw IoError("cannot create " + dir.string() + ": " + ec.message());
  std::ofstream manifest(dir / "manifest.txt");
  if (!manifest)
    throw IoError("cannot write " + (dir / "manifest.txt").string());
  manifest << "# name\tfile\n";
  for (auto const &e : entries) {
    auto file = file_name_for(e.name);
    save_group(e, dir / file);
    manifest << e.name << "\t" << file << "\n";
  }
}

std::vector<CatalogEntry> load_manifest(std::filesystem::path const &manifest) {
  std::ifstream in(manifest);
  if (!in)
    throw IoError("cannot open " + manifest.string());
  std::vector<CatalogEntry> out;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty())
      continue;
    auto sep = line.find_first_of(" \t");
    if (sep == std::string_view::npos)
      throw ParseError(manifest.string() + ": expected 'name file'", line_no);
    std::string name(line.substr(0, sep));
    auto file = std::filesystem::path(std::string(trim(line.substr(sep))));
    auto entry = load_group(manifest.parent_path() / file);
    entry.name = std::move(name);
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace mspg
