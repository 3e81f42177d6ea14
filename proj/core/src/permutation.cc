#include "mspg/permutation.h"

#include <cctype>
#include <numeric>
#include <sstream>

#include "mspg/error.h"

namespace mspg {

namespace {

void check_degrees(Permutation const &p, Permutation const &q) {
  if (p.degree() != q.degree()) {
    throw DegreeMismatch("permutation degrees differ: " +
                         std::to_string(p.degree()) + " vs " +
                         std::to_string(q.degree()));
  }
}

}  // namespace

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto x : images_) {
    if (x >= images_.size() || seen[x])
      throw PreconditionError("image list is not a bijection");
    seen[x] = true;
  }
}

bool Permutation::is_identity() const noexcept {
  for (Point i = 0; i < images_.size(); ++i) {
    if (images_[i] != i)
      return false;
  }
  return true;
}

Point Permutation::first_moved() const noexcept {
  for (Point i = 0; i < images_.size(); ++i) {
    if (images_[i] != i)
      return i;
  }
  return static_cast<Point>(images_.size());
}

std::uint64_t Permutation::order() const {
  std::vector<bool> seen(images_.size(), false);
  std::uint64_t result = 1;
  for (Point i = 0; i < images_.size(); ++i) {
    if (seen[i])
      continue;
    std::uint64_t len = 0;
    for (Point j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

Permutation Permutation::operator*(Permutation const &rhs) const {
  return compose(*this, rhs);
}

std::size_t PermutationHash::operator()(Permutation const &p) const noexcept {
  // FNV-1a over the image sequence
  std::size_t h = 1469598103934665603ULL;
  for (auto x : p.images()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return h;
}

Permutation compose(Permutation const &p, Permutation const &q) {
  check_degrees(p, q);
  std::vector<Point> images(p.degree());
  for (Point i = 0; i < images.size(); ++i)
    images[i] = q[p[i]];
  return Permutation::from_images_unchecked(std::move(images));
}

Permutation inverse(Permutation const &p) {
  std::vector<Point> images(p.degree());
  for (Point i = 0; i < images.size(); ++i)
    images[p[i]] = i;
  return Permutation::from_images_unchecked(std::move(images));
}

Permutation conjugate(Permutation const &p, Permutation const &g) {
  check_degrees(p, g);
  // x^g maps g(i) to g(p(i))
  std::vector<Point> images(p.degree());
  for (Point i = 0; i < images.size(); ++i)
    images[g[i]] = g[p[i]];
  return Permutation::from_images_unchecked(std::move(images));
}

Permutation commutator(Permutation const &a, Permutation const &b) {
  check_degrees(a, b);
  return inverse(a) * inverse(b) * a * b;
}

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  Permutation result(degree);
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };

  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(')
      throw ParseError("expected '(' at column " + std::to_string(pos + 1));
    ++pos;

    std::vector<Point> cycle;
    for (;;) {
      skip_space();
      if (pos >= text.size())
        throw ParseError("unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw ParseError("unexpected character '" + std::string(1, text[pos]) +
                         "' at column " + std::to_string(pos + 1));
      std::uint64_t value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<std::uint64_t>(text[pos] - '0');
        if (value > degree)
          break;
        ++pos;
      }
      if (value < 1 || value > degree) {
        throw ParseError("point out of range 1.." + std::to_string(degree));
      }
      for (auto x : cycle) {
        if (x == value - 1)
          throw ParseError("point " + std::to_string(value) +
                           " repeated within a cycle");
      }
      cycle.push_back(static_cast<Point>(value - 1));
    }

    if (cycle.size() > 1) {
      std::vector<Point> images(degree);
      std::iota(images.begin(), images.end(), Point{0});
      for (std::size_t i = 0; i < cycle.size(); ++i)
        images[cycle[i]] = cycle[(i + 1) % cycle.size()];
      result = result * Permutation::from_images_unchecked(std::move(images));
    }
    skip_space();
  }
  return result;
}

std::string to_cycles(Permutation const &p) {
  std::ostringstream out;
  std::vector<bool> seen(p.degree(), false);
  for (Point i = 0; i < p.degree(); ++i) {
    if (seen[i] || p[i] == i)
      continue;
    out << '(';
    for (Point j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      if (j != i)
        out << ' ';
      out << j + 1;
    }
    out << ')';
  }
  std::string s = out.str();
  return s.empty() ? "()" : s;
}

}  // namespace mspg
