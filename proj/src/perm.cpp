#include "sigma/perm.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "sigma/errors.hpp"

namespace sigma {

Permutation::Permutation(unsigned n) : images_(n) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images)
    : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto v : images_) {
    if (v >= images_.size() || seen[v])
      throw DomainError("image list is not a bijection");
    seen[v] = true;
  }
}

bool Permutation::is_identity() const {
  for (unsigned i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

Permutation Permutation::operator*(Permutation const &o) const {
  if (degree() != o.degree())
    throw DomainError("degree mismatch in permutation product");
  std::vector<Point> out(images_.size());
  for (unsigned i = 0; i < images_.size(); ++i)
    out[i] = o.images_[images_[i]];
  Permutation p(degree());
  p.images_ = std::move(out);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<Point> out(images_.size());
  for (unsigned i = 0; i < images_.size(); ++i)
    out[images_[i]] = static_cast<Point>(i);
  Permutation p(degree());
  p.images_ = std::move(out);
  return p;
}

Permutation Permutation::conjugated_by(Permutation const &x) const {
  return x.inverse() * (*this) * x;
}

std::uint64_t Permutation::order() const {
  std::vector<bool> seen(images_.size(), false);
  std::uint64_t ord = 1;
  for (unsigned i = 0; i < images_.size(); ++i) {
    if (seen[i])
      continue;
    std::uint64_t len = 0;
    unsigned j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = images_[j];
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::string Permutation::to_cycles() const {
  std::ostringstream out;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (unsigned i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i)
      continue;
    any = true;
    out << '(' << i;
    seen[i] = true;
    unsigned j = images_[i];
    while (j != i) {
      out << ' ' << j;
      seen[j] = true;
      j = images_[j];
    }
    out << ')';
  }
  if (!any)
    return "()";
  return out.str();
}

Permutation Permutation::from_cycles(std::string const &text,
                                     unsigned degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);

  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };

  skip_ws();
  bool any_cycle = false;
  while (pos < text.size()) {
    if (text[pos] != '(')
      throw ParseError("expected '(' at position " + std::to_string(pos) +
                       " in cycle string: " + text);
    ++pos;
    std::vector<unsigned> cycle;
    skip_ws();
    while (pos < text.size() && text[pos] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw ParseError("expected point at position " + std::to_string(pos) +
                         " in cycle string: " + text);
      unsigned v = 0;
      while (pos < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + static_cast<unsigned>(text[pos] - '0');
        ++pos;
      }
      if (v >= degree)
        throw ParseError("point " + std::to_string(v) +
                         " out of range for degree " + std::to_string(degree));
      if (used[v])
        throw ParseError("point " + std::to_string(v) +
                         " repeated in cycle string");
      used[v] = true;
      cycle.push_back(v);
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        skip_ws();
      }
    }
    if (pos == text.size())
      throw ParseError("unterminated cycle in: " + text);
    ++pos; // ')'
    any_cycle = true;
    for (std::size_t k = 0; k + 1 < cycle.size(); ++k)
      images[cycle[k]] = static_cast<Point>(cycle[k + 1]);
    if (cycle.size() > 1)
      images[cycle.back()] = static_cast<Point>(cycle.front());
    skip_ws();
  }
  if (!any_cycle)
    throw ParseError("no cycles found in: " + text);
  return Permutation(std::move(images));
}

} // namespace sigma
