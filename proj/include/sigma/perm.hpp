#ifndef SIGMA_PERM_HPP
#define SIGMA_PERM_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace sigma {

// A permutation of {0, ..., n-1}, stored as its image list.  Products
// compose left to right: (a * b)[x] == b[a[x]], so conjugation reads
// a^x = x^-1 * a * x and orbits are right orbits throughout.
class Permutation {
public:
  using Point = std::uint16_t;

  // identity on n points
  explicit Permutation(unsigned n);

  // from an image list; throws DomainError unless it is a bijection
  explicit Permutation(std::vector<Point> images);

  unsigned degree() const { return static_cast<unsigned>(images_.size()); }

  Point operator[](unsigned x) const { return images_[x]; }

  bool is_identity() const;

  Permutation operator*(Permutation const &o) const;
  Permutation inverse() const;

  // x^-1 * (*this) * x
  Permutation conjugated_by(Permutation const &x) const;

  // multiplicative order (lcm of cycle lengths)
  std::uint64_t order() const;

  bool operator==(Permutation const &o) const { return images_ == o.images_; }
  bool operator!=(Permutation const &o) const { return images_ != o.images_; }
  bool operator<(Permutation const &o) const { return images_ < o.images_; }

  std::vector<Point> const &images() const { return images_; }

  // Disjoint cycle notation on 0-based points, e.g. "(0 1 2)(3 4)";
  // the identity prints as "()".
  std::string to_cycles() const;

  // Parses cycle notation.  Fixed points may be omitted; every point
  // mentioned must be < degree.
  static Permutation from_cycles(std::string const &text, unsigned degree);

  std::size_t hash() const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto v : images_) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }

private:
  std::vector<Point> images_;
};

struct PermHash {
  std::size_t operator()(Permutation const &p) const { return p.hash(); }
};

} // namespace sigma

#endif
