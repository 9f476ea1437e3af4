#include "sigma/partition.hpp"

#include <algorithm>
#include <sstream>

#include "sigma/errors.hpp"

namespace sigma {

namespace {

void canonicalize(std::vector<PrimeVec> &blocks) {
  for (auto &b : blocks)
    std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end(),
            [](PrimeVec const &a, PrimeVec const &b) { return a[0] < b[0]; });
}

} // namespace

SigmaPartition::SigmaPartition(std::vector<PrimeVec> blocks)
    : blocks_(std::move(blocks)) {
  for (auto &b : blocks_) {
    if (b.empty())
      throw DomainError("partition block is empty");
    for (auto p : b)
      if (!is_prime(p))
        throw DomainError("partition entry " + std::to_string(p) +
                          " is not prime");
  }
  canonicalize(blocks_);
  for (auto const &b : blocks_)
    for (auto p : b) {
      if (contains_prime(covered_, p))
        throw DomainError("prime " + std::to_string(p) +
                          " appears in two partition blocks");
      covered_.push_back(p);
    }
  std::sort(covered_.begin(), covered_.end());
}

std::size_t SigmaPartition::block_index_of(std::uint64_t p) const {
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    if (contains_prime(blocks_[i], p))
      return i;
  throw DomainError("prime " + std::to_string(p) +
                    " is not covered by the partition");
}

std::vector<std::size_t> SigmaPartition::sigma_of(std::uint64_t n) const {
  std::vector<std::size_t> out;
  for (auto p : prime_support(n)) {
    std::size_t i = block_index_of(p);
    if (std::find(out.begin(), out.end(), i) == out.end())
      out.push_back(i);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool SigmaPartition::sigma_coprime(std::uint64_t a, std::uint64_t b) const {
  auto sa = sigma_of(a);
  auto sb = sigma_of(b);
  std::vector<std::size_t> both;
  std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(),
                        std::back_inserter(both));
  return both.empty();
}

std::string SigmaPartition::to_literal() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i)
      os << '|';
    for (std::size_t j = 0; j < blocks_[i].size(); ++j) {
      if (j)
        os << ',';
      os << blocks_[i][j];
    }
  }
  return os.str();
}

SigmaPartition SigmaPartition::parse(std::string const &literal) {
  std::vector<PrimeVec> blocks;
  PrimeVec cur;
  std::uint64_t value = 0;
  bool in_number = false;
  auto end_number = [&] {
    if (!in_number)
      throw ParseError("malformed partition literal \"" + literal + "\"");
    cur.push_back(value);
    value = 0;
    in_number = false;
  };
  for (char c : literal) {
    if (c >= '0' && c <= '9') {
      value = value * 10 + static_cast<std::uint64_t>(c - '0');
      in_number = true;
    } else if (c == ',') {
      end_number();
    } else if (c == '|') {
      end_number();
      blocks.push_back(std::move(cur));
      cur.clear();
    } else if (c != ' ') {
      throw ParseError(std::string("unexpected character '") + c +
                       "' in partition literal");
    }
  }
  end_number();
  blocks.push_back(std::move(cur));
  return SigmaPartition(std::move(blocks));
}

SigmaPartition SigmaPartition::singletons(PrimeVec const &primes) {
  std::vector<PrimeVec> blocks;
  for (auto p : primes)
    blocks.push_back({p});
  return SigmaPartition(std::move(blocks));
}

SigmaPartition SigmaPartition::two_block(PrimeVec const &pi,
                                         PrimeVec const &primes) {
  std::vector<PrimeVec> blocks;
  PrimeVec inside = set_intersection(pi, primes);
  PrimeVec outside = set_difference(primes, pi);
  if (!inside.empty())
    blocks.push_back(std::move(inside));
  if (!outside.empty())
    blocks.push_back(std::move(outside));
  if (blocks.empty())
    throw DomainError("two-block partition of an empty prime set");
  return SigmaPartition(std::move(blocks));
}

std::vector<SigmaPartition> all_partitions(PrimeVec const &primes,
                                           Limits const &limits) {
  if (primes.size() > static_cast<std::size_t>(limits.partition_primes_cap))
    throw ResourceError("prime set of size " + std::to_string(primes.size()) +
                        " exceeds partition cap " +
                        std::to_string(limits.partition_primes_cap));
  std::vector<SigmaPartition> out;
  if (primes.empty())
    return out;
  std::size_t n = primes.size();
  // restricted growth strings: a[0] = 0, a[i] <= max(a[0..i-1]) + 1
  std::vector<std::size_t> a(n, 0);
  for (;;) {
    std::size_t nblocks = *std::max_element(a.begin(), a.end()) + 1;
    std::vector<PrimeVec> blocks(nblocks);
    for (std::size_t i = 0; i < n; ++i)
      blocks[a[i]].push_back(primes[i]);
    out.emplace_back(std::move(blocks));
    // next string, counting from the tail
    std::size_t i = n;
    while (i-- > 1) {
      std::size_t cap = *std::max_element(a.begin(), a.begin() + i) + 1;
      if (a[i] < cap) {
        ++a[i];
        std::fill(a.begin() + i + 1, a.end(), 0);
        break;
      }
      a[i] = 0;
      if (i == 1)
        return out;
    }
    if (n == 1)
      return out;
  }
}

// --- Pi -------------------------------------------------------------------

Pi::Pi(SigmaPartition sigma, std::vector<std::size_t> block_indices)
    : sigma_(std::move(sigma)), indices_(std::move(block_indices)) {
  std::sort(indices_.begin(), indices_.end());
  indices_.erase(std::unique(indices_.begin(), indices_.end()),
                 indices_.end());
  for (auto i : indices_)
    if (i >= sigma_.block_count())
      throw DomainError("block index " + std::to_string(i) +
                        " out of range for the partition");
}

bool Pi::has_block(std::size_t i) const {
  return std::binary_search(indices_.begin(), indices_.end(), i);
}

PrimeVec Pi::primes() const {
  PrimeVec out;
  for (auto i : indices_)
    out = set_union(out, sigma_.block(i));
  return out;
}

Pi Pi::complement() const {
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < sigma_.block_count(); ++i)
    if (!has_block(i))
      rest.push_back(i);
  return Pi(sigma_, std::move(rest));
}

bool Pi::is_pi_number(std::uint64_t n) const {
  for (auto p : prime_support(n))
    if (!has_block(sigma_.block_index_of(p)))
      return false;
  return true;
}

bool Pi::is_pi_prime_number(std::uint64_t n) const {
  for (auto p : prime_support(n))
    if (has_block(sigma_.block_index_of(p)))
      return false;
  return true;
}

std::vector<std::size_t> Pi::blocks_meeting(std::uint64_t n) const {
  std::vector<std::size_t> out;
  for (auto b : sigma_.sigma_of(n))
    if (has_block(b))
      out.push_back(b);
  return out;
}

std::string Pi::to_literal() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < indices_.size(); ++k) {
    if (k)
      os << '|';
    auto const &b = sigma_.block(indices_[k]);
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (j)
        os << ',';
      os << b[j];
    }
  }
  return os.str();
}

Pi Pi::parse(SigmaPartition sigma, std::string const &literal) {
  SigmaPartition wanted = SigmaPartition::parse(literal);
  std::vector<std::size_t> indices;
  for (auto const &b : wanted.blocks()) {
    std::size_t i = sigma.block_index_of(b[0]);
    if (sigma.block(i) != b)
      throw DomainError("\"" + literal +
                        "\" lists a block that is not a block of the partition");
    indices.push_back(i);
  }
  return Pi(std::move(sigma), std::move(indices));
}

Pi Pi::all_blocks(SigmaPartition sigma) {
  std::vector<std::size_t> all(sigma.block_count());
  for (std::size_t i = 0; i < all.size(); ++i)
    all[i] = i;
  return Pi(std::move(sigma), std::move(all));
}

} // namespace sigma
