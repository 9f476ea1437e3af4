#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <string>

#include "sigma/errors.hpp"
#include "sigma/partition.hpp"

using namespace sigma;

TEST_CASE("all_partitions counts Bell numbers") {
  Limits lim; // partition_primes_cap = 4 by default
  // the empty partition has no literal form, so none is produced
  CHECK(all_partitions({}, lim).empty());
  CHECK(all_partitions({2}, lim).size() == 1);
  CHECK(all_partitions({2, 3}, lim).size() == 2);
  CHECK(all_partitions({2, 3, 5}, lim).size() == 5);
  CHECK(all_partitions({2, 3, 5, 7}, lim).size() == 15);
  CHECK_THROWS_AS(all_partitions({2, 3, 5, 7, 11}, lim), ResourceError);

  // distinct literals, and every prime covered by every partition
  std::set<std::string> seen;
  for (auto const &sg : all_partitions({2, 3, 5}, lim)) {
    seen.insert(sg.to_literal());
    CHECK(sg.covers({2, 3, 5}));
  }
  CHECK(seen.size() == 5);
}

TEST_CASE("literal parsing and printing round-trip") {
  SigmaPartition sg = SigmaPartition::parse("2,7|3");
  CHECK(sg.block_count() == 2);
  CHECK(sg.block(0) == PrimeVec{2, 7});
  CHECK(sg.block(1) == PrimeVec{3});
  CHECK(sg.to_literal() == "2,7|3");
  CHECK(SigmaPartition::parse(sg.to_literal()) == sg);

  // blocks are ordered by least member, primes ascending inside a block
  CHECK(SigmaPartition::parse("3|7,2").to_literal() == "2,7|3");
  CHECK(SigmaPartition::parse(" 5 | 2 , 3 ").to_literal() == "2,3|5");
}

TEST_CASE("malformed partition literals are rejected") {
  // unparseable text raises ParseError, well-formed nonsense DomainError
  CHECK_THROWS_AS(SigmaPartition::parse(""), ParseError);
  CHECK_THROWS_AS(SigmaPartition::parse("2||3"), ParseError);
  CHECK_THROWS_AS(SigmaPartition::parse("2,x"), ParseError);
  CHECK_THROWS_AS(SigmaPartition::parse("2,2|3"), DomainError);
  CHECK_THROWS_AS(SigmaPartition::parse("2|3|2"), DomainError);
  CHECK_THROWS_AS(SigmaPartition::parse("4|3"), DomainError);
}

TEST_CASE("sigma_of and coprimality") {
  SigmaPartition sg = SigmaPartition::parse("2,7|3|5");
  CHECK(sg.sigma_of(1).empty());
  CHECK(sg.sigma_of(8) == std::vector<std::size_t>{0});
  CHECK(sg.sigma_of(14) == std::vector<std::size_t>{0});
  CHECK(sg.sigma_of(21) == std::vector<std::size_t>{0, 1});
  CHECK(sg.is_primary(49));
  CHECK(sg.is_primary(28));
  CHECK_FALSE(sg.is_primary(6));
  CHECK(sg.sigma_coprime(14, 15)); // {2,7} vs {3,5}: blocks 0 vs 1,2
  CHECK_FALSE(sg.sigma_coprime(14, 35));
  CHECK(sg.block_index_of(7) == 0);
  CHECK(sg.block_index_of(5) == 2);
  CHECK_THROWS_AS(sg.block_index_of(11), DomainError);
}

TEST_CASE("singletons and two_block builders") {
  SigmaPartition singles = SigmaPartition::singletons({5, 2, 3});
  CHECK(singles.to_literal() == "2|3|5");
  SigmaPartition tb = SigmaPartition::two_block({3}, {2, 3, 7});
  CHECK(tb.to_literal() == "2,7|3");
  // a side that swallows everything leaves one block
  CHECK(SigmaPartition::two_block({2, 3}, {2, 3}).block_count() == 1);
}

TEST_CASE("pi selections") {
  SigmaPartition sg = SigmaPartition::parse("2,7|3|5");
  Pi pi = Pi::parse(sg, "2,7|5");
  CHECK(pi.block_count() == 2);
  CHECK(pi.has_block(0));
  CHECK_FALSE(pi.has_block(1));
  CHECK(pi.has_block(2));
  CHECK(pi.primes() == PrimeVec{2, 5, 7});
  CHECK(pi.to_literal() == "2,7|5");

  Pi pic = pi.complement();
  CHECK(pic.block_count() == 1);
  CHECK(pic.primes() == PrimeVec{3});

  CHECK(pi.is_pi_number(20));
  CHECK_FALSE(pi.is_pi_number(6));
  CHECK(pi.is_pi_number(1));

  Pi all = Pi::all_blocks(sg);
  CHECK(all.block_count() == 3);
  CHECK(all.complement().block_count() == 0);

  CHECK_THROWS_AS(Pi::parse(sg, "2|5"), DomainError); // half a block
  CHECK_THROWS_AS(Pi::parse(sg, "11"), DomainError);  // unknown prime
  CHECK_THROWS_AS(Pi::parse(sg, ""), ParseError);
}

TEST_CASE("blocks_meeting reports the blocks sharing a prime with n") {
  SigmaPartition sg = SigmaPartition::parse("2,7|3|5");
  Pi all = Pi::all_blocks(sg);
  CHECK(all.blocks_meeting(10) == std::vector<std::size_t>{0, 2});
  CHECK(all.blocks_meeting(1).empty());
}
