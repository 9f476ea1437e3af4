#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <string>

#include "sigma/corpus.hpp"
#include "sigma/errors.hpp"

using namespace sigma;

TEST_CASE("default corpus is sorted, bounded and self-describing") {
  auto corpus = default_corpus();
  CHECK(corpus.size() == 40);
  std::set<std::string> names;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    auto const &e = corpus[i];
    CHECK(names.insert(e.name).second); // unique keys
    bool is_reference = e.name == "example_42" || e.name == "example_294";
    if (!is_reference)
      CHECK(e.group.order() <= 200);
    if (i + 1 < corpus.size())
      CHECK(e.group.order() <= corpus[i + 1].group.order());
  }
  CHECK(names.count("example_42") == 1);
  CHECK(names.count("example_294") == 1);
}

TEST_CASE("provenance literals reconstruct every corpus member") {
  for (auto const &e : default_corpus()) {
    PermGroup g = group_from_literal(e.provenance);
    CHECK(g.order() == e.group.order());
    CHECK(g.degree() == e.group.degree());
  }
}

TEST_CASE("max_order trims the corpus but keeps the reference groups") {
  CorpusConfig cc;
  cc.max_order = 24;
  auto corpus = default_corpus(cc);
  std::set<std::string> names;
  for (auto const &e : corpus) {
    names.insert(e.name);
    bool is_reference = e.name == "example_42" || e.name == "example_294";
    if (!is_reference)
      CHECK(e.group.order() <= 24);
  }
  CHECK(names.count("example_294") == 1);
}

TEST_CASE("group JSON loading accepts both generator encodings") {
  PermGroup a = group_from_json_text(
      R"js({"degree": 3, "generators": ["(0 1 2)", [1, 0, 2]]})js");
  CHECK(a.order() == 6);
  PermGroup b = group_from_json_text(
      R"js({"degree": 4, "generators": ["(0 1 2 3)"]})js");
  CHECK(b.order() == 4);
}

TEST_CASE("group JSON rejects malformed input") {
  CHECK_THROWS_AS(group_from_json_text("not json"), ParseError);
  CHECK_THROWS_AS(group_from_json_text(R"js({"degree": 3})js"), ParseError);
  CHECK_THROWS_AS(group_from_json_text(R"js({"generators": []})js"), ParseError);
  CHECK_THROWS_AS(
      group_from_json_text(R"js({"degree": 0, "generators": []})js"), ParseError);
  CHECK_THROWS_AS(
      group_from_json_text(R"js({"degree": 3, "generators": [[0, 1]]})js"),
      ParseError);
  CHECK_THROWS_AS(
      group_from_json_text(R"js({"degree": 3, "generators": [[0, 0, 1]]})js"),
      ParseError);
  CHECK_THROWS_AS(group_from_json_text(
                      R"js({"degree": 3, "generators": ["(0 5)"]})js"),
                  ParseError);
}

TEST_CASE("constructor literals parse and validate") {
  CHECK(group_from_literal("cyclic(6)").order() == 6);
  CHECK(group_from_literal("dihedral(4)").order() == 8);
  CHECK(group_from_literal(" symmetric( 4 ) ").order() == 24);
  CHECK(group_from_literal("direct_product(cyclic(2),symmetric(3))").order() ==
        12);
  CHECK(group_from_literal("semidirect_cyclic(7,2,3)").order() == 21);
  CHECK(group_from_literal("module_extension(7,3,2)").order() == 294);
  CHECK(group_from_literal("example_294()").order() == 294);

  CHECK_THROWS_AS(group_from_literal(""), ParseError);
  CHECK_THROWS_AS(group_from_literal("cyclic(6"), ParseError);
  CHECK_THROWS_AS(group_from_literal("cyclic(6) trailing"), ParseError);
  CHECK_THROWS_AS(group_from_literal("unknown_family(3)"), DomainError);
}

TEST_CASE("corpus_from_directory loads JSON files and appends references") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "sigma_corpus_test";
  fs::create_directories(dir);
  {
    std::ofstream f(dir / "my_s3.json");
    f << R"js({"degree": 3, "generators": ["(0 1 2)", "(0 1)"]})js";
  }
  {
    std::ofstream f(dir / "my_c4.json");
    f << R"js({"degree": 4, "generators": ["(0 1 2 3)"]})js";
  }
  auto corpus = corpus_from_directory(dir.string());
  std::set<std::string> names;
  for (auto const &e : corpus)
    names.insert(e.name);
  CHECK(names.count("my_s3") == 1);
  CHECK(names.count("my_c4") == 1);
  CHECK(names.count("example_42") == 1);
  CHECK(names.count("example_294") == 1);
  // loaded entries replay through their provenance literal
  for (auto const &e : corpus)
    if (e.name == "my_s3")
      CHECK(group_from_literal(e.provenance).order() == 6);
  fs::remove_all(dir);

  CHECK_THROWS_AS(corpus_from_directory((dir / "missing").string()),
                  DomainError);
}

TEST_CASE("tags classify the families") {
  for (auto const &e : default_corpus()) {
    if (e.name == "s4")
      CHECK(std::count(e.tags.begin(), e.tags.end(), "soluble") == 1);
    if (e.name == "a5") {
      CHECK(std::count(e.tags.begin(), e.tags.end(), "simple") == 1);
      CHECK(std::count(e.tags.begin(), e.tags.end(), "soluble") == 0);
    }
    if (e.name == "example_294")
      CHECK(std::count(e.tags.begin(), e.tags.end(), "reference") == 1);
  }
}
