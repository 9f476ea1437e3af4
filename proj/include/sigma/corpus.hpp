#ifndef SIGMA_CORPUS_HPP
#define SIGMA_CORPUS_HPP

#include <string>
#include <vector>

#include "sigma/limits.hpp"
#include "sigma/perm_group.hpp"

namespace sigma {

// Constructors for the built-in group families.  Every constructor checks the
// computed group order against the closed-form value and throws Error on
// mismatch, so a bad generator table cannot slip into the corpus silently.
PermGroup cyclic_group(unsigned n, Limits const &limits = default_limits());
PermGroup dihedral_group(unsigned n, Limits const &limits = default_limits());
PermGroup symmetric_group(unsigned n, Limits const &limits = default_limits());
PermGroup alternating_group(unsigned n, Limits const &limits = default_limits());
PermGroup quaternion_group(Limits const &limits = default_limits());
PermGroup elementary_abelian_group(unsigned p, unsigned k,
                                   Limits const &limits = default_limits());
PermGroup direct_product(PermGroup const &a, PermGroup const &b,
                         Limits const &limits = default_limits());

// C_m : C_k with the C_k generator acting as x -> a*x (mod m).  Requires
// gcd(a, m) = 1 and a^k = 1 (mod m).  Acts on Z_m alone when the action is
// faithful (multiplicative order of a equals k); otherwise the degree is
// m + k, with the second block carrying the regular action of C_k.
PermGroup semidirect_cyclic(unsigned m, unsigned a, unsigned k,
                            Limits const &limits = default_limits());

// SL(2,3) on the eight nonzero vectors of F_3^2.
PermGroup special_linear_2_3(Limits const &limits = default_limits());

// PSL(2,7) on the projective line over F_7 (eight points).
PermGroup projective_special_linear_2_7(Limits const &limits = default_limits());

// V : (C_q : C_r) where V = F_p^r is a simple faithful module for the
// metacyclic group C_q : C_r.  Requires p > q > r prime, q | p - 1 and
// r | q - 1.  C_q acts on V by the diagonal matrix diag(l^(d^0), ..,
// l^(d^(r-1))) with l of order q mod p and d the inverse of an order-r
// element c mod q; C_r cyclically shifts the coordinates.  The constructor
// re-checks the defining relation, module simplicity, and the group order
// p^r * q * r, so the algebraic preconditions cannot rot.
PermGroup module_extension(unsigned p, unsigned q, unsigned r,
                           Limits const &limits = default_limits());

// The two reference groups exercised by the regression suites.
PermGroup example_group_42(Limits const &limits = default_limits());
PermGroup example_group_294(Limits const &limits = default_limits());

// Reads a group from a JSON file of the form
//   {"name": "s3", "degree": 3, "generators": [[1,0,2], "(0 1 2)"]}
// Generators are image arrays or cycle strings; the two forms may be mixed.
PermGroup load_group(std::string const &path, Limits const &limits = default_limits());
PermGroup group_from_json_text(std::string const &text,
                               Limits const &limits = default_limits());

// Parses a constructor literal such as "cyclic(6)", "quaternion8()",
// "direct_product(cyclic(2),symmetric(3))", or "load(path/to/g.json)".
// These literals appear as the group field of violation records, so a
// reported instance can be replayed without access to the original corpus
// object.  Throws ParseError on malformed input and DomainError for unknown
// constructor names.
PermGroup group_from_literal(std::string const &literal,
                             Limits const &limits = default_limits());

struct CorpusEntry {
  std::string name;        // short unique key, e.g. "d8"
  std::string provenance;  // constructor literal accepted by group_from_literal
  PermGroup group;
  std::vector<std::string> tags;  // sorted; see corpus.cpp for the vocabulary
};

struct CorpusConfig {
  unsigned max_order = 200;
  unsigned max_degree = 64;
  // The two reference groups stay in the corpus even when max_order would
  // exclude them; the regression suites need them present unconditionally.
  bool always_include_examples = true;
  Limits limits = default_limits();
};

// The built-in corpus, ordered by (order, name).  Entries outside the
// configured bounds are dropped, except for the reference groups as above.
std::vector<CorpusEntry> default_corpus(CorpusConfig const &config = CorpusConfig{});

// Corpus loaded from a directory of *.json group files (sorted by filename),
// subject to the same bounds.  Reference groups are appended as for
// default_corpus so the regression suites keep working under a custom corpus.
std::vector<CorpusEntry> corpus_from_directory(std::string const &dir,
                                               CorpusConfig const &config = CorpusConfig{});

} // namespace sigma

#endif
