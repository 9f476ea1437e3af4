#include "sigma/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <queue>
#include <sstream>
#include <unordered_set>
#include <utility>
#include <variant>

#include "json.hpp"

#include "sigma/arith.hpp"
#include "sigma/errors.hpp"

namespace sigma {

namespace {

using Point = Permutation::Point;

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e > 0) {
    if (e & 1)
      r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

// multiplicative order of a mod m; requires gcd(a, m) = 1
std::uint64_t mult_order(std::uint64_t a, std::uint64_t m) {
  std::uint64_t x = a % m;
  std::uint64_t t = 1;
  while (x != 1 % m) {
    x = x * (a % m) % m;
    ++t;
  }
  return t;
}

template <typename F> Permutation perm_from_func(unsigned degree, F f) {
  std::vector<Point> img(degree);
  for (unsigned i = 0; i < degree; ++i)
    img[i] = static_cast<Point>(f(i));
  return Permutation(std::move(img));
}

void check_order(PermGroup const &g, std::uint64_t expect, char const *what) {
  if (g.order() != expect)
    throw Error(std::string("internal: ") + what + " construction has wrong order");
}

void check_cap(std::uint64_t order, Limits const &limits, char const *what) {
  if (order > limits.element_cap)
    throw ResourceError(std::string(what) + " order exceeds the element cap");
}

unsigned count_involutions(PermGroup const &g) {
  unsigned n = 0;
  for (auto const &e : g.elements())
    if (e.order() == 2)
      ++n;
  return n;
}

} // namespace

PermGroup cyclic_group(unsigned n, Limits const &limits) {
  if (n == 0)
    throw DomainError("cyclic group order must be positive");
  if (n == 1)
    return PermGroup::trivial(1, limits);
  check_cap(n, limits, "cyclic group");
  std::vector<Permutation> gens{perm_from_func(n, [n](unsigned i) { return (i + 1) % n; })};
  PermGroup g(n, std::move(gens), limits);
  check_order(g, n, "cyclic group");
  return g;
}

PermGroup dihedral_group(unsigned n, Limits const &limits) {
  if (n < 3)
    throw DomainError("dihedral construction needs n >= 3");
  check_cap(2ull * n, limits, "dihedral group");
  std::vector<Permutation> gens{
      perm_from_func(n, [n](unsigned i) { return (i + 1) % n; }),
      perm_from_func(n, [n](unsigned i) { return (n - i) % n; })};
  PermGroup g(n, std::move(gens), limits);
  check_order(g, 2ull * n, "dihedral group");
  return g;
}

PermGroup symmetric_group(unsigned n, Limits const &limits) {
  if (n == 0)
    throw DomainError("symmetric group degree must be positive");
  if (n == 1)
    return PermGroup::trivial(1, limits);
  std::vector<Permutation> gens{
      perm_from_func(n, [](unsigned i) { return i < 2 ? 1 - i : i; })};
  if (n > 2)
    gens.push_back(perm_from_func(n, [n](unsigned i) { return (i + 1) % n; }));
  PermGroup g(n, std::move(gens), limits);
  std::uint64_t fact = 1;
  for (unsigned i = 2; i <= n; ++i)
    fact *= i;
  check_order(g, fact, "symmetric group");
  return g;
}

PermGroup alternating_group(unsigned n, Limits const &limits) {
  if (n < 3)
    throw DomainError("alternating construction needs n >= 3");
  std::vector<Permutation> gens{Permutation::from_cycles("(0 1 2)", n)};
  if (n > 3) {
    // an n-cycle for odd n, an (n-1)-cycle fixing 0 for even n: both even
    if (n % 2 == 1)
      gens.push_back(perm_from_func(n, [n](unsigned i) { return (i + 1) % n; }));
    else
      gens.push_back(perm_from_func(n, [n](unsigned i) {
        return i == 0 ? 0u : i % (n - 1) + 1;
      }));
  }
  PermGroup g(n, std::move(gens), limits);
  std::uint64_t fact = 1;
  for (unsigned i = 2; i <= n; ++i)
    fact *= i;
  check_order(g, fact / 2, "alternating group");
  return g;
}

PermGroup quaternion_group(Limits const &limits) {
  // right-regular action on {1, -1, i, -i, j, -j, k, -k} in that point order
  std::vector<Permutation> gens{Permutation::from_cycles("(0 2 1 3)(4 7 5 6)", 8),
                                Permutation::from_cycles("(0 4 1 5)(2 6 3 7)", 8)};
  PermGroup g(8, std::move(gens), limits);
  check_order(g, 8, "quaternion group");
  if (count_involutions(g) != 1)
    throw Error("internal: quaternion group construction lacks the unique involution");
  return g;
}

PermGroup elementary_abelian_group(unsigned p, unsigned k, Limits const &limits) {
  if (!is_prime(p))
    throw DomainError("elementary abelian construction needs a prime");
  if (k == 0)
    throw DomainError("elementary abelian rank must be positive");
  std::uint64_t order = 1;
  for (unsigned i = 0; i < k; ++i) {
    order *= p;
    check_cap(order, limits, "elementary abelian group");
  }
  unsigned degree = p * k;
  std::vector<Permutation> gens;
  for (unsigned j = 0; j < k; ++j)
    gens.push_back(perm_from_func(degree, [p, j](unsigned i) {
      return i / p == j ? j * p + (i % p + 1) % p : i;
    }));
  PermGroup g(degree, std::move(gens), limits);
  check_order(g, order, "elementary abelian group");
  return g;
}

PermGroup direct_product(PermGroup const &a, PermGroup const &b, Limits const &limits) {
  unsigned da = a.degree();
  unsigned degree = da + b.degree();
  check_cap(a.order() * b.order(), limits, "direct product");
  std::vector<Permutation> gens;
  for (auto const &g : a.generators())
    gens.push_back(perm_from_func(degree, [&](unsigned i) {
      return i < da ? g[i] : i;
    }));
  for (auto const &h : b.generators())
    gens.push_back(perm_from_func(degree, [&](unsigned i) {
      return i < da ? i : h[i - da] + da;
    }));
  PermGroup g(degree, std::move(gens), limits);
  check_order(g, a.order() * b.order(), "direct product");
  return g;
}

PermGroup semidirect_cyclic(unsigned m, unsigned a, unsigned k, Limits const &limits) {
  if (m < 2 || k < 1)
    throw DomainError("semidirect construction needs m >= 2 and k >= 1");
  a %= m;
  if (gcd_u64(a, m) != 1)
    throw DomainError("semidirect action must be invertible (gcd(a, m) = 1)");
  if (pow_mod(a, k, m) != 1)
    throw DomainError("semidirect action must satisfy a^k = 1 (mod m)");
  check_cap(std::uint64_t(m) * k, limits, "semidirect product");
  bool faithful = mult_order(a, m) == k;
  unsigned degree = faithful ? m : m + k;
  std::vector<Permutation> gens{perm_from_func(degree, [m](unsigned i) {
    return i < m ? (i + 1) % m : i;
  })};
  gens.push_back(perm_from_func(degree, [&](unsigned i) {
    if (i < m)
      return static_cast<unsigned>(std::uint64_t(a) * i % m);
    return faithful ? i : m + (i - m + 1) % k;
  }));
  PermGroup g(degree, std::move(gens), limits);
  check_order(g, std::uint64_t(m) * k, "semidirect product");
  return g;
}

PermGroup special_linear_2_3(Limits const &limits) {
  // the eight nonzero vectors (x, y) of F_3^2, indexed 3x + y - 1
  auto idx = [](unsigned x, unsigned y) { return 3 * x + y - 1; };
  std::vector<Point> ia(8), ib(8);
  for (unsigned x = 0; x < 3; ++x)
    for (unsigned y = 0; y < 3; ++y) {
      if (x == 0 && y == 0)
        continue;
      ia[idx(x, y)] = static_cast<Point>(idx((x + y) % 3, y));      // [[1,1],[0,1]]
      ib[idx(x, y)] = static_cast<Point>(idx((3 - y) % 3, x));      // [[0,-1],[1,0]]
    }
  PermGroup g(8, {Permutation(std::move(ia)), Permutation(std::move(ib))}, limits);
  check_order(g, 24, "SL(2,3)");
  if (count_involutions(g) != 1)
    throw Error("internal: SL(2,3) construction lacks the unique involution");
  return g;
}

PermGroup projective_special_linear_2_7(Limits const &limits) {
  // projective line over F_7: points 0..6 are F_7, point 7 is infinity;
  // generators x -> x + 1 and x -> -1/x
  std::vector<Permutation> gens{
      perm_from_func(8, [](unsigned i) { return i == 7 ? 7 : (i + 1) % 7; }),
      Permutation::from_cycles("(0 7)(1 6)(2 3)(4 5)", 8)};
  PermGroup g(8, std::move(gens), limits);
  check_order(g, 168, "PSL(2,7)");
  return g;
}

PermGroup module_extension(unsigned p, unsigned q, unsigned r, Limits const &limits) {
  if (!is_prime(p) || !is_prime(q) || !is_prime(r))
    throw DomainError("module extension parameters must be prime");
  if (!(p > q && q > r))
    throw DomainError("module extension needs p > q > r");
  if ((p - 1) % q != 0)
    throw DomainError("module extension needs q | p - 1");
  if ((q - 1) % r != 0)
    throw DomainError("module extension needs r | q - 1");

  std::uint64_t dim = 1;
  for (unsigned i = 0; i < r; ++i) {
    dim *= p;
    check_cap(dim * q * r, limits, "module extension");
  }
  unsigned n = static_cast<unsigned>(dim);

  // l generates the unique order-q subgroup of F_p^*; c has order r mod q
  // and d = c^-1 drives the eigenvalue exponents l^(d^i).
  std::uint64_t l = 0, c = 0;
  for (std::uint64_t cand = 2; cand < p; ++cand)
    if (mult_order(cand, p) == q) {
      l = cand;
      break;
    }
  for (std::uint64_t cand = 2; cand < q; ++cand)
    if (mult_order(cand, q) == r) {
      c = cand;
      break;
    }
  if (l == 0 || c == 0)
    throw Error("internal: module extension eigenvalue search failed");
  std::uint64_t d = pow_mod(c, q - 2, q);
  std::vector<std::uint64_t> mu(r);
  for (unsigned i = 0; i < r; ++i)
    mu[i] = pow_mod(l, pow_mod(d, i, q), p);

  // vectors of F_p^r indexed by sum x_i p^i
  auto decode = [&](unsigned v) {
    std::vector<unsigned> xs(r);
    for (unsigned i = 0; i < r; ++i) {
      xs[i] = v % p;
      v /= p;
    }
    return xs;
  };
  auto encode = [&](std::vector<unsigned> const &xs) {
    unsigned v = 0;
    for (unsigned i = r; i-- > 0;)
      v = v * p + xs[i];
    return v;
  };

  std::vector<Permutation> gens;
  for (unsigned j = 0; j < r; ++j)
    gens.push_back(perm_from_func(n, [&](unsigned v) {
      auto xs = decode(v);
      xs[j] = (xs[j] + 1) % p;
      return encode(xs);
    }));
  Permutation y = perm_from_func(n, [&](unsigned v) {
    auto xs = decode(v);
    for (unsigned i = 0; i < r; ++i)
      xs[i] = static_cast<unsigned>(mu[i] * xs[i] % p);
    return encode(xs);
  });
  Permutation z = perm_from_func(n, [&](unsigned v) {
    auto xs = decode(v);
    std::vector<unsigned> ys(r);
    for (unsigned i = 0; i < r; ++i)
      ys[(i + 1) % r] = xs[i];
    return encode(ys);
  });

  // defining relation: z y z^-1 = y^c as maps on the module
  Permutation lhs = z.inverse() * y * z;
  Permutation rhs(n);
  for (std::uint64_t i = 0; i < c; ++i)
    rhs = rhs * y;
  if (lhs != rhs)
    throw Error("internal: module action violates the defining relation");

  // simplicity: every nonzero vector generates the whole module under
  // addition and the action of y and z
  for (unsigned start = 1; start < n; ++start) {
    std::vector<char> in(n, 0);
    std::vector<unsigned> members{0};
    in[0] = 1;
    std::queue<unsigned> work;
    auto add = [&](unsigned v) {
      if (!in[v]) {
        in[v] = 1;
        members.push_back(v);
        work.push(v);
      }
    };
    add(start);
    while (!work.empty()) {
      unsigned u = work.front();
      work.pop();
      add(y[u]);
      add(z[u]);
      auto xu = decode(u);
      for (std::size_t mi = 0; mi < members.size(); ++mi) {
        auto xs = decode(members[mi]);
        for (unsigned i = 0; i < r; ++i)
          xs[i] = (xs[i] + xu[i]) % p;
        add(encode(xs));
      }
    }
    if (members.size() != n)
      throw Error("internal: module extension module is not simple");
  }

  gens.push_back(std::move(y));
  gens.push_back(std::move(z));
  PermGroup g(n, std::move(gens), limits);
  check_order(g, dim * q * r, "module extension");
  return g;
}

PermGroup example_group_42(Limits const &limits) {
  return semidirect_cyclic(7, 3, 6, limits);
}

PermGroup example_group_294(Limits const &limits) {
  return module_extension(7, 3, 2, limits);
}

PermGroup group_from_json_text(std::string const &text, Limits const &limits) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (nlohmann::json::exception const &e) {
    throw ParseError(std::string("malformed group file: ") + e.what());
  }
  if (!j.is_object() || !j.contains("degree") || !j.contains("generators"))
    throw ParseError("group file needs \"degree\" and \"generators\" fields");
  if (!j["degree"].is_number_unsigned())
    throw ParseError("group file degree must be a positive integer");
  std::uint64_t degree = j["degree"].get<std::uint64_t>();
  if (degree == 0 || degree > 0xffff)
    throw ParseError("group file degree out of range");
  if (!j["generators"].is_array())
    throw ParseError("group file generators must be an array");
  std::vector<Permutation> gens;
  for (auto const &el : j["generators"]) {
    if (el.is_string()) {
      gens.push_back(Permutation::from_cycles(el.get<std::string>(),
                                              static_cast<unsigned>(degree)));
    } else if (el.is_array()) {
      std::vector<Point> img;
      for (auto const &v : el) {
        if (!v.is_number_unsigned() || v.get<std::uint64_t>() >= degree)
          throw ParseError("generator image out of range");
        img.push_back(static_cast<Point>(v.get<std::uint64_t>()));
      }
      if (img.size() != degree)
        throw ParseError("generator image list has wrong length");
      try {
        gens.push_back(Permutation(std::move(img)));
      } catch (DomainError const &e) {
        throw ParseError(e.what());
      }
    } else {
      throw ParseError("generators must be image arrays or cycle strings");
    }
  }
  return PermGroup(static_cast<unsigned>(degree), std::move(gens), limits);
}

PermGroup load_group(std::string const &path, Limits const &limits) {
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot open group file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return group_from_json_text(buf.str(), limits);
}

namespace {

// recursive-descent parser for constructor literals
class LiteralParser {
public:
  LiteralParser(std::string const &text, Limits const &limits)
      : text_(text), limits_(limits) {}

  PermGroup parse() {
    PermGroup g = literal();
    skip_ws();
    if (pos_ != text_.size())
      throw ParseError("trailing characters after group literal");
    return g;
  }

private:
  using Arg = std::variant<std::uint64_t, PermGroup>;

  std::string const &text_;
  Limits const &limits_;
  std::size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t'))
      ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (pos_ == start)
      throw ParseError("expected a constructor name in group literal");
    return text_.substr(start, pos_ - start);
  }

  std::uint64_t number() {
    skip_ws();
    std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start)
      throw ParseError("expected a number in group literal");
    return v;
  }

  std::uint64_t num_arg(std::vector<Arg> &args, std::size_t i, std::string const &name) {
    if (i >= args.size() || !std::holds_alternative<std::uint64_t>(args[i]))
      throw ParseError("constructor " + name + " expects numeric arguments");
    return std::get<std::uint64_t>(args[i]);
  }

  PermGroup grp_arg(std::vector<Arg> &args, std::size_t i, std::string const &name) {
    if (i >= args.size() || !std::holds_alternative<PermGroup>(args[i]))
      throw ParseError("constructor " + name + " expects group arguments");
    return std::get<PermGroup>(std::move(args[i]));
  }

  void expect_arity(std::vector<Arg> const &args, std::size_t n, std::string const &name) {
    if (args.size() != n)
      throw ParseError("constructor " + name + " has wrong argument count");
  }

  PermGroup literal() {
    std::string name = ident();
    if (name == "load") {
      if (!eat('('))
        throw ParseError("load needs a parenthesized path");
      std::size_t close = text_.find(')', pos_);
      if (close == std::string::npos)
        throw ParseError("unbalanced parentheses in group literal");
      std::string path = text_.substr(pos_, close - pos_);
      pos_ = close + 1;
      while (!path.empty() && path.front() == ' ')
        path.erase(path.begin());
      while (!path.empty() && path.back() == ' ')
        path.pop_back();
      return load_group(path, limits_);
    }
    std::vector<Arg> args;
    if (eat('(')) {
      skip_ws();
      if (!eat(')')) {
        for (;;) {
          skip_ws();
          if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            args.push_back(number());
          else
            args.push_back(literal());
          if (eat(')'))
            break;
          if (!eat(','))
            throw ParseError("expected ',' or ')' in group literal");
        }
      }
    }
    return dispatch(name, args);
  }

  PermGroup dispatch(std::string const &name, std::vector<Arg> &args) {
    auto num = [&](std::size_t i) {
      std::uint64_t v = num_arg(args, i, name);
      if (v > 0xffffffffull)
        throw ParseError("argument out of range in group literal");
      return static_cast<unsigned>(v);
    };
    if (name == "cyclic") {
      expect_arity(args, 1, name);
      return cyclic_group(num(0), limits_);
    }
    if (name == "dihedral") {
      expect_arity(args, 1, name);
      return dihedral_group(num(0), limits_);
    }
    if (name == "symmetric") {
      expect_arity(args, 1, name);
      return symmetric_group(num(0), limits_);
    }
    if (name == "alternating") {
      expect_arity(args, 1, name);
      return alternating_group(num(0), limits_);
    }
    if (name == "quaternion8") {
      expect_arity(args, 0, name);
      return quaternion_group(limits_);
    }
    if (name == "elementary_abelian") {
      expect_arity(args, 2, name);
      return elementary_abelian_group(num(0), num(1), limits_);
    }
    if (name == "direct_product") {
      expect_arity(args, 2, name);
      PermGroup a = grp_arg(args, 0, name);
      PermGroup b = grp_arg(args, 1, name);
      return direct_product(a, b, limits_);
    }
    if (name == "semidirect_cyclic") {
      expect_arity(args, 3, name);
      return semidirect_cyclic(num(0), num(1), num(2), limits_);
    }
    if (name == "special_linear_2_3") {
      expect_arity(args, 0, name);
      return special_linear_2_3(limits_);
    }
    if (name == "projective_special_linear_2_7") {
      expect_arity(args, 0, name);
      return projective_special_linear_2_7(limits_);
    }
    if (name == "module_extension") {
      expect_arity(args, 3, name);
      return module_extension(num(0), num(1), num(2), limits_);
    }
    if (name == "example_42") {
      expect_arity(args, 0, name);
      return example_group_42(limits_);
    }
    if (name == "example_294") {
      expect_arity(args, 0, name);
      return example_group_294(limits_);
    }
    throw DomainError("unknown group constructor: " + name);
  }
};

} // namespace

PermGroup group_from_literal(std::string const &literal, Limits const &limits) {
  return LiteralParser(literal, limits).parse();
}

namespace {

// subgroup generated by an inverse-closed seed, as raw permutations
std::vector<Permutation> closure_raw(unsigned degree,
                                     std::vector<Permutation> const &seed) {
  std::unordered_set<Permutation, PermHash> seen;
  std::vector<Permutation> members{Permutation(degree)};
  seen.insert(members.front());
  std::queue<Permutation> work;
  work.push(members.front());
  while (!work.empty()) {
    Permutation w = std::move(work.front());
    work.pop();
    for (auto const &s : seed) {
      Permutation v = w * s;
      if (seen.insert(v).second) {
        members.push_back(v);
        work.push(v);
      }
    }
  }
  return members;
}

// derived series reaching the trivial group; works on raw elements so tag
// computation does not force a multiplication table
bool soluble_raw(PermGroup const &g) {
  std::vector<Permutation> cur = g.elements();
  while (cur.size() > 1) {
    std::vector<Permutation> inv;
    inv.reserve(cur.size());
    for (auto const &x : cur)
      inv.push_back(x.inverse());
    std::unordered_set<Permutation, PermHash> comms;
    for (std::size_t i = 0; i < cur.size(); ++i)
      for (std::size_t j = 0; j < cur.size(); ++j) {
        Permutation c = inv[i] * inv[j] * cur[i] * cur[j];
        if (!c.is_identity())
          comms.insert(c);
      }
    if (comms.empty())
      return true;
    std::vector<Permutation> seed(comms.begin(), comms.end());
    std::vector<Permutation> next = closure_raw(g.degree(), seed);
    if (next.size() == cur.size())
      return false;
    cur = std::move(next);
  }
  return true;
}

// a nontrivial group is simple when every nonidentity conjugacy class
// generates the whole group
bool simple_raw(PermGroup const &g) {
  auto const &elems = g.elements();
  if (elems.size() <= 1)
    return false;
  std::unordered_map<Permutation, std::size_t, PermHash> index;
  for (std::size_t i = 0; i < elems.size(); ++i)
    index.emplace(elems[i], i);
  std::vector<char> done(elems.size(), 0);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (done[i] || elems[i].is_identity())
      continue;
    std::vector<Permutation> cls{elems[i]};
    done[i] = 1;
    for (std::size_t k = 0; k < cls.size(); ++k)
      for (auto const &s : g.generators()) {
        Permutation c = cls[k].conjugated_by(s);
        std::size_t j = index.at(c);
        if (!done[j]) {
          done[j] = 1;
          cls.push_back(c);
        }
      }
    std::vector<Permutation> seed = cls;
    for (auto const &x : cls)
      seed.push_back(x.inverse());
    if (closure_raw(g.degree(), seed).size() != elems.size())
      return false;
  }
  return true;
}

bool nilpotent_raw(PermGroup const &g) {
  // nilpotent iff elements of p-power order number exactly the p-part,
  // for every prime p dividing the order
  for (auto [p, e] : factorize(g.order())) {
    std::uint64_t part = 1;
    for (int i = 0; i < e; ++i)
      part *= p;
    std::uint64_t count = 0;
    for (auto const &x : g.elements()) {
      std::uint64_t o = x.order();
      if (p_part(o, p) == o)
        ++count;
    }
    if (count != part)
      return false;
  }
  return true;
}

std::vector<std::string> compute_tags(PermGroup const &g, std::string const &provenance,
                                      bool reference) {
  std::vector<std::string> tags;
  std::string family = provenance.substr(0, provenance.find('('));
  if (!family.empty())
    tags.push_back(family);
  if (reference)
    tags.push_back("reference");
  bool abelian = true;
  auto const &gens = g.generators();
  for (std::size_t i = 0; i < gens.size() && abelian; ++i)
    for (std::size_t j = i + 1; j < gens.size() && abelian; ++j)
      abelian = gens[i] * gens[j] == gens[j] * gens[i];
  if (abelian)
    tags.push_back("abelian");
  bool cyclic = false;
  for (auto const &x : g.elements())
    if (x.order() == g.order()) {
      cyclic = true;
      break;
    }
  if (cyclic)
    tags.push_back("cyclic");
  if (abelian || nilpotent_raw(g))
    tags.push_back("nilpotent");
  if (abelian || soluble_raw(g))
    tags.push_back("soluble");
  if (abelian ? is_prime(g.order()) : simple_raw(g))
    tags.push_back("simple");
  std::sort(tags.begin(), tags.end());
  tags.erase(std::unique(tags.begin(), tags.end()), tags.end());
  return tags;
}

struct CorpusSpec {
  char const *name;
  char const *provenance;
};

// ordered by (order, name); the two reference entries are exempt from the
// order bound so the regression suites always find them
constexpr CorpusSpec kCorpus[] = {
    {"c2", "cyclic(2)"},
    {"c3", "cyclic(3)"},
    {"c4", "cyclic(4)"},
    {"v4", "elementary_abelian(2,2)"},
    {"c6", "cyclic(6)"},
    {"s3", "symmetric(3)"},
    {"c2xc4", "direct_product(cyclic(2),cyclic(4))"},
    {"c8", "cyclic(8)"},
    {"d8", "dihedral(4)"},
    {"e8", "elementary_abelian(2,3)"},
    {"q8", "quaternion8()"},
    {"e9", "elementary_abelian(3,2)"},
    {"d10", "dihedral(5)"},
    {"a4", "alternating(4)"},
    {"c12", "cyclic(12)"},
    {"c2xc6", "direct_product(cyclic(2),cyclic(6))"},
    {"d12", "dihedral(6)"},
    {"dic3", "semidirect_cyclic(3,2,4)"},
    {"d14", "dihedral(7)"},
    {"c15", "cyclic(15)"},
    {"s3xc3", "direct_product(symmetric(3),cyclic(3))"},
    {"dic5", "semidirect_cyclic(5,4,4)"},
    {"f20", "semidirect_cyclic(5,2,4)"},
    {"f21", "semidirect_cyclic(7,2,3)"},
    {"d22", "dihedral(11)"},
    {"s4", "symmetric(4)"},
    {"sl23", "special_linear_2_3()"},
    {"d26", "dihedral(13)"},
    {"dic7", "semidirect_cyclic(7,6,4)"},
    {"c30", "cyclic(30)"},
    {"d30", "dihedral(15)"},
    {"s3xc5", "direct_product(symmetric(3),cyclic(5))"},
    {"c36", "direct_product(cyclic(4),cyclic(9))"},
    {"f39", "semidirect_cyclic(13,3,3)"},
    {"c42", "cyclic(42)"},
    {"example_42", "example_42()"},
    {"a5", "alternating(5)"},
    {"s5", "symmetric(5)"},
    {"psl27", "projective_special_linear_2_7()"},
    {"example_294", "example_294()"},
};

bool is_reference_name(std::string const &name) {
  return name == "example_42" || name == "example_294";
}

} // namespace

std::vector<CorpusEntry> default_corpus(CorpusConfig const &config) {
  std::vector<CorpusEntry> out;
  for (auto const &spec : kCorpus) {
    bool reference = is_reference_name(spec.name);
    PermGroup g = group_from_literal(spec.provenance, config.limits);
    bool oversize = g.order() > config.max_order || g.degree() > config.max_degree;
    if (oversize && !(reference && config.always_include_examples))
      continue;
    out.push_back(CorpusEntry{spec.name, spec.provenance, g,
                              compute_tags(g, spec.provenance, reference)});
  }
  return out;
}

std::vector<CorpusEntry> corpus_from_directory(std::string const &dir,
                                               CorpusConfig const &config) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir))
    throw DomainError("corpus directory does not exist: " + dir);
  std::vector<fs::path> paths;
  for (auto const &entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json")
      paths.push_back(entry.path());
  std::sort(paths.begin(), paths.end());
  std::vector<CorpusEntry> out;
  for (auto const &path : paths) {
    PermGroup g = load_group(path.string(), config.limits);
    if (g.order() > config.max_order || g.degree() > config.max_degree)
      continue;
    std::string provenance = "load(" + path.string() + ")";
    out.push_back(CorpusEntry{path.stem().string(), provenance, g,
                              compute_tags(g, provenance, false)});
  }
  if (config.always_include_examples) {
    for (char const *name : {"example_42", "example_294"}) {
      if (std::any_of(out.begin(), out.end(),
                      [&](CorpusEntry const &e) { return e.name == name; }))
        continue;
      std::string provenance = std::string(name) + "()";
      PermGroup g = group_from_literal(provenance, config.limits);
      out.push_back(CorpusEntry{name, provenance, g,
                                compute_tags(g, provenance, true)});
    }
  }
  std::stable_sort(out.begin(), out.end(), [](CorpusEntry const &a, CorpusEntry const &b) {
    return a.group.order() != b.group.order() ? a.group.order() < b.group.order()
                                              : a.name < b.name;
  });
  return out;
}

} // namespace sigma
