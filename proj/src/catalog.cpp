#include "fuskit/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

#include "fuskit/errors.hpp"
#include "fuskit/groupops.hpp"

namespace fuskit {

namespace {

// ---------------------------------------------------------------- parsing

struct Cursor {
  const std::string& s;
  size_t i = 0;
  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
};

NamedGroupSpec parse_spec(Cursor& cur);

NamedGroupSpec::Arg parse_arg(Cursor& cur) {
  cur.skip_ws();
  if (cur.i < cur.s.size() && (std::isdigit(static_cast<unsigned char>(cur.s[cur.i])))) {
    long long v = 0;
    while (cur.i < cur.s.size() && std::isdigit(static_cast<unsigned char>(cur.s[cur.i]))) {
      v = v * 10 + (cur.s[cur.i] - '0');
      ++cur.i;
    }
    return NamedGroupSpec::Arg{v};
  }
  return NamedGroupSpec::Arg{parse_spec(cur)};
}

NamedGroupSpec parse_spec(Cursor& cur) {
  cur.skip_ws();
  NamedGroupSpec spec;
  while (cur.i < cur.s.size() &&
         (std::isalnum(static_cast<unsigned char>(cur.s[cur.i])) || cur.s[cur.i] == '_')) {
    spec.name += cur.s[cur.i];
    ++cur.i;
  }
  if (spec.name.empty()) throw parse_error("expected constructor name in: " + cur.s);
  if (cur.eat('(')) {
    if (!cur.eat(')')) {
      spec.args.push_back(parse_arg(cur));
      while (cur.eat(',')) spec.args.push_back(parse_arg(cur));
      if (!cur.eat(')')) throw parse_error("expected ')' in: " + cur.s);
    }
  }
  return spec;
}

long long int_arg(const NamedGroupSpec& spec, size_t idx) {
  if (idx >= spec.args.size() || !std::holds_alternative<long long>(spec.args[idx]))
    throw parse_error("constructor " + spec.name + " expects an integer argument");
  return std::get<long long>(spec.args[idx]);
}

const NamedGroupSpec& spec_arg(const NamedGroupSpec& spec, size_t idx) {
  if (idx >= spec.args.size() || !std::holds_alternative<NamedGroupSpec>(spec.args[idx]))
    throw parse_error("constructor " + spec.name + " expects a group argument");
  return std::get<NamedGroupSpec>(spec.args[idx]);
}

void need_args(const NamedGroupSpec& spec, size_t n) {
  if (spec.args.size() != n)
    throw parse_error("constructor " + spec.name + " expects " + std::to_string(n) +
                      " argument(s)");
}

// ----------------------------------------------------------- constructors

PermGroupPtr make_cyclic(long long n) {
  if (n < 1) throw parse_error("cyclic(n) needs n >= 1");
  if (n == 1) return group_from_generators({}, 1);
  std::vector<int> im(static_cast<size_t>(n));
  for (long long i = 0; i < n; ++i) im[static_cast<size_t>(i)] = static_cast<int>((i + 1) % n);
  return group_from_generators({Perm::from_images(im)}, static_cast<int>(n));
}

PermGroupPtr make_dihedral(long long m) {
  if (m < 4 || m % 2 != 0) throw parse_error("dihedral(m) needs even order m >= 4");
  long long n = m / 2;
  if (n == 2) {
    // Degenerate 2-gon: the Klein four group.
    return group_from_generators({parse_cycles("(1,2)", 4), parse_cycles("(3,4)", 4)}, 4);
  }
  std::vector<int> rot(static_cast<size_t>(n)), ref(static_cast<size_t>(n));
  for (long long i = 0; i < n; ++i) {
    rot[static_cast<size_t>(i)] = static_cast<int>((i + 1) % n);
    ref[static_cast<size_t>(i)] = static_cast<int>((n - i) % n);
  }
  return group_from_generators({Perm::from_images(rot), Perm::from_images(ref)},
                               static_cast<int>(n));
}

PermGroupPtr make_direct_product(const PermGroupPtr& a, const PermGroupPtr& b) {
  int da = a->degree(), db = b->degree();
  auto pad_left = [&](const Perm& x) {
    std::vector<int> im(static_cast<size_t>(da + db));
    for (int i = 0; i < da; ++i) im[static_cast<size_t>(i)] = x.apply(i);
    for (int i = 0; i < db; ++i) im[static_cast<size_t>(da + i)] = da + i;
    return Perm::from_images(std::move(im));
  };
  auto pad_right = [&](const Perm& x) {
    std::vector<int> im(static_cast<size_t>(da + db));
    for (int i = 0; i < da; ++i) im[static_cast<size_t>(i)] = i;
    for (int i = 0; i < db; ++i) im[static_cast<size_t>(da + i)] = da + x.apply(i);
    return Perm::from_images(std::move(im));
  };
  std::vector<Perm> gens;
  for (const Perm& x : a->generators()) gens.push_back(pad_left(x));
  for (const Perm& x : b->generators()) gens.push_back(pad_right(x));
  return group_from_generators(std::move(gens), da + db);
}

PermGroupPtr make_elementary_abelian(long long p, long long k) {
  if (!is_prime(static_cast<uint64_t>(p)) || k < 1)
    throw parse_error("elementary_abelian(p,k) needs prime p and k >= 1");
  PermGroupPtr g = make_cyclic(p);
  for (long long i = 1; i < k; ++i) g = make_direct_product(g, make_cyclic(p));
  return g;
}

PermGroupPtr make_quaternion8() {
  return group_from_generators(
      {parse_cycles("(1,2,3,4)(5,6,7,8)", 8), parse_cycles("(1,5,3,7)(2,8,4,6)", 8)}, 8);
}

PermGroupPtr make_sym(long long n) {
  if (n < 1) throw parse_error("sym(n) needs n >= 1");
  if (n == 1) return group_from_generators({}, 1);
  std::vector<Perm> gens{parse_cycles("(1,2)", static_cast<int>(n))};
  if (n > 2) {
    std::string full = "(1";
    for (long long i = 2; i <= n; ++i) full += "," + std::to_string(i);
    full += ")";
    gens.push_back(parse_cycles(full, static_cast<int>(n)));
  }
  return group_from_generators(std::move(gens), static_cast<int>(n));
}

PermGroupPtr make_alt(long long n) {
  if (n < 1) throw parse_error("alt(n) needs n >= 1");
  if (n <= 2) return group_from_generators({}, static_cast<int>(n));
  std::vector<Perm> gens{parse_cycles("(1,2,3)", static_cast<int>(n))};
  if (n > 3) {
    std::string big = n % 2 == 1 ? "(1" : "(2";
    for (long long i = (n % 2 == 1 ? 2 : 3); i <= n; ++i) big += "," + std::to_string(i);
    big += ")";
    gens.push_back(parse_cycles(big, static_cast<int>(n)));
  }
  return group_from_generators(std::move(gens), static_cast<int>(n));
}

PermGroupPtr make_psl2(long long q) {
  if (!is_prime(static_cast<uint64_t>(q)) || q > 23)
    throw parse_error("psl2(q) supports prime q <= 23");
  // Points 0..q-1 are field values, point q is infinity.
  int deg = static_cast<int>(q) + 1;
  std::vector<int> t(static_cast<size_t>(deg)), s(static_cast<size_t>(deg));
  auto inv_mod = [&](long long v) {
    for (long long w = 1; w < q; ++w)
      if (v * w % q == 1) return w;
    throw contradiction_error("no modular inverse");
  };
  for (long long v = 0; v < q; ++v) t[static_cast<size_t>(v)] = static_cast<int>((v + 1) % q);
  t[static_cast<size_t>(q)] = static_cast<int>(q);
  s[0] = static_cast<int>(q);
  s[static_cast<size_t>(q)] = 0;
  for (long long v = 1; v < q; ++v)
    s[static_cast<size_t>(v)] = static_cast<int>(((q - 1) * inv_mod(v)) % q);
  return group_from_generators({Perm::from_images(t), Perm::from_images(s)}, deg);
}

// Small finite field GF(p^k), elements indexed 0..p^k-1 as base-p digit
// vectors of polynomial coefficients.
struct SmallField {
  int p, k, n;
  std::vector<int> irreducible;  // coefficients, degree k, monic

  SmallField(int p_, int k_) : p(p_), k(k_), n(1) {
    for (int i = 0; i < k; ++i) n *= p;
    static const std::map<int, std::vector<int>> table = {
        {4, {1, 1, 1}},        // x^2+x+1 over F2
        {8, {1, 1, 0, 1}},     // x^3+x+1 over F2
        {9, {1, 0, 1}},        // x^2+1 over F3
        {16, {1, 1, 0, 0, 1}}, // x^4+x+1 over F2
        {25, {3, 0, 1}},       // x^2+3 over F5
        {27, {1, 2, 0, 1}},    // x^3+2x+1 over F3
        {49, {1, 0, 1}},       // x^2+1 over F7
    };
    if (k > 1) {
      auto it = table.find(n);
      if (it == table.end())
        throw parse_error("frobenius(q,m) supports prime-power q in {4,8,9,16,25,27,49} "
                          "and prime q");
      irreducible = it->second;
    }
  }

  std::vector<int> digits(int v) const {
    std::vector<int> d(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) {
      d[static_cast<size_t>(i)] = v % p;
      v /= p;
    }
    return d;
  }
  int value(const std::vector<int>& d) const {
    int v = 0;
    for (int i = k - 1; i >= 0; --i) v = v * p + d[static_cast<size_t>(i)];
    return v;
  }
  int add(int a, int b) const {
    auto da = digits(a), db = digits(b);
    for (int i = 0; i < k; ++i) da[static_cast<size_t>(i)] =
        (da[static_cast<size_t>(i)] + db[static_cast<size_t>(i)]) % p;
    return value(da);
  }
  int mul(int a, int b) const {
    if (k == 1) return static_cast<int>((static_cast<long long>(a) * b) % p);
    auto da = digits(a), db = digits(b);
    std::vector<int> prod(static_cast<size_t>(2 * k - 1), 0);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        prod[static_cast<size_t>(i + j)] =
            (prod[static_cast<size_t>(i + j)] +
             da[static_cast<size_t>(i)] * db[static_cast<size_t>(j)]) % p;
    for (int d = 2 * k - 2; d >= k; --d) {
      int c = prod[static_cast<size_t>(d)];
      if (c == 0) continue;
      prod[static_cast<size_t>(d)] = 0;
      for (int i = 0; i < k; ++i)
        prod[static_cast<size_t>(d - k + i)] =
            ((prod[static_cast<size_t>(d - k + i)] - c * irreducible[static_cast<size_t>(i)]) % p +
             p * p) % p;
    }
    prod.resize(static_cast<size_t>(k));
    return value(prod);
  }
  int mul_order(int a) const {
    int ord = 1, x = a;
    while (x != 1) {
      x = mul(x, a);
      ++ord;
    }
    return ord;
  }
};

PermGroupPtr make_frobenius(long long q, long long m) {
  std::vector<int> ps = prime_divisors(static_cast<uint64_t>(q));
  if (q < 3 || ps.size() != 1) throw parse_error("frobenius(q,m) needs a prime power q >= 3");
  int p = ps.front();
  int k = 0;
  for (long long v = q; v > 1; v /= p) ++k;
  if (m < 2 || (q - 1) % m != 0)
    throw parse_error("frobenius(q,m) needs m >= 2 dividing q-1");
  SmallField f(p, k);
  // Multiplier of exact order m.
  int a = 0;
  for (int v = 2; v < f.n; ++v)
    if (f.mul_order(v) == static_cast<int>(m)) {
      a = v;
      break;
    }
  if (a == 0) throw contradiction_error("no multiplicative element of the requested order");
  std::vector<Perm> gens;
  for (int i = 0; i < k; ++i) {
    int e = f.value([&] {
      std::vector<int> d(static_cast<size_t>(k), 0);
      d[static_cast<size_t>(i)] = 1;
      return d;
    }());
    std::vector<int> im(static_cast<size_t>(f.n));
    for (int v = 0; v < f.n; ++v) im[static_cast<size_t>(v)] = f.add(v, e);
    gens.push_back(Perm::from_images(std::move(im)));
  }
  std::vector<int> im(static_cast<size_t>(f.n));
  for (int v = 0; v < f.n; ++v) im[static_cast<size_t>(v)] = f.mul(a, v);
  gens.push_back(Perm::from_images(std::move(im)));
  return group_from_generators(std::move(gens), f.n);
}

}  // namespace

NamedGroupSpec parse_group_name(const std::string& text) {
  Cursor cur{text};
  NamedGroupSpec spec = parse_spec(cur);
  cur.skip_ws();
  if (cur.i != text.size()) throw parse_error("trailing input in group spec: " + text);
  return spec;
}

PermGroupPtr make_named_group(const NamedGroupSpec& spec) {
  const std::string& n = spec.name;
  if (n == "cyclic") {
    need_args(spec, 1);
    return make_cyclic(int_arg(spec, 0));
  }
  if (n == "dihedral") {
    need_args(spec, 1);
    return make_dihedral(int_arg(spec, 0));
  }
  if (n == "elementary_abelian") {
    need_args(spec, 2);
    return make_elementary_abelian(int_arg(spec, 0), int_arg(spec, 1));
  }
  if (n == "quaternion8") {
    need_args(spec, 0);
    return make_quaternion8();
  }
  if (n == "sym") {
    need_args(spec, 1);
    return make_sym(int_arg(spec, 0));
  }
  if (n == "alt") {
    need_args(spec, 1);
    return make_alt(int_arg(spec, 0));
  }
  if (n == "psl2") {
    need_args(spec, 1);
    return make_psl2(int_arg(spec, 0));
  }
  if (n == "direct_product") {
    need_args(spec, 2);
    return make_direct_product(make_named_group(spec_arg(spec, 0)),
                               make_named_group(spec_arg(spec, 1)));
  }
  if (n == "frobenius") {
    need_args(spec, 2);
    return make_frobenius(int_arg(spec, 0), int_arg(spec, 1));
  }
  throw parse_error("unknown group constructor: " + n);
}

PermGroupPtr make_named_group(const std::string& text) {
  return make_named_group(parse_group_name(text));
}

std::vector<std::string> catalog_constructor_names() {
  return {"cyclic",      "dihedral", "elementary_abelian", "quaternion8", "sym",
          "alt",         "psl2",     "direct_product",     "frobenius"};
}

FpfExample make_fpf_example(const std::string& name) {
  if (name == "a4_conj12") {
    PermGroupPtr g = make_named_group("alt(4)");
    Subgroup w = Subgroup::whole(g);
    Perm t = parse_cycles("(1,2)", 4);
    std::vector<Perm> table;
    for (const Perm& x : w.elements()) table.push_back(conjugated(t, x));
    GroupHom phi = GroupHom::from_table(w, w, std::move(table));
    return FpfExample{name, g, std::move(phi),
                      "conjugation by (1,2); fixes (1,2)(3,4) in A4 but acts "
                      "fixed-point-freely on the Sylow 3-subgroup <(1,2,3)>"};
  }
  if (name == "c3c3_inversion") {
    PermGroupPtr g = make_named_group("direct_product(cyclic(3),cyclic(3))");
    Subgroup w = Subgroup::whole(g);
    std::vector<Perm> table;
    for (const Perm& x : w.elements()) table.push_back(x.inverse());
    GroupHom phi = GroupHom::from_table(w, w, std::move(table));
    return FpfExample{name, g, std::move(phi),
                      "inversion on C3 x C3; fixed-point-free of order 2"};
  }
  if (name == "c2cubed_singer") {
    PermGroupPtr g = make_named_group("elementary_abelian(2,3)");
    Subgroup w = Subgroup::whole(g);
    // Companion action of x^3 + x + 1: e1 -> e2 -> e3 -> e1 e2; order 7.
    Perm e1 = parse_cycles("(1,2)", 6);
    Perm e2 = parse_cycles("(3,4)", 6);
    Perm e3 = parse_cycles("(5,6)", 6);
    GroupHom phi = GroupHom::build(w, w, {{e1, e2}, {e2, e3}, {e3, e1 * e2}});
    return FpfExample{name, g, std::move(phi),
                      "order-7 linear automorphism of C2^3; fixed-point-free, one "
                      "orbit of size 7 on the involutions"};
  }
  throw parse_error("unknown fpf example: " + name);
}

std::vector<std::string> fpf_example_names() {
  return {"a4_conj12", "c3c3_inversion", "c2cubed_singer"};
}

}  // namespace fuskit
