#include "progressio/constructors.hpp"

#include <string>

#include "progressio/error.hpp"
#include "progressio/numtheory.hpp"

namespace progressio::constructors {

namespace {

using numtheory::is_prime;

void require_prime(std::uint64_t p, char const* what) {
  if (!is_prime(p)) {
    throw PreconditionError(std::string(what) + " must be prime, got " + std::to_string(p));
  }
}

/// Saturating product, so cap checks cannot overflow.
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  while (exp--) r = checked_mul(r, base);
  return r;
}

void require_within(std::uint64_t order, std::size_t cap, std::string const& name) {
  if (order > cap) throw CapExceeded(name + " of order " + std::to_string(order), cap);
}

Permutation from_map(std::size_t degree, auto&& f) {
  std::vector<Point> images(degree);
  for (std::size_t x = 0; x < degree; ++x) images[x] = static_cast<Point>(f(x));
  return Permutation(std::move(images));
}

// Polynomials over F_p as coefficient vectors, constant term first.
using Poly = std::vector<std::uint64_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

/// Remainder of a modulo a monic divisor d.
Poly poly_mod(Poly a, Poly const& d, std::uint64_t p) {
  trim(a);
  std::size_t const dd = d.size() - 1;
  while (a.size() > dd) {
    std::uint64_t const lead = a.back();
    std::size_t const shift = a.size() - 1 - dd;
    for (std::size_t i = 0; i <= dd; ++i)
      a[shift + i] = (a[shift + i] + (p - lead) * d[i]) % p;
    trim(a);
  }
  return a;
}

Poly decode(std::uint64_t code, std::uint64_t p, std::uint64_t len) {
  Poly a(len);
  for (std::uint64_t i = 0; i < len; ++i) {
    a[i] = code % p;
    code /= p;
  }
  return a;
}

bool is_irreducible(Poly const& f, std::uint64_t p) {
  std::uint64_t const deg = f.size() - 1;
  for (std::uint64_t d = 1; 2 * d <= deg; ++d) {
    std::uint64_t const count = checked_pow(p, d);
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly g = decode(code, p, d);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

FiniteGroup cyclic(std::uint64_t n, std::size_t cap) {
  if (n == 0) throw PreconditionError("C: order must be at least 1");
  require_within(n, cap, "C(" + std::to_string(n) + ")");
  auto gen = from_map(n, [n](std::size_t x) { return (x + 1) % n; });
  return close_group(n, {gen}, cap);
}

FiniteGroup elementary_abelian(std::uint64_t p, std::uint64_t k, std::size_t cap) {
  require_prime(p, "ElemAb: p");
  if (k == 0) throw PreconditionError("ElemAb: rank must be at least 1");
  require_within(checked_pow(p, k), cap, "ElemAb");
  std::size_t const degree = p * k;
  std::vector<Permutation> gens;
  for (std::uint64_t i = 0; i < k; ++i) {
    gens.push_back(from_map(degree, [&](std::size_t x) {
      if (x / p != i) return x;
      return i * p + (x % p + 1) % p;
    }));
  }
  return close_group(degree, std::move(gens), cap);
}

FiniteGroup direct_product(FiniteGroup const& g, FiniteGroup const& h, std::size_t cap) {
  require_within(checked_mul(g.order(), h.order()), cap, "direct product");
  std::size_t const degree = g.degree() + h.degree();
  std::vector<Permutation> gens;
  for (auto const& x : g.generators()) gens.push_back(x.shifted(0, degree));
  for (auto const& y : h.generators()) gens.push_back(y.shifted(g.degree(), degree));
  return close_group(degree, std::move(gens), cap);
}

FiniteGroup symmetric(std::uint64_t n, std::size_t cap) {
  if (n == 0) throw PreconditionError("S: n must be at least 1");
  std::uint64_t order = 1;
  for (std::uint64_t i = 2; i <= n; ++i) order = checked_mul(order, i);
  require_within(order, cap, "S(" + std::to_string(n) + ")");
  std::vector<Permutation> gens;
  if (n >= 2) {
    gens.push_back(Permutation::from_cycles(n, {{0, 1}}));
    if (n >= 3) {
      gens.push_back(from_map(n, [n](std::size_t x) { return (x + 1) % n; }));
    }
  }
  return close_group(n, std::move(gens), cap);
}

FiniteGroup alternating(std::uint64_t n, std::size_t cap) {
  if (n == 0) throw PreconditionError("A: n must be at least 1");
  std::uint64_t order = 1;
  for (std::uint64_t i = 3; i <= n; ++i) order = checked_mul(order, i);
  require_within(order, cap, "A(" + std::to_string(n) + ")");
  // 3-cycles (1 2 k) generate A_n
  std::vector<Permutation> gens;
  for (Point k = 2; k < n; ++k) gens.push_back(Permutation::from_cycles(n, {{0, 1, k}}));
  return close_group(n, std::move(gens), cap);
}

FiniteGroup quaternion8() {
  // element e = unit + 4·sign, units 1, i, j, k
  constexpr int unit_product[4][4] = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  constexpr int unit_sign[4][4] = {
      {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  auto mul = [&](std::size_t a, std::size_t b) {
    std::size_t const ua = a % 4, ub = b % 4;
    std::size_t const sign = (a / 4 + b / 4 + unit_sign[ua][ub]) % 2;
    return static_cast<std::size_t>(unit_product[ua][ub]) + 4 * sign;
  };
  auto right_mult = [&](std::size_t g) {
    return from_map(8, [&](std::size_t x) { return mul(x, g); });
  };
  return close_group(8, {right_mult(1), right_mult(2)});
}

std::uint64_t nonabelian_pq_multiplier(std::uint64_t p, std::uint64_t q) {
  require_prime(p, "NonAbPQ: p");
  require_prime(q, "NonAbPQ: q");
  if (p == q || (p - 1) % q != 0) {
    throw PreconditionError("NonAbPQ: no nonabelian group of order pq exists for p=" +
                            std::to_string(p) + " q=" + std::to_string(q) + " (q does not divide p-1)");
  }
  for (std::uint64_t r = 2; r < p; ++r)
    if (numtheory::multiplicative_order(r, p) == q) return r;
  throw PreconditionError("NonAbPQ: no element of order q modulo p");
}

FiniteGroup nonabelian_pq(std::uint64_t p, std::uint64_t q) {
  std::uint64_t const r = nonabelian_pq_multiplier(p, q);
  auto shift = from_map(p, [p](std::size_t x) { return (x + 1) % p; });
  auto scale = from_map(p, [p, r](std::size_t x) { return x * r % p; });
  return close_group(p, {shift, scale});
}

std::uint64_t FieldAction::add(std::uint64_t x, std::uint64_t y) const {
  std::uint64_t out = 0, place = 1;
  for (std::uint64_t i = 0; i < b; ++i) {
    out += ((x % p + y % p) % p) * place;
    x /= p;
    y /= p;
    place *= p;
  }
  return out;
}

std::uint64_t FieldAction::mul(std::uint64_t x, std::uint64_t y) const {
  Poly const a = decode(x, p, b);
  Poly const c = decode(y, p, b);
  Poly prod(2 * b, 0);
  for (std::uint64_t i = 0; i < b; ++i)
    for (std::uint64_t j = 0; j < b; ++j) prod[i + j] = (prod[i + j] + a[i] * c[j]) % p;
  Poly f = modulus;
  f.push_back(1);
  Poly r = poly_mod(prod, f, p);
  std::uint64_t out = 0, place = 1;
  for (std::uint64_t i = 0; i < r.size(); ++i, place *= p) out += r[i] * place;
  return out;
}

FieldAction frobenius_field_parameters(std::uint64_t p, std::uint64_t q) {
  require_prime(p, "Frob: p");
  require_prime(q, "Frob: q");
  if (p == q) throw PreconditionError("Frob: p and q must be distinct");

  FieldAction fa;
  fa.p = p;
  fa.q = q;
  fa.b = numtheory::multiplicative_order(p, q);
  fa.field_size = checked_pow(p, fa.b);

  for (std::uint64_t code = 0; code < fa.field_size; ++code) {
    Poly f = decode(code, p, fa.b);
    f.push_back(1);
    if (is_irreducible(f, p)) {
      fa.modulus = decode(code, p, fa.b);
      break;
    }
  }

  for (std::uint64_t z = 2; z < fa.field_size; ++z) {
    std::uint64_t x = z, k = 1;
    while (x != 1 && k <= q) {
      x = fa.mul(x, z);
      ++k;
    }
    if (x == 1 && k == q) {
      fa.multiplier = z;
      break;
    }
  }
  return fa;
}

FiniteGroup frobenius_field_action(std::uint64_t p, std::uint64_t q, std::size_t cap) {
  require_prime(p, "Frob: p");
  require_prime(q, "Frob: q");
  if (p == q) throw PreconditionError("Frob: p and q must be distinct");
  std::uint64_t const b = numtheory::multiplicative_order(p, q);
  require_within(checked_mul(checked_pow(p, b), q), cap,
                 "Frob(" + std::to_string(p) + "," + std::to_string(q) + ")");

  FieldAction const fa = frobenius_field_parameters(p, q);
  std::size_t const n = fa.field_size;
  std::vector<Permutation> gens;
  std::uint64_t basis = 1;
  for (std::uint64_t i = 0; i < fa.b; ++i, basis *= p)
    gens.push_back(from_map(n, [&](std::size_t x) { return fa.add(x, basis); }));
  gens.push_back(from_map(n, [&](std::size_t x) { return fa.mul(x, fa.multiplier); }));
  return close_group(n, std::move(gens), cap);
}

FiniteGroup heisenberg(std::uint64_t p, std::size_t cap) {
  require_prime(p, "Heis: p");
  if (p == 2) throw PreconditionError("Heis: p must be odd");
  require_within(checked_pow(p, 3), cap, "Heis(" + std::to_string(p) + ")");
  std::size_t const n = p * p;
  // point (x, y) ↦ x + p·y
  auto a = from_map(n, [p](std::size_t v) { return (v % p + 1) % p + p * (v / p); });
  auto b = from_map(n, [p](std::size_t v) {
    std::size_t const x = v % p, y = v / p;
    return x + p * ((y + x) % p);
  });
  return close_group(n, {a, b}, cap);
}

FiniteGroup modular_maximal(std::uint64_t p, std::size_t cap) {
  require_prime(p, "ModMax: p");
  if (p == 2) throw PreconditionError("ModMax: p must be odd");
  require_within(checked_pow(p, 3), cap, "ModMax(" + std::to_string(p) + ")");
  std::size_t const n = p * p;
  auto a = from_map(n, [n](std::size_t x) { return (x + 1) % n; });
  auto b = from_map(n, [n, p](std::size_t x) { return x * (1 + p) % n; });
  return close_group(n, {a, b}, cap);
}

}  // namespace progressio::constructors
