#include "plwe/field.hpp"

#include <stdexcept>
#include <string>

namespace plwe {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t q) {
  std::uint64_t acc = 1 % q;
  base %= q;
  while (exp) {
    if (exp & 1) acc = mul_mod(acc, base, q);
    base = mul_mod(base, base, q);
    exp >>= 1;
  }
  return acc;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t q) {
  a %= q;
  if (a == 0) throw std::invalid_argument("inv_mod: zero has no inverse");
  return pow_mod(a, q - 2, q);
}

std::uint64_t reduce_signed(std::int64_t v, std::uint64_t q) {
  std::int64_t m = static_cast<std::int64_t>(q);
  std::int64_t r = v % m;
  if (r < 0) r += m;
  return static_cast<std::uint64_t>(r);
}

std::int64_t centered_lift(std::uint64_t v, std::uint64_t q) {
  v %= q;
  if (v > q / 2) return static_cast<std::int64_t>(v) - static_cast<std::int64_t>(q);
  return static_cast<std::int64_t>(v);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These witness sets are deterministic for all n < 2^64.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, int>> out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::uint64_t mult_order(std::uint64_t x, std::uint64_t q) {
  x %= q;
  if (x == 0) throw std::invalid_argument("mult_order: x is zero mod q");
  // Start from q-1 and strip each prime factor while the power stays 1.
  std::uint64_t ord = q - 1;
  for (auto [p, e] : factorize(q - 1)) {
    (void)e;
    while (ord % p == 0 && pow_mod(x, ord / p, q) == 1) ord /= p;
  }
  return ord;
}

bool is_quadratic_residue(std::uint64_t x, std::uint64_t q) {
  x %= q;
  if (x == 0) throw std::invalid_argument("is_quadratic_residue: x is zero mod q");
  return pow_mod(x, (q - 1) / 2, q) == 1;
}

FieldParams FieldParams::make(std::uint64_t q, std::uint64_t rho) {
  if (q < 3 || q % 2 == 0) throw std::invalid_argument("FieldParams: q must be an odd prime >= 3");
  if (!is_prime(q)) throw std::invalid_argument("FieldParams: q must be prime, got " + std::to_string(q));
  if (rho == 0 || rho >= q) throw std::invalid_argument("FieldParams: rho must lie in [1, q-1]");
  if (is_quadratic_residue(neg_mod(rho, q), q))
    throw std::invalid_argument("FieldParams: -rho is a quadratic residue mod q, x^2 + rho is not irreducible");
  return FieldParams{q, rho};
}

QuadExt ext_add(const FieldParams& F, QuadExt a, QuadExt b) {
  return {add_mod(a.c0, b.c0, F.q), add_mod(a.c1, b.c1, F.q)};
}

QuadExt ext_sub(const FieldParams& F, QuadExt a, QuadExt b) {
  return {sub_mod(a.c0, b.c0, F.q), sub_mod(a.c1, b.c1, F.q)};
}

QuadExt ext_mul(const FieldParams& F, QuadExt a, QuadExt b) {
  // (a0 + a1 A)(b0 + b1 A) = a0 b0 - rho a1 b1 + (a0 b1 + a1 b0) A
  std::uint64_t c0 = sub_mod(mul_mod(a.c0, b.c0, F.q), mul_mod(F.rho, mul_mod(a.c1, b.c1, F.q), F.q), F.q);
  std::uint64_t c1 = add_mod(mul_mod(a.c0, b.c1, F.q), mul_mod(a.c1, b.c0, F.q), F.q);
  return {c0, c1};
}

QuadExt ext_pow(const FieldParams& F, QuadExt a, std::uint64_t e) {
  QuadExt acc{1 % F.q, 0};
  while (e) {
    if (e & 1) acc = ext_mul(F, acc, a);
    a = ext_mul(F, a, a);
    e >>= 1;
  }
  return acc;
}

QuadExt frobenius(const FieldParams& F, QuadExt a) {
  return {a.c0, neg_mod(a.c1, F.q)};
}

std::uint64_t trace(const FieldParams& F, QuadExt a) {
  return add_mod(a.c0, a.c0, F.q);
}

std::uint64_t norm(const FieldParams& F, QuadExt a) {
  return add_mod(mul_mod(a.c0, a.c0, F.q), mul_mod(F.rho, mul_mod(a.c1, a.c1, F.q), F.q), F.q);
}

}  // namespace plwe
