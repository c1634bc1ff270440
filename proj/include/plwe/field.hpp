#pragma once

#include <cstdint>
#include <utility>
#include <vector>

// Arithmetic in F_q and in the quadratic extension F_q[x]/(x^2 + rho),
// where -rho is a non-residue so the extension is a field.  Elements of
// F_q are canonical residues in [0, q).  An extension element c0 + c1*alpha
// satisfies alpha^2 = -rho.

namespace plwe {

inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
  std::uint64_t s = a + b;  // q < 2^63 so no overflow
  return s >= q ? s - q : s;
}

inline std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
  return a >= b ? a - b : a + q - b;
}

inline std::uint64_t neg_mod(std::uint64_t a, std::uint64_t q) {
  return a == 0 ? 0 : q - a;
}

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % q);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t q);

// Multiplicative inverse; q must be prime and a nonzero mod q.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t q);

// Canonical residue of a signed integer.
std::uint64_t reduce_signed(std::int64_t v, std::uint64_t q);

// Signed representative in (-q/2, q/2].
std::int64_t centered_lift(std::uint64_t v, std::uint64_t q);

// Deterministic Miller-Rabin, valid for all 64-bit n.
bool is_prime(std::uint64_t n);

// Trial-division factorization as (prime, exponent) pairs, ascending.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);

// Order of x in F_q^*; q prime.  Throws std::invalid_argument if x == 0 mod q.
std::uint64_t mult_order(std::uint64_t x, std::uint64_t q);

// Euler criterion; q odd prime.  Throws std::invalid_argument if x == 0 mod q.
bool is_quadratic_residue(std::uint64_t x, std::uint64_t q);

// Inverse of 2 mod q (q odd).
inline std::uint64_t half_mod(std::uint64_t q) { return (q + 1) / 2; }

struct FieldParams {
  std::uint64_t q = 0;
  std::uint64_t rho = 0;

  // Validates: q an odd prime >= 3, rho in [1, q-1], and -rho a non-residue
  // mod q.  Throws std::invalid_argument with the violated condition.
  static FieldParams make(std::uint64_t q, std::uint64_t rho);
};

struct QuadExt {
  std::uint64_t c0 = 0;
  std::uint64_t c1 = 0;
  bool operator==(const QuadExt&) const = default;
};

QuadExt ext_add(const FieldParams& F, QuadExt a, QuadExt b);
QuadExt ext_sub(const FieldParams& F, QuadExt a, QuadExt b);
QuadExt ext_mul(const FieldParams& F, QuadExt a, QuadExt b);
QuadExt ext_pow(const FieldParams& F, QuadExt a, std::uint64_t e);

// Frobenius x -> x^q, computed as conjugation c0 - c1*alpha.
QuadExt frobenius(const FieldParams& F, QuadExt a);

// Tr(c0 + c1*alpha) = 2*c0.
std::uint64_t trace(const FieldParams& F, QuadExt a);

// N(c0 + c1*alpha) = c0^2 + rho*c1^2; in particular N(alpha) = rho.
std::uint64_t norm(const FieldParams& F, QuadExt a);

}  // namespace plwe
