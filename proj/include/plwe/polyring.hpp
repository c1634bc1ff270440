#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "plwe/field.hpp"

// The quotient ring R_q = F_q[x]/(f) and the maps the attacks rely on:
// evaluation at the zero-trace root alpha of x^2 + rho, the subring
// R_{q,0} = { p : p(alpha) in F_q }, and the star map keeping even-index
// coefficients.  Ring elements are coefficient vectors of length N with
// canonical residues, ascending powers.

namespace plwe {

using Poly = std::vector<std::uint64_t>;

struct ModulusPoly {
  std::vector<std::int64_t> coeffs;  // ascending; monic over the integers

  // Throws std::invalid_argument unless degree >= 2 and leading coeff == 1.
  static ModulusPoly from_coeffs(std::vector<std::int64_t> c);

  int N() const { return static_cast<int>(coeffs.size()) - 1; }
  int n_star() const { return (N() - 1) / 2; }

  std::vector<std::uint64_t> reduced_mod(std::uint64_t q) const;

  // Throws std::invalid_argument unless (x^2 + rho) divides f mod q.
  void check_divisible_by_quadratic(const FieldParams& F) const;

  bool operator==(const ModulusPoly&) const = default;
};

// Arithmetic context; q must be an odd prime below 2^59 (products are
// accumulated lazily in 128 bits).
class PolyRing {
 public:
  PolyRing(std::uint64_t q, ModulusPoly f);

  std::uint64_t q() const { return q_; }
  int N() const { return f_.N(); }
  const ModulusPoly& modulus() const { return f_; }
  const std::vector<std::uint64_t>& modulus_mod_q() const { return fq_; }

  Poly zero() const { return Poly(N(), 0); }
  Poly add(const Poly& a, const Poly& b) const;
  Poly sub(const Poly& a, const Poly& b) const;
  Poly mul(const Poly& a, const Poly& b) const;

  // Horner evaluation in F_q.
  std::uint64_t eval(const Poly& p, std::uint64_t x) const;

 private:
  void check_len(const Poly& p) const;

  std::uint64_t q_;
  ModulusPoly f_;
  std::vector<std::uint64_t> fq_;
  std::vector<std::pair<int, std::uint64_t>> support_;  // nonzero fq_ entries below degree N
};

// p(alpha) as c0 + c1*alpha: c0 = sum p_{2j}(-rho)^j, c1 = sum p_{2j+1}(-rho)^j.
QuadExt eval_at_alpha(const FieldParams& F, const Poly& p);

// p in R_{q,0}  <=>  the alpha-coefficient of p(alpha) vanishes.
bool is_in_rq0(const FieldParams& F, const Poly& p);

// Even-index coefficients of p; length n_star+1 for a ring element.
Poly star(const Poly& p);

// Plain F_q[x] helpers (dense, ascending, not reduced by any modulus).
Poly poly_mul(const Poly& a, const Poly& b, std::uint64_t q);
Poly poly_mod(Poly a, const Poly& m, std::uint64_t q);        // q prime
Poly poly_gcd(Poly a, Poly b, std::uint64_t q);               // monic gcd
Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, std::uint64_t q);
std::uint64_t poly_eval(const Poly& p, std::uint64_t x, std::uint64_t q);
int poly_degree(const Poly& p);  // -1 for the zero polynomial

// Rabin irreducibility test for f mod p (p prime, p not dividing the leading
// coefficient).  Exact, no randomness.
bool is_irreducible_mod(const ModulusPoly& f, std::uint64_t p);

// Smallest prime p <= aux_limit with f irreducible mod p, which certifies
// irreducibility over the integers.  nullopt if no prime in range works.
std::optional<std::uint64_t> certify_irreducible(const ModulusPoly& f, std::uint64_t aux_limit = 200);

}  // namespace plwe
