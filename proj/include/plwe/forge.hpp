#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "plwe/field.hpp"
#include "plwe/polyring.hpp"
#include "plwe/smallness.hpp"

// Parameter forging and vulnerability scanning: produce (q, rho, f) triples
// the decision attacks can break, and audit given moduli for roots in F_q
// and quadratic factors x^2 + rho with small-order -rho.

namespace plwe {

struct ParameterSet {
  std::uint64_t q = 0;
  std::uint64_t rho = 0;
  ModulusPoly f;
  double sigma = 0.0;
  std::uint64_t r = 0;  // multiplicative order of -rho mod q
  RegionMode region_mode = RegionMode::Interval;

  FieldParams field() const { return FieldParams{q, rho}; }
};

// Validates the full bundle: field params, divisibility of f by x^2 + rho
// mod q, r recomputed.  region_mode = Interval iff rho == 1.
ParameterSet make_parameter_set(std::uint64_t q, std::uint64_t rho, ModulusPoly f, double sigma);

// Smallest prime q >= min with -rho a non-residue mod q.
std::uint64_t find_prime(std::uint64_t min, std::uint64_t rho);

struct BuiltModulus {
  ModulusPoly f;
  std::uint64_t c = 0;          // the constant actually used (bumped on failure)
  std::uint64_t aux_prime = 0;  // certificate: f irreducible mod this prime
};

// f = (x^2 + rho)(x^(N-2) + c) + q, certified irreducible over the integers
// via an auxiliary prime <= 200; increments c (up to 32 attempts) until a
// certificate is found.  Throws std::runtime_error if none certifies.
BuiltModulus build_modulus(int N, std::uint64_t rho, std::uint64_t q, std::uint64_t c);

// All rho in [1, q-1] with x^2 + rho dividing f mod q and -rho a non-residue.
// O(qN): one pass accumulating the even/odd evaluations at each -rho.
std::vector<std::uint64_t> detect_quadratic_factors(const ModulusPoly& f, std::uint64_t q);

// Exhaustive root scan over F_q^*; pairs (alpha, mult_order(alpha)).
std::vector<std::pair<std::uint64_t, std::uint64_t>> find_fq_roots(const ModulusPoly& f, std::uint64_t q);

// The p^A-th primitive roots of unity in F_q give the factors x^(p^(k-A)) - rho
// of the p^k-th cyclotomic polynomial mod q.  Requires odd prime p,
// 2 <= A < k, and q = 1 + p^A*u with gcd(u, p) = 1.
std::vector<ModulusPoly> cyclotomic_prime_power_factors(std::uint64_t p, int k, int A, std::uint64_t q);

struct Finding {
  enum class Kind { Root, QuadraticFactor };
  Kind kind = Kind::Root;
  std::uint64_t value = 0;  // alpha for roots, rho for quadratic factors
  std::uint64_t order = 0;  // r
  bool small_order = false; // r <= 5, flagged prominently
  RegionMode region_mode = RegionMode::TableElos;
  double table_entries = 0;       // pre-dedup Cartesian size estimate
  double analytic_bound = 0;      // region size bound on the attack scale
  std::optional<std::uint64_t> exact_size;  // when cheap to enumerate
  bool feasible = false;          // bound < q and table within cap
  std::optional<std::uint64_t> m_for_theta[3];  // recommended M at theta 0.75 / 0.90 / 0.99
};

struct VulnerabilityReport {
  std::uint64_t q = 0;
  double sigma = 0.0;
  int N = 0;
  std::vector<Finding> root_findings;
  std::vector<Finding> quadratic_findings;
  // Conditions not evaluated by this scanner (small residues, composite
  // conductor structure) are named here rather than silently dropped.
  std::vector<std::string> out_of_scope;
};

inline constexpr double kScanThetas[3] = {0.75, 0.90, 0.99};

// find_fq_roots + detect_quadratic_factors, each finding sized and planned.
// Deterministic; infeasible findings are reported with feasible=false.
VulnerabilityReport scan(const ModulusPoly& f, std::uint64_t q, double sigma);

}  // namespace plwe
