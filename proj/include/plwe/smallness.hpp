#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "plwe/field.hpp"

// Smallness regions: the candidate value sets the attacks test survivors
// against.  Three shapes: a plain integer interval (rho = 1), the lookup
// table of half-trace values for a general quadratic factor x^2 + rho, and
// the evaluation table for a root alpha of f in F_q.

namespace plwe {

enum class RegionMode { Interval, TableQuadratic, TableElos };

std::string region_mode_name(RegionMode m);
RegionMode region_mode_from_name(const std::string& s);

struct RegionLimits {
  std::uint64_t table_cap = 1ull << 24;
};

struct SmallnessRegion {
  RegionMode mode = RegionMode::Interval;
  std::uint64_t q = 0;
  std::vector<std::uint64_t> members;  // canonical residues, ascending, deduplicated
  double analytic_bound = 0.0;         // 0 when unknown (cache loads)
  std::uint64_t alpha = 0;             // TableElos provenance; 0 = unspecified

  std::uint64_t exact_size() const { return members.size(); }
  bool contains(std::uint64_t v) const;
};

struct RegionError : std::runtime_error {
  enum class Kind { TableTooLarge, CoversField };
  Kind kind;
  RegionError(Kind k, const std::string& what) : std::runtime_error(what), kind(k) {}
};

// Number of error coefficients feeding slot k of the quadratic table:
// indices 2(ir+k) <= N-1.
std::uint64_t quadratic_slot_count(int N, std::uint64_t r, std::uint64_t k);

// (4*sqrt(floor(n_star/r))*sigma + 1)^r
double quadratic_analytic_bound(int N, std::uint64_t r, double sigma);

// Interval of half-trace values for rho = 1: residues of |t| <= floor(2*sqrt(n_star)*sigma).
SmallnessRegion build_interval_region(std::uint64_t q, int N, double sigma);

// Half-trace table { sum_k (-rho)^k eps_k : eps_k in T_k } with per-slot
// T_k = Z cap [-2 sqrt(m_k) sigma, 2 sqrt(m_k) sigma].  r must equal the
// multiplicative order of -rho mod q.
SmallnessRegion build_quadratic_region(const FieldParams& F, int N, double sigma, std::uint64_t r,
                                       RegionLimits lim = {});

// Evaluation table { sum_j eps_j alpha^j : eps_j in T } over the r powers of a
// root alpha of order r, with T = Z cap [-2 sqrt(N/r) sigma, 2 sqrt(N/r) sigma].
SmallnessRegion build_elos_region(std::uint64_t q, std::uint64_t alpha, int N, double sigma,
                                  std::uint64_t r, RegionLimits lim = {});

// Cache format: header "PLWE-SIGMA v1 q=<q> mode=<mode> size=<n>" then one
// ascending decimal residue per line.
void save_region(const SmallnessRegion& region, std::ostream& out);
SmallnessRegion load_region(std::istream& in);

}  // namespace plwe
