#include "plwe/forge.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "plwe/attack.hpp"

namespace plwe {

ParameterSet make_parameter_set(std::uint64_t q, std::uint64_t rho, ModulusPoly f, double sigma) {
  FieldParams F = FieldParams::make(q, rho);
  f.check_divisible_by_quadratic(F);
  if (!(sigma > 0)) throw std::invalid_argument("ParameterSet: sigma must be positive");
  ParameterSet ps;
  ps.q = q;
  ps.rho = rho;
  ps.f = std::move(f);
  ps.sigma = sigma;
  ps.r = mult_order(neg_mod(rho, q), q);
  ps.region_mode = (rho == 1) ? RegionMode::Interval : RegionMode::TableQuadratic;
  return ps;
}

std::uint64_t find_prime(std::uint64_t min, std::uint64_t rho) {
  if (min < 3) min = 3;
  for (std::uint64_t n = min; n < min + 100000000ull; ++n) {
    if (!is_prime(n) || n < 3 || n % 2 == 0) continue;
    std::uint64_t r = rho % n;
    if (r == 0) continue;
    if (!is_quadratic_residue(neg_mod(r, n), n)) return n;
  }
  throw std::runtime_error("find_prime: no suitable prime found above " + std::to_string(min));
}

BuiltModulus build_modulus(int N, std::uint64_t rho, std::uint64_t q, std::uint64_t c) {
  if (N < 4) throw std::invalid_argument("build_modulus: N must be at least 4");
  if (c < 1) throw std::invalid_argument("build_modulus: c must be positive");
  FieldParams::make(q, rho);  // x^2 + rho must be irreducible mod q
  for (std::uint64_t cc = c; cc < c + 32; ++cc) {
    // (x^2 + rho)(x^(N-2) + c) + q
    std::vector<std::int64_t> coeffs(N + 1, 0);
    coeffs[N] = 1;
    coeffs[N - 2] = static_cast<std::int64_t>(rho);
    coeffs[2] += static_cast<std::int64_t>(cc);
    coeffs[0] = static_cast<std::int64_t>(cc * rho + q);
    ModulusPoly f = ModulusPoly::from_coeffs(std::move(coeffs));
    if (auto aux = certify_irreducible(f)) return BuiltModulus{std::move(f), cc, *aux};
  }
  throw std::runtime_error("build_modulus: no constant in [" + std::to_string(c) + ", " +
                           std::to_string(c + 31) + "] yields a certifiable modulus");
}

std::vector<std::uint64_t> detect_quadratic_factors(const ModulusPoly& f, std::uint64_t q) {
  Poly fq = f.reduced_mod(q);
  Poly even, odd;
  for (size_t i = 0; i < fq.size(); ++i) (i % 2 == 0 ? even : odd).push_back(fq[i]);
  std::vector<std::uint64_t> out;
  for (std::uint64_t rho = 1; rho < q; ++rho) {
    std::uint64_t w = q - rho;  // -rho
    if (poly_eval(even, w, q) != 0 || poly_eval(odd, w, q) != 0) continue;
    if (is_quadratic_residue(w, q)) continue;  // x^2 + rho must stay irreducible
    out.push_back(rho);
  }
  return out;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> find_fq_roots(const ModulusPoly& f, std::uint64_t q) {
  Poly fq = f.reduced_mod(q);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (std::uint64_t a = 1; a < q; ++a)
    if (poly_eval(fq, a, q) == 0) out.emplace_back(a, mult_order(a, q));
  return out;
}

std::vector<ModulusPoly> cyclotomic_prime_power_factors(std::uint64_t p, int k, int A, std::uint64_t q) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("cyclotomic factors: p must be an odd prime");
  if (A < 2 || A >= k) throw std::invalid_argument("cyclotomic factors: need 2 <= A < k");
  if (!is_prime(q)) throw std::invalid_argument("cyclotomic factors: q must be prime");

  std::uint64_t pA = 1;
  for (int i = 0; i < A; ++i) {
    if (pA > (q - 1) / p + 1) throw std::invalid_argument("cyclotomic factors: p^A exceeds q-1");
    pA *= p;
  }
  if ((q - 1) % pA != 0)
    throw std::invalid_argument("cyclotomic factors: q is not 1 mod p^A");
  std::uint64_t u = (q - 1) / pA;
  if (u % p == 0)
    throw std::invalid_argument("cyclotomic factors: (q-1)/p^A must be coprime to p");

  std::uint64_t deg = 1;  // p^(k-A)
  for (int i = 0; i < k - A; ++i) {
    deg *= p;
    if (deg > (1ull << 20)) throw std::invalid_argument("cyclotomic factors: factor degree too large");
  }

  // A generator of F_q^* maps to a generator of the p^A-torsion.
  std::uint64_t h = 2;
  while (mult_order(h, q) != q - 1) ++h;
  std::uint64_t g0 = pow_mod(h, u, q);  // order exactly p^A

  std::vector<std::uint64_t> zetas;
  std::uint64_t z = 1;
  for (std::uint64_t j = 1; j <= pA; ++j) {
    z = mul_mod(z, g0, q);
    if (j % p != 0) zetas.push_back(z);  // primitive p^A-th roots only
  }
  std::sort(zetas.begin(), zetas.end());

  std::vector<ModulusPoly> out;
  out.reserve(zetas.size());
  for (std::uint64_t zeta : zetas) {
    std::vector<std::int64_t> coeffs(deg + 1, 0);
    coeffs[deg] = 1;
    coeffs[0] = -static_cast<std::int64_t>(zeta);
    out.push_back(ModulusPoly::from_coeffs(std::move(coeffs)));
  }
  return out;
}

namespace {

void plan_finding(Finding& fd, std::uint64_t q, double effective_size) {
  fd.feasible = fd.table_entries <= static_cast<double>(RegionLimits{}.table_cap) &&
                effective_size < static_cast<double>(q) && effective_size >= 0;
  if (!fd.feasible) return;
  std::uint64_t size = static_cast<std::uint64_t>(std::llround(effective_size));
  if (size >= q) {
    fd.feasible = false;
    return;
  }
  for (int t = 0; t < 3; ++t) fd.m_for_theta[t] = plan_attack(kScanThetas[t], q, size).k;
}

}  // namespace

VulnerabilityReport scan(const ModulusPoly& f, std::uint64_t q, double sigma) {
  VulnerabilityReport rep;
  rep.q = q;
  rep.sigma = sigma;
  rep.N = f.N();
  int N = f.N();
  Poly fq = f.reduced_mod(q);

  for (auto [alpha, order] : find_fq_roots(f, q)) {
    if (poly_eval(fq, alpha, q) != 0) throw std::logic_error("scan: root finding failed re-verification");
    Finding fd;
    fd.kind = Finding::Kind::Root;
    fd.value = alpha;
    fd.order = order;
    fd.small_order = order <= 5;
    fd.region_mode = RegionMode::TableElos;
    double per_slot = 2.0 * std::sqrt(static_cast<double>(N) / static_cast<double>(order)) * sigma;
    double slot_width = 2.0 * std::floor(per_slot) + 1.0;
    fd.table_entries = std::pow(slot_width, static_cast<double>(order));
    fd.analytic_bound = std::pow(2.0 * per_slot + 1.0, static_cast<double>(order));
    if (fd.table_entries <= (1 << 20)) {
      try {
        fd.exact_size = build_elos_region(q, alpha, N, sigma, order).exact_size();
      } catch (const RegionError&) {
        // covers F_q; leave exact_size empty and let feasibility fail below
        fd.exact_size = q;
      }
    }
    plan_finding(fd, q, fd.exact_size ? static_cast<double>(*fd.exact_size) : fd.analytic_bound);
    rep.root_findings.push_back(std::move(fd));
  }

  for (std::uint64_t rho : detect_quadratic_factors(f, q)) {
    FieldParams F{q, rho};
    if (eval_at_alpha(F, fq) != QuadExt{0, 0})
      throw std::logic_error("scan: quadratic finding failed re-verification");
    Finding fd;
    fd.kind = Finding::Kind::QuadraticFactor;
    fd.value = rho;
    fd.order = mult_order(neg_mod(rho, q), q);
    fd.small_order = fd.order <= 5;
    fd.region_mode = (rho == 1) ? RegionMode::Interval : RegionMode::TableQuadratic;
    double entries = 1.0;
    for (std::uint64_t k = 0; k < fd.order; ++k) {
      std::uint64_t m_k = quadratic_slot_count(N, fd.order, k);
      entries *= 2.0 * std::floor(2.0 * std::sqrt(static_cast<double>(m_k)) * sigma) + 1.0;
    }
    fd.table_entries = entries;
    if (rho == 1) {
      std::uint64_t n_star = static_cast<std::uint64_t>((N - 1) / 2);
      double width = 2.0 * std::sqrt(static_cast<double>(n_star)) * sigma;
      fd.analytic_bound = 2.0 * width + 1.0;
      fd.exact_size = 2 * static_cast<std::uint64_t>(std::floor(width)) + 1;
    } else {
      fd.analytic_bound = quadratic_analytic_bound(N, fd.order, sigma);
      if (entries <= (1 << 20)) {
        try {
          fd.exact_size = build_quadratic_region(F, N, sigma, fd.order).exact_size();
        } catch (const RegionError&) {
          fd.exact_size = q;
        }
      }
    }
    plan_finding(fd, q, fd.exact_size ? static_cast<double>(*fd.exact_size) : fd.analytic_bound);
    rep.quadratic_findings.push_back(std::move(fd));
  }

  rep.out_of_scope = {"roots with small residue (not scanned)",
                      "composite-conductor cyclotomic structure (not scanned)"};
  return rep;
}

}  // namespace plwe
