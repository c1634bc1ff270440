#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "plwe/attack.hpp"
#include "plwe/field.hpp"
#include "plwe/forge.hpp"
#include "plwe/polyring.hpp"
#include "testutil.hpp"

using namespace plwe;
using testutil::modp;

namespace {

// exhaustive reference for the quadratic-factor scan
std::vector<std::uint64_t> detect_by_division(const ModulusPoly& f, std::uint64_t q) {
  std::vector<std::uint64_t> out;
  Poly fq = f.reduced_mod(q);
  for (std::uint64_t rho = 1; rho < q; ++rho) {
    if (poly_degree(poly_mod(fq, Poly{rho, 0, 1}, q)) >= 0) continue;
    if (is_quadratic_residue(neg_mod(rho, q), q)) continue;
    out.push_back(rho);
  }
  return out;
}

const BuiltModulus& flagship() {
  static BuiltModulus bm = build_modulus(316, 1672, 100003, 2);
  return bm;
}

}  // namespace

TEST_CASE("prime search respects the non-residue condition") {
  CHECK(find_prime(5000, 1) == 5003);
  CHECK_FALSE(is_prime(5001));
  CHECK_FALSE(is_prime(5002));
  CHECK(find_prime(3, 1) == 3);
  CHECK(find_prime(10007, 1) == 10007);
  // 97 and 101 are 1 mod 4, so -1 is a square there
  CHECK(find_prime(90, 1) == 103);
  CHECK(find_prime(100000, 1672) == 100003);
  // q dividing rho would make the factor x^2, not x^2 + rho
  CHECK(find_prime(3, 3) == 5);
}

TEST_CASE("modulus construction: small case bit for bit") {
  BuiltModulus bm = build_modulus(4, 1, 7, 1);
  CHECK(bm.f.coeffs == std::vector<std::int64_t>{8, 0, 2, 0, 1});  // (x^2+1)(x^2+1) + 7
  CHECK(bm.c == 1);
  CHECK(bm.aux_prime == 3);
  CHECK_NOTHROW(bm.f.check_divisible_by_quadratic(FieldParams::make(7, 1)));
}

TEST_CASE("modulus construction: the deep-order audit modulus") {
  const BuiltModulus& bm = flagship();
  CHECK(bm.c == 2);
  CHECK(bm.aux_prime == 157);
  REQUIRE(bm.f.N() == 316);
  std::vector<std::int64_t> want(317, 0);
  want[316] = 1;
  want[314] = 1672;
  want[2] = 2;
  want[0] = 103347;
  CHECK(bm.f.coeffs == want);

  // mod q the construction factors as (x^2 + rho) * (x^(N-2) + c)
  Poly cof(315, 0);
  cof[0] = 2;
  cof[314] = 1;
  CHECK(bm.f.reduced_mod(100003) == poly_mul(Poly{1672, 0, 1}, cof, 100003));
}

TEST_CASE("modulus construction guards") {
  CHECK_THROWS_AS(build_modulus(3, 1, 7, 1), std::invalid_argument);  // degree too low
  CHECK_THROWS_AS(build_modulus(8, 1, 7, 0), std::invalid_argument);
}

TEST_CASE("quadratic factor detection against long division") {
  CHECK(detect_quadratic_factors(modp({1, 0, 1}), 7) == std::vector<std::uint64_t>{1});
  CHECK(detect_quadratic_factors(modp({1, 0, 0, 0, 1}), 7).empty());
  // planted pair: (x^2+4)(x^2+5) over F_19, both -4 and -5 non-residues
  ModulusPoly planted = modp({20, 0, 9, 0, 1});
  CHECK(detect_quadratic_factors(planted, 19) == std::vector<std::uint64_t>{4, 5});
  for (std::uint64_t q : {7ull, 19ull, 101ull})
    for (const ModulusPoly& f :
         {modp({1, 0, 1}), modp({20, 0, 9, 0, 1}), modp({3, 1, 4, 1, 5, 1, 1}), modp({8, 0, 2, 0, 1})})
      CHECK(detect_quadratic_factors(f, q) == detect_by_division(f, q));

  auto rhos = detect_quadratic_factors(flagship().f, 100003);
  CHECK(std::binary_search(rhos.begin(), rhos.end(), 1672));
  for (std::uint64_t rho : rhos) {
    CHECK_FALSE(is_quadratic_residue(neg_mod(rho, 100003), 100003));
    Poly rem = poly_mod(flagship().f.reduced_mod(100003), Poly{rho, 0, 1}, 100003);
    CHECK(poly_degree(rem) < 0);
  }
}

TEST_CASE("root scan over F_q") {
  auto roots = find_fq_roots(modp({-1, 0, 1}), 7);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == std::pair<std::uint64_t, std::uint64_t>{1, 1});
  CHECK(roots[1] == std::pair<std::uint64_t, std::uint64_t>{6, 2});

  CHECK(find_fq_roots(modp({7, 1, 0, 1}), 7).empty());  // x(x^2+1), 0 excluded

  // the fifth cyclotomic polynomial splits mod 11; its roots have order 5
  auto phi5 = find_fq_roots(modp({1, 1, 1, 1, 1}), 11);
  REQUIRE(phi5.size() == 4);
  std::vector<std::uint64_t> alphas;
  for (auto [a, r] : phi5) {
    alphas.push_back(a);
    CHECK(r == 5);
    CHECK(pow_mod(a, 5, 11) == 1);
  }
  CHECK(alphas == std::vector<std::uint64_t>{3, 4, 5, 9});
}

TEST_CASE("prime-power cyclotomic factors") {
  // q = 19 = 1 + 9*2: the 27th cyclotomic polynomial splits into six cubics
  auto factors = cyclotomic_prime_power_factors(3, 3, 2, 19);
  REQUIRE(factors.size() == 6);  // phi(9)
  std::vector<std::uint64_t> zetas;
  Poly prod = {1};
  for (const ModulusPoly& f : factors) {
    REQUIRE(f.N() == 3);  // x^(3^(k-A)) - zeta
    CHECK(f.coeffs[1] == 0);
    CHECK(f.coeffs[2] == 0);
    CHECK(f.coeffs[3] == 1);
    std::uint64_t zeta = neg_mod(reduce_signed(f.coeffs[0], 19), 19);
    CHECK(mult_order(zeta, 19) == 9);  // primitive 9th root of unity
    zetas.push_back(zeta);
    CHECK(is_irreducible_mod(f, 19));
    prod = poly_mul(prod, f.reduced_mod(19), 19);
  }
  CHECK(zetas == std::vector<std::uint64_t>{4, 5, 6, 9, 16, 17});

  // the product is the 27th cyclotomic polynomial x^18 + x^9 + 1 mod 19
  Poly phi27(19, 0);
  phi27[0] = 1;
  phi27[9] = 1;
  phi27[18] = 1;
  CHECK(prod == phi27);

  CHECK_THROWS_AS(cyclotomic_prime_power_factors(3, 2, 2, 19), std::invalid_argument);   // A >= k
  CHECK_THROWS_AS(cyclotomic_prime_power_factors(3, 3, 2, 7), std::invalid_argument);    // 9 does not divide 6
  CHECK_THROWS_AS(cyclotomic_prime_power_factors(3, 3, 2, 109), std::invalid_argument);  // u shares the prime
  CHECK_THROWS_AS(cyclotomic_prime_power_factors(2, 3, 2, 17), std::invalid_argument);   // p must be odd
  CHECK_THROWS_AS(cyclotomic_prime_power_factors(9, 3, 2, 19), std::invalid_argument);   // p must be prime
}

TEST_CASE("parameter bundle validation") {
  ParameterSet ex1 = make_parameter_set(5003, 1, build_modulus(62, 1, 5003, 1).f, 8.0);
  CHECK(ex1.r == 2);
  CHECK(ex1.region_mode == RegionMode::Interval);

  ParameterSet deep = make_parameter_set(100003, 1672, flagship().f, 0.045);
  CHECK(deep.r == 42);
  CHECK(deep.region_mode == RegionMode::TableQuadratic);

  CHECK_THROWS_AS(make_parameter_set(7, 1, modp({1, 0, 0, 0, 1}), 8.0), std::invalid_argument);
  CHECK_THROWS_AS(make_parameter_set(7, 1, modp({7, 1, 0, 1}), 0.0), std::invalid_argument);
  CHECK_THROWS_AS(make_parameter_set(5, 1, modp({5, 1, 0, 1}), 1.0), std::invalid_argument);
}

TEST_CASE("vulnerability scan: the deep-order modulus at its attack scale") {
  VulnerabilityReport rep = scan(flagship().f, 100003, 0.045);
  CHECK(rep.q == 100003);
  CHECK(rep.N == 316);

  const Finding* deep = nullptr;
  for (const Finding& f : rep.quadratic_findings)
    if (f.value == 1672) deep = &f;
  REQUIRE(deep != nullptr);
  CHECK(deep->order == 42);
  CHECK_FALSE(deep->small_order);
  CHECK(deep->region_mode == RegionMode::TableQuadratic);
  CHECK(deep->analytic_bound == doctest::Approx(89127.409).epsilon(0.01));
  CHECK(deep->analytic_bound < 100003.0);
  CHECK(deep->feasible);
  REQUIRE(deep->exact_size.has_value());
  CHECK(*deep->exact_size == 1);  // sigma = 0.045 collapses every slot
  for (int i = 0; i < 3; ++i) {
    REQUIRE(deep->m_for_theta[i].has_value());
    CHECK(*deep->m_for_theta[i] == 1);
  }
  CHECK(rep.out_of_scope.size() == 2);
}

TEST_CASE("vulnerability scan: small-order roots are flagged") {
  VulnerabilityReport rep = scan(modp({-1, 0, 1}), 7, 0.5);
  REQUIRE(rep.root_findings.size() == 2);
  CHECK(rep.root_findings[0].value == 1);
  CHECK(rep.root_findings[0].order == 1);
  CHECK(rep.root_findings[0].small_order);
  CHECK(rep.root_findings[1].value == 6);
  CHECK(rep.root_findings[1].order == 2);
  CHECK(rep.root_findings[1].small_order);
  // rho = 6 is rejected by the non-residue filter: -6 = 1 is a square
  CHECK(rep.quadratic_findings.empty());
}

TEST_CASE("vulnerability scan: interval shape for rho = 1 uses the closed form") {
  ModulusPoly f = build_modulus(62, 1, 5003, 1).f;
  VulnerabilityReport rep = scan(f, 5003, 8.0);
  const Finding* one = nullptr;
  for (const Finding& g : rep.quadratic_findings)
    if (g.value == 1) one = &g;
  REQUIRE(one != nullptr);
  CHECK(one->region_mode == RegionMode::Interval);
  REQUIRE(one->exact_size.has_value());
  CHECK(*one->exact_size == 175);
  CHECK(one->analytic_bound == doctest::Approx(4.0 * std::sqrt(30.0) * 8.0 + 1.0));
  CHECK(one->feasible);
  REQUIRE(one->m_for_theta[0].has_value());
  CHECK(*one->m_for_theta[0] == plan_attack(0.75, 5003, 175).k);
}

TEST_CASE("vulnerability scan: clean modulus yields an empty report") {
  VulnerabilityReport rep = scan(modp({1, 0, 0, 0, 1}), 7, 1.0);
  CHECK(rep.root_findings.empty());
  CHECK(rep.quadratic_findings.empty());
  CHECK_FALSE(rep.out_of_scope.empty());
}

TEST_CASE("scans are deterministic") {
  ModulusPoly f = modp({20, 0, 9, 0, 1});
  VulnerabilityReport a = scan(f, 19, 1.0), b = scan(f, 19, 1.0);
  REQUIRE(a.quadratic_findings.size() == b.quadratic_findings.size());
  for (std::size_t i = 0; i < a.quadratic_findings.size(); ++i) {
    CHECK(a.quadratic_findings[i].value == b.quadratic_findings[i].value);
    CHECK(a.quadratic_findings[i].analytic_bound == b.quadratic_findings[i].analytic_bound);
  }
}
