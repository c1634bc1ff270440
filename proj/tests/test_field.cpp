#include <doctest.h>

#include <cstdint>
#include <set>
#include <stdexcept>

#include "plwe/field.hpp"
#include "plwe/rng.hpp"

using namespace plwe;

namespace {

// Independent order computation: walk the powers.
std::uint64_t order_by_walk(std::uint64_t x, std::uint64_t q) {
  std::uint64_t acc = x % q, e = 1;
  while (acc != 1) {
    acc = mul_mod(acc, x, q);
    ++e;
  }
  return e;
}

bool prime_by_trial(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

TEST_CASE("modular primitives against direct computation") {
  const std::uint64_t q = 10007;
  Rng rng(11);
  for (int i = 0; i < 2000; ++i) {
    std::uint64_t a = rng.below(q), b = rng.below(q);
    CHECK(add_mod(a, b, q) == (a + b) % q);
    CHECK(sub_mod(a, b, q) == (a + q - b) % q);
    CHECK(mul_mod(a, b, q) == a * b % q);  // products fit in 64 bits here
    CHECK(add_mod(a, neg_mod(a, q), q) == 0);
    if (a != 0) CHECK(mul_mod(a, inv_mod(a, q), q) == 1);
  }
  CHECK(pow_mod(3, 0, q) == 1);
  CHECK(pow_mod(3, 5, q) == 243);
  CHECK(pow_mod(2, q - 1, q) == 1);  // Fermat
  CHECK(mul_mod(half_mod(q), 2, q) == 1);
  CHECK(mul_mod(half_mod(7), 2, 7) == 1);
}

TEST_CASE("signed reduction and centered lift") {
  CHECK(reduce_signed(-3, 7) == 4);
  CHECK(reduce_signed(7, 7) == 0);
  CHECK(reduce_signed(-7, 7) == 0);
  CHECK(reduce_signed(103347, 100003) == 3344);
  CHECK(centered_lift(4, 7) == -3);
  CHECK(centered_lift(3, 7) == 3);
  CHECK(centered_lift(0, 7) == 0);
  for (std::uint64_t v = 0; v < 17; ++v) {
    std::int64_t c = centered_lift(v, 17);
    CHECK(c > -17 / 2 - 1);
    CHECK(c <= 17 / 2);
    CHECK(reduce_signed(c, 17) == v);
  }
}

TEST_CASE("primality matches trial division") {
  for (std::uint64_t n = 0; n < 2000; ++n) CHECK(is_prime(n) == prime_by_trial(n));
  CHECK(is_prime(5003));
  CHECK(is_prime(10007));
  CHECK(is_prime(100003));
  CHECK(is_prime(120067));
  CHECK_FALSE(is_prime(100001));
  CHECK_FALSE(is_prime(1ull << 32));
}

TEST_CASE("factorization recomposes") {
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    std::uint64_t n = 2 + rng.below(1 << 20);
    std::uint64_t prod = 1;
    for (auto [p, e] : factorize(n)) {
      CHECK(is_prime(p));
      for (int j = 0; j < e; ++j) prod *= p;
    }
    CHECK(prod == n);
  }
  auto f = factorize(100002);  // 2 * 3 * 7 * 2381
  CHECK(f.size() == 4);
  CHECK(f[0].first == 2);
  CHECK(f[3].first == 2381);
}

TEST_CASE("quadratic residues match the set of squares") {
  for (std::uint64_t q : {7ull, 17ull, 19ull, 101ull}) {
    std::set<std::uint64_t> squares;
    for (std::uint64_t x = 1; x < q; ++x) squares.insert(mul_mod(x, x, q));
    for (std::uint64_t x = 1; x < q; ++x)
      CHECK(is_quadratic_residue(x, q) == (squares.count(x) > 0));
  }
  CHECK(is_quadratic_residue(2, 7));
  CHECK_FALSE(is_quadratic_residue(6, 7));         // -1 is a non-residue mod 7
  CHECK_FALSE(is_quadratic_residue(5002, 5003));   // 5003 = 3 mod 4
  CHECK_FALSE(is_quadratic_residue(98331, 100003));  // -1672
  CHECK_THROWS_AS(is_quadratic_residue(0, 7), std::invalid_argument);
}

TEST_CASE("multiplicative order matches the power walk") {
  for (std::uint64_t q : {7ull, 17ull, 19ull, 101ull})
    for (std::uint64_t x = 1; x < q; ++x) {
      std::uint64_t r = mult_order(x, q);
      CHECK(r == order_by_walk(x, q));
      CHECK((q - 1) % r == 0);
    }
  CHECK(mult_order(6, 7) == 2);
  CHECK(mult_order(5, 7) == 6);
  CHECK(mult_order(98331, 100003) == 42);  // -1672 mod 100003
  CHECK(mult_order(1, 7) == 1);
  CHECK_THROWS_AS(mult_order(0, 7), std::invalid_argument);
}

TEST_CASE("field parameter validation") {
  FieldParams F = FieldParams::make(7, 1);
  CHECK(F.q == 7);
  CHECK(F.rho == 1);
  CHECK_NOTHROW(FieldParams::make(19, 1));
  CHECK_NOTHROW(FieldParams::make(17, 14));   // -14 = 3, order 16 non-residue
  CHECK_NOTHROW(FieldParams::make(100003, 1672));
  CHECK_THROWS_AS(FieldParams::make(9, 1), std::invalid_argument);   // composite
  CHECK_THROWS_AS(FieldParams::make(2, 1), std::invalid_argument);   // even
  CHECK_THROWS_AS(FieldParams::make(5, 1), std::invalid_argument);   // -1 = 4 = 2^2 mod 5
  CHECK_THROWS_AS(FieldParams::make(7, 0), std::invalid_argument);
  CHECK_THROWS_AS(FieldParams::make(7, 7), std::invalid_argument);
  CHECK_THROWS_AS(FieldParams::make(7, 3), std::invalid_argument);   // -3 = 4 = 2^2 mod 7
}

TEST_CASE("extension arithmetic: alpha^2 = -rho and the worked products") {
  FieldParams F = FieldParams::make(7, 1);
  QuadExt alpha{0, 1};
  CHECK(ext_mul(F, alpha, alpha) == QuadExt{6, 0});  // -1 mod 7
  // (1 + 2a)(3 + a) = 3 + a + 6a + 2a^2 = 1 + 7a = 1
  CHECK(ext_mul(F, QuadExt{1, 2}, QuadExt{3, 1}) == QuadExt{1, 0});
  CHECK(trace(F, QuadExt{3, 4}) == 6);
  CHECK(trace(F, alpha) == 0);
  CHECK(frobenius(F, QuadExt{3, 4}) == QuadExt{3, 3});
  CHECK(norm(F, alpha) == F.rho);
  CHECK(norm(F, QuadExt{3, 4}) == mul_mod(3, 3, 7) + mul_mod(4, 4, 7) * F.rho % 7);
}

TEST_CASE("extension field laws hold on random elements") {
  for (auto [q, rho] : {std::pair<std::uint64_t, std::uint64_t>{7, 1}, {17, 14}, {19, 1}, {101, 91}}) {
    FieldParams F = FieldParams::make(q, rho);
    Rng rng(q * 1000 + rho);
    auto rand_ext = [&] { return QuadExt{rng.below(q), rng.below(q)}; };
    for (int i = 0; i < 300; ++i) {
      QuadExt x = rand_ext(), y = rand_ext(), z = rand_ext();
      CHECK(ext_mul(F, x, y) == ext_mul(F, y, x));
      CHECK(ext_mul(F, ext_mul(F, x, y), z) == ext_mul(F, x, ext_mul(F, y, z)));
      CHECK(ext_mul(F, x, ext_add(F, y, z)) == ext_add(F, ext_mul(F, x, y), ext_mul(F, x, z)));
      CHECK(ext_sub(F, ext_add(F, x, y), y) == x);
      CHECK(ext_mul(F, x, QuadExt{1, 0}) == x);
      if (x.c0 != 0 || x.c1 != 0) {
        CHECK(ext_pow(F, x, q * q - 1) == QuadExt{1, 0});
        CHECK(ext_mul(F, x, ext_pow(F, x, q * q - 2)) == QuadExt{1, 0});
      }
    }
  }
}

TEST_CASE("frobenius is x -> x^q and an involution") {
  for (auto [q, rho] : {std::pair<std::uint64_t, std::uint64_t>{7, 1}, {17, 14}, {19, 4}}) {
    FieldParams F = FieldParams::make(q, rho);
    Rng rng(q);
    for (int i = 0; i < 200; ++i) {
      QuadExt x{rng.below(q), rng.below(q)};
      CHECK(frobenius(F, x) == ext_pow(F, x, q));
      CHECK(frobenius(F, frobenius(F, x)) == x);
      // trace and norm land in F_q: x + x^q and x * x^q have no alpha part
      QuadExt tr = ext_add(F, x, frobenius(F, x));
      QuadExt nm = ext_mul(F, x, frobenius(F, x));
      CHECK(tr.c1 == 0);
      CHECK(nm.c1 == 0);
      CHECK(tr.c0 == trace(F, x));
      CHECK(nm.c0 == norm(F, x));
    }
  }
}

TEST_CASE("trace is F_q-linear") {
  FieldParams F = FieldParams::make(101, 91);
  Rng rng(3);
  for (int i = 0; i < 500; ++i) {
    QuadExt x{rng.below(101), rng.below(101)};
    QuadExt y{rng.below(101), rng.below(101)};
    std::uint64_t c = rng.below(101);
    QuadExt cx{mul_mod(c, x.c0, 101), mul_mod(c, x.c1, 101)};
    CHECK(trace(F, ext_add(F, x, y)) == add_mod(trace(F, x), trace(F, y), 101));
    CHECK(trace(F, cx) == mul_mod(c, trace(F, x), 101));
  }
}

TEST_CASE("traces of alpha powers alternate: 0 at odd j, 2(-rho)^(j/2) at even j") {
  for (auto [q, rho] : {std::pair<std::uint64_t, std::uint64_t>{7, 1}, {19, 1}, {17, 14}, {100003, 1672}}) {
    FieldParams F = FieldParams::make(q, rho);
    QuadExt pw{1, 0};
    QuadExt alpha{0, 1};
    std::uint64_t neg_rho_pow = 1;
    for (int j = 0; j < 24; ++j) {
      if (j % 2 == 1) {
        CHECK(trace(F, pw) == 0);
      } else {
        CHECK(trace(F, pw) == mul_mod(2, neg_rho_pow, q));
        neg_rho_pow = mul_mod(neg_rho_pow, neg_mod(rho, q), q);
      }
      pw = ext_mul(F, pw, alpha);
    }
  }
}
