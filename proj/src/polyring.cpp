#include "plwe/polyring.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace plwe {

namespace {

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly make_monic(Poly p, std::uint64_t q) {
  trim(p);
  if (p.empty()) return p;
  std::uint64_t lead = p.back();
  if (lead == 1) return p;
  std::uint64_t li = inv_mod(lead, q);
  for (auto& c : p) c = mul_mod(c, li, q);
  return p;
}

}  // namespace

ModulusPoly ModulusPoly::from_coeffs(std::vector<std::int64_t> c) {
  if (c.size() < 3) throw std::invalid_argument("ModulusPoly: degree must be at least 2");
  if (c.back() != 1) throw std::invalid_argument("ModulusPoly: leading coefficient must be 1");
  return ModulusPoly{std::move(c)};
}

std::vector<std::uint64_t> ModulusPoly::reduced_mod(std::uint64_t q) const {
  std::vector<std::uint64_t> out(coeffs.size());
  for (size_t i = 0; i < coeffs.size(); ++i) out[i] = reduce_signed(coeffs[i], q);
  return out;
}

void ModulusPoly::check_divisible_by_quadratic(const FieldParams& F) const {
  Poly fq = reduced_mod(F.q);
  QuadExt v = eval_at_alpha(F, fq);
  if (v.c0 != 0 || v.c1 != 0)
    throw std::invalid_argument("modulus is not divisible by x^2 + rho mod q (f(alpha) = " +
                                std::to_string(v.c0) + " + " + std::to_string(v.c1) + "*alpha)");
}

PolyRing::PolyRing(std::uint64_t q, ModulusPoly f) : q_(q), f_(std::move(f)) {
  if (q < 2 || q >= (1ull << 59)) throw std::invalid_argument("PolyRing: q out of range");
  fq_ = f_.reduced_mod(q_);
  for (int i = 0; i < f_.N(); ++i)
    if (fq_[i] != 0) support_.emplace_back(i, fq_[i]);
}

void PolyRing::check_len(const Poly& p) const {
  if (static_cast<int>(p.size()) != N())
    throw std::invalid_argument("ring element has length " + std::to_string(p.size()) +
                                ", expected " + std::to_string(N()));
}

Poly PolyRing::add(const Poly& a, const Poly& b) const {
  check_len(a);
  check_len(b);
  Poly out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = add_mod(a[i], b[i], q_);
  return out;
}

Poly PolyRing::sub(const Poly& a, const Poly& b) const {
  check_len(a);
  check_len(b);
  Poly out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = sub_mod(a[i], b[i], q_);
  return out;
}

Poly PolyRing::mul(const Poly& a, const Poly& b) const {
  check_len(a);
  check_len(b);
  int n = N();
  std::vector<std::uint64_t> wide(2 * n - 1, 0);
  for (int i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    unsigned __int128 ai = a[i];
    for (int j = 0; j < n; ++j) {
      // q < 2^59 keeps the running sum below 2^128 for any n here
      wide[i + j] = static_cast<std::uint64_t>((static_cast<unsigned __int128>(wide[i + j]) + ai * b[j]) % q_);
    }
  }
  for (int i = 2 * n - 2; i >= n; --i) {
    std::uint64_t c = wide[i];
    if (c == 0) continue;
    wide[i] = 0;
    for (auto [j, fj] : support_) wide[i - n + j] = sub_mod(wide[i - n + j], mul_mod(c, fj, q_), q_);
  }
  wide.resize(n);
  return wide;
}

std::uint64_t PolyRing::eval(const Poly& p, std::uint64_t x) const {
  check_len(p);
  return poly_eval(p, x, q_);
}

QuadExt eval_at_alpha(const FieldParams& F, const Poly& p) {
  std::uint64_t t = neg_mod(F.rho % F.q, F.q);
  std::uint64_t c0 = 0, c1 = 0;
  // Horner over even and odd parts in the variable alpha^2 = -rho.
  size_t n = p.size();
  for (size_t k = n; k-- > 0;) {
    if (k % 2 == 0)
      c0 = add_mod(mul_mod(c0, t, F.q), p[k] % F.q, F.q);
    else
      c1 = add_mod(mul_mod(c1, t, F.q), p[k] % F.q, F.q);
  }
  return {c0, c1};
}

bool is_in_rq0(const FieldParams& F, const Poly& p) {
  return eval_at_alpha(F, p).c1 == 0;
}

Poly star(const Poly& p) {
  Poly out;
  out.reserve((p.size() + 1) / 2);
  for (size_t i = 0; i < p.size(); i += 2) out.push_back(p[i]);
  return out;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint64_t q) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    unsigned __int128 ai = a[i];
    for (size_t j = 0; j < b.size(); ++j)
      out[i + j] = static_cast<std::uint64_t>((static_cast<unsigned __int128>(out[i + j]) + ai * b[j]) % q);
  }
  return out;
}

Poly poly_mod(Poly a, const Poly& m, std::uint64_t q) {
  Poly mm = m;
  trim(mm);
  if (mm.empty()) throw std::invalid_argument("poly_mod: zero modulus");
  trim(a);
  int dm = static_cast<int>(mm.size()) - 1;
  if (dm == 0) return {};
  std::uint64_t li = inv_mod(mm.back(), q);
  for (int i = static_cast<int>(a.size()) - 1; i >= dm; --i) {
    std::uint64_t c = a[i];
    if (c == 0) continue;
    std::uint64_t s = mul_mod(c, li, q);
    for (int j = 0; j <= dm; ++j) a[i - dm + j] = sub_mod(a[i - dm + j], mul_mod(s, mm[j], q), q);
  }
  a.resize(dm);
  trim(a);
  return a;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t q) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, q);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(std::move(a), q);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, std::uint64_t q) {
  Poly acc{1 % q};
  base = poly_mod(std::move(base), m, q);
  while (e) {
    if (e & 1) acc = poly_mod(poly_mul(acc, base, q), m, q);
    base = poly_mod(poly_mul(base, base, q), m, q);
    e >>= 1;
  }
  return acc;
}

std::uint64_t poly_eval(const Poly& p, std::uint64_t x, std::uint64_t q) {
  std::uint64_t acc = 0;
  for (size_t i = p.size(); i-- > 0;) acc = add_mod(mul_mod(acc, x, q), p[i] % q, q);
  return acc;
}

int poly_degree(const Poly& p) {
  for (size_t i = p.size(); i-- > 0;)
    if (p[i] != 0) return static_cast<int>(i);
  return -1;
}

bool is_irreducible_mod(const ModulusPoly& f, std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("is_irreducible_mod: p must be prime");
  int n = f.N();
  Poly fp = f.reduced_mod(p);  // leading coeff 1, degree preserved
  // Squarefree fast path: gcd(f, f') must be constant.
  Poly d(n, 0);
  for (int i = 1; i <= n; ++i) d[i - 1] = mul_mod(fp[i], i % p, p);
  if (poly_degree(poly_gcd(fp, d, p)) != 0) return false;
  // Rabin: x^(p^(n/r)) must generate a trivial gcd for every prime r | n,
  // and x^(p^n) == x mod f.
  std::vector<int> checkpoints;
  for (auto [r, e] : factorize(static_cast<std::uint64_t>(n))) {
    (void)e;
    checkpoints.push_back(n / static_cast<int>(r));
  }
  std::sort(checkpoints.begin(), checkpoints.end());
  Poly x{0, 1};
  Poly h = poly_mod(x, fp, p);
  size_t next = 0;
  for (int s = 1; s <= n; ++s) {
    h = poly_powmod(std::move(h), p, fp, p);
    while (next < checkpoints.size() && checkpoints[next] == s) {
      Poly diff = h;
      if (diff.size() < 2) diff.resize(2, 0);
      diff[1] = sub_mod(diff[1], 1, p);
      if (poly_degree(poly_gcd(diff, fp, p)) != 0) return false;
      ++next;
    }
  }
  Poly diff = h;
  if (diff.size() < 2) diff.resize(2, 0);
  diff[1] = sub_mod(diff[1], 1, p);
  trim(diff);
  return diff.empty();
}

std::optional<std::uint64_t> certify_irreducible(const ModulusPoly& f, std::uint64_t aux_limit) {
  for (std::uint64_t p = 2; p <= aux_limit; ++p) {
    if (!is_prime(p)) continue;
    if (is_irreducible_mod(f, p)) return p;
  }
  return std::nullopt;
}

}  // namespace plwe
