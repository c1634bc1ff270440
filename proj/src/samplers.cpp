#include "plwe/samplers.hpp"

#include <cmath>
#include <stdexcept>

namespace plwe {

GaussianParams GaussianParams::from_sigma(double sigma) {
  if (!(sigma > 0)) throw std::invalid_argument("GaussianParams: sigma must be positive");
  return GaussianParams{sigma, static_cast<std::int64_t>(std::floor(2.0 * sigma))};
}

std::int64_t sample_error_coeff(const GaussianParams& g, Rng& rng) {
  for (;;) {
    double x = g.sigma * rng.gauss();
    std::int64_t c = static_cast<std::int64_t>(std::llround(x));
    if (std::llabs(c) <= g.truncation) return c;
  }
}

Poly sample_error_poly(const GaussianParams& g, int N, std::uint64_t q, Rng& rng) {
  Poly out(N);
  for (int i = 0; i < N; ++i) out[i] = reduce_signed(sample_error_coeff(g, rng), q);
  return out;
}

Poly uniform_poly(int N, std::uint64_t q, Rng& rng) {
  Poly out(N);
  for (int i = 0; i < N; ++i) out[i] = rng.below(q);
  return out;
}

Poly uniform_rq0_poly(const FieldParams& F, int N, Rng& rng) {
  Poly out(N);
  for (int i = 0; i < N; i += 2) out[i] = rng.below(F.q);
  if (N < 2) return out;
  // Odd part must vanish at alpha: p_1 = -sum_{j>=1} (-rho)^j p_{2j+1}.
  std::uint64_t w = neg_mod(F.rho % F.q, F.q);
  std::uint64_t acc = 0;
  std::uint64_t wj = w;
  for (int i = 3; i < N; i += 2) {
    out[i] = rng.below(F.q);
    acc = add_mod(acc, mul_mod(wj, out[i], F.q), F.q);
    wj = mul_mod(wj, w, F.q);
  }
  out[1] = neg_mod(acc, F.q);
  return out;
}

Oracle::Oracle(const PolyRing& ring, const FieldParams& F, OracleKind kind, std::uint64_t seed)
    : ring_(&ring), F_(F), kind_(kind), rng_(seed) {
  if (ring.q() != F.q) throw std::invalid_argument("Oracle: ring modulus and field params disagree");
}

Oracle Oracle::uniform(const PolyRing& ring, const FieldParams& F, std::uint64_t seed) {
  return Oracle(ring, F, OracleKind::Uniform, seed);
}

Oracle Oracle::plwe(const PolyRing& ring, const FieldParams& F, const GaussianParams& g,
                    std::uint64_t seed) {
  Oracle o(ring, F, OracleKind::Plwe, seed);
  o.gauss_ = g;
  o.secret_ = uniform_poly(ring.N(), ring.q(), o.rng_);
  return o;
}

Oracle Oracle::plwe_with_secret(const PolyRing& ring, const FieldParams& F, const GaussianParams& g,
                                Poly secret, std::uint64_t seed) {
  if (static_cast<int>(secret.size()) != ring.N())
    throw std::invalid_argument("Oracle: secret length does not match the ring");
  Oracle o(ring, F, OracleKind::Plwe, seed);
  o.gauss_ = g;
  o.secret_ = std::move(secret);
  return o;
}

Sample Oracle::next() {
  Sample s;
  s.a = a_in_rq0_ ? uniform_rq0_poly(F_, ring_->N(), rng_) : uniform_poly(ring_->N(), ring_->q(), rng_);
  if (kind_ == OracleKind::Uniform) {
    s.b = uniform_poly(ring_->N(), ring_->q(), rng_);
  } else {
    Poly e = sample_error_poly(*gauss_, ring_->N(), ring_->q(), rng_);
    s.b = ring_->add(ring_->mul(s.a, *secret_), e);
  }
  return s;
}

X0Result x0_sample(Oracle& oracle) {
  X0Result r;
  for (;;) {
    ++r.count;
    r.sample = oracle.next();
    if (is_in_rq0(oracle.field(), r.sample.a)) return r;
  }
}

std::optional<X0Result> x0_sample_capped(Oracle& oracle, std::uint64_t cap) {
  X0Result r;
  while (r.count < cap) {
    ++r.count;
    r.sample = oracle.next();
    if (is_in_rq0(oracle.field(), r.sample.a)) return r;
  }
  return std::nullopt;
}

}  // namespace plwe
