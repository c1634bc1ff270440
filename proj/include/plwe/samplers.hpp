#pragma once

#include <cstdint>
#include <optional>

#include "plwe/field.hpp"
#include "plwe/polyring.hpp"
#include "plwe/rng.hpp"

// Sample generation: the truncated rounded-normal error sampler, uniform
// draws on R_q and the subring R_{q,0}, and the two oracles (uniform and
// decision-problem) the attacks consume.

namespace plwe {

struct GaussianParams {
  double sigma = 0.0;
  std::int64_t truncation = 0;  // resample while |c| > truncation

  // truncation = floor(2*sigma); throws std::invalid_argument if sigma <= 0.
  static GaussianParams from_sigma(double sigma);
};

// Nearest integer to a N(0, sigma) draw, redrawn until |c| <= truncation.
std::int64_t sample_error_coeff(const GaussianParams& g, Rng& rng);

// N error coefficients reduced to canonical residues.
Poly sample_error_poly(const GaussianParams& g, int N, std::uint64_t q, Rng& rng);

Poly uniform_poly(int N, std::uint64_t q, Rng& rng);

// Uniform on R_{q,0}: even coefficients free; odd coefficients free except
// p_1, which is solved from sum_j (-rho)^j p_{2j+1} = 0.
Poly uniform_rq0_poly(const FieldParams& F, int N, Rng& rng);

struct Sample {
  Poly a;
  Poly b;
};

enum class OracleKind { Uniform, Plwe };

// Single-owner sample stream.  UNIFORM: (a, b) uniform on R_q x R_q.
// PLWE: b = a*s + e for the handle's fixed secret s and fresh error e.
// The referenced ring must outlive the oracle.
class Oracle {
 public:
  static Oracle uniform(const PolyRing& ring, const FieldParams& F, std::uint64_t seed);
  static Oracle plwe(const PolyRing& ring, const FieldParams& F, const GaussianParams& g,
                     std::uint64_t seed);
  static Oracle plwe_with_secret(const PolyRing& ring, const FieldParams& F, const GaussianParams& g,
                                 Poly secret, std::uint64_t seed);

  // Draw a directly in R_{q,0} instead of R_q (used by the direct experiment
  // mode and the sample CLI's --rq0 switch).
  Oracle& restrict_a_to_rq0(bool on) {
    a_in_rq0_ = on;
    return *this;
  }

  Sample next();

  OracleKind kind() const { return kind_; }
  const FieldParams& field() const { return F_; }
  const Poly* secret() const { return secret_ ? &*secret_ : nullptr; }

 private:
  Oracle(const PolyRing& ring, const FieldParams& F, OracleKind kind, std::uint64_t seed);

  const PolyRing* ring_;
  FieldParams F_;
  OracleKind kind_;
  std::optional<GaussianParams> gauss_;
  std::optional<Poly> secret_;
  Rng rng_;
  bool a_in_rq0_ = false;
};

struct X0Result {
  Sample sample;
  std::uint64_t count = 0;  // oracle invocations used
};

// Redraw until a lands in R_{q,0}.  Expected count is q for a uniform-on-R_q
// a-marginal.
X0Result x0_sample(Oracle& oracle);

// Same, but gives up (nullopt) once cap draws are exhausted.
std::optional<X0Result> x0_sample_capped(Oracle& oracle, std::uint64_t cap);

}  // namespace plwe
