#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "plwe/samplers.hpp"
#include "plwe/smallness.hpp"

// The three decision attacks and the sample-count planner.  All three share
// one shape: a guess g in F_q survives while every sample keeps its check
// value inside the smallness region; the verdict reports how many guesses
// survive the whole sample list.

namespace plwe {

enum class VerdictKind { Guess, Plwe, NotPlwe, NotEnoughSamples, Uniform, Fail };

std::string verdict_name(VerdictKind k);
VerdictKind verdict_from_name(const std::string& s);

struct AttackVerdict {
  VerdictKind kind = VerdictKind::NotPlwe;
  std::optional<std::uint64_t> guess;     // present iff kind is Guess or Plwe
  std::vector<std::uint64_t> survivors;   // ascending; empty for NotPlwe/Uniform/Fail
  std::uint64_t mult_count = 0;           // F_q multiplications spent in the guess loop
  std::uint64_t oracle_calls = 0;         // algorithm3 only

  std::uint64_t surviving() const { return survivors.size(); }
};

struct AttackPlan {
  std::uint64_t k = 0;      // samples to collect
  std::uint64_t l = 0;      // total oracle-call budget
  double theta = 0.0;       // target success probability
  double collect_prob = 0;  // normal-approx P[k hits within l draws]
};

// Root-evaluation attack: g survives iff b_i(alpha) - a_i(alpha)*g lies in
// the region for every sample.  Unique survivor -> Guess, none -> NotPlwe,
// several -> NotEnoughSamples.
AttackVerdict algorithm1(const std::vector<Sample>& samples, const SmallnessRegion& region,
                         std::uint64_t alpha);

// Zero-trace attack on R_{q,0} x R_q: every a_i must lie in R_{q,0}; g
// survives iff (1/2)Tr(b_i(alpha)) - a_i(alpha)*g lies in the region (the
// half-trace of b_i(alpha) is the F_q part of b_i(alpha), and a_i(alpha) is
// in F_q by assumption).  g is a trace guess.  Unique survivor -> Plwe.
AttackVerdict algorithm2(const FieldParams& F, const std::vector<Sample>& samples,
                         const SmallnessRegion& region);

// General attack: collect plan.k samples with a in R_{q,0} via x0_sample
// under total budget plan.l, then run algorithm2.  Budget exhausted -> Fail;
// NotPlwe is reported as Uniform at this boundary.
AttackVerdict algorithm3(Oracle& oracle, const AttackPlan& plan, const SmallnessRegion& region);

// 1 - (region_size/q)^M: probability that M uniform samples kill every guess.
double success_probability(std::uint64_t region_size, std::uint64_t q, std::uint64_t M);

// Smallest k whose predicted success clears theta, and an oracle budget
// l = ceil(safety*k*q).  Targets are read at two significant figures: a
// predicted rate within 1.5e-3 below theta counts as meeting it.
AttackPlan plan_attack(double theta, std::uint64_t q, std::uint64_t region_size, double safety = 2.0);

}  // namespace plwe
