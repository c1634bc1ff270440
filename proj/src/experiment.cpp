#include "plwe/experiment.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "plwe/rng.hpp"
#include "plwe/samplers.hpp"
#include "plwe/version.hpp"

namespace plwe {

namespace {

double round3(double x) { return std::round(x * 1000.0) / 1000.0; }

struct RunOutcome {
  VerdictKind verdict = VerdictKind::Fail;
  double sampling_s = 0.0;
  double attack_s = 0.0;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace

unsigned experiment_workers() {
  if (const char* env = std::getenv("PLWE_WORKERS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1 && v <= 256) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

ExperimentReport run_experiment(const ExperimentConfig& cfg) {
  if (cfg.ntests < 1 || cfg.M < 1) throw std::invalid_argument("experiment: ntests and M must be >= 1");
  const ParameterSet& ps = cfg.params;
  FieldParams F = ps.field();

  SmallnessRegion region;
  switch (ps.region_mode) {
    case RegionMode::Interval:
      region = build_interval_region(ps.q, ps.f.N(), ps.sigma);
      break;
    case RegionMode::TableQuadratic:
      region = build_quadratic_region(F, ps.f.N(), ps.sigma, ps.r);
      break;
    case RegionMode::TableElos:
      throw std::invalid_argument("experiment: needs an interval or quadratic region");
  }

  std::uint64_t M = cfg.M;
  if (cfg.theta) M = plan_attack(*cfg.theta, ps.q, region.exact_size()).k;

  PolyRing ring(ps.q, ps.f);
  GaussianParams gauss = GaussianParams::from_sigma(ps.sigma);
  std::uint64_t ntests = cfg.ntests;
  std::uint64_t total = 2 * ntests;
  std::vector<RunOutcome> outcomes(total);

  // x0-mode budget: expected cost is q oracle calls per collected sample.
  std::uint64_t x0_budget =
      static_cast<std::uint64_t>(std::ceil(2.0 * static_cast<double>(M) * static_cast<double>(ps.q)));

  auto run_one = [&](std::uint64_t index) {
    bool plwe_run = index < ntests;
    std::uint64_t seed = derive_seed(cfg.seed, index);
    RunOutcome out;
    std::vector<Sample> samples;
    samples.reserve(M);
    bool collected = true;

    auto t0 = Clock::now();
    if (cfg.mode == ExperimentMode::Direct) {
      Rng rng(seed);
      if (plwe_run) {
        Poly secret = uniform_poly(ring.N(), ps.q, rng);
        for (std::uint64_t i = 0; i < M; ++i) {
          Sample s;
          s.a = uniform_rq0_poly(F, ring.N(), rng);
          Poly e = sample_error_poly(gauss, ring.N(), ps.q, rng);
          s.b = ring.add(ring.mul(s.a, secret), e);
          samples.push_back(std::move(s));
        }
      } else {
        for (std::uint64_t i = 0; i < M; ++i)
          samples.push_back(Sample{uniform_rq0_poly(F, ring.N(), rng), uniform_poly(ring.N(), ps.q, rng)});
      }
    } else {
      Oracle oracle = plwe_run ? Oracle::plwe(ring, F, gauss, seed) : Oracle::uniform(ring, F, seed);
      std::uint64_t budget = x0_budget;
      for (std::uint64_t i = 0; i < M; ++i) {
        auto res = x0_sample_capped(oracle, budget);
        if (!res) {
          collected = false;
          break;
        }
        budget -= res->count;
        samples.push_back(std::move(res->sample));
      }
    }
    out.sampling_s = seconds_since(t0);

    auto t1 = Clock::now();
    if (collected) {
      AttackVerdict v = algorithm2(F, samples, region);
      out.verdict = v.kind;
      if (cfg.mode == ExperimentMode::X0 && out.verdict == VerdictKind::NotPlwe)
        out.verdict = VerdictKind::Uniform;
    } else {
      out.verdict = VerdictKind::Fail;
    }
    out.attack_s = seconds_since(t1);
    outcomes[index] = out;
  };

  unsigned workers = experiment_workers();
  if (workers <= 1 || total == 1) {
    for (std::uint64_t i = 0; i < total; ++i) run_one(i);
  } else {
    std::atomic<std::uint64_t> next{0};
    std::vector<std::thread> pool;
    unsigned n = static_cast<unsigned>(std::min<std::uint64_t>(workers, total));
    pool.reserve(n);
    for (unsigned w = 0; w < n; ++w) {
      pool.emplace_back([&] {
        for (;;) {
          std::uint64_t i = next.fetch_add(1);
          if (i >= total) return;
          run_one(i);
        }
      });
    }
    for (auto& t : pool) t.join();
  }

  ExperimentReport rep;
  rep.config = cfg;
  rep.config.M = M;
  rep.version = kToolkitVersion;
  rep.region_size = region.exact_size();
  rep.region_bound = region.analytic_bound;
  rep.effective_M = M;

  auto fill = [&](DistributionStats& st, std::uint64_t begin, bool plwe_side) {
    double samp = 0, att = 0;
    for (std::uint64_t i = begin; i < begin + ntests; ++i) {
      const RunOutcome& out = outcomes[i];
      st.verdicts.push_back(out.verdict);
      bool ok = plwe_side ? out.verdict == VerdictKind::Plwe
                          : (out.verdict == VerdictKind::NotPlwe || out.verdict == VerdictKind::Uniform);
      if (!ok) ++st.failures;
      samp += out.sampling_s;
      att += out.attack_s;
    }
    st.failure_rate = static_cast<double>(st.failures) / static_cast<double>(ntests);
    st.mean_sampling_s = round3(samp / static_cast<double>(ntests));
    st.mean_attack_s = round3(att / static_cast<double>(ntests));
  };
  fill(rep.plwe, 0, true);
  fill(rep.uniform, ntests, false);
  return rep;
}

}  // namespace plwe
