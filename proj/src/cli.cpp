#include "plwe/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "plwe/attack.hpp"
#include "plwe/experiment.hpp"
#include "plwe/forge.hpp"
#include "plwe/io.hpp"
#include "plwe/version.hpp"

namespace plwe {

namespace {

SmallnessRegion region_for(const ParameterSet& ps) {
  if (ps.region_mode == RegionMode::Interval) return build_interval_region(ps.q, ps.f.N(), ps.sigma);
  return build_quadratic_region(ps.field(), ps.f.N(), ps.sigma, ps.r);
}

SmallnessRegion region_with_cache(const ParameterSet& ps, const std::string& cache) {
  if (!cache.empty() && std::filesystem::exists(cache)) {
    SmallnessRegion region = load_region_file(cache);
    if (region.q != ps.q)
      throw std::runtime_error("region cache '" + cache + "' was built for q=" + std::to_string(region.q));
    return region;
  }
  SmallnessRegion region = region_for(ps);
  if (!cache.empty()) save_region_file(cache, region);
  return region;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
  out << text;
}

int run_gen_params(std::uint64_t min_q, int N, std::uint64_t rho, std::uint64_t c, double sigma,
                   const std::string& out_path) {
  std::uint64_t q = find_prime(min_q, rho);
  BuiltModulus bm = build_modulus(N, rho % q, q, c);
  ParameterSet ps = make_parameter_set(q, rho % q, bm.f, sigma);
  std::cerr << "q=" << q << " c=" << bm.c << " irreducible mod " << bm.aux_prime << "\n";
  emit(params_to_json(ps).dump(2) + "\n", out_path);
  return 0;
}

int run_scan(const std::string& params_path, std::optional<double> sigma, bool as_json,
             const std::string& out_path) {
  ParameterSet ps = load_params_file(params_path);
  VulnerabilityReport rep = scan(ps.f, ps.q, sigma.value_or(ps.sigma));
  emit(as_json ? scan_report_to_json(rep).dump(2) + "\n" : scan_report_text(rep), out_path);
  return 0;
}

int run_sample(const std::string& params_path, const std::string& kind, std::uint64_t count,
               std::uint64_t seed, bool rq0, const std::string& out_path) {
  ParameterSet ps = load_params_file(params_path);
  PolyRing ring(ps.q, ps.f);
  FieldParams F = ps.field();
  Oracle oracle = kind == "plwe"
                      ? Oracle::plwe(ring, F, GaussianParams::from_sigma(ps.sigma), seed)
                      : Oracle::uniform(ring, F, seed);
  oracle.restrict_a_to_rq0(rq0);
  std::vector<Sample> samples;
  samples.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) samples.push_back(oracle.next());
  if (out_path.empty())
    write_samples(std::cout, samples);
  else
    write_samples_file(out_path, samples);
  return 0;
}

void print_verdict(const AttackVerdict& v) {
  std::cout << "verdict: " << verdict_name(v.kind) << "\n";
  if (v.guess) std::cout << "guess: " << *v.guess << "\n";
  std::cout << "surviving: " << v.surviving() << "\n";
  std::cout << "multiplications: " << v.mult_count << "\n";
  if (v.oracle_calls) std::cout << "oracle calls: " << v.oracle_calls << "\n";
}

int run_attack(const std::string& params_path, const std::string& samples_path, int algorithm,
               std::optional<std::uint64_t> alpha, std::optional<std::uint64_t> k,
               std::optional<std::uint64_t> l, std::optional<double> theta, const std::string& cache) {
  ParameterSet ps = load_params_file(params_path);
  std::vector<Sample> samples = read_samples_file(samples_path, ps.f.N(), ps.q);
  FieldParams F = ps.field();

  if (algorithm == 1) {
    if (!alpha) throw std::runtime_error("attack: --algorithm 1 requires --alpha (a root of f mod q)");
    SmallnessRegion region =
        build_elos_region(ps.q, *alpha, ps.f.N(), ps.sigma, mult_order(*alpha, ps.q));
    print_verdict(algorithm1(samples, region, *alpha));
    return 0;
  }

  SmallnessRegion region = region_with_cache(ps, cache);
  if (algorithm == 2) {
    print_verdict(algorithm2(F, samples, region));
    return 0;
  }

  // algorithm 3 with the samples file as the oracle stream
  AttackPlan plan;
  if (k && l) {
    plan.k = *k;
    plan.l = *l;
  } else if (theta) {
    plan = plan_attack(*theta, ps.q, region.exact_size());
  } else {
    throw std::runtime_error("attack: --algorithm 3 requires --k and --l, or --theta");
  }
  if (plan.k == 0 || plan.l < 1) throw std::runtime_error("attack: plan needs k >= 1 and l >= 1");

  std::vector<Sample> collected;
  std::uint64_t used = 0;
  for (const Sample& s : samples) {
    if (collected.size() >= plan.k || used >= plan.l) break;
    ++used;
    if (is_in_rq0(F, s.a)) collected.push_back(s);
  }
  AttackVerdict v;
  if (collected.size() < plan.k) {
    if (used >= plan.l) {
      v.kind = VerdictKind::Fail;
    } else {
      throw std::runtime_error("attack: samples file exhausted after " + std::to_string(used) +
                               " draws with only " + std::to_string(collected.size()) +
                               " of k=" + std::to_string(plan.k) + " collected");
    }
  } else {
    v = algorithm2(F, collected, region);
    if (v.kind == VerdictKind::NotPlwe) v.kind = VerdictKind::Uniform;
  }
  v.oracle_calls = used;
  print_verdict(v);
  return 0;
}

int run_experiment_cmd(const std::string& config_path, const std::string& report_path) {
  ExperimentConfig cfg = load_config_file(config_path);
  ExperimentReport rep = run_experiment(cfg);
  std::string doc = report_to_json(rep).dump(2) + "\n";
  if (report_path.empty()) {
    std::cout << doc;
  } else {
    emit(doc, report_path);
    std::cout << "plwe failures: " << rep.plwe.failures << "/" << cfg.ntests
              << " (rate " << rep.plwe.failure_rate << ")\n"
              << "uniform failures: " << rep.uniform.failures << "/" << cfg.ntests
              << " (rate " << rep.uniform.failure_rate << ")\n"
              << "report written to " << report_path << "\n";
  }
  return 0;
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args) {
  CLI::App app{"decision attacks on polynomial learning-with-errors instances"};
  app.set_version_flag("--version", kToolkitVersion);
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen-params", "forge an attackable (q, rho, f) parameter set");
  std::uint64_t min_q = 0, gen_rho = 0, gen_c = 1;
  int gen_N = 0;
  double gen_sigma = 8.0;
  std::string gen_out;
  gen->add_option("--min-q", min_q, "lower bound for the prime q")->required();
  gen->add_option("--N", gen_N, "modulus degree")->required();
  gen->add_option("--rho", gen_rho, "quadratic-factor constant")->required();
  gen->add_option("--c", gen_c, "starting constant for the cofactor");
  gen->add_option("--sigma", gen_sigma, "error width recorded in the params file");
  gen->add_option("--out", gen_out, "output params file (stdout if omitted)");

  auto* scan_cmd = app.add_subcommand("scan", "audit a modulus for attackable structure");
  std::string scan_params, scan_out;
  double scan_sigma = 0.0;
  bool scan_sigma_set = false, scan_as_json = false;
  scan_cmd->add_option("--params-file", scan_params, "params JSON file")->required();
  scan_cmd->add_option("--sigma", scan_sigma, "override sigma from the params file")
      ->each([&](const std::string&) { scan_sigma_set = true; });
  scan_cmd->add_flag("--json", scan_as_json, "emit the report as JSON instead of text");
  scan_cmd->add_option("--out", scan_out, "output file (stdout if omitted)");

  auto* sample_cmd = app.add_subcommand("sample", "emit samples from an oracle");
  std::string sm_params, sm_kind, sm_out;
  std::uint64_t sm_count = 0, sm_seed = 0;
  bool sm_rq0 = false;
  sample_cmd->add_option("--params-file", sm_params)->required();
  sample_cmd->add_option("--kind", sm_kind, "uniform or plwe")
      ->required()
      ->check(CLI::IsMember({"uniform", "plwe"}));
  sample_cmd->add_option("--count", sm_count)->required();
  sample_cmd->add_option("--seed", sm_seed)->required();
  sample_cmd->add_flag("--rq0", sm_rq0, "draw a directly in R_{q,0} (algorithm-2-ready files)");
  sample_cmd->add_option("--out", sm_out, "output samples file (stdout if omitted)");

  auto* attack_cmd = app.add_subcommand("attack", "run a decision attack on a samples file");
  std::string at_params, at_samples, at_cache;
  int at_alg = 2;
  std::uint64_t at_alpha = 0, at_k = 0, at_l = 0;
  double at_theta = 0.0;
  bool at_alpha_set = false, at_k_set = false, at_l_set = false, at_theta_set = false;
  attack_cmd->add_option("--params-file", at_params)->required();
  attack_cmd->add_option("--samples-file", at_samples)->required();
  attack_cmd->add_option("--algorithm", at_alg)->check(CLI::IsMember({1, 2, 3}));
  attack_cmd->add_option("--alpha", at_alpha, "root of f mod q (algorithm 1)")
      ->each([&](const std::string&) { at_alpha_set = true; });
  attack_cmd->add_option("--k", at_k, "samples to collect (algorithm 3)")
      ->each([&](const std::string&) { at_k_set = true; });
  attack_cmd->add_option("--l", at_l, "oracle budget (algorithm 3)")
      ->each([&](const std::string&) { at_l_set = true; });
  attack_cmd->add_option("--theta", at_theta, "plan k and l from a success target (algorithm 3)")
      ->each([&](const std::string&) { at_theta_set = true; });
  attack_cmd->add_option("--region-cache", at_cache, "load/save the region table here");

  auto* exp_cmd = app.add_subcommand("experiment", "run a reproduction campaign");
  std::string ex_config, ex_report;
  exp_cmd->add_option("--config", ex_config)->required();
  exp_cmd->add_option("--out-report", ex_report, "report JSON path (stdout if omitted)");

  std::vector<const char*> argv;
  argv.push_back("plwe");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::CallForVersion& e) {
    std::cout << kToolkitVersion << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "plwe: " << e.what() << "\n";
    return 1;
  }

  try {
    if (gen->parsed()) return run_gen_params(min_q, gen_N, gen_rho, gen_c, gen_sigma, gen_out);
    if (scan_cmd->parsed())
      return run_scan(scan_params, scan_sigma_set ? std::optional<double>(scan_sigma) : std::nullopt,
                      scan_as_json, scan_out);
    if (sample_cmd->parsed()) return run_sample(sm_params, sm_kind, sm_count, sm_seed, sm_rq0, sm_out);
    if (attack_cmd->parsed())
      return run_attack(at_params, at_samples, at_alg,
                        at_alpha_set ? std::optional<std::uint64_t>(at_alpha) : std::nullopt,
                        at_k_set ? std::optional<std::uint64_t>(at_k) : std::nullopt,
                        at_l_set ? std::optional<std::uint64_t>(at_l) : std::nullopt,
                        at_theta_set ? std::optional<double>(at_theta) : std::nullopt, at_cache);
    if (exp_cmd->parsed()) return run_experiment_cmd(ex_config, ex_report);
  } catch (const RegionError& e) {
    std::cerr << "plwe: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "plwe: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace plwe
