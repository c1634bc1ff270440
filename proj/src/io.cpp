#include "plwe/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace plwe {

namespace {

using nlohmann::json;

const json& require(const json& j, const char* key, const char* ctx) {
  auto it = j.find(key);
  if (it == j.end())
    throw std::runtime_error(std::string(ctx) + ": missing field '" + key + "'");
  return *it;
}

std::uint64_t get_u64(const json& j, const char* key, const char* ctx) {
  const json& v = require(j, key, ctx);
  if (!v.is_number_unsigned() && !v.is_number_integer())
    throw std::runtime_error(std::string(ctx) + ": field '" + key + "' must be an integer");
  if (v.is_number_integer() && v.get<std::int64_t>() < 0)
    throw std::runtime_error(std::string(ctx) + ": field '" + key + "' must be non-negative");
  return v.get<std::uint64_t>();
}

double get_double(const json& j, const char* key, const char* ctx) {
  const json& v = require(j, key, ctx);
  if (!v.is_number())
    throw std::runtime_error(std::string(ctx) + ": field '" + key + "' must be a number");
  return v.get<double>();
}

std::int64_t parse_i64(const std::string& s, const char* ctx) {
  try {
    size_t pos = 0;
    std::int64_t v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error(std::string(ctx) + ": '" + s + "' is not a decimal integer");
  }
}

std::uint64_t parse_residue(const std::string& s, std::uint64_t q, const char* ctx) {
  try {
    size_t pos = 0;
    std::uint64_t v = std::stoull(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    if (v >= q) throw std::out_of_range(s);
    return v;
  } catch (const std::out_of_range&) {
    throw std::runtime_error(std::string(ctx) + ": '" + s + "' is not a residue mod q");
  } catch (const std::exception&) {
    throw std::runtime_error(std::string(ctx) + ": '" + s + "' is not a decimal residue");
  }
}

}  // namespace

json params_to_json(const ParameterSet& ps) {
  json f = json::array();
  for (std::int64_t c : ps.f.coeffs) f.push_back(std::to_string(c));
  return json{{"q", ps.q}, {"rho", ps.rho}, {"sigma", ps.sigma}, {"N", ps.f.N()}, {"f", std::move(f)}};
}

ParameterSet params_from_json(const json& j) {
  const char* ctx = "params";
  std::uint64_t q = get_u64(j, "q", ctx);
  std::uint64_t rho = get_u64(j, "rho", ctx);
  double sigma = get_double(j, "sigma", ctx);
  std::uint64_t N = get_u64(j, "N", ctx);
  const json& f = require(j, "f", ctx);
  if (!f.is_array() || f.size() != N + 1)
    throw std::runtime_error("params: field 'f' must be an array of N+1 coefficient strings");
  std::vector<std::int64_t> coeffs;
  coeffs.reserve(f.size());
  for (const json& c : f) {
    if (!c.is_string()) throw std::runtime_error("params: field 'f' entries must be decimal strings");
    coeffs.push_back(parse_i64(c.get<std::string>(), "params: field 'f'"));
  }
  return make_parameter_set(q, rho, ModulusPoly::from_coeffs(std::move(coeffs)), sigma);
}

ParameterSet load_params_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open params file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw std::runtime_error("params file '" + path + "': " + e.what());
  }
  return params_from_json(j);
}

void save_params_file(const std::string& path, const ParameterSet& ps) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write params file '" + path + "'");
  out << params_to_json(ps).dump(2) << "\n";
}

void write_samples(std::ostream& out, const std::vector<Sample>& samples) {
  for (const Sample& s : samples) {
    json a = json::array(), b = json::array();
    for (std::uint64_t v : s.a) a.push_back(std::to_string(v));
    for (std::uint64_t v : s.b) b.push_back(std::to_string(v));
    out << json{{"a", std::move(a)}, {"b", std::move(b)}}.dump() << "\n";
  }
}

std::vector<Sample> read_samples(std::istream& in, int N, std::uint64_t q) {
  std::vector<Sample> out;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::string ctx = "samples line " + std::to_string(lineno);
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      throw std::runtime_error(ctx + ": " + e.what());
    }
    Sample s;
    for (auto [key, dst] : {std::pair<const char*, Poly*>{"a", &s.a}, {"b", &s.b}}) {
      const json& arr = require(j, key, ctx.c_str());
      if (!arr.is_array() || static_cast<int>(arr.size()) != N)
        throw std::runtime_error(ctx + ": field '" + key + "' must hold " + std::to_string(N) +
                                 " residues");
      dst->reserve(N);
      for (const json& v : arr) {
        if (!v.is_string()) throw std::runtime_error(ctx + ": residues must be decimal strings");
        dst->push_back(parse_residue(v.get<std::string>(), q, ctx.c_str()));
      }
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<Sample> read_samples_file(const std::string& path, int N, std::uint64_t q) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open samples file '" + path + "'");
  return read_samples(in, N, q);
}

void write_samples_file(const std::string& path, const std::vector<Sample>& samples) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write samples file '" + path + "'");
  write_samples(out, samples);
}

namespace {

json stats_to_json(const DistributionStats& st) {
  json verdicts = json::array();
  for (VerdictKind v : st.verdicts) verdicts.push_back(verdict_name(v));
  return json{{"failures", st.failures},
              {"failure_rate", st.failure_rate},
              {"mean_sampling_s", st.mean_sampling_s},
              {"mean_attack_s", st.mean_attack_s},
              {"verdicts", std::move(verdicts)}};
}

DistributionStats stats_from_json(const json& j, const char* ctx) {
  DistributionStats st;
  st.failures = get_u64(j, "failures", ctx);
  st.failure_rate = get_double(j, "failure_rate", ctx);
  st.mean_sampling_s = get_double(j, "mean_sampling_s", ctx);
  st.mean_attack_s = get_double(j, "mean_attack_s", ctx);
  for (const json& v : require(j, "verdicts", ctx)) st.verdicts.push_back(verdict_from_name(v.get<std::string>()));
  return st;
}

std::string mode_name(ExperimentMode m) { return m == ExperimentMode::Direct ? "direct" : "x0"; }

ExperimentMode mode_from_name(const std::string& s) {
  if (s == "direct") return ExperimentMode::Direct;
  if (s == "x0") return ExperimentMode::X0;
  throw std::runtime_error("config: unknown mode '" + s + "' (expected 'direct' or 'x0')");
}

}  // namespace

json report_to_json(const ExperimentReport& rep) {
  json cfg{{"params", params_to_json(rep.config.params)},
           {"ntests", rep.config.ntests},
           {"M", rep.config.M},
           {"seed", rep.config.seed},
           {"theta", rep.config.theta ? json(*rep.config.theta) : json(nullptr)},
           {"mode", mode_name(rep.config.mode)}};
  return json{{"version", rep.version},
              {"config", std::move(cfg)},
              {"region_size", rep.region_size},
              {"region_bound", rep.region_bound},
              {"effective_M", rep.effective_M},
              {"plwe", stats_to_json(rep.plwe)},
              {"uniform", stats_to_json(rep.uniform)}};
}

ExperimentReport report_from_json(const json& j) {
  const char* ctx = "report";
  ExperimentReport rep;
  rep.version = require(j, "version", ctx).get<std::string>();
  const json& cfg = require(j, "config", ctx);
  rep.config.params = params_from_json(require(cfg, "params", "report.config"));
  rep.config.ntests = get_u64(cfg, "ntests", "report.config");
  rep.config.M = get_u64(cfg, "M", "report.config");
  rep.config.seed = get_u64(cfg, "seed", "report.config");
  const json& theta = require(cfg, "theta", "report.config");
  if (!theta.is_null()) rep.config.theta = theta.get<double>();
  rep.config.mode = mode_from_name(require(cfg, "mode", "report.config").get<std::string>());
  rep.region_size = get_u64(j, "region_size", ctx);
  rep.region_bound = get_double(j, "region_bound", ctx);
  rep.effective_M = get_u64(j, "effective_M", ctx);
  rep.plwe = stats_from_json(require(j, "plwe", ctx), "report.plwe");
  rep.uniform = stats_from_json(require(j, "uniform", ctx), "report.uniform");
  return rep;
}

ExperimentConfig config_from_json(const json& j, const std::string& base_dir) {
  const char* ctx = "config";
  ExperimentConfig cfg;
  if (j.contains("params")) {
    cfg.params = params_from_json(j["params"]);
  } else if (j.contains("params_file")) {
    std::string path = j["params_file"].get<std::string>();
    if (!path.empty() && path.front() != '/' && !base_dir.empty()) path = base_dir + "/" + path;
    cfg.params = load_params_file(path);
  } else {
    throw std::runtime_error("config: needs 'params' or 'params_file'");
  }
  cfg.ntests = get_u64(j, "ntests", ctx);
  cfg.M = get_u64(j, "M", ctx);
  cfg.seed = get_u64(j, "seed", ctx);
  if (j.contains("theta") && !j["theta"].is_null()) cfg.theta = j["theta"].get<double>();
  if (j.contains("mode")) cfg.mode = mode_from_name(j["mode"].get<std::string>());
  return cfg;
}

ExperimentConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw std::runtime_error("config file '" + path + "': " + e.what());
  }
  std::string dir;
  if (auto slash = path.find_last_of('/'); slash != std::string::npos) dir = path.substr(0, slash);
  return config_from_json(j, dir);
}

namespace {

json finding_to_json(const Finding& fd) {
  json m = json::array();
  for (int t = 0; t < 3; ++t)
    m.push_back(fd.m_for_theta[t] ? json(*fd.m_for_theta[t]) : json(nullptr));
  return json{{"kind", fd.kind == Finding::Kind::Root ? "root" : "quadratic_factor"},
              {"value", fd.value},
              {"order", fd.order},
              {"small_order", fd.small_order},
              {"region_mode", region_mode_name(fd.region_mode)},
              {"table_entries", fd.table_entries},
              {"analytic_bound", fd.analytic_bound},
              {"exact_size", fd.exact_size ? json(*fd.exact_size) : json(nullptr)},
              {"feasible", fd.feasible},
              {"recommended_M", std::move(m)}};
}

void finding_text(std::ostringstream& os, const Finding& fd) {
  os << "  " << (fd.kind == Finding::Kind::Root ? "alpha=" : "rho=") << fd.value << "  order r=" << fd.order;
  if (fd.small_order) os << "  [SMALL ORDER]";
  os << "  mode=" << region_mode_name(fd.region_mode);
  os << "  bound=" << fd.analytic_bound;
  if (fd.exact_size) os << "  exact=" << *fd.exact_size;
  os << "  entries=" << fd.table_entries << "  feasible=" << (fd.feasible ? "yes" : "no") << "\n";
  if (fd.feasible) {
    os << "    recommended M:";
    for (int t = 0; t < 3; ++t)
      if (fd.m_for_theta[t]) os << " theta " << kScanThetas[t] << " -> " << *fd.m_for_theta[t] << ";";
    os << "\n";
  }
}

}  // namespace

json scan_report_to_json(const VulnerabilityReport& rep) {
  json roots = json::array(), quads = json::array();
  for (const Finding& fd : rep.root_findings) roots.push_back(finding_to_json(fd));
  for (const Finding& fd : rep.quadratic_findings) quads.push_back(finding_to_json(fd));
  return json{{"q", rep.q},          {"sigma", rep.sigma},
              {"N", rep.N},          {"roots_in_fq", std::move(roots)},
              {"quadratic_rhos", std::move(quads)}, {"out_of_scope", rep.out_of_scope}};
}

std::string scan_report_text(const VulnerabilityReport& rep) {
  std::ostringstream os;
  os << "vulnerability scan: q=" << rep.q << " sigma=" << rep.sigma << " N=" << rep.N << "\n";
  os << "roots in F_q:" << (rep.root_findings.empty() ? " none\n" : "\n");
  for (const Finding& fd : rep.root_findings) finding_text(os, fd);
  os << "quadratic factors:" << (rep.quadratic_findings.empty() ? " none\n" : "\n");
  for (const Finding& fd : rep.quadratic_findings) finding_text(os, fd);
  os << "out of scope:";
  for (const std::string& s : rep.out_of_scope) os << " " << s << ";";
  os << "\n";
  return os.str();
}

SmallnessRegion load_region_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open region cache '" + path + "'");
  return load_region(in);
}

void save_region_file(const std::string& path, const SmallnessRegion& region) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write region cache '" + path + "'");
  save_region(region, out);
}

}  // namespace plwe
