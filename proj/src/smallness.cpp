#include "plwe/smallness.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

namespace plwe {

std::string region_mode_name(RegionMode m) {
  switch (m) {
    case RegionMode::Interval: return "INTERVAL";
    case RegionMode::TableQuadratic: return "TABLE_QUADRATIC";
    case RegionMode::TableElos: return "TABLE_ELOS";
  }
  return "?";
}

RegionMode region_mode_from_name(const std::string& s) {
  if (s == "INTERVAL") return RegionMode::Interval;
  if (s == "TABLE_QUADRATIC") return RegionMode::TableQuadratic;
  if (s == "TABLE_ELOS") return RegionMode::TableElos;
  throw std::invalid_argument("unknown region mode '" + s + "'");
}

bool SmallnessRegion::contains(std::uint64_t v) const {
  return std::binary_search(members.begin(), members.end(), v);
}

std::uint64_t quadratic_slot_count(int N, std::uint64_t r, std::uint64_t k) {
  std::uint64_t n_star = static_cast<std::uint64_t>((N - 1) / 2);
  if (k > n_star) return 0;
  return (n_star - k) / r + 1;
}

double quadratic_analytic_bound(int N, std::uint64_t r, double sigma) {
  std::uint64_t n_star = static_cast<std::uint64_t>((N - 1) / 2);
  return std::pow(4.0 * std::sqrt(static_cast<double>(n_star / r)) * sigma + 1.0, static_cast<double>(r));
}

namespace {

// Sorted unique residues of { base + w*eps : eps in [-t, t] } for each base.
std::vector<std::uint64_t> extend_slot(const std::vector<std::uint64_t>& bases, std::uint64_t w,
                                       std::int64_t t, std::uint64_t q) {
  std::vector<std::uint64_t> out;
  out.reserve(bases.size() * static_cast<size_t>(2 * t + 1));
  std::uint64_t step = w % q;
  for (std::uint64_t base : bases) {
    // walk eps = -t..t as base - t*w + i*w
    std::uint64_t v = sub_mod(base, mul_mod(reduce_signed(t, q), step, q), q);
    for (std::int64_t i = -t; i <= t; ++i) {
      out.push_back(v);
      v = add_mod(v, step, q);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void check_cap(const std::vector<std::int64_t>& ts, const RegionLimits& lim) {
  double entries = 1.0;
  for (std::int64_t t : ts) {
    entries *= static_cast<double>(2 * t + 1);
    if (entries > static_cast<double>(lim.table_cap))
      throw RegionError(RegionError::Kind::TableTooLarge,
                        "table would hold more than " + std::to_string(lim.table_cap) +
                            " entries before deduplication");
  }
}

void check_covers(const std::vector<std::uint64_t>& members, std::uint64_t q) {
  if (members.size() >= q)
    throw RegionError(RegionError::Kind::CoversField,
                      "region covers all of F_q (size " + std::to_string(members.size()) +
                          " >= q = " + std::to_string(q) + "), the attack is vacuous");
}

}  // namespace

SmallnessRegion build_interval_region(std::uint64_t q, int N, double sigma) {
  if (N < 2 || sigma <= 0) throw std::invalid_argument("build_interval_region: need N >= 2 and sigma > 0");
  std::uint64_t n_star = static_cast<std::uint64_t>((N - 1) / 2);
  double bound = 4.0 * std::sqrt(static_cast<double>(n_star)) * sigma + 1.0;
  std::int64_t B = static_cast<std::int64_t>(std::floor(2.0 * std::sqrt(static_cast<double>(n_star)) * sigma));
  if (static_cast<std::uint64_t>(2 * B + 1) >= q)
    throw RegionError(RegionError::Kind::CoversField,
                      "interval [-" + std::to_string(B) + ", " + std::to_string(B) +
                          "] covers all of F_q (q = " + std::to_string(q) + ")");
  SmallnessRegion region;
  region.mode = RegionMode::Interval;
  region.q = q;
  region.analytic_bound = bound;
  region.members.reserve(static_cast<size_t>(2 * B + 1));
  for (std::int64_t t = -B; t <= B; ++t) region.members.push_back(reduce_signed(t, q));
  std::sort(region.members.begin(), region.members.end());
  return region;
}

SmallnessRegion build_quadratic_region(const FieldParams& F, int N, double sigma, std::uint64_t r,
                                       RegionLimits lim) {
  if (N < 2 || sigma <= 0) throw std::invalid_argument("build_quadratic_region: need N >= 2 and sigma > 0");
  std::uint64_t w = neg_mod(F.rho % F.q, F.q);
  if (r == 0 || r != mult_order(w, F.q))
    throw std::invalid_argument("build_quadratic_region: r must be the multiplicative order of -rho");

  std::vector<std::int64_t> ts(r);
  for (std::uint64_t k = 0; k < r; ++k) {
    std::uint64_t m_k = quadratic_slot_count(N, r, k);
    ts[k] = static_cast<std::int64_t>(std::floor(2.0 * std::sqrt(static_cast<double>(m_k)) * sigma));
  }
  check_cap(ts, lim);

  std::vector<std::uint64_t> values{0};
  std::uint64_t wk = 1;
  for (std::uint64_t k = 0; k < r; ++k) {
    values = extend_slot(values, wk, ts[k], F.q);
    wk = mul_mod(wk, w, F.q);
  }
  check_covers(values, F.q);

  SmallnessRegion region;
  region.mode = RegionMode::TableQuadratic;
  region.q = F.q;
  region.members = std::move(values);
  region.analytic_bound = quadratic_analytic_bound(N, r, sigma);
  return region;
}

SmallnessRegion build_elos_region(std::uint64_t q, std::uint64_t alpha, int N, double sigma,
                                  std::uint64_t r, RegionLimits lim) {
  if (N < 1 || sigma <= 0) throw std::invalid_argument("build_elos_region: need N >= 1 and sigma > 0");
  alpha %= q;
  if (alpha == 0) throw std::invalid_argument("build_elos_region: alpha must be nonzero");
  if (r == 0 || r != mult_order(alpha, q))
    throw std::invalid_argument("build_elos_region: r must be the multiplicative order of alpha");

  double per_slot = 2.0 * std::sqrt(static_cast<double>(N) / static_cast<double>(r)) * sigma;
  std::int64_t t = static_cast<std::int64_t>(std::floor(per_slot));
  std::vector<std::int64_t> ts(r, t);
  check_cap(ts, lim);

  std::vector<std::uint64_t> values{0};
  std::uint64_t ak = 1;
  for (std::uint64_t j = 0; j < r; ++j) {
    values = extend_slot(values, ak, t, q);
    ak = mul_mod(ak, alpha, q);
  }
  check_covers(values, q);

  SmallnessRegion region;
  region.mode = RegionMode::TableElos;
  region.q = q;
  region.members = std::move(values);
  region.analytic_bound = std::pow(2.0 * per_slot + 1.0, static_cast<double>(r));
  region.alpha = alpha;
  return region;
}

void save_region(const SmallnessRegion& region, std::ostream& out) {
  out << "PLWE-SIGMA v1 q=" << region.q << " mode=" << region_mode_name(region.mode)
      << " size=" << region.members.size() << "\n";
  for (std::uint64_t v : region.members) out << v << "\n";
}

SmallnessRegion load_region(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw std::runtime_error("region cache: empty input");
  std::istringstream hs(header);
  std::string magic, ver, qf, modef, sizef;
  hs >> magic >> ver >> qf >> modef >> sizef;
  if (magic != "PLWE-SIGMA" || ver != "v1" || qf.rfind("q=", 0) != 0 || modef.rfind("mode=", 0) != 0 ||
      sizef.rfind("size=", 0) != 0)
    throw std::runtime_error("region cache: bad header '" + header + "'");
  SmallnessRegion region;
  region.q = std::stoull(qf.substr(2));
  region.mode = region_mode_from_name(modef.substr(5));
  std::uint64_t n = std::stoull(sizef.substr(5));
  region.members.reserve(n);
  std::string line;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (!std::getline(in, line))
      throw std::runtime_error("region cache: expected " + std::to_string(n) + " members, got " +
                               std::to_string(i));
    std::uint64_t v = std::stoull(line);
    if (v >= region.q) throw std::runtime_error("region cache: member " + line + " not a residue mod q");
    if (!region.members.empty() && v <= region.members.back())
      throw std::runtime_error("region cache: members not strictly ascending at line " + std::to_string(i + 2));
    region.members.push_back(v);
  }
  region.analytic_bound = 0.0;
  return region;
}

}  // namespace plwe
