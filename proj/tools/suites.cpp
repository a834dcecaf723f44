// Copyright 2026 The cbgb Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "suites.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <boost/math/distributions/beta.hpp>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <random>

#include "cbgb/bimatrix.hpp"
#include "cbgb/errors.hpp"
#include "cbgb/matfun.hpp"
#include "cbgb/maxeig.hpp"
#include "cbgb/partition.hpp"
#include "cbgb/quadrature.hpp"
#include "cbgb/random.hpp"
#include "cbgb/stats.hpp"
#include "cbgb/zonal.hpp"

namespace cbgb::verify {
namespace {

// Lower integration limit; 1x1 matrices below it fail the PD floor.
constexpr double kLo = 1e-20;
// Lower limit for the Z density; below it 1 - z rounds onto the unit sphere.
constexpr double kZLo = 1e-10;
constexpr double kLevel = 0.01;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Point generator for check inputs, kept apart from the library generator.
class Points {
 public:
  explicit Points(std::uint64_t seed) : eng_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(eng_);
  }
  int integer(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(eng_);
  }
  std::vector<double> spectrum(int m, double lo, double hi) {
    std::vector<double> v(static_cast<std::size_t>(m));
    for (double& x : v) x = uniform(lo, hi);
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
  }
  CMatrix unitary(int m) {
    std::normal_distribution<double> n;
    CMatrix z(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) z(i, j) = {n(eng_), n(eng_)};
    return haar_unitary_from_gaussian(z);
  }
  Hermitian with_spectrum_in(int m, double lo, double hi) {
    return Hermitian::from_spectrum(spectrum(m, lo, hi), unitary(m));
  }
  BimatrixParams params(int m) {
    return {uniform(m - 0.9, m + 4), uniform(m - 0.9, m + 4),
            uniform(m - 0.9, m + 4), m};
  }

 private:
  std::mt19937_64 eng_;
};

Hermitian scalar(double x) { return Hermitian::diagonal({x}); }

std::string triple(const BimatrixParams& p) {
  return strf("(a,b,c)=(%g,%g,%g) m=%d", p.a, p.b, p.c, p.m);
}

// Scalar bimatrix beta I density from log-gamma.
double scalar_bgb1(double u1, double u2, const BimatrixParams& p) {
  const double log_beta = std::lgamma(p.a) + std::lgamma(p.b) +
                          std::lgamma(p.c) - std::lgamma(p.a + p.b + p.c);
  return std::exp(-log_beta + (p.a - 1) * std::log(u1) +
                  (p.b - 1) * std::log(u2) + (p.b + p.c - 1) * std::log1p(-u1) +
                  (p.a + p.c - 1) * std::log1p(-u2) -
                  (p.a + p.b + p.c) * std::log1p(-u1 * u2));
}

double rel(double got, double want) {
  return std::abs(got - want) / std::abs(want);
}

void require_m(const char* part, int m, int lo, int hi) {
  if (m < lo || m > hi) {
    throw DomainError(strf("verify: part '%s' supports m in [%d, %d], got %d",
                           part, lo, hi, m));
  }
}

// ---------------------------------------------------------------------------
// Special functions.
// ---------------------------------------------------------------------------

Report constants_suite() {
  Report r("constants");
  const double two_pi = std::log(2 * std::numbers::pi);
  r.abs_err("log CGamma_2[3] = log 2pi", log_mv_gamma(3, 2), two_pi, 1e-12);
  r.abs_err("log vol Stiefel(1,1) = log 2pi", log_vol_stiefel(1, 1), two_pi,
            1e-12);
  return r;
}

Report hyp_suite(std::uint64_t seed) {
  Report r("hyp");
  Points g(derive_seed(seed, 2));
  const TruncationPolicy at30{30, 1e-300};
  for (int m = 1; m <= 3; ++m) {
    for (double a : {0.5, 2.0, 7.25}) {
      double worst = 0;
      for (int i = 0; i < 10; ++i) {
        const auto x = g.spectrum(m, -0.5, 0.5);
        double want = 1;
        for (double v : x) want *= std::pow(1 - v, -a);
        const double num[] = {a};
        worst = std::max(worst, rel(hyp_pfq(num, {}, x, at30).value, want));
      }
      r.max_err(strf("1F0 = det(I - X)^-a, T=30, m=%d a=%g", m, a), worst,
                1e-8);
    }
  }
  return r;
}

Report zonal_suite(std::uint64_t seed) {
  Report r("zonal");
  Points g(derive_seed(seed, 3));
  for (int m = 1; m <= 4; ++m) {
    double worst = 0;
    for (int i = 0; i < 20; ++i) {
      const auto x = g.spectrum(m, 0.05, 1.5);
      double tr = 0;
      for (double v : x) tr += v;
      for (int t = 0; t <= 8; ++t) {
        double sum = 0;
        for (const auto& tau : enumerate_partitions(t, m)) {
          sum += zonal_C(tau, x);
        }
        worst = std::max(worst, rel(sum, std::pow(tr, t)));
      }
    }
    r.max_err(strf("sum_tau C_tau(x) = tr^t, t<=8, m=%d", m), worst, 1e-10);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Bimatrix parts.
// ---------------------------------------------------------------------------

Report normalization_part(int m, std::uint64_t seed);
Report eig_part(int m, std::uint64_t seed);

Report scalar_normalization() {
  Report r("normalization");
  for (auto p : {BimatrixParams{1, 1, 1, 1}, BimatrixParams{2, 3, 4, 1},
                 BimatrixParams{5.5, 2.5, 3, 1}}) {
    const double mass = integrate_2d(
        [&](double u, double v) {
          return std::exp(bgb1_logpdf(scalar(u), scalar(v), p));
        },
        kLo, 1, kLo, 1);
    r.abs_err("normalization " + triple(p), mass, 1.0, 1e-6);
  }
  return r;
}

Report series_part(int m, std::uint64_t seed) {
  require_m("series", m, 1, 4);
  Report r("series");
  Points g(derive_seed(seed, 5));
  const TruncationPolicy policy{200, 1e-12};
  const double top = std::sqrt(0.7);
  double worst = 0;
  int converged = 0;
  for (int i = 0; i < 50; ++i) {
    const auto p = g.params(m);
    const auto u1 = g.with_spectrum_in(m, 0.02, top);
    const auto u2 = g.with_spectrum_in(m, 0.02, top);
    const auto sv = bgb1_logpdf_series(u1, u2, p, policy);
    converged += sv.converged ? 1 : 0;
    worst = std::max(worst,
                     std::abs(std::expm1(sv.value - bgb1_logpdf(u1, u2, p))));
  }
  r.max_err(strf("series vs closed form, 50 points, radius <= 0.7, m=%d", m),
            worst, 1e-8);
  r.flag("series converged at all points", converged == 50,
         strf("%d of 50", converged));
  return r;
}

Report determinant_part(std::uint64_t seed) {
  Report r("determinant");
  Points g(derive_seed(seed, 6));
  double worst = 0;
  for (int i = 0; i < 100; ++i) {
    const int m = 1 + i % 4;
    worst =
        std::max(worst, det_identity_check(g.with_spectrum_in(m, 0.1, 3.0),
                                           g.with_spectrum_in(m, 0.1, 3.0)));
  }
  r.max_err("det identity, 100 PD pairs, m<=4", worst, 1e-9);
  return r;
}

Report moments_part(int m, std::uint64_t seed) {
  require_m("moments", m, 1, 3);
  Report r("moments");
  const BimatrixParams p{3, 3, 3, m};
  const auto series = det_moment(p, 1, 1);
  const auto mc = det_moment_mc(p, 1, 1, 200000, derive_seed(seed, 70 + m));
  r.within_se(
      strf("E det U1 det U2 series vs MC, N=2e5, %s", triple(p).c_str()), mc,
      series.value);
  if (m == 1) {
    const double want = integrate_2d(
        [&](double u, double v) { return u * v * scalar_bgb1(u, v, p); }, 0, 1,
        0, 1);
    r.rel_err("E det U1 det U2 series vs quadrature, " + triple(p),
              series.value, want, 1e-5);
  }
  return r;
}

Report z_part(int m, std::uint64_t seed) {
  require_m("z", m, 1, 3);
  Report r("z");
  const BimatrixParams p{3, 3, 3, m};
  r.abs_err("z_det_moment(r=0) = 1, " + triple(p), z_det_moment(p, 0).value,
            1.0, 2e-6);
  if (m != 1) return r;
  const TruncationPolicy policy{20000, 1e-13};
  auto density = [&](double z) {
    return std::exp(z_logpdf(scalar(z), p, policy).value);
  };
  r.abs_err("z density normalization, " + triple(p),
            integrate_1d(density, kZLo, 1.0, 1e-8), 1.0, 1e-5);
  const std::vector<double> edges{0.02, 0.04, 0.06, 0.08, 0.1, 0.13,
                                  0.16, 0.2,  0.25, 0.3,  0.4};
  std::vector<double> probs;
  double lo = kZLo, mass = 0;
  for (std::size_t k = 0; k <= edges.size(); ++k) {
    const double hi = k < edges.size() ? edges[k] : 1.0;
    probs.push_back(integrate_1d(density, lo, hi, 1e-8));
    mass += probs.back();
    lo = hi;
  }
  for (double& v : probs) v /= mass;
  std::vector<double> counts(probs.size(), 0.0);
  RngStream rng(derive_seed(seed, 80));
  for (int i = 0; i < 100000; ++i) {
    counts[static_cast<std::size_t>(
        bin_of(sample_z(p, rng)(0, 0).real(), edges))] += 1;
  }
  r.test("z samples vs density, chi-square, 12 cells, N=1e5",
         chi_square_gof(counts, probs), kLevel);
  return r;
}

Report inverse_part(std::uint64_t seed) {
  Report r("inverse");
  Points g(derive_seed(seed, 9));
  double worst = 0;
  for (int i = 0; i < 100; ++i) {
    const int m = 1 + i % 4;
    const auto p = g.params(m);
    const auto u1 = g.with_spectrum_in(m, 0.02, std::sqrt(0.9));
    const auto u2 = g.with_spectrum_in(m, 0.02, std::sqrt(0.9));
    const double lhs =
        inverse_pair_logpdf(herm_inverse(u1), herm_inverse(u2), p) -
        2.0 * m * (logdet(u1) + logdet(u2));
    worst = std::max(worst, std::abs(lhs - bgb1_logpdf(u1, u2, p)));
  }
  r.max_err("inverse pair change of variables, 100 points, m<=4", worst, 1e-10);
  const BimatrixParams p{2.5, 3, 2, 1};
  // v = 1 + t / (1 - t) per axis.
  const double mass = integrate_2d(
      [&](double s, double t) {
        const double v1 = 1 + s / (1 - s), v2 = 1 + t / (1 - t);
        return std::exp(inverse_pair_logpdf(scalar(v1), scalar(v2), p)) /
               ((1 - s) * (1 - s) * (1 - t) * (1 - t));
      },
      1e-12, 1, 1e-12, 1);
  r.abs_err("inverse pair normalization over (1,inf)^2, " + triple(p), mass,
            1.0, 1e-5);
  return r;
}

Report scalar_eig_collapse(std::uint64_t seed) {
  Report r("eig");
  Points g(derive_seed(seed, 10));
  const TruncationPolicy deep{100000, 1e-15};
  double worst = 0;
  for (int i = 0; i < 30; ++i) {
    const auto p = g.params(1);
    const double l = g.uniform(0.01, 0.99), d = g.uniform(0.01, 0.99);
    const double got = joint_eig_logpdf({{l}, {d}}, p, deep).value;
    worst = std::max(worst, rel(got, bgb1_logpdf(scalar(l), scalar(d), p)));
  }
  r.max_err("joint eigen density m=1 vs bimatrix density, 30 points", worst,
            1e-10);
  return r;
}

// m = 2: the ordered region {1 > l1 > l2 > 0} x {1 > d1 > d2 > 0} has volume
// 1/4, so sorting uniform points of (0,1)^4 and weighting by f / 4 integrates
// f. Cells split (lambda_max, delta_max) at kCut.
Report eig_two(std::uint64_t seed) {
  Report r("eig");
  const BimatrixParams p{2, 2, 6, 2};
  const JointEigDensity density(p, {60, 1e-10});
  constexpr double kCut = 0.42;
  constexpr std::int64_t kMc = 1000000;
  constexpr std::int64_t kSamples = 100000;
  auto cell = [&](double l, double d) {
    return 2 * (l > kCut ? 1 : 0) + (d > kCut ? 1 : 0);
  };

  RngStream rng(derive_seed(seed, 101));
  MeanAccumulator total;
  std::array<double, 4> sum{}, sum_sq{};
  for (std::int64_t i = 0; i < kMc; ++i) {
    double u[4];
    for (double& v : u) v = rng.uniform();
    const EigPairSpectra e{{std::max(u[0], u[1]), std::min(u[0], u[1])},
                           {std::max(u[2], u[3]), std::min(u[2], u[3])}};
    const double w = 0.25 * std::exp(density.logpdf(e).value);
    total.add(w);
    const auto k = static_cast<std::size_t>(cell(e.lambda[0], e.delta[0]));
    sum[k] += w;
    sum_sq[k] += w * w;
  }
  MCEstimate mass;
  mass.mean = total.mean();
  mass.std_error = total.std_error();
  mass.n = kMc;
  r.within_se("joint eigen density mass, uniform MC N=1e6, " + triple(p), mass,
              1.0);

  std::array<double, 4> prob{}, second{};
  for (std::size_t k = 0; k < 4; ++k) {
    prob[k] = sum[k] / kMc;
    second[k] = sum_sq[k] / kMc;
  }
  std::array<double, 4> freq{};
  RngStream srng(derive_seed(seed, 102));
  for (std::int64_t i = 0; i < kSamples; ++i) {
    const auto e = spectra_of(sample_bgb1(p, srng));
    freq[static_cast<std::size_t>(cell(e.lambda[0], e.delta[0]))] += 1.0;
  }
  // Three free cells; covariance of the observed frequencies plus that of
  // the MC cell integrals.
  std::vector<double> diff(3), cov(9);
  for (int j = 0; j < 3; ++j) {
    diff[j] = freq[j] / kSamples - prob[j];
    for (int k = 0; k < 3; ++k) {
      const double pj = prob[j], pk = prob[k];
      const double multi = ((j == k ? pj : 0.0) - pj * pk) / kSamples;
      const double mc = ((j == k ? second[j] : 0.0) - pj * pk) / kMc;
      cov[3 * j + k] = multi + mc;
    }
  }
  r.test(strf("sampled (lambda_max, delta_max) vs density, 4 cells cut %.2f, "
              "N=1e5",
              kCut),
         chi_square_quadratic(diff, cov), kLevel);
  return r;
}

Report marginals_part(int m, std::uint64_t seed) {
  require_m("marginals", m, 1, 4);
  Report r("marginals");
  constexpr int kN = 100000;
  if (m == 1) {
    const BimatrixParams p{2, 3.5, 2.5, 1};
    RngStream rng(derive_seed(seed, 120));
    std::vector<double> x(kN), y(kN);
    for (int i = 0; i < kN; ++i) {
      const auto s = sample_bgb1(p, rng);
      x[static_cast<std::size_t>(i)] = s.u1(0, 0).real();
      y[static_cast<std::size_t>(i)] = s.u2(0, 0).real();
    }
    const boost::math::beta_distribution<double> b1(p.a, p.c), b2(p.b, p.c);
    r.test("U1 vs Beta(a,c), KS, N=1e5, " + triple(p),
           ks_one_sample(x, [&](double v) { return cdf(b1, v); }), kLevel);
    r.test("U2 vs Beta(b,c), KS, N=1e5, " + triple(p),
           ks_one_sample(y, [&](double v) { return cdf(b2, v); }), kLevel);
    return r;
  }
  // log det U1 of CBI_m(a, c) is a sum of independent log Beta(a - i + 1, c).
  const BimatrixParams p{m + 1.0, m + 0.5, m + 1.5, m};
  RngStream rng(derive_seed(seed, 121)), ref(derive_seed(seed, 122));
  std::vector<double> x(kN), y(kN);
  for (int i = 0; i < kN; ++i) {
    x[static_cast<std::size_t>(i)] = logdet(sample_bgb1(p, rng).u1);
    double s = 0;
    for (int j = 1; j <= m; ++j) {
      const double g1 = ref.gamma(p.a - j + 1), g2 = ref.gamma(p.c);
      s += std::log(g1 / (g1 + g2));
    }
    y[static_cast<std::size_t>(i)] = s;
  }
  r.test("log det U1 vs product of betas, two-sample KS, N=1e5, " + triple(p),
         ks_two_sample(x, y), kLevel);
  return r;
}

Report normalization_part(int m, std::uint64_t seed) {
  require_m("normalization", m, 1, 2);
  if (m == 1) return scalar_normalization();
  Report r("normalization");
  r.append(eig_two(seed));
  return r;
}

Report eig_part(int m, std::uint64_t seed) {
  require_m("eig", m, 1, 2);
  return m == 1 ? scalar_eig_collapse(seed) : eig_two(seed);
}

using PartFn = std::function<Report(int, std::uint64_t)>;

const std::map<std::string, PartFn>& part_table() {
  static const std::map<std::string, PartFn> table{
      {"normalization", normalization_part},
      {"series", series_part},
      {"determinant",
       [](int, std::uint64_t seed) { return determinant_part(seed); }},
      {"moments", moments_part},
      {"z", z_part},
      {"inverse", [](int, std::uint64_t seed) { return inverse_part(seed); }},
      {"eig", eig_part},
      {"marginals", marginals_part},
  };
  return table;
}

// ---------------------------------------------------------------------------
// Largest eigenvalues.
// ---------------------------------------------------------------------------

Report maxeig_suite(int m, std::uint64_t seed) {
  require_m("maxeig", m, 1, 4);
  Report r("maxeig");
  const double grid[] = {0.3, 0.5, 0.8};
  std::uint64_t tag = 1100;
  for (double abc : {2.0, 3.0}) {
    const BimatrixParams p{abc, abc, abc, m};
    MCEstimate est[3][3];
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        est[i][j] = maxeig_cdf_mc(p, {grid[i], grid[j]}, 100000,
                                  derive_seed(seed, tag++));
        if (m == 1) {
          r.within_se(strf("P(lmax<%.1f, dmax<%.1f) MC vs quadrature, %s",
                           grid[i], grid[j], triple(p).c_str()),
                      est[i][j], rect_prob_quad_m1(p, grid[i], grid[j]));
        }
      }
    }
    int violations = 0;
    double worst = -1e300;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        for (auto [ni, nj] : {std::pair{i + 1, j}, std::pair{i, j + 1}}) {
          if (ni > 2 || nj > 2) continue;
          const auto& a = est[i][j];
          const auto& b = est[ni][nj];
          const double se = std::hypot(a.std_error, b.std_error);
          const double z = (a.mean - b.mean) / se;
          worst = std::max(worst, z);
          if (z > 3) ++violations;
        }
      }
    }
    r.flag("CDF nondecreasing on 3x3 grid (3 SE slack), " + triple(p),
           violations == 0,
           strf("%d violations, max (F_lo - F_hi) / se = %.2f", violations,
                worst));
    const auto corner =
        maxeig_cdf_mc(p, {1, 1}, 10000, derive_seed(seed, 1090));
    r.exact("P(lmax<1, dmax<1), " + triple(p), corner.mean, 1.0);
  }
  const BimatrixParams p{3, 3, 3, m};
  const auto small =
      maxeig_cdf_mc(p, {0.02, 1.0}, 100000, derive_seed(seed, 1091));
  const bool ok = small.mean < 0.01 + 3 * small.std_error;
  r.flag("P(lmax<0.02) < 0.01 + 3 SE, " + triple(p), ok,
         strf("%.6f +- %.6f", small.mean, small.std_error));
  return r;
}

std::string parts_label(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& s : parts) out += (out.empty() ? "" : ",") + s;
  return out;
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag) {
  return splitmix64(seed ^ splitmix64(tag));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"constants", "hyp", "zonal",
                                              "bgb1", "maxeig"};
  return names;
}

const std::vector<std::string>& bgb1_parts() {
  static const std::vector<std::string> parts{
      "normalization", "series", "determinant", "moments", "z",
      "inverse",       "eig",    "marginals"};
  return parts;
}

Report run_suite(const SuiteConfig& cfg) {
  Report out(strf("cbgb %s verify %s m=%d seed=%llu", CBGB_VERSION,
                  cfg.suite.c_str(), cfg.m,
                  static_cast<unsigned long long>(cfg.seed)));
  if (cfg.suite == "bgb1") {
    const auto parts = cfg.parts.empty() ? bgb1_parts() : cfg.parts;
    for (const auto& name : parts) {
      const auto it = part_table().find(name);
      if (it == part_table().end()) {
        throw DomainError("verify: unknown bgb1 part '" + name + "'");
      }
    }
    out = Report(out.title() + " parts=" + parts_label(parts));
    for (const auto& name : parts) {
      out.append(part_table().at(name)(cfg.m, cfg.seed));
    }
    return out;
  }
  if (!cfg.parts.empty()) {
    throw DomainError("verify: --suite applies to bgb1 only");
  }
  if (cfg.suite == "constants") {
    out.append(constants_suite());
  } else if (cfg.suite == "hyp") {
    out.append(hyp_suite(cfg.seed));
  } else if (cfg.suite == "zonal") {
    out.append(zonal_suite(cfg.seed));
  } else if (cfg.suite == "maxeig") {
    out.append(maxeig_suite(cfg.m, cfg.seed));
  } else {
    throw DomainError("verify: unknown suite '" + cfg.suite + "'");
  }
  return out;
}

std::string criterion_title(int id) {
  static const char* titles[kCriteria] = {
      "constants",
      "1F0 determinant identity at T=30",
      "zonal sum identity",
      "bimatrix beta I normalization at m=1",
      "mixture series vs closed-form density at m=2",
      "determinant identity",
      "determinant moments",
      "Z density and moments",
      "inverse pair",
      "joint eigenvalue density",
      "largest-eigenvalue CDF",
      "sampler marginals",
      "verify reruns are byte-identical",
  };
  if (id < 1 || id > kCriteria) throw DomainError("unknown criterion");
  return titles[id - 1];
}

Report run_criterion(int id, std::uint64_t seed) {
  Report r(strf("criterion %d: %s", id, criterion_title(id).c_str()));
  auto bgb1 = [&](const std::string& part, int m) {
    r.append(run_suite({"bgb1", {part}, m, seed}));
  };
  switch (id) {
    case 1:
      r.append(run_suite({"constants", {}, 1, seed}));
      break;
    case 2:
      r.append(run_suite({"hyp", {}, 1, seed}));
      break;
    case 3:
      r.append(run_suite({"zonal", {}, 1, seed}));
      break;
    case 4:
      bgb1("normalization", 1);
      break;
    case 5:
      bgb1("series", 2);
      break;
    case 6:
      bgb1("determinant", 1);
      break;
    case 7:
      bgb1("moments", 2);
      bgb1("moments", 1);
      break;
    case 8:
      bgb1("z", 1);
      bgb1("z", 2);
      break;
    case 9:
      bgb1("inverse", 1);
      break;
    case 10:
      bgb1("eig", 1);
      bgb1("eig", 2);
      break;
    case 11:
      r.append(run_suite({"maxeig", {}, 1, seed}));
      break;
    case 12:
      bgb1("marginals", 1);
      break;
    case 13: {
      const std::vector<SuiteConfig> reruns{
          {"bgb1", {"marginals", "moments"}, 1, seed}, {"maxeig", {}, 1, seed}};
      for (const auto& cfg : reruns) {
        const std::string first = run_suite(cfg).text();
        const std::string second = run_suite(cfg).text();
        r.flag(strf("rerun of verify %s m=%d seed=%llu", cfg.suite.c_str(),
                    cfg.m, static_cast<unsigned long long>(cfg.seed)),
               first == second,
               strf("%zu bytes, %s", first.size(),
                    first == second ? "identical" : "differ"));
      }
      break;
    }
    default:
      throw DomainError("unknown criterion");
  }
  return r;
}

}  // namespace cbgb::verify
