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

// cbgb command-line front end.
//
// Exit status: 0 success, 1 domain or evaluation error, 2 usage error,
// 3 verification failure.

#include <CLI11.hpp>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include "cbgb/bimatrix.hpp"
#include "cbgb/errors.hpp"
#include "cbgb/matvar.hpp"
#include "cbgb/maxeig.hpp"
#include "cbgb/partition.hpp"
#include "cbgb/random.hpp"
#include "cbgb/zonal.hpp"
#include "io.hpp"
#include "suites.hpp"

namespace cbgb::cli {
namespace {

constexpr int kDomainExit = 1;
constexpr int kUsageExit = 2;
constexpr int kVerifyExit = 3;
constexpr const char* kSeedEnv = "CBGB_SEED";

class VerifyFailed : public std::runtime_error {
 public:
  VerifyFailed() : std::runtime_error("verification failed") {}
};

using Handler = std::function<void()>;

// Shared option storage; each command reads the fields it registers.
struct Options {
  double a = 0, b = 0, c = 0;
  int m = 1;
  std::int64_t n = 1000;
  std::optional<std::uint64_t> seed;
  int shards = 1;
  std::string out = "-";
  int max_degree = kDefaultPolicy.max_degree;
  double tol = kDefaultPolicy.tail_tol;
  std::optional<int> identity_degree;
  double r = 0, s = 0, x = 1, y = 1;
  bool mc = false, series = false;
  std::string num, den, eigs, partition, method = "branching";
  std::string matrix, matrix2, theta, lambda, delta, xs, ys;
  std::string dist, suite, parts;
};

class Cli {
 public:
  Cli() : app_("Complex bimatrix generalized beta distributions", "cbgb") {
    app_.require_subcommand(1);
    app_.option_defaults()->always_capture_default();
    app_.add_option("--config", config_path_,
                    "key=value file supplying option defaults");
    app_.set_version_flag("--version", std::string(CBGB_VERSION));
    add_zonal();
    add_hyp();
    add_const();
    add_sample();
    add_density();
    add_bgb1();
    add_bgb2();
    add_maxeig();
    add_verify();
  }

  int run(int argc, char** argv) {
    try {
      app_.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
      return app_.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
      return app_.exit(e);
    } catch (const CLI::CallForVersion& e) {
      return app_.exit(e);
    } catch (const CLI::ParseError& e) {
      app_.exit(e);
      return kUsageExit;
    }
    CLI::App* leaf = &app_;
    while (!leaf->get_subcommands().empty()) leaf = leaf->get_subcommands()[0];
    try {
      apply_config(leaf);
      check_required(leaf);
      resolve_seed(leaf);
      leaf_ = leaf;
      handlers_.at(leaf)();
      return 0;
    } catch (const VerifyFailed&) {
      return kVerifyExit;
    } catch (const CLI::ParseError& e) {
      std::fprintf(stderr, "%s\n", e.what());
      return kUsageExit;
    } catch (const DomainError& e) {
      return fail("DomainError", e.what());
    } catch (const DivergenceError& e) {
      return fail("DivergenceError", e.what());
    } catch (const std::exception& e) {
      return fail("Error", e.what());
    }
  }

 private:
  static int fail(const char* type, const std::string& msg) {
    const json err{{"error", {{"type", type}, {"message", msg}}}};
    std::fprintf(stderr, "%s\n", err.dump().c_str());
    return kDomainExit;
  }

  // Config keys fill options not given on the command line.
  void apply_config(CLI::App* leaf) {
    if (config_path_.empty()) return;
    std::ifstream probe(config_path_);
    if (!probe) throw DomainError("cannot read config '" + config_path_ + "'");
    for (const auto& item : CLI::ConfigINI().from_file(config_path_)) {
      if (!item.parents.empty() &&
          item.parents != std::vector<std::string>{"default"}) {
        continue;
      }
      CLI::Option* opt = nullptr;
      try {
        opt = leaf->get_option("--" + item.name);
      } catch (const CLI::OptionNotFound&) {
        continue;
      }
      if (opt->count() > 0) continue;
      for (const auto& v : item.inputs) opt->add_result(v);
      opt->run_callback();
    }
  }

  // Required options may come from the config file, so they are checked
  // after it is applied.
  CLI::Option* req(CLI::Option* opt) {
    required_.insert(opt);
    return opt;
  }

  void check_required(const CLI::App* leaf) const {
    for (const CLI::Option* opt : leaf->get_options()) {
      if (required_.count(opt) > 0 && opt->count() == 0) {
        throw CLI::RequiredError(opt->get_name());
      }
    }
  }

  // Flag, then config, then the environment, then the suite default.
  void resolve_seed(CLI::App* leaf) {
    CLI::Option* opt = nullptr;
    try {
      opt = leaf->get_option("--seed");
    } catch (const CLI::OptionNotFound&) {
      return;
    }
    if (opt->count() > 0) return;
    if (const char* env = std::getenv(kSeedEnv); env != nullptr && *env) {
      char* end = nullptr;
      const auto v = std::strtoull(env, &end, 10);
      if (*end != '\0') {
        throw CLI::ValidationError(kSeedEnv, "not an unsigned integer");
      }
      o_.seed = v;
    } else {
      o_.seed = verify::kDefaultSeed;
    }
  }

  std::uint64_t seed() const { return *o_.seed; }

  std::string command_name() const {
    std::string name;
    for (const CLI::App* a = leaf_; a != nullptr && a != &app_;
         a = a->get_parent()) {
      name = a->get_name() + (name.empty() ? "" : " " + name);
    }
    return name;
  }

  json config() const {
    json cfg = json::object();
    for (const CLI::Option* opt : leaf_->get_options()) {
      const std::string key = opt->get_single_name();
      if (key == "help" || key.empty()) continue;
      if (opt->count() > 0) {
        const auto& res = opt->results();
        cfg[key] = res.size() == 1 ? json(res[0]) : json(res);
      } else {
        cfg[key] = opt->get_default_str();
      }
    }
    if (o_.seed) cfg["seed"] = std::to_string(*o_.seed);
    return cfg;
  }

  json envelope(const json& result) const {
    return {{"version", CBGB_VERSION},
            {"command", command_name()},
            {"config", config()},
            {"result", result}};
  }

  void emit(const json& result) const {
    write_text(o_.out, envelope(result).dump(2) + "\n");
  }

  TruncationPolicy policy() const {
    const TruncationPolicy p{o_.max_degree, o_.tol};
    p.validate();
    return p;
  }

  BimatrixParams params() const {
    const BimatrixParams p{o_.a, o_.b, o_.c, o_.m};
    p.validate();
    return p;
  }

  CLI::App* command(CLI::App* parent, const std::string& name,
                    const std::string& help, Handler h) {
    CLI::App* sub = parent->add_subcommand(name, help);
    handlers_[sub] = std::move(h);
    return sub;
  }

  void add_out(CLI::App* app) {
    app->add_option("--out", o_.out, "Output file ('-' for stdout)");
  }
  void add_policy(CLI::App* app) {
    app->add_option("--max-degree", o_.max_degree, "Series truncation degree");
    app->add_option("--tol", o_.tol, "Series tail tolerance");
  }
  void add_shape(CLI::App* app, bool b, bool c) {
    req(app->add_option("--a", o_.a, "Shape a"));
    if (b) req(app->add_option("--b", o_.b, "Shape b"));
    if (c) req(app->add_option("--c", o_.c, "Shape c"));
  }
  void add_m(CLI::App* app) {
    app->add_option("--m", o_.m, "Matrix dimension")
        ->check(CLI::PositiveNumber);
  }
  void add_mc(CLI::App* app) {
    app->add_option("--n", o_.n, "Sample count")->check(CLI::NonNegativeNumber);
    app->add_option("--seed", o_.seed, "Seed (default: $CBGB_SEED or 42)");
    app->add_option("--shards", o_.shards, "Monte Carlo shards")
        ->check(CLI::PositiveNumber);
  }

  // -------------------------------------------------------------------------

  void add_zonal() {
    auto* z =
        command(&app_, "zonal", "Normalized zonal polynomial C~_k(x)", [this] {
          const Partition k = parse_partition(o_.partition);
          const auto x = parse_list(o_.eigs);
          static const std::map<std::string, SchurMethod> kMethods{
              {"branching", SchurMethod::kBranching},
              {"bialternant", SchurMethod::kBialternant},
              {"jacobi-trudi", SchurMethod::kJacobiTrudi}};
          emit({{"partition", k.to_string()},
                {"value", zonal_C(k, x, kMethods.at(o_.method))}});
        });
    req(z->add_option("--partition", o_.partition, "Partition, e.g. 2,1"));
    req(z->add_option("--eigs", o_.eigs, "Eigenvalues, comma separated"));
    z->add_option("--method", o_.method, "Schur evaluation")
        ->check(CLI::IsMember({"branching", "bialternant", "jacobi-trudi"}));
    add_out(z);
  }

  void add_hyp() {
    auto* hyp = app_.add_subcommand("hyp", "Hypergeometric function pFq(X)");
    hyp->require_subcommand(1);
    auto* ev = command(hyp, "eval", "Evaluate the truncated series", [this] {
      const auto num = parse_list(o_.num), den = parse_list(o_.den);
      const auto sv = o_.matrix.empty()
                          ? hyp_pfq(num, den, parse_list(o_.eigs), policy())
                          : hyp_pfq(num, den, read_matrix(o_.matrix), policy());
      emit(to_json(sv));
    });
    ev->add_option("--num", o_.num, "Numerator parameters");
    ev->add_option("--den", o_.den, "Denominator parameters");
    auto* e = ev->add_option("--eigs", o_.eigs, "Eigenvalues of X");
    auto* mx = ev->add_option("--matrix", o_.matrix, "Matrix JSON file for X");
    e->excludes(mx);
    ev->add_option("--max-degree", o_.max_degree, "Series truncation degree");
    ev->add_option("--tol", o_.tol, "Series tail tolerance");
    add_out(ev);
    ev->callback([e, mx] {
      if (e->count() + mx->count() == 0) {
        throw CLI::RequiredError("--eigs or --matrix");
      }
    });
  }

  void add_const() {
    auto* c = app_.add_subcommand("const", "Multivariate gamma/beta constants");
    c->require_subcommand(1);
    auto* g = command(c, "gamma", "log CGamma_m[a]", [this] {
      emit({{"log_value", log_mv_gamma(o_.a, o_.m)}});
    });
    add_shape(g, false, false);
    add_m(g);
    add_out(g);
    auto* b = command(c, "beta", "log CBeta_m[a, b]", [this] {
      emit({{"log_value", log_mv_beta(o_.a, o_.b, o_.m)}});
    });
    add_shape(b, true, false);
    add_m(b);
    add_out(b);
    auto* bs = command(c, "beta-star", "log CBeta*_m[a, b, c]", [this] {
      emit({{"log_value", log_mv_beta_star(params())}});
    });
    add_shape(bs, true, true);
    add_m(bs);
    add_out(bs);
    static int stiefel_n = 1;
    auto* st = command(
        c, "stiefel", "log volume of the complex Stiefel manifold",
        [this] { emit({{"log_value", log_vol_stiefel(o_.m, stiefel_n)}}); });
    add_m(st);
    req(st->add_option("--n", stiefel_n, "Ambient dimension"));
    add_out(st);
  }

  // Draws are JSONL in --out; the run header goes to stdout and to
  // <out>.meta.json.
  void run_sample(const std::string& dist) {
    if (o_.out.empty() || o_.out == "-") {
      throw CLI::RequiredError("--out");
    }
    RngStream rng(seed());
    SamplerDiagnostics diag;
    std::function<json()> draw;
    if (dist == "cgamma") {
      if (!(o_.a > o_.m - 1)) throw DomainError("cgamma: a <= m - 1");
      draw = [&] { return matrix_to_json(sample_cgamma(o_.a, o_.m, rng)); };
    } else if (dist == "cbeta1") {
      draw = [&] {
        return matrix_to_json(sample_cbeta1(o_.a, o_.b, o_.m, rng, &diag));
      };
    } else if (dist == "cbeta2") {
      draw = [&] {
        return matrix_to_json(sample_cbeta2(o_.a, o_.b, o_.m, rng, &diag));
      };
    } else if (dist == "bgb1") {
      const auto p = params();
      draw = [&, p] {
        const auto s = sample_bgb1(p, rng, &diag);
        return json{{"u1", matrix_to_json(s.u1)}, {"u2", matrix_to_json(s.u2)}};
      };
    } else if (dist == "bgb2") {
      const auto p = params();
      draw = [&, p] {
        const auto s = sample_bgb2(p, rng, &diag);
        return json{{"f1", matrix_to_json(s.f1)}, {"f2", matrix_to_json(s.f2)}};
      };
    } else if (dist == "z") {
      const auto p = params();
      draw = [&, p] { return matrix_to_json(sample_z(p, rng, &diag)); };
    } else {
      throw CLI::ValidationError("dist", "unknown distribution " + dist);
    }
    std::ofstream out(o_.out, std::ios::binary);
    if (!out) throw DomainError("cannot write '" + o_.out + "'");
    for (std::int64_t i = 0; i < o_.n; ++i) out << draw().dump() << '\n';
    out.close();
    const json header = envelope({{"distribution", dist},
                                  {"n", o_.n},
                                  {"seed", seed()},
                                  {"shards", 1},
                                  {"rejections", diag.rejections},
                                  {"draws", o_.out}});
    const std::string text = header.dump(2) + "\n";
    write_text(o_.out + ".meta.json", text);
    write_text("-", text);
  }

  void add_sample_options(CLI::App* s, bool with_dist) {
    if (with_dist) {
      s->add_option("dist", o_.dist,
                    "cgamma | cbeta1 | cbeta2 | bgb1 | bgb2 | z")
          ->required()
          ->check(CLI::IsMember(
              {"cgamma", "cbeta1", "cbeta2", "bgb1", "bgb2", "z"}));
      req(s->add_option("--a", o_.a, "Shape a"));
      s->add_option("--b", o_.b, "Shape b");
      s->add_option("--c", o_.c, "Shape c");
    } else {
      add_shape(s, true, true);
    }
    add_m(s);
    s->add_option("--n", o_.n, "Number of draws")
        ->check(CLI::NonNegativeNumber);
    s->add_option("--seed", o_.seed, "Seed (default: $CBGB_SEED or 42)");
    req(s->add_option("--out", o_.out, "JSONL output file"));
  }

  void add_sample() {
    auto* s = command(&app_, "sample", "Draw matrices as JSONL",
                      [this] { run_sample(o_.dist); });
    add_sample_options(s, true);
  }

  void add_density() {
    auto* d =
        command(&app_, "density", "Log-density of a single matrix", [this] {
          const Hermitian x = read_matrix(o_.matrix);
          if (o_.dist == "cgamma") {
            const CGammaParams p{o_.a, o_.theta.empty()
                                           ? Hermitian::identity(x.dim())
                                           : read_matrix(o_.theta)};
            emit({{"logpdf", cgamma_logpdf(x, p)}});
          } else if (o_.dist == "cbeta1") {
            emit({{"logpdf", cbeta1_logpdf(x, o_.a, o_.b)}});
          } else if (o_.dist == "cbeta2") {
            emit({{"logpdf", cbeta2_logpdf(x, o_.a, o_.b)}});
          } else {
            o_.m = x.dim();
            emit(to_json(z_logpdf(x, params(), policy())));
          }
        });
    d->add_option("dist", o_.dist, "cgamma | cbeta1 | cbeta2 | z")
        ->required()
        ->check(CLI::IsMember({"cgamma", "cbeta1", "cbeta2", "z"}));
    req(d->add_option("--a", o_.a, "Shape a"));
    d->add_option("--b", o_.b, "Shape b");
    d->add_option("--c", o_.c, "Shape c (z)");
    req(d->add_option("--matrix", o_.matrix, "Matrix JSON file"));
    d->add_option("--theta", o_.theta, "Scale matrix JSON file (cgamma)");
    add_policy(d);
    add_out(d);
  }

  void add_bgb1() {
    auto* g = app_.add_subcommand("bgb1", "Bimatrix beta type I");
    g->require_subcommand(1);
    auto* s = command(g, "sample", "Draw (U1, U2) pairs as JSONL",
                      [this] { run_sample("bgb1"); });
    add_sample_options(s, false);

    auto* d = command(g, "density", "Log-density at (U1, U2)", [this] {
      const Hermitian u1 = read_matrix(o_.matrix), u2 = read_matrix(o_.matrix2);
      o_.m = u1.dim();
      const auto p = params();
      json res{{"logpdf", bgb1_logpdf(u1, u2, p)}};
      if (o_.series)
        res["series"] = to_json(bgb1_logpdf_series(u1, u2, p, policy()));
      emit(res);
    });
    add_shape(d, true, true);
    req(d->add_option("--u1", o_.matrix, "U1 matrix JSON file"));
    req(d->add_option("--u2", o_.matrix2, "U2 matrix JSON file"));
    d->add_flag("--series", o_.series, "Also evaluate the mixture series");
    add_policy(d);
    add_out(d);

    auto* mo = command(g, "moment", "E det(U1)^r det(U2)^s", [this] {
      const auto p = params();
      std::optional<TruncationPolicy> pol;
      if (o_.identity_degree)
        pol = TruncationPolicy{*o_.identity_degree, o_.tol};
      json res{{"series", to_json(det_moment(p, o_.r, o_.s, pol))}};
      if (o_.mc) {
        res["mc"] =
            to_json(det_moment_mc(p, o_.r, o_.s, o_.n, seed(), o_.shards));
      }
      emit(res);
    });
    add_shape(mo, true, true);
    add_m(mo);
    mo->add_option("--r", o_.r, "Power of det U1");
    mo->add_option("--s", o_.s, "Power of det U2");
    mo->add_option("--max-degree", o_.identity_degree,
                   "Series degree (default: identity policy for m)");
    mo->add_option("--tol", o_.tol, "Series tail tolerance");
    mo->add_flag("--mc", o_.mc, "Add a Monte Carlo estimate");
    add_mc(mo);
    add_out(mo);

    auto* zm =
        command(g, "zmoment", "E det(Z)^r, Z = U2^1/2 U1 U2^1/2", [this] {
          std::optional<TruncationPolicy> pol;
          if (o_.identity_degree)
            pol = TruncationPolicy{*o_.identity_degree, o_.tol};
          emit(to_json(z_det_moment(params(), o_.r, pol)));
        });
    add_shape(zm, true, true);
    add_m(zm);
    zm->add_option("--r", o_.r, "Power of det Z");
    zm->add_option("--max-degree", o_.identity_degree,
                   "Series degree (default: identity policy for m)");
    zm->add_option("--tol", o_.tol, "Series tail tolerance");
    add_out(zm);

    auto* e = command(
        g, "eigdensity", "Joint log-density of the two spectra", [this] {
          EigPairSpectra sp{parse_list(o_.lambda), parse_list(o_.delta)};
          o_.m = sp.dim();
          emit(to_json(joint_eig_logpdf(sp, params(), policy())));
        });
    add_shape(e, true, true);
    req(e->add_option("--lambda", o_.lambda, "Eigenvalues of U1, decreasing"));
    req(e->add_option("--delta", o_.delta, "Eigenvalues of U2, decreasing"));
    add_policy(e);
    add_out(e);

    auto* inv =
        command(g, "inverse-density",
                "Log-density of (U1^-1, U2^-1) at (V1, V2)", [this] {
                  const Hermitian v1 = read_matrix(o_.matrix),
                                  v2 = read_matrix(o_.matrix2);
                  o_.m = v1.dim();
                  emit({{"logpdf", inverse_pair_logpdf(v1, v2, params())}});
                });
    add_shape(inv, true, true);
    req(inv->add_option("--v1", o_.matrix, "V1 matrix JSON file"));
    req(inv->add_option("--v2", o_.matrix2, "V2 matrix JSON file"));
    add_out(inv);
  }

  void add_bgb2() {
    auto* g = app_.add_subcommand("bgb2", "Bimatrix beta type II");
    g->require_subcommand(1);
    auto* s = command(g, "sample", "Draw (F1, F2) pairs as JSONL",
                      [this] { run_sample("bgb2"); });
    add_sample_options(s, false);
    auto* d = command(g, "density", "Log-density at (F1, F2)", [this] {
      const Hermitian f1 = read_matrix(o_.matrix), f2 = read_matrix(o_.matrix2);
      o_.m = f1.dim();
      emit({{"logpdf", bgb2_logpdf(f1, f2, params())},
            {"det_identity_residual", det_identity_check(f1, f2)}});
    });
    add_shape(d, true, true);
    req(d->add_option("--f1", o_.matrix, "F1 matrix JSON file"));
    req(d->add_option("--f2", o_.matrix2, "F2 matrix JSON file"));
    add_out(d);
  }

  void add_maxeig() {
    auto* g = app_.add_subcommand("maxeig", "Largest eigenvalues (lmax, dmax)");
    g->require_subcommand(1);
    auto* c = command(g, "cdf", "Monte Carlo P(lmax < x, dmax < y)", [this] {
      const RectProbe probe{o_.x, o_.y};
      emit(to_json(maxeig_cdf_mc(params(), probe, o_.n, seed(), o_.shards)));
    });
    add_shape(c, true, true);
    add_m(c);
    req(c->add_option("--x", o_.x, "Threshold for lmax"));
    req(c->add_option("--y", o_.y, "Threshold for dmax"));
    add_mc(c);
    add_out(c);

    auto* q =
        command(g, "oracle", "Quadrature P(lmax < x, dmax < y), m = 1", [this] {
          o_.m = 1;
          emit({{"probability", rect_prob_quad_m1(params(), o_.x, o_.y)}});
        });
    add_shape(q, true, true);
    req(q->add_option("--x", o_.x, "Threshold for lmax"));
    req(q->add_option("--y", o_.y, "Threshold for dmax"));
    add_out(q);

    auto* gr = command(g, "grid", "CDF sweep over a grid as CSV", [this] {
      const auto p = params();
      std::string csv = "# cbgb " + std::string(CBGB_VERSION) + " " +
                        envelope(json::object())["config"].dump() + "\n";
      csv += "x,y,mean,std_error,n,oracle\n";
      std::uint64_t k = 0;
      for (double x : parse_list(o_.xs)) {
        for (double y : parse_list(o_.ys)) {
          const auto e = maxeig_cdf_mc(
              p, {x, y}, o_.n, verify::derive_seed(seed(), k++), o_.shards);
          const std::string oracle =
              p.m == 1 ? verify::strf("%.10g", rect_prob_quad_m1(p, x, y)) : "";
          csv += verify::strf("%.10g,%.10g,%.10g,%.10g,%lld,", x, y, e.mean,
                              e.std_error, static_cast<long long>(e.n)) +
                 oracle + "\n";
        }
      }
      write_text(o_.out, csv);
    });
    add_shape(gr, true, true);
    add_m(gr);
    req(gr->add_option("--xs", o_.xs, "lmax thresholds"));
    req(gr->add_option("--ys", o_.ys, "dmax thresholds"));
    add_mc(gr);
    add_out(gr);
  }

  void add_verify() {
    auto* v = command(&app_, "verify", "Run a verification suite", [this] {
      verify::SuiteConfig cfg{o_.suite, {}, o_.m, seed()};
      if (!o_.parts.empty()) {
        std::stringstream ss(o_.parts);
        std::string item;
        while (std::getline(ss, item, ',')) cfg.parts.push_back(item);
      }
      const auto report = verify::run_suite(cfg);
      write_text(o_.out, report.text());
      if (!report.passed()) throw VerifyFailed();
    });
    v->add_option("name", o_.suite, "constants | hyp | zonal | bgb1 | maxeig")
        ->required()
        ->check(CLI::IsMember(verify::suite_names()));
    v->add_option("--suite", o_.parts, "bgb1 parts, comma separated");
    add_m(v);
    v->add_option("--seed", o_.seed, "Seed (default: $CBGB_SEED or 42)");
    add_out(v);
  }

  CLI::App app_;
  Options o_;
  std::string config_path_;
  std::map<const CLI::App*, Handler> handlers_;
  std::set<const CLI::Option*> required_;
  CLI::App* leaf_ = nullptr;
};

}  // namespace
}  // namespace cbgb::cli

int main(int argc, char** argv) {
  cbgb::cli::Cli cli;
  return cli.run(argc, argv);
}
