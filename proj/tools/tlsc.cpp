// Command-line front end: model sweeps as CSV, maximum location and Bloch
// geometry as JSON, and a sampling cross-check of the closed-form disorder
// averages. All numeric output uses shortest round-trip formatting so reruns
// are byte-identical.

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tlsc/entropy.hpp"
#include "tlsc/mc.hpp"
#include "tlsc/models.hpp"
#include "tlsc/optimize.hpp"
#include "tlsc/thermal.hpp"

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;
constexpr int kIo = 3;
constexpr int kBoundary = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void write_text(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << content;
  out.flush();
  if (!out) throw IoError("write to '" + path + "' failed");
}

void write_meta(const std::optional<std::string>& path,
                const std::vector<std::string>& argv, bool with_rng) {
  if (!path) return;
  json meta;
  meta["argv"] = argv;
  if (with_rng) meta["rng"] = std::string(tlsc::kRngId);
  write_text(*path, meta.dump(2) + "\n");
}

// A model instance bound to its sweep variable: evaluator, effective Bloch
// radius, default sweep range, and the parameters echoed into JSON output.
struct SweepModel {
  std::string name;
  std::function<tlsc::EntropyTriple(double, bool)> eval;
  std::function<double(double)> radius;
  tlsc::Bracket bracket;
  json params = json::object();
};

SweepModel make_sweep_model(const std::string& name, double chi, double alpha,
                            std::optional<double> zeta) {
  using tlsc::ModelKind;
  const tlsc::Bracket wide{0.01, 100.0, true};
  SweepModel m;
  m.name = name;

  if (zeta) {
    ModelKind kind;
    if (name == "binary-lambda")
      kind = ModelKind::BinaryLambda;
    else if (name == "box-lambda")
      kind = ModelKind::BoxLambda;
    else
      throw UsageError("--zeta applies to binary-lambda and box-lambda only");
    const double z = *zeta;
    if (!(z > 0.0)) throw UsageError("--zeta must be positive");
    m.eval = [kind, z](double ci, bool norm) {
      return tlsc::sweep_chi_inverse(kind, z, ci, norm);
    };
    m.radius = [kind, z](double ci) {
      const double c = 1.0 / ci;
      const double t = z * c;
      return (kind == ModelKind::BinaryLambda ? tlsc::bloch_binary_lambda(c, t)
                                              : tlsc::bloch_box_lambda(c, t))
          .r;
    };
    m.bracket = {0.01, 1000.0, true};
    m.params["zeta"] = z;
    return m;
  }

  if (name == "lz-diag" || name == "lz-offd") {
    const ModelKind kind =
        name == "lz-diag" ? ModelKind::LzDiagonal : ModelKind::LzOffDiagonal;
    m.eval = [kind](double x, bool norm) -> tlsc::EntropyTriple {
      if (kind == ModelKind::LzOffDiagonal && x == 0.0)
        return {0.0, 0.0, 0.0, norm};  // pure-state limit of the sweep
      return tlsc::model_complexity({kind, 0.0}, x, norm);
    };
    m.radius = [kind](double x) {
      if (kind == ModelKind::LzOffDiagonal && x == 0.0) return 1.0;
      return tlsc::model_bloch_radius({kind, 0.0}, x);
    };
    m.bracket = wide;
    return m;
  }

  if (name == "binary-lambda" || name == "box-lambda") {
    const ModelKind kind = name == "binary-lambda" ? ModelKind::BinaryLambda
                                                   : ModelKind::BoxLambda;
    if (!(chi >= 0.0)) throw UsageError("--chi must be >= 0");
    m.eval = [kind, chi](double tau, bool norm) {
      return tlsc::model_complexity({kind, chi}, tau, norm);
    };
    m.radius = [kind, chi](double tau) {
      return tlsc::model_bloch_radius({kind, chi}, tau);
    };
    m.bracket = wide;
    m.params["chi"] = chi;
    return m;
  }

  if (name == "binary-v" || name == "box-v") {
    const ModelKind kind =
        name == "binary-v" ? ModelKind::BinaryV : ModelKind::BoxV;
    m.eval = [kind](double kappa, bool norm) {
      return tlsc::model_complexity({kind, 0.0}, kappa, norm);
    };
    m.radius = [kind](double kappa) {
      return tlsc::model_bloch_radius({kind, 0.0}, kappa);
    };
    m.bracket = wide;
    return m;
  }

  if (name == "paramagnet") {
    m.eval = [](double x, bool norm) {
      return tlsc::paramagnet_complexity({x}, norm);
    };
    m.radius = [](double x) { return std::tanh(x); };
    m.bracket = wide;
    return m;
  }

  if (name == "ising") {
    if (!(alpha >= 0.0)) throw UsageError("--alpha must be >= 0");
    m.eval = [alpha](double x, bool norm) {
      return tlsc::ising_complexity({x, alpha}, norm);
    };
    m.radius = [alpha](double x) {
      return std::abs(tlsc::curie_weiss_solve({x, alpha}).m);
    };
    m.bracket = {0.1, 5.0, false};
    m.params["alpha"] = alpha;
    return m;
  }

  throw UsageError("unknown model '" + name + "'");
}

int cmd_curve(const SweepModel& m, double lo, double hi, int points,
              bool log_grid, bool normalized, const std::string& out,
              const std::optional<std::string>& meta,
              const std::vector<std::string>& argv) {
  if (!(lo < hi)) throw UsageError("--min must be less than --max");
  if (points < 2) throw UsageError("--points must be at least 2");
  if (log_grid && !(lo > 0.0)) throw UsageError("log grid needs --min > 0");

  std::string body = "x,S,R2,SC\n";
  const double ul = log_grid ? std::log(lo) : lo;
  const double uh = log_grid ? std::log(hi) : hi;
  for (int i = 0; i < points; ++i) {
    double x;
    if (i == 0)
      x = lo;
    else if (i == points - 1)
      x = hi;
    else {
      const double u = ul + (uh - ul) * static_cast<double>(i) / (points - 1);
      x = log_grid ? std::exp(u) : u;
    }
    const tlsc::EntropyTriple e = m.eval(x, normalized);
    body += fmt(x);
    body += ',';
    body += fmt(e.shannon);
    body += ',';
    body += fmt(e.renyi2);
    body += ',';
    body += fmt(e.complexity);
    body += '\n';
  }
  write_text(out, body);
  write_meta(meta, argv, false);
  return kOk;
}

int cmd_max(const SweepModel& m, const tlsc::Bracket& br, double tol,
            const std::optional<std::string>& meta,
            const std::vector<std::string>& argv) {
  const tlsc::MaximizeResult res = tlsc::maximize_scalar(
      [&](double x) { return m.eval(x, false).complexity; }, br, tol);
  if (res.at_boundary) {
    std::cerr << "maximum of " << m.name << " lies on the bracket edge at "
              << res.x << "\n";
    return kBoundary;
  }
  json j;
  j["model"] = m.name;
  j["params"] = m.params;
  j["x_star"] = res.x;
  j["sc_star_nats"] = res.value;
  j["sc_star_normalized"] = res.value / std::numbers::ln2;
  j["r_at_max"] = m.radius(res.x);
  std::cout << j.dump() << "\n";
  write_meta(meta, argv, false);
  return kOk;
}

int cmd_mc(const std::string& model, double chi, double tau, double kappa,
           std::uint64_t samples, std::uint64_t seed, unsigned workers,
           const std::optional<std::string>& meta,
           const std::vector<std::string>& argv) {
  if (samples == 0) throw UsageError("--samples must be positive");
  tlsc::SampleConfig cfg;
  if (model == "binary-lambda" || model == "box-lambda") {
    cfg.kind = model == "binary-lambda" ? tlsc::DisorderKind::BinaryLambda
                                        : tlsc::DisorderKind::BoxLambda;
    if (!(tau > 0.0)) throw UsageError("--tau must be positive");
    if (!(chi >= 0.0)) throw UsageError("--chi must be >= 0");
    cfg.eps = chi;  // raw parameters in units of the disorder width: w = 1
    cfg.v = 0.5 * tau;
    cfg.w = 1.0;
  } else if (model == "binary-v" || model == "box-v") {
    cfg.kind = model == "binary-v" ? tlsc::DisorderKind::BinaryV
                                   : tlsc::DisorderKind::BoxV;
    if (!(kappa > 0.0)) throw UsageError("--kappa must be positive");
    cfg.eps = 1.0;  // raw parameters in units of the splitting: eps = 1
    cfg.v = 0.5 * kappa;
    cfg.w = 0.0;
  } else {
    throw UsageError("mc-check supports the four disorder models only");
  }
  cfg.n_samples = samples;
  cfg.seed = seed;

  const tlsc::CompareReport rep = tlsc::compare(cfg, workers);
  json j;
  j["z_s"] = rep.z_s;
  j["z_c"] = rep.z_c;
  j["sc_abs_dev"] = rep.sc_abs_dev;
  j["n"] = rep.estimate.n;
  j["seed"] = seed;
  j["pass"] = rep.pass;
  std::cout << j.dump() << "\n";
  write_meta(meta, argv, true);
  return rep.pass ? kOk : kCheckFailed;
}

int cmd_bloch(const std::string& model, double x,
              const std::optional<std::string>& meta,
              const std::vector<std::string>& argv) {
  tlsc::ModelKind kind;
  if (model == "lz-diag")
    kind = tlsc::ModelKind::LzDiagonal;
  else if (model == "lz-offd")
    kind = tlsc::ModelKind::LzOffDiagonal;
  else
    throw UsageError("bloch supports lz-diag and lz-offd");
  const tlsc::BlochState st = tlsc::bloch_report({kind, 0.0}, x);
  constexpr double kDeg = 180.0 / std::numbers::pi;
  json j;
  j["pop1"] = st.pop1;
  j["pop0"] = st.pop0;
  j["theta_plus_rad"] = st.theta_plus;
  j["theta_plus_deg"] = st.theta_plus * kDeg;
  j["theta_minus_rad"] = st.theta_minus;
  j["theta_minus_deg"] = st.theta_minus * kDeg;
  j["phi_plus"] = st.phi_plus;
  j["phi_minus"] = st.phi_minus;
  std::cout << j.dump() << "\n";
  write_meta(meta, argv, false);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::string> argv_rec(argv, argv + argc);

  CLI::App app{"entropic complexity of dissipative two-level systems"};
  app.require_subcommand(1);

  std::string model;
  double chi = 0.0, alpha = 0.0, zeta = 0.0;
  double lo = 0.0, hi = 0.0, tol = 1e-9, x = 0.0, tau = 1.0, kappa = 1.0;
  int points = 200;
  bool log_grid = false, normalized = false;
  std::string out = "-";
  std::string meta;
  std::uint64_t samples = 1000000, seed = 1;
  unsigned workers = 1;

  auto* curve =
      app.add_subcommand("curve", "sweep a model and emit x,S,R2,SC rows");
  curve->add_option("--model", model, "model name")->required();
  curve->add_option("--chi", chi, "fixed chi = eps/W (lambda-disorder models)");
  curve->add_option("--alpha", alpha, "reduced field (ising)");
  auto* c_zeta = curve->add_option(
      "--zeta", zeta, "fixed zeta = 2V/eps; sweeps chi_inv = W/eps instead");
  auto* c_min = curve->add_option("--min", lo, "sweep start");
  auto* c_max = curve->add_option("--max", hi, "sweep end");
  curve->add_option("--points", points, "number of rows");
  auto* c_log =
      curve->add_flag("--log-grid", log_grid, "space rows uniformly in log x");
  curve->add_flag("--normalized", normalized, "report entropies over ln 2");
  curve->add_option("--out", out, "output path, '-' for stdout");
  auto* c_meta =
      curve->add_option("--meta", meta, "write a JSON invocation sidecar");

  auto* mx = app.add_subcommand("max", "locate the complexity maximum");
  mx->add_option("--model", model, "model name")->required();
  mx->add_option("--chi", chi, "fixed chi = eps/W (lambda-disorder models)");
  mx->add_option("--alpha", alpha, "reduced field (ising)");
  auto* m_zeta = mx->add_option(
      "--zeta", zeta, "fixed zeta = 2V/eps; searches over chi_inv instead");
  auto* m_min = mx->add_option("--min", lo, "bracket start");
  auto* m_max = mx->add_option("--max", hi, "bracket end");
  auto* m_log = mx->add_flag("--log-grid", log_grid, "search in log x");
  mx->add_option("--tol", tol, "location tolerance");
  auto* m_meta =
      mx->add_option("--meta", meta, "write a JSON invocation sidecar");

  auto* mc = app.add_subcommand(
      "mc-check", "compare sampled disorder averages with the closed forms");
  mc->add_option("--model", model, "disorder model name")->required();
  mc->add_option("--chi", chi, "chi = eps/W (lambda models)");
  mc->add_option("--tau", tau, "tau = 2V/W (lambda models)");
  mc->add_option("--kappa", kappa, "kappa = 2V0/eps (V models)");
  mc->add_option("--samples", samples, "number of draws");
  mc->add_option("--seed", seed, "stream seed");
  mc->add_option("--workers", workers, "worker thread count");
  auto* mc_meta =
      mc->add_option("--meta", meta, "write a JSON invocation sidecar");

  auto* bl = app.add_subcommand(
      "bloch", "eigenstate angles and populations of the superposition models");
  bl->add_option("--model", model, "lz-diag or lz-offd")->required();
  bl->add_option("--x", x, "sweep value")->required();
  auto* bl_meta =
      bl->add_option("--meta", meta, "write a JSON invocation sidecar");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    const auto meta_of = [&](const CLI::Option* opt) {
      return opt->count() > 0 ? std::optional<std::string>(meta) : std::nullopt;
    };
    if (app.got_subcommand(curve)) {
      std::optional<double> zopt;
      if (c_zeta->count() > 0) zopt = zeta;
      const SweepModel m = make_sweep_model(model, chi, alpha, zopt);
      const double use_lo = c_min->count() > 0 ? lo : m.bracket.lo;
      const double use_hi = c_max->count() > 0 ? hi : m.bracket.hi;
      // The model's default scale applies to its default range only; an
      // explicit range is linear unless --log-grid says otherwise.
      const bool explicit_range = c_min->count() > 0 || c_max->count() > 0;
      const bool use_log = c_log->count() > 0
                               ? log_grid
                               : (!explicit_range && m.bracket.log_scale);
      return cmd_curve(m, use_lo, use_hi, points, use_log, normalized, out,
                       meta_of(c_meta), argv_rec);
    }
    if (app.got_subcommand(mx)) {
      std::optional<double> zopt;
      if (m_zeta->count() > 0) zopt = zeta;
      const SweepModel m = make_sweep_model(model, chi, alpha, zopt);
      tlsc::Bracket br = m.bracket;
      if (m_min->count() > 0 || m_max->count() > 0) br.log_scale = false;
      if (m_min->count() > 0) br.lo = lo;
      if (m_max->count() > 0) br.hi = hi;
      if (m_log->count() > 0) br.log_scale = log_grid;
      return cmd_max(m, br, tol, meta_of(m_meta), argv_rec);
    }
    if (app.got_subcommand(mc))
      return cmd_mc(model, chi, tau, kappa, samples, seed, workers,
                    meta_of(mc_meta), argv_rec);
    if (app.got_subcommand(bl))
      return cmd_bloch(model, x, meta_of(bl_meta), argv_rec);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kUsage;
}
