#include "tlsc/mc.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

#include "tlsc/entropy.hpp"

namespace tlsc {

namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;
constexpr std::uint64_t kBlock = 65536;

// splitmix64 finalizer; counter mode over (seed, index) makes every draw an
// independent pure function, which is what the worker-count invariance needs.
std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ull;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBull;
  z ^= z >> 31;
  return z;
}

std::uint64_t draw_bits(std::uint64_t seed, std::uint64_t index) {
  return mix64(seed + (index + 1) * kGamma);
}

double to_unit(std::uint64_t bits) {  // [0, 1) on a 2^-53 lattice
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

struct Draw {
  double sin_phi;
  double cos_phi;
};

// One disorder realization from one 64-bit word. Binary kinds use the top
// bit as the sign; box kinds map the word to a uniform offset.
Draw eval_sample(const SampleConfig& cfg, std::uint64_t bits) {
  switch (cfg.kind) {
    case DisorderKind::BinaryLambda: {
      const double lam = (bits >> 63) ? cfg.w : -cfg.w;
      const double de = cfg.eps - lam;
      const double delta = std::hypot(de, 2.0 * cfg.v);
      return {2.0 * cfg.v / delta, de / delta};
    }
    case DisorderKind::BoxLambda: {
      const double lam = cfg.w * (2.0 * to_unit(bits) - 1.0);
      const double de = cfg.eps - lam;
      const double delta = std::hypot(de, 2.0 * cfg.v);
      return {2.0 * cfg.v / delta, de / delta};
    }
    case DisorderKind::BinaryV: {
      const double vv = (bits >> 63) ? cfg.v : -cfg.v;
      const double delta = std::hypot(cfg.eps, 2.0 * vv);
      return {2.0 * vv / delta, cfg.eps / delta};
    }
    case DisorderKind::BoxV: {
      const double vv = cfg.v * (2.0 * to_unit(bits) - 1.0);
      const double delta = std::hypot(cfg.eps, 2.0 * vv);
      return {2.0 * vv / delta, cfg.eps / delta};
    }
  }
  throw std::invalid_argument("unknown disorder kind");
}

bool is_binary(DisorderKind kind) {
  return kind == DisorderKind::BinaryLambda || kind == DisorderKind::BinaryV;
}

bool is_lambda(DisorderKind kind) {
  return kind == DisorderKind::BinaryLambda || kind == DisorderKind::BoxLambda;
}

void validate(const SampleConfig& cfg, bool need_samples) {
  if (!std::isfinite(cfg.eps) || !std::isfinite(cfg.v) || !std::isfinite(cfg.w))
    throw std::invalid_argument("sample config has non-finite parameters");
  if (is_lambda(cfg.kind)) {
    if (!(cfg.w > 0.0)) throw std::invalid_argument("disorder width w must be > 0");
    if (!(cfg.v > 0.0)) throw std::invalid_argument("coupling v must be > 0");
    if (!(cfg.eps >= 0.0)) throw std::invalid_argument("splitting eps must be >= 0");
  } else {
    if (!(cfg.eps > 0.0)) throw std::invalid_argument("splitting eps must be > 0");
    if (!(cfg.v > 0.0)) throw std::invalid_argument("coupling scale v must be > 0");
  }
  if (need_samples && cfg.n_samples == 0)
    throw std::invalid_argument("n_samples must be positive");
}

struct Moments {
  double s = 0.0;
  double c = 0.0;
  double ss = 0.0;
  double cc = 0.0;
};

McEstimate finish(double sum_s, double sum_c, double sum_ss, double sum_cc,
                  std::uint64_t n) {
  const double nn = static_cast<double>(n);
  const double s_hat = sum_s / nn;
  const double c_hat = sum_c / nn;
  const auto se = [&](double sumsq, double mean) {
    if (n < 2) return 0.0;
    const double var = (sumsq - nn * mean * mean) / (nn - 1.0);
    return var > 0.0 ? std::sqrt(var / nn) : 0.0;
  };
  McEstimate est;
  est.s_hat = s_hat;
  est.c_hat = c_hat;
  est.r_hat = std::sqrt(s_hat * s_hat + c_hat * c_hat);
  est.sc_hat = entropy_from_r(est.r_hat).complexity;
  est.se_s = se(sum_ss, s_hat);
  est.se_c = se(sum_cc, c_hat);
  est.n = n;
  return est;
}

}  // namespace

McEstimate sample_bloch(const SampleConfig& cfg, unsigned workers) {
  validate(cfg, true);
  const std::uint64_t n = cfg.n_samples;
  const std::uint64_t n_blocks = (n + kBlock - 1) / kBlock;
  std::vector<Moments> blocks(n_blocks);

  const auto run_block = [&](std::uint64_t b) {
    const std::uint64_t begin = b * kBlock;
    const std::uint64_t end = std::min(n, begin + kBlock);
    Moments m;
    for (std::uint64_t i = begin; i < end; ++i) {
      const Draw d = eval_sample(cfg, draw_bits(cfg.seed, i));
      m.s += d.sin_phi;
      m.c += d.cos_phi;
      m.ss += d.sin_phi * d.sin_phi;
      m.cc += d.cos_phi * d.cos_phi;
    }
    blocks[b] = m;
  };

  if (workers <= 1 || n_blocks == 1) {
    for (std::uint64_t b = 0; b < n_blocks; ++b) run_block(b);
  } else {
    const unsigned k = static_cast<unsigned>(
        std::min<std::uint64_t>(workers, n_blocks));
    std::vector<std::thread> pool;
    pool.reserve(k);
    for (unsigned w = 0; w < k; ++w) {
      pool.emplace_back([&, w] {
        for (std::uint64_t b = w; b < n_blocks; b += k) run_block(b);
      });
    }
    for (auto& t : pool) t.join();
  }

  // Reduce in block order; together with per-block sequential accumulation
  // this fixes the floating-point summation tree independent of workers.
  double sum_s = 0.0, sum_c = 0.0, sum_ss = 0.0, sum_cc = 0.0;
  for (const Moments& m : blocks) {
    sum_s += m.s;
    sum_c += m.c;
    sum_ss += m.ss;
    sum_cc += m.cc;
  }
  return finish(sum_s, sum_c, sum_ss, sum_cc, n);
}

McEstimate exhaustive_binary(const SampleConfig& cfg) {
  validate(cfg, false);
  if (!is_binary(cfg.kind))
    throw std::invalid_argument("exhaustive average needs a binary kind");
  // The two atoms carry weight 1/2 each; the top sample bit selects the sign.
  const Draw up = eval_sample(cfg, ~std::uint64_t{0});
  const Draw down = eval_sample(cfg, 0);
  McEstimate est;
  est.s_hat = 0.5 * (up.sin_phi + down.sin_phi);
  est.c_hat = 0.5 * (up.cos_phi + down.cos_phi);
  est.r_hat = std::sqrt(est.s_hat * est.s_hat + est.c_hat * est.c_hat);
  est.sc_hat = entropy_from_r(est.r_hat).complexity;
  est.se_s = 0.0;
  est.se_c = 0.0;
  est.n = 2;
  return est;
}

CompareReport compare(const SampleConfig& cfg, unsigned workers) {
  validate(cfg, !is_binary(cfg.kind));
  BlochAverage closed;
  switch (cfg.kind) {
    case DisorderKind::BinaryLambda:
      closed = bloch_binary_lambda(cfg.eps / cfg.w, 2.0 * cfg.v / cfg.w);
      break;
    case DisorderKind::BoxLambda:
      closed = bloch_box_lambda(cfg.eps / cfg.w, 2.0 * cfg.v / cfg.w);
      break;
    case DisorderKind::BinaryV:
      closed = bloch_binary_v(2.0 * cfg.v / cfg.eps);
      break;
    case DisorderKind::BoxV:
      closed = bloch_box_v(2.0 * cfg.v / cfg.eps);
      break;
  }

  CompareReport rep;
  rep.estimate =
      is_binary(cfg.kind) ? exhaustive_binary(cfg) : sample_bloch(cfg, workers);
  rep.closed = closed;
  rep.sc_closed = entropy_from_r(closed.r).complexity;
  const McEstimate& est = rep.estimate;
  rep.z_s = est.se_s > 0.0 ? (est.s_hat - closed.s) / est.se_s : 0.0;
  rep.z_c = est.se_c > 0.0 ? (est.c_hat - closed.c) / est.se_c : 0.0;
  rep.sc_abs_dev = std::abs(est.sc_hat - rep.sc_closed);
  if (est.r_hat > 0.0 && est.r_hat < 1.0) {
    // Delta method through r = sqrt(s^2 + c^2) and SC(r).
    const double r = est.r_hat;
    const double dscdr = 2.0 * r / (1.0 + r * r) - std::atanh(r);
    rep.se_sc = std::abs(dscdr) *
                std::hypot(est.s_hat * est.se_s, est.c_hat * est.se_c) / r;
  }
  rep.pass = std::abs(rep.z_s) <= 4.0 && std::abs(rep.z_c) <= 4.0;
  return rep;
}

}  // namespace tlsc
