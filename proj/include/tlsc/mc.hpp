#pragma once

#include <cstdint>
#include <string_view>

#include "tlsc/models.hpp"

namespace tlsc {

enum class DisorderKind { BinaryLambda, BinaryV, BoxLambda, BoxV };

/// Raw-parameter sampling request. For the lambda kinds, eps and v are the
/// fixed splitting and coupling and w is the disorder magnitude (binary) or
/// half-width (box); reduced variables are chi = eps/w, tau = 2v/w. For the
/// V kinds, eps is the fixed splitting, v is the coupling magnitude or
/// half-width (kappa = 2v/eps) and w is ignored.
struct SampleConfig {
  DisorderKind kind = DisorderKind::BoxLambda;
  double eps = 0.0;
  double v = 0.0;
  double w = 0.0;
  std::uint64_t n_samples = 0;
  std::uint64_t seed = 0;
};

/// Identifier of the generator recorded in CLI metadata so other
/// implementations can reproduce the streams exactly: draw i consumes the
/// single 64-bit word splitmix64(seed + (i + 1) * 0x9E3779B97F4A7C15).
inline constexpr std::string_view kRngId = "splitmix64";

struct McEstimate {
  double s_hat = 0.0;
  double c_hat = 0.0;
  double r_hat = 0.0;   // sqrt(s_hat^2 + c_hat^2)
  double sc_hat = 0.0;  // entropy_from_r(r_hat).complexity
  double se_s = 0.0;
  double se_c = 0.0;
  std::uint64_t n = 0;
};

/// Sample-mean estimate of (s, c, r, SC). Each draw is a pure function of
/// (seed, sample index) and accumulation happens per fixed 65536-sample block
/// with blocks reduced in index order, so the result is bit-identical for any
/// worker count.
McEstimate sample_bloch(const SampleConfig& config, unsigned workers = 1);

/// Exact two-point average for the binary kinds: no sampling, zero standard
/// errors, n = 2.
McEstimate exhaustive_binary(const SampleConfig& config);

struct CompareReport {
  McEstimate estimate;
  BlochAverage closed;
  double sc_closed = 0.0;
  double z_s = 0.0;        // (s_hat - s)/se_s, 0 when se_s = 0 (exhaustive)
  double z_c = 0.0;
  double sc_abs_dev = 0.0;
  double se_sc = 0.0;      // delta-method propagation of (se_s, se_c)
  bool pass = false;       // |z_s| <= 4 and |z_c| <= 4
};

/// Estimator vs closed form. Binary kinds take the exhaustive path; box
/// kinds sample config.n_samples draws across the given worker count.
CompareReport compare(const SampleConfig& config, unsigned workers = 1);

}  // namespace tlsc
