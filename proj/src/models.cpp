#include "tlsc/models.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace tlsc {

namespace {

BlochAverage make_bloch(double s, double c) {
  return {s, c, std::sqrt(s * s + c * c)};
}

void check_disorder_args(double chi, double tau, const char* sweep_name) {
  if (!std::isfinite(chi) || !(chi >= 0.0))
    throw std::domain_error("chi must be finite and >= 0");
  if (!std::isfinite(tau) || !(tau > 0.0))
    throw std::domain_error(std::string(sweep_name) + " must be finite and > 0");
}

// kappa = 0 is a valid (disorder-free, pure-state) point for the V models.
void check_kappa(double kappa) {
  if (!std::isfinite(kappa) || !(kappa >= 0.0))
    throw std::domain_error("kappa must be finite and >= 0");
}

// Effective Bloch radius of the equal mixture of |+> and |-> dephased states:
// |c^2 - 1|/(c^2 + 1).
double radius_from_coeff(double cval) {
  const double c2 = cval * cval;
  if (std::isinf(c2)) return 1.0;
  return std::abs(c2 - 1.0) / (c2 + 1.0);
}

}  // namespace

std::string_view sweep_variable(ModelKind kind) {
  switch (kind) {
    case ModelKind::LzDiagonal:
    case ModelKind::LzOffDiagonal:
      return "x";
    case ModelKind::BinaryLambda:
    case ModelKind::BoxLambda:
      return "tau";
    case ModelKind::BinaryV:
    case ModelKind::BoxV:
      return "kappa";
  }
  return "";
}

double lz_coeff_diag(double x) {
  if (!std::isfinite(x)) throw std::domain_error("sweep value must be finite");
  // For x < 0 the direct sum cancels; the rationalized form is exact there.
  return x >= 0.0 ? std::hypot(1.0, x) + x : 1.0 / (std::hypot(1.0, x) - x);
}

double lz_coeff_offdiag(double x) {
  if (!std::isfinite(x)) throw std::domain_error("sweep value must be finite");
  if (x == 0.0)
    throw std::domain_error("off-diagonal coefficient diverges at x = 0");
  return (std::hypot(1.0, x) + 1.0) / x;
}

BlochAverage bloch_binary_lambda(double chi, double tau) {
  check_disorder_args(chi, tau, "tau");
  const double dm = std::hypot(chi - 1.0, tau);  // Delta/W at lambda = +W
  const double dp = std::hypot(chi + 1.0, tau);  // Delta/W at lambda = -W
  const double c = 0.5 * ((chi - 1.0) / dm + (chi + 1.0) / dp);
  const double s = 0.5 * tau * (1.0 / dm + 1.0 / dp);
  return make_bloch(s, c);
}

BlochAverage bloch_binary_v(double kappa) {
  check_kappa(kappa);
  return make_bloch(0.0, 1.0 / std::hypot(1.0, kappa));
}

BlochAverage bloch_box_lambda(double chi, double tau) {
  check_disorder_args(chi, tau, "tau");
  const double dp = std::hypot(chi + 1.0, tau);
  const double dm = std::hypot(chi - 1.0, tau);
  // (dp - dm)/2 without cancellation: dp^2 - dm^2 = 4 chi.
  const double c = 2.0 * chi / (dp + dm);
  const double num = dp + (chi + 1.0);
  // dm + chi - 1 cancels for chi < 1; rationalize against dm - (chi - 1).
  const double den =
      chi >= 1.0 ? dm + (chi - 1.0) : tau * tau / (dm + (1.0 - chi));
  // num/den > 1 for all chi >= 0, tau > 0, so s stays positive structurally.
  const double s = 0.5 * tau * std::log(num / den);
  return make_bloch(s, c);
}

BlochAverage bloch_box_v(double kappa) {
  check_kappa(kappa);
  // The series covers kappa = 0 (the analytic limit c = 1) as well.
  const double c =
      kappa < 1e-6 ? 1.0 - kappa * kappa / 6.0 : std::asinh(kappa) / kappa;
  return make_bloch(0.0, c);
}

double model_bloch_radius(const ModelSpec& model, double v) {
  switch (model.kind) {
    case ModelKind::LzDiagonal:
      return radius_from_coeff(lz_coeff_diag(v));
    case ModelKind::LzOffDiagonal:
      return radius_from_coeff(lz_coeff_offdiag(v));
    case ModelKind::BinaryLambda:
      return bloch_binary_lambda(model.chi, v).r;
    case ModelKind::BinaryV:
      return bloch_binary_v(v).r;
    case ModelKind::BoxLambda:
      return bloch_box_lambda(model.chi, v).r;
    case ModelKind::BoxV:
      return bloch_box_v(v).r;
  }
  throw std::invalid_argument("unknown model kind");
}

EntropyTriple model_complexity(const ModelSpec& model, double v,
                               bool normalized) {
  switch (model.kind) {
    case ModelKind::LzDiagonal:
      return complexity_from_coeff(lz_coeff_diag(v), normalized);
    case ModelKind::LzOffDiagonal:
      return complexity_from_coeff(lz_coeff_offdiag(v), normalized);
    default:
      return entropy_from_r(model_bloch_radius(model, v), normalized);
  }
}

EntropyTriple sweep_chi_inverse(ModelKind kind, double zeta, double chi_inv,
                                bool normalized) {
  if (kind != ModelKind::BinaryLambda && kind != ModelKind::BoxLambda)
    throw std::invalid_argument("chi-inverse sweep needs a lambda-disorder kind");
  if (!std::isfinite(zeta) || !(zeta > 0.0))
    throw std::domain_error("zeta must be finite and > 0");
  if (!std::isfinite(chi_inv) || !(chi_inv > 0.0))
    throw std::domain_error("chi_inv must be finite and > 0");
  const double chi = 1.0 / chi_inv;
  const double tau = zeta * chi;
  const BlochAverage b = kind == ModelKind::BinaryLambda
                             ? bloch_binary_lambda(chi, tau)
                             : bloch_box_lambda(chi, tau);
  return entropy_from_r(b.r, normalized);
}

BlochState bloch_report(const ModelSpec& model, double v) {
  double cval = 0.0;
  switch (model.kind) {
    case ModelKind::LzDiagonal:
      cval = lz_coeff_diag(v);
      break;
    case ModelKind::LzOffDiagonal:
      cval = lz_coeff_offdiag(v);
      break;
    default:
      throw std::invalid_argument(
          "bloch_report needs a superposition kind, not a disorder average");
  }
  const double n2 = 1.0 + cval * cval;
  BlochState st;
  st.pop1 = cval * cval / n2;
  st.pop0 = 1.0 - st.pop1;
  // cos(theta+/2) is the |0> amplitude of normalized |+>, always positive.
  st.theta_plus = 2.0 * std::acos(std::sqrt(1.0 / n2));
  st.theta_minus = std::numbers::pi - st.theta_plus;
  st.phi_plus = cval >= 0.0 ? 0.0 : std::numbers::pi;
  st.phi_minus = cval >= 0.0 ? std::numbers::pi : 0.0;
  return st;
}

}  // namespace tlsc
