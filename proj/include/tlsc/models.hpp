#pragma once

#include <string_view>

#include "tlsc/entropy.hpp"

namespace tlsc {

enum class ModelKind {
  LzDiagonal,     // avoided-crossing superposition, diagonal sweep x = eps/(2V)
  LzOffDiagonal,  // off-diagonal sweep x = 2V/eps
  BinaryLambda,   // level disorder lambda = +/-W
  BinaryV,        // coupling disorder V = +/-V0
  BoxLambda,      // level disorder uniform on [-W, W]
  BoxV,           // coupling disorder uniform on [-V0, V0]
};

/// Model selector plus the frozen parameter of the lambda-disorder kinds
/// (chi = eps/W). The sweep variable itself is passed per call.
struct ModelSpec {
  ModelKind kind = ModelKind::LzDiagonal;
  double chi = 0.0;  // used by BinaryLambda and BoxLambda only
};

/// Name of the sweep variable for a kind: "x", "tau" or "kappa".
std::string_view sweep_variable(ModelKind kind);

/// Disorder-averaged Bloch vector: s averages sin(phi) = 2V/Delta, c averages
/// cos(phi) = (eps - lambda)/Delta over the disorder distribution. The stored
/// radius is sqrt(s^2 + c^2) by definition.
struct BlochAverage {
  double s = 0.0;
  double c = 0.0;
  double r = 0.0;
};

/// Superposition coefficient sqrt(1 + x^2) + x of the diagonal sweep,
/// rationalized for x < 0 where the direct form cancels.
double lz_coeff_diag(double x);

/// Coefficient (sqrt(1 + x^2) + 1)/x of the off-diagonal sweep. x = 0 is a
/// domain error; the limit is a pure basis state (SC -> 0) and is handled by
/// callers that sweep across it.
double lz_coeff_offdiag(double x);

/// Two-point average over lambda = +/-W with chi = eps/W >= 0, tau = 2V/W > 0.
BlochAverage bloch_binary_lambda(double chi, double tau);

/// Two-point average over V = +/-V0 at fixed splitting, kappa = 2V0/eps > 0.
/// s vanishes by symmetry.
BlochAverage bloch_binary_v(double kappa);

/// Uniform average over lambda in [-W, W]. The s integrand is positive, so
/// the closed form is arranged with a log argument > 1 (keeping s > 0
/// structurally) and the denominator is rationalized for chi < 1 where the
/// direct form cancels. The sampling estimator cross-checks the sign.
BlochAverage bloch_box_lambda(double chi, double tau);

/// Uniform average over V in [-V0, V0]: c = asinh(kappa)/kappa, with the
/// series 1 - kappa^2/6 below kappa = 1e-6.
BlochAverage bloch_box_v(double kappa);

/// Effective Bloch radius of a model at sweep value v.
double model_bloch_radius(const ModelSpec& model, double v);

/// Entropy triple of a model at sweep value v. The superposition kinds route
/// through complexity_from_coeff, the disorder kinds through entropy_from_r.
EntropyTriple model_complexity(const ModelSpec& model, double v,
                               bool normalized = false);

/// Disorder sweep against chi_inv = W/eps at fixed zeta = 2V/eps: evaluates
/// the lambda-disorder model at chi = 1/chi_inv, tau = zeta * chi. kind must
/// be BinaryLambda or BoxLambda.
EntropyTriple sweep_chi_inverse(ModelKind kind, double zeta, double chi_inv,
                                bool normalized = false);

/// Eigenstate geometry of the superpositions |+> = c|1> + |0> and
/// |-> = |1> - c|0>: Bloch sphere angles plus the |+> populations.
struct BlochState {
  double theta_plus = 0.0;
  double theta_minus = 0.0;  // pi - theta_plus
  double phi_plus = 0.0;
  double phi_minus = 0.0;
  double pop1 = 0.0;  // |+> weight on |1>
  double pop0 = 0.0;  // |+> weight on |0>, computed as 1 - pop1 exactly
};

/// Angles and populations for one of the two superposition kinds at sweep
/// value v; the disorder kinds have no single pure-state pair and are an
/// error here.
BlochState bloch_report(const ModelSpec& model, double v);

}  // namespace tlsc
