#pragma once

#include "tlsc/entropy.hpp"

namespace tlsc {

/// Reduced paramagnet point: x = eps_B/(k_B T) >= 0 with eps_B = mu_B * B.
struct ParamagnetPoint {
  double x = 0.0;
};

/// Reduced mean-field ferromagnet point: x = T/T_c = k_B T/(zJ) and
/// alpha = eps_B/(zJ) >= 0.
struct IsingPoint {
  double x = 1.0;
  double alpha = 0.0;
};

enum class MagnetizationBranch { zero, positive };

struct MagnetizationSolution {
  double m = 0.0;
  MagnetizationBranch branch = MagnetizationBranch::zero;
  double residual = 0.0;  // m - tanh((m + alpha)/x) at the returned m
  int iterations = 0;
};

/// Complexity of the thermal two-level populations p = e^x/(2 cosh x).
/// Equivalent to entropy_from_r(tanh x).
EntropyTriple paramagnet_complexity(ParamagnetPoint pt, bool normalized = false);

/// Largest root of the self-consistency equation m = tanh((m + alpha)/x),
/// found by bisection on [max(tanh(alpha/x), 1e-16), 1] until
/// |residual| < 1e-12 (iteration cap 200). For alpha = 0, x >= 1 the zero
/// branch is returned exactly; for alpha > 0 the unstable root is negative,
/// so the bracket contains only the stable positive root.
MagnetizationSolution curie_weiss_solve(IsingPoint pt);

/// complexity_from_p((1 + m)/2) at the solved magnetization.
EntropyTriple ising_complexity(IsingPoint pt, bool normalized = false);

/// Location x* of the complexity maximum over x in [0.1, 5] at fixed alpha,
/// resolved to 1e-9. Errors if the maximum sits on the bracket edge.
double find_t_star(double alpha);

/// Raw-parameter converters. All energies share one unit system; temperature
/// enters as k_B*T and the field couples through eps_B = mu_B * B.
ParamagnetPoint paramagnet_point_from_raw(double kT, double B, double mu_B);
IsingPoint ising_point_from_raw(double kT, double B, double z, double J,
                                double mu_B);

}  // namespace tlsc
