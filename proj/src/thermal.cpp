#include "tlsc/thermal.hpp"

#include <cmath>
#include <stdexcept>

#include "tlsc/optimize.hpp"

namespace tlsc {

EntropyTriple paramagnet_complexity(ParamagnetPoint pt, bool normalized) {
  if (!std::isfinite(pt.x) || !(pt.x >= 0.0))
    throw std::domain_error("paramagnet point needs x = eps_B/kT >= 0");
  // p = e^x/(2 cosh x) written to avoid overflow for large x.
  const double p = 1.0 / (1.0 + std::exp(-2.0 * pt.x));
  return complexity_from_p(p, normalized);
}

MagnetizationSolution curie_weiss_solve(IsingPoint pt) {
  if (!std::isfinite(pt.x) || !(pt.x > 0.0))
    throw std::domain_error("reduced temperature x must be > 0");
  if (!std::isfinite(pt.alpha) || !(pt.alpha >= 0.0))
    throw std::domain_error("reduced field alpha must be >= 0");
  if (pt.alpha == 0.0 && pt.x >= 1.0)
    return {0.0, MagnetizationBranch::zero, 0.0, 0};

  const auto g = [&](double m) { return m - std::tanh((m + pt.alpha) / pt.x); };
  // g < 0 at the lower edge (tanh((m+alpha)/x) > tanh(alpha/x) there) and
  // g(1) >= 0, so the bracket holds exactly one root: the largest one.
  double lo = std::max(std::tanh(pt.alpha / pt.x), 1e-16);
  double hi = 1.0;
  if (g(hi) == 0.0)  // tanh saturated to 1 at very low temperature
    return {1.0, MagnetizationBranch::positive, 0.0, 0};

  double mid = lo;
  double res = g(lo);
  int it = 0;
  while (it < 200) {
    ++it;
    mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) {
      res = g(mid);
      break;
    }
    res = g(mid);
    if (std::abs(res) < 1e-12) break;
    if (res < 0.0)
      lo = mid;
    else
      hi = mid;
  }
  if (!(std::abs(res) < 1e-12))
    throw std::runtime_error("magnetization solve stalled above 1e-12 residual");
  return {mid, MagnetizationBranch::positive, res, it};
}

EntropyTriple ising_complexity(IsingPoint pt, bool normalized) {
  const MagnetizationSolution sol = curie_weiss_solve(pt);
  return complexity_from_p(0.5 * (1.0 + sol.m), normalized);
}

double find_t_star(double alpha) {
  const auto res = maximize_scalar(
      [alpha](double x) {
        return ising_complexity({x, alpha}).complexity;
      },
      Bracket{0.1, 5.0, false}, 1e-9);
  if (res.at_boundary)
    throw std::runtime_error("complexity peak sits on the temperature bracket edge");
  return res.x;
}

ParamagnetPoint paramagnet_point_from_raw(double kT, double B, double mu_B) {
  if (!(kT > 0.0)) throw std::domain_error("temperature must be positive");
  // Reversing the field mirrors the populations, so the reduced point folds
  // onto x >= 0.
  return {std::abs(mu_B * B) / kT};
}

IsingPoint ising_point_from_raw(double kT, double B, double z, double J,
                                double mu_B) {
  if (!(kT > 0.0)) throw std::domain_error("temperature must be positive");
  if (!(z > 0.0) || !(J > 0.0))
    throw std::domain_error("coordination and coupling must be positive");
  const double zj = z * J;
  return {kT / zj, std::abs(mu_B * B) / zj};
}

}  // namespace tlsc
