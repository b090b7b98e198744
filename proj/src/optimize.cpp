#include "tlsc/optimize.hpp"

#include <cmath>
#include <stdexcept>

namespace tlsc {

namespace {

double checked(const std::function<double(double)>& f, double x) {
  const double y = f(x);
  if (!std::isfinite(y))
    throw std::runtime_error("objective returned a non-finite value");
  return y;
}

void validate(const Bracket& br, double tol) {
  if (!std::isfinite(br.lo) || !std::isfinite(br.hi) || !(br.lo < br.hi))
    throw std::invalid_argument("bracket requires finite lo < hi");
  if (br.log_scale && !(br.lo > 0.0))
    throw std::invalid_argument("log-scale bracket requires lo > 0");
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
}

}  // namespace

MaximizeResult maximize_scalar(const std::function<double(double)>& f,
                               const Bracket& br, double tol) {
  validate(br, tol);
  const auto to_u = [&](double x) { return br.log_scale ? std::log(x) : x; };
  const auto to_x = [&](double u) { return br.log_scale ? std::exp(u) : u; };

  // Coarse scan to pick the right lobe before local refinement.
  constexpr int kGrid = 64;
  const double ulo = to_u(br.lo);
  const double uhi = to_u(br.hi);
  const double du = (uhi - ulo) / (kGrid - 1);
  int best = 0;
  double best_val = checked(f, br.lo);
  for (int i = 1; i < kGrid; ++i) {
    const double val = checked(f, to_x(ulo + du * i));
    if (val > best_val) {
      best_val = val;
      best = i;
    }
  }

  // Golden-section search on the cell pair around the best grid point.
  double a = ulo + du * (best == 0 ? 0 : best - 1);
  double b = ulo + du * (best == kGrid - 1 ? kGrid - 1 : best + 1);
  constexpr double kGolden = 0.6180339887498949;
  double c = b - kGolden * (b - a);
  double d = a + kGolden * (b - a);
  double fc = checked(f, to_x(c));
  double fd = checked(f, to_x(d));
  for (int iter = 0; iter < 300 && to_x(b) - to_x(a) > tol; ++iter) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kGolden * (b - a);
      fc = checked(f, to_x(c));
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kGolden * (b - a);
      fd = checked(f, to_x(d));
    }
  }
  MaximizeResult res;
  res.x = to_x(fc >= fd ? c : d);
  res.value = fc >= fd ? fc : fd;
  res.at_boundary = false;

  // An edge cell whose edge value is never beaten is a boundary maximum.
  if (best == 0 || best == kGrid - 1) {
    const double xe = best == 0 ? br.lo : br.hi;
    const double fe = checked(f, xe);
    if (fe >= res.value) res = {xe, fe, true};
  }
  return res;
}

double find_root(const std::function<double(double)>& g, const Bracket& br,
                 double tol) {
  validate(br, tol);
  double lo = br.lo;
  double hi = br.hi;
  double glo = checked(g, lo);
  const double ghi = checked(g, hi);
  if (glo == 0.0) return lo;
  if (ghi == 0.0) return hi;
  if ((glo < 0.0) == (ghi < 0.0))
    throw std::invalid_argument("find_root needs a sign change over the bracket");
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;  // interval narrower than one ulp
    const double gm = checked(g, mid);
    if (gm == 0.0) return mid;
    if ((gm < 0.0) == (glo < 0.0)) {
      lo = mid;
      glo = gm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace tlsc
