#pragma once

#include <functional>

namespace tlsc {

/// Search interval. With log_scale set, grid points and golden-section probes
/// are spaced uniformly in ln x (requires lo > 0).
struct Bracket {
  double lo = 0.0;
  double hi = 0.0;
  bool log_scale = false;
};

struct MaximizeResult {
  double x = 0.0;
  double value = 0.0;
  bool at_boundary = false;  // the best value sits on a bracket edge
};

/// Maximize f over the bracket: a 64-point scan picks the best cell, then
/// golden-section search refines it until the cell is narrower than tol (in
/// sweep coordinates). The scan guards against locking onto the wrong lobe of
/// a multi-modal curve; an edge maximum sets at_boundary instead of erroring.
/// Non-finite objective values are an error.
MaximizeResult maximize_scalar(const std::function<double(double)>& f,
                               const Bracket& bracket, double tol = 1e-6);

/// Bisection root of g on [bracket.lo, bracket.hi] to interval width tol;
/// requires a sign change over the bracket.
double find_root(const std::function<double(double)>& g,
                 const Bracket& bracket, double tol = 1e-12);

}  // namespace tlsc
