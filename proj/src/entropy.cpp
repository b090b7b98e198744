#include "tlsc/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "tlsc/optimize.hpp"

namespace tlsc {

namespace {

// Complexity is stored as shannon - renyi2 (clamped at zero: near r = 0 the
// true difference ~r^2/2 sits below the rounding error of the subtraction of
// two ln(2)-sized terms and can come out at -1e-16). Normalization divides
// each field afterwards.
EntropyTriple with_norm(double shannon, double renyi2, bool normalized) {
  EntropyTriple t{shannon, renyi2, std::max(0.0, shannon - renyi2), false};
  if (normalized) {
    t.shannon /= std::numbers::ln2;
    t.renyi2 /= std::numbers::ln2;
    t.complexity /= std::numbers::ln2;
    t.normalized = true;
  }
  return t;
}

}  // namespace

EntropyTriple entropy_from_r(double r, bool normalized) {
  if (!(r >= 0.0)) throw std::domain_error("bloch radius must be >= 0");
  if (r > 1.0) {
    if (!(r <= 1.0 + 1e-9))
      throw std::domain_error("bloch radius exceeds 1 beyond the rounding clamp");
    r = 1.0;
  }
  if (r == 1.0) return with_norm(0.0, 0.0, normalized);
  // 1 - r is exact for r in [1/2, 1], which is where the eigenvalue gets small.
  const double lo = 0.5 * (1.0 - r);
  const double hi = 0.5 * (1.0 + r);
  const double shannon = -(lo * std::log(lo) + hi * std::log(hi));
  const double renyi2 = -std::log(0.5 * (1.0 + r * r));
  return with_norm(shannon, renyi2, normalized);
}

EntropyTriple complexity_from_p(double p, bool normalized) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("probability out of [0, 1]");
  // Canonicalize: (lo, hi) is the same pair for p and 1 - p, so the symmetry
  // is exact; 1 - hi is itself exact because hi is in [1/2, 1].
  const double hi = std::max(p, 1.0 - p);
  const double lo = 1.0 - hi;
  if (lo == 0.0) return with_norm(0.0, 0.0, normalized);  // 0 ln 0 := 0
  const double shannon = -(lo * std::log(lo) + hi * std::log(hi));
  const double renyi2 = -std::log(lo * lo + hi * hi);
  return with_norm(shannon, renyi2, normalized);
}

EntropyTriple complexity_from_coeff(double cval, bool normalized) {
  if (!std::isfinite(cval)) throw std::domain_error("coefficient must be finite");
  const double c2 = cval * cval;
  if (std::isinf(c2)) return with_norm(0.0, 0.0, normalized);  // pure-state limit
  const double p = c2 / (1.0 + c2);

  // Complexity through its own closed form -p ln c^2 + ln((1+c^4)/(1+c^2)).
  // For c^2 > 1 the log ratio is rewritten around ln c^2 so c^4 never
  // overflows and log1p keeps the small corrections.
  double sc;
  if (c2 == 0.0) {
    sc = 0.0;
  } else if (c2 <= 1.0) {
    sc = -p * std::log(c2) + std::log1p(c2 * c2) - std::log1p(c2);
  } else {
    const double i2 = 1.0 / c2;
    sc = (1.0 - p) * std::log(c2) + std::log1p(i2 * i2) - std::log1p(i2);
  }
  sc = std::max(0.0, sc);  // can round to -1e-17 right at c = 1

  // Shannon through the populations; renyi2 = shannon - sc keeps the triple
  // identity exact while sc comes from the dedicated form above.
  const double hi = std::max(p, 1.0 - p);
  const double lo = 1.0 - hi;
  const double shannon =
      lo == 0.0 ? 0.0 : -(lo * std::log(lo) + hi * std::log(hi));
  EntropyTriple t{shannon, shannon - sc, sc, false};
  if (normalized) {
    t.shannon /= std::numbers::ln2;
    t.renyi2 /= std::numbers::ln2;
    t.complexity /= std::numbers::ln2;
    t.normalized = true;
  }
  return t;
}

double critical_r() {
  static const double r_star = find_root(
      [](double r) { return std::atanh(r) - 2.0 * r / (1.0 + r * r); },
      Bracket{0.5, 0.9, false}, 1e-12);
  return r_star;
}

}  // namespace tlsc
