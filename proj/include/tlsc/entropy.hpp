#pragma once

namespace tlsc {

/// Shannon entropy, order-2 Renyi entropy, and their difference SC = S - R2
/// for a two-level density matrix. Values are in nats unless `normalized` is
/// set, in which case every field has been divided by ln 2.
struct EntropyTriple {
  double shannon = 0.0;
  double renyi2 = 0.0;
  double complexity = 0.0;
  bool normalized = false;
};

/// Entropies of a qubit state with Bloch radius r, eigenvalues (1 +/- r)/2.
/// Accepts r in [0, 1]; values up to 1 + 1e-9 are clamped to 1 (they arise
/// from accumulated rounding in radius computations), anything else is a
/// domain error. r = 1 returns exact zeros.
EntropyTriple entropy_from_r(double r, bool normalized = false);

/// Entropies of the two-outcome distribution {p, 1 - p}; 0 ln 0 is taken as
/// 0. The pair is canonicalized so results are bit-identical under
/// p <-> 1 - p.
EntropyTriple complexity_from_p(double p, bool normalized = false);

/// Entropies of the mixture of projectors onto |+> = c|1> + |0> and its
/// orthogonal partner, i.e. populations c^2/(1+c^2) and 1/(1+c^2). The
/// complexity field is evaluated through the dedicated closed form
///   -c^2/(1+c^2) ln c^2 + ln((1+c^4)/(1+c^2)),
/// which property tests compare against the population route.
EntropyTriple complexity_from_coeff(double cval, bool normalized = false);

/// Bloch radius maximizing the complexity: the unique root of
/// atanh(r) = 2r/(1+r^2) in (0, 1), about 0.743161. Computed once by
/// bisection to 1e-12 and cached with thread-safe initialization.
double critical_r();

}  // namespace tlsc
