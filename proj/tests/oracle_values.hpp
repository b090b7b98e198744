#pragma once

// Reference values frozen from an independent high-precision implementation
// (50-digit arithmetic: bisection for the fixed points, adaptive quadrature
// for the box averages). Truncated to shortest double round-trip.

namespace oracle {

// Fixed point of atanh(r) = 2r/(1+r^2) and the complexity there.
inline constexpr double kRStar = 0.7431614626797489;
inline constexpr double kPStar = 0.8715807313398744;     // (1 + r*)/2
inline constexpr double kScStarNats = 0.1299541255944838;
inline constexpr double kScStarNorm = 0.18748417253822329;

// Sweep locations where each model reaches r*.
inline constexpr double kXcDiag = 1.1106680496791658;    // x/sqrt(1+x^2) = r*
inline constexpr double kXcOffd = 0.9003590229221647;    // 1/sqrt(1+x^2) = r*
inline constexpr double kTauCBox = 0.5409564426386379;   // box-lambda, chi = 0
inline constexpr double kKappaCBox = 1.8485776694372526; // box-V

// Superposition coefficient at the diagonal-sweep maximum and its normalized
// magnitude c/sqrt(1+c^2).
inline constexpr double kCoeffStar = 2.605185870442144;
inline constexpr double kCoeffNorm = 0.9335848817005738;

// Coefficient values at the rounded sweep points x = 1.110668 and
// x = 0.900359 (distinct code paths, so they differ past the 7th digit).
inline constexpr double kCoeffDiagAt1110668 = 2.6051857838433372;
inline constexpr double kCoeffOffdAt0900359 = 2.6051859197324842;

// Eigenstate mixing angles at the diagonal-sweep maximum, radians.
inline constexpr double kThetaPlus = 2.4085792320042593;
inline constexpr double kThetaMinus = 0.7330134215855339;

// Entropy spot values.
inline constexpr double kScAtR07433 = 0.12995410772224976;   // r = 0.7433
inline constexpr double kScAtCoeff2605 = 0.12995412464445431;  // c = 2.605

// Thermal fixed points: paramagnet argmax of SC over x = eps_B/kT, the
// zero-field peak temperature T*/T_c, the exact slope of T*(alpha), and the
// alpha that pushes T* back to T_c.
inline constexpr double kXParaStar = 0.9575040240772687;     // atanh(r*)
inline constexpr double kTStarAlpha0 = 0.7761444798061519;
inline constexpr double kTStarSlope = 1.0443820337608335;    // 1/atanh(r*)
inline constexpr double kAlphaTcUnity = 0.21434256139751984;
inline constexpr double kTStarAlpha02133 = 0.9989111676073377;
inline constexpr double kTStarAlpha01 = 0.8805826831822353;

// Magnetization solutions m = tanh((m + alpha)/x) at alpha = 0.
inline constexpr double kMAtHalf = 0.9575040240772687;       // x = 0.5
inline constexpr double kMAt0776 = 0.7433499872641887;       // x = 0.776

// Disorder-average spot values at assorted (chi, tau) / kappa, from
// quadrature. Box s values use the signed (positive) convention.
inline constexpr double kBinS11095 = 0.742811246294372;      // chi=0, tau=1.1095
inline constexpr double kBoxR054 = 0.7426881762599389;       // chi=0, tau=0.54
inline constexpr double kBoxS_2_06 = 0.308592803558868;      // chi=2,   tau=0.6
inline constexpr double kBoxC_2_06 = 0.9466106645933054;
inline constexpr double kBoxS_05_13 = 0.8851706368368382;    // chi=0.5, tau=1.3
inline constexpr double kBoxC_05_13 = 0.2960522482047544;
inline constexpr double kBoxS_0_07 = 0.8081341759659479;     // chi=0,   tau=0.7
inline constexpr double kBoxS_025_005 = 0.18286823527804626; // chi=0.25,tau=0.05
inline constexpr double kBoxC_025_005 = 0.24966739070051747;
inline constexpr double kBinS_2_06 = 0.35530594528285526;    // chi=2,   tau=0.6
inline constexpr double kBinC_2_06 = 0.9190368007017322;
inline constexpr double kBinS_1_2 = 0.8535533905932738;      // chi=1,   tau=2
inline constexpr double kBinC_1_2 = 0.3535533905932738;

}  // namespace oracle
