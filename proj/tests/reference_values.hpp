#pragma once

// Frozen reference values computed independently with a 30+ digit
// arbitrary-precision evaluation of the defining integrals and root
// searches (mpmath). Tests compare the double-precision implementation
// against these, never against itself.

#include <complex>

namespace zenoref {

inline constexpr double kLambda = 8.4978838245909588e18;   // rad/s
inline constexpr double kChi = 6.4350922952916931e-9;
inline constexpr double kOmega0 = 1.5503013590247936e16;   // rad/s
inline constexpr double kA = 1.824338142325e-3;            // alpha/4
inline constexpr double kZenoTime = 3.5932500939442044e-15;  // s
inline constexpr double kZenoTauDimensionless = 30535.021851038397;

// self-energy samples, first sheet unless noted
inline constexpr std::complex<double> kQbar2p1i{0.05174502401747661, -0.039475538889928057};
inline constexpr std::complex<double> kQbarNegHalf{-0.16941776681077777, -0.14059596752176544};
inline constexpr std::complex<double> kQbarI{0.0, -0.11015856290865229};
inline constexpr std::complex<double> kQbarFourthQuad{0.30699967578852859, 0.10174401767682479};
inline constexpr std::complex<double> kQbarPrime2p1i{-0.0071272669034333028, 0.024370561730247102};
inline constexpr std::complex<double> kQbarSecondSheet{2.1653897510357459, -0.3056185941325884};  // s = -0.3-0.3i
inline constexpr std::complex<double> kQbarNearZero{1.2898843891350703e-5, -0.49087228133051451};  // s = 1e-6

// hydrogen pole data
inline constexpr std::complex<double> kSPole{-3.6881063017035478e-11, -1.8243349203051118e-3};
inline constexpr std::complex<double> kResidue{0.99999997183283441, -2.0215630272492875e-8};
inline constexpr double kGamma = 6.2682197769237123e8;     // 1/s
inline constexpr double kLifetime = 1.5953492946776913e-9;  // s
inline constexpr double kDeltaEOverChiLambda = 0.5006952100128333;
inline constexpr double kZeta = -2.0215630841909894e-8;
inline constexpr double kGammaLeading = 6.2682310237031757e8;  // golden rule value

// principal-value shift Delta(x) = PV int g(t)/(t-x) dt
inline constexpr double kDeltaAtA = 0.50069522400013485;
inline constexpr double kDeltaAtQuarter = 0.38458028345747354;
inline constexpr double kDeltaAtOne = -0.30650810375801437;
inline constexpr double kFivePiOver32 = 0.49087385212340519;

// cut amplitude (hydrogen), tilted-ray evaluation
inline constexpr std::complex<double> kYCutTau10{1.6286196856433996e-8, 9.2127603140928784e-9};
inline constexpr std::complex<double> kYCutTau01{2.8169122116587324e-8, 1.9888394538945441e-8};
inline constexpr double kCutPrefactorMinus1 = 3.4629838347e-6;  // C - 1

// synthetic benchmark set chi = 1e-2, a = 0.25
inline constexpr std::complex<double> kSPoleSynthetic{-6.233740621526535e-3, -0.24599033942798872};
inline constexpr std::complex<double> kResidueSynthetic{1.0205044598870954, -0.014351711941054394};

// crossover (hydrogen)
inline constexpr double kCrossoverSeconds = 1.99634236204e-7;
inline constexpr double kCrossoverLifetimes = 125.135126752;

// survival checkpoints (hydrogen)
inline constexpr double kOneMinusPAtZenoOver100 = 8.1358808e-8;  // t = tau_Z/100
inline constexpr double kHAtPicosecond = 0.9999999584;           // t = 1e-12 s
inline constexpr double kEtaAtPicosecond = -2.5801481e-4;
inline constexpr double kHRatioAt1em19 = 5.110966518;   // h/(omega0 t)^2 at t = 1e-19 s
inline constexpr double kHRatioLimit = 5.38774404739;   // t -> 0 limit of the same
inline constexpr double kEtaAt1em19 = -2.5806541;
inline constexpr double kEtaZeroAtan2 = -2.5190847;     // arg(Z e^{i zeta} - 1)

}  // namespace zenoref
