#pragma once

// Published reference values for the default configuration (c = 0.05,
// theta = 1, K = 80, shifted nodes, 1000 zeros).  The reproduce-paper
// command and the acceptance suite compare computed results against these
// and report matches or discrepancies at the documented tolerances.

namespace xic::baseline {

struct ZeroRow {
    int n;
    double gamma;
    double delta;
    double cE_at_gamma;  // published table column: c * E at the perturbed zero
};

inline constexpr ZeroRow kZeroTable[] = {
    {1, 17.9157, +0.068, -0.011}, {2, 23.2341, +0.062, -0.013},
    {3, 27.7063, +0.035, -0.008}, {4, 31.6613, -0.057, +0.015},
    {5, 35.4981, +0.030, -0.008}, {10, 51.7580, +0.024, -0.008},
    {20, 78.6866, +0.014, -0.006}, {50, 144.5359, +0.005, -0.003},
    {100, 236.8981, +0.045, -0.026},
};
inline constexpr double kZeroTableTol = 0.005;
inline constexpr double kMaxShift = 0.077;
inline constexpr double kMaxShiftTol = 0.005;
inline constexpr double kMinGapLo = 1.62;
inline constexpr double kMinGapHi = 1.72;

struct WeylRow {
    int N;
    double empirical;
    double theoretical;
    double ratio;
};
inline constexpr WeylRow kWeylTable[] = {
    {100, 0.0688, 0.0654, 1.053},
    {500, 0.0668, 0.0654, 1.022},
    {1000, 0.0649, 0.0654, 0.994},
    {5000, 0.0648, 0.0654, 0.991},
};
inline constexpr double kWeylRatioTol = 0.03;

struct ResidualRow {
    double sigma;
    double mean;
    double stddev;
    double max_abs;
};
inline constexpr ResidualRow kResidualTable[] = {
    {1.50, -0.015, 0.021, 0.081},
    {1.10, -0.016, 0.030, 0.122},
    {1.01, -0.016, 0.034, 0.136},
    {1.00, -0.016, 0.034, 0.138},
};
inline constexpr double kResidualRelTol = 0.50;

inline constexpr double kRmsCountingLo = 0.008, kRmsCountingHi = 0.020;   // published 0.013
inline constexpr double kSpacingStdLo = 0.012, kSpacingStdHi = 0.030;     // published 0.020
inline constexpr double kSigma2Max = 0.35;                                // published <~ 0.25

inline constexpr double kRmsRatioLo = 0.035, kRmsRatioHi = 0.060;  // published ~0.046 at sigma=0.75
inline constexpr double kRmsZetaLo = 0.7, kRmsZetaHi = 1.1;        // published ~0.88

inline constexpr double kPointwiseEMax = 1.05;  // published sup over 5000 zeros

// Empirically fixed constants of this implementation (first-run values,
// regression-guarded):
//   sup |log Z_0(1.5+it)| over t in [20, 1000] measured 0.645; the bound
//   constant below adds margin for the spectral-identity remainder.
inline constexpr double kZ0SupConstant = 0.80;

}  // namespace xic::baseline
