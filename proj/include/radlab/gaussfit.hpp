#pragma once

// Nearest-Gaussian fitting.  For a pair (f, g) the joint distance to the
// scaled-Gaussian family
//   dist^2 = min over gamma, a, b of ||f - a E_gamma||^2 + ||g - b E_gamma||^2,
//   E_gamma(x) = exp(-gamma |x|^2),  Re gamma > 0,
// is computed by variable projection: the amplitudes are eliminated in
// closed form and the remaining 2-parameter problem over (log Re gamma,
// Im gamma) is solved by multistart Nelder-Mead plus a Newton polish on the
// analytic gradient.

#include "radlab/funcspace.hpp"

namespace radlab {

struct GaussFitResult {
  cplx gamma{kPi / 2, 0.0};  // width of the fitted Gaussian
  cplx a{0.0};               // amplitude for the first slot
  cplx b{0.0};               // amplitude for the second slot
  double dist = 0.0;         // joint distance to the fitted pair
  bool converged = false;
  int evaluations = 0;    // objective evaluations spent across all stages
  double grad_norm = 0.0; // stationarity of the normalized objective
};

// Joint fit over both slots.  Amplitudes may vanish: the family is taken
// with its closure, so a slot orthogonal to every trial Gaussian simply
// receives a = 0 and contributes its full norm to the distance.
GaussFitResult nearest_gaussian_pair(const AnyFun& f, const AnyFun& g);

// Single-slot fit; b stays 0 and the distance covers f alone.
GaussFitResult nearest_gaussian(const AnyFun& f);

// ---- gauge normalization ---------------------------------------------------

// Parameters of the symmetry applied to move the fitted Gaussian onto the
// unit profile F.  Each slot is transformed as
//   residual = dilate(modulate(slot, modulation), dilation) / scale - F
// with the normalized dilation (width multiplied by dilation^2).
struct GaugeRecord {
  double dilation = 1.0;
  double modulation = 0.0;
  cplx scale_f{1.0};
  cplx scale_g{1.0};
};

struct GaugedPair {
  // Residuals in the unit gauge: width exactly pi/2, orthogonal to F.
  GaussPolyFun f_res;
  GaussPolyFun g_res;
  GaugeRecord gauge;
  GaussFitResult fit;
};

// Fits the pair, then applies the gauge that carries the fitted Gaussian to
// F and returns the slot residuals.  Throws ConvergenceError if the fit did
// not reach stationarity, DomainError if the pair is too far from the
// Gaussian family (dist > 0.3 of the joint norm) or a slot amplitude
// vanishes so the gauge scalars are undefined.
GaugedPair gauge_normalize(const GaussPolyFun& f, const GaussPolyFun& g);

}  // namespace radlab
