#pragma once

#include <limits>

#include "qhal/model.hpp"

namespace qhal {

// ---------------------------------------------------------------------------
// Function calculus on the finite phase space.
//
// Conventions (all arithmetic mod N, canonical residues, weight 1/d per
// phase point):
//
//   shift        (alpha_z f)(w) = f(w - z)
//   modulation   (gamma_z f)(w) = exp(-2*pi*i*sigma(w,z)/N) * f(w)
//   reflection   f~(w)          = f(-w)
//   involution   f*(w)          = conj(f(-w))
//   convolution  (f * g)(w)     = (1/d) * sum_z f(z) g(w - z)
//   Fourier      (F f)(w)       = (1/d) * sum_z f(z) exp(-2*pi*i*sigma(w,z)/N)
//   L^p norm     ((1/d) * sum |f|^p)^(1/p),   max |f| for p = infinity
//
// The convolution unit is d * delta_0, and F is an involution: F(F f) = f.
// ---------------------------------------------------------------------------

constexpr double kPInf = std::numeric_limits<double>::infinity();

/// Kronecker delta at the phase-space origin.
PhaseFunction delta_function(const ModelParams& p);

/// Convolution unit d * delta_0.
PhaseFunction unit_function(const ModelParams& p);

/// The constant function 1.
PhaseFunction one_function(const ModelParams& p);

PhaseFunction shift_function(const PhaseFunction& f, int64_t z);
PhaseFunction modulate_function(const PhaseFunction& f, int64_t z);
PhaseFunction reflect_function(const PhaseFunction& f);
PhaseFunction involution_function(const PhaseFunction& f);

PhaseFunction convolve_functions(const PhaseFunction& f, const PhaseFunction& g);
PhaseFunction symplectic_fourier(const PhaseFunction& f);

/// L^p norm with the 1/d-weighted counting measure; p in [1, inf].
/// Throws std::invalid_argument for p < 1 (not a norm down there).
double lp_norm(const PhaseFunction& f, double p);

/// Weighted L^2 inner product (1/d) * sum f conj(g).
cplx function_inner(const PhaseFunction& f, const PhaseFunction& g);

// --- small linear helpers used across modules ------------------------------
PhaseFunction fn_add(const PhaseFunction& f, const PhaseFunction& g);
PhaseFunction fn_sub(const PhaseFunction& f, const PhaseFunction& g);
PhaseFunction fn_scale(const cplx& c, const PhaseFunction& f);
PhaseFunction fn_conj(const PhaseFunction& f);
PhaseFunction fn_mul(const PhaseFunction& f, const PhaseFunction& g);  ///< pointwise
double fn_max_abs(const PhaseFunction& f);
double fn_max_abs_diff(const PhaseFunction& f, const PhaseFunction& g);

}  // namespace qhal
