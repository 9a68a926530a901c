#pragma once

#include "qhal/operator_engine.hpp"

namespace qhal {

// Deterministic fixtures.  Everything here is a pure function of (params,
// seed) via the documented generator in rng.hpp, so fixture bytes are
// reproducible across runs and platforms.

/// Periodised Gaussian, the finite stand-in for the standard Gaussian wave
/// packet: phi(x) ~ prod_i sum_{k in {-1,0,1}} exp(-pi (c_i + k N)^2 / N)
/// with c_i the centered representative of x_i in (-N/2, N/2).  Unit norm,
/// strictly positive, exactly parity-even.
StateVector gaussian_state(const ModelParams& p);

/// Quadratic-phase state phi(x) = omega^{a x.x + b.x} / sqrt(d) with the
/// coefficients a and b drawn deterministically from the seed.  Unit modulus
/// entries, unit norm.
StateVector chirp_state(const ModelParams& p, uint64_t seed);

/// Complex-Gaussian state, unit-normalised.
StateVector random_state(const ModelParams& p, uint64_t seed);

/// Dense operator with iid complex Gaussian entries scaled by 1/sqrt(d).
Operator random_operator(const ModelParams& p, uint64_t seed);

/// Positive semidefinite X X^dagger with X random, trace-normalised to 1.
Operator random_psd(const ModelParams& p, uint64_t seed);

/// rank_one(gaussian_state, gaussian_state): the parity-even projector used
/// as the default regular operator.
Operator discrete_gaussian_operator(const ModelParams& p);

/// Phase-space function with iid complex Gaussian values.
PhaseFunction random_phase_function(const ModelParams& p, uint64_t seed);

/// The flat state (1,...,1)/sqrt(d); its transform has exact zeros, making it
/// the canonical non-regular rank-one building block.
StateVector flat_state(const ModelParams& p);

/// Real, even Gaussian bump on phase space: the product over all 2n
/// coordinates of the same wrapped exp(-pi c^2 / N) profile used by
/// gaussian_state.  Evenness makes it invariant under the function
/// involution, which is what the calibrated time-frequency norm needs from
/// its default window to be star-symmetric.
PhaseFunction gaussian_window(const ModelParams& p);

}  // namespace qhal
