#pragma once

#include "qhal/operator_engine.hpp"

namespace qhal::ref {

// Serial reference implementations: literal transcriptions of the defining
// formulas, with no factorisation tricks, no shared partial transforms and no
// threading.  They are deliberately slow and simple; the unit tests check the
// production kernels against them, and the benchmark target compares their
// running times.  Keep this file boring.

PhaseFunction convolve_functions(const PhaseFunction& f, const PhaseFunction& g);
PhaseFunction symplectic_fourier(const PhaseFunction& f);

/// alpha_z(A) as an explicit product W_z A W_{-z}.
Operator shift_operator(const Operator& a, int64_t z);

/// gamma_z(A) as an explicit product W_{-z/2} A W_{-z/2}.
Operator modulate_operator(const Operator& a, int64_t z);

/// (1/d) sum_z f(z) W_z A W_{-z}, accumulated operator by operator.
Operator conv_fn_op(const PhaseFunction& f, const Operator& a);

/// z -> tr(A W_z P B P W_{-z}) evaluated with explicit matrix products.
PhaseFunction conv_op_op(const Operator& a, const Operator& b);

/// z -> tr(A W_z) with the Weyl matrix materialised each time.
PhaseFunction fourier_weyl(const Operator& a);

/// (1/d) sum_z f(z) W_{-z} accumulated matrix by matrix.
Operator inv_fourier_weyl(const PhaseFunction& f);

/// Localisation operator as the literal double sum
/// (1/d) sum_z g(z) (W_z phi)(W_z psi)^dagger.
Operator localization_operator(const PhaseFunction& g, const StateVector& phi,
                               const StateVector& psi);

}  // namespace qhal::ref
