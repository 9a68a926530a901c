#pragma once

#include <optional>
#include <vector>

#include "qhal/phase_function.hpp"

namespace qhal {

// ---------------------------------------------------------------------------
// Weyl system and operator calculus on C^d.
//
// The Weyl operator attached to z = (x, xi) acts by
//
//   (W_z phi)(y) = omega^{ -xi.y + two_inv * x.xi } * phi(y - x),
//                  omega = exp(2*pi*i/N),
//
// the unique phase convention under which the whole identity suite below
// holds exactly with sigma((x,xi),(x',xi')) = xi.x' - x.xi':
//
//   W_z W_w            = omega^{ -two_inv * sigma(z,w) } W_{z+w}
//   W_z* = W_{-z},  P W_z P = W_{-z},  P = parity (y -> -y)
//   F_W(alpha_z A)     = gamma_z F_W(A)
//   F_W(f * A)         = F(f) . F_W(A)
//   F(A * B)           = F_W(A) . F_W(B)
//
// where F is the symplectic Fourier transform of the function calculus and
//
//   alpha_z(A) = W_z A W_{-z}
//   gamma_z(A) = W_{-z/2} A W_{-z/2},     z/2 = two_inv * z  (mod N)
//   A*         = P adjoint(A) P           (operator involution)
//   (f * A)    = (1/d) sum_z f(z) alpha_z(A)
//   (A * B)(z) = tr(A alpha_z(P B P))     (a phase-space function)
//   F_W(A)(z)  = tr(A W_z)
//   F_W^-1(f)  = (1/d) sum_z f(z) W_{-z}
// ---------------------------------------------------------------------------

Operator weyl_operator(const ModelParams& p, int64_t z);
Operator parity_operator(const ModelParams& p);
Operator identity_operator(const ModelParams& p);

/// (W_z phi), computed without materialising the matrix.
StateVector apply_weyl(int64_t z, const StateVector& phi);

Operator shift_operator(const Operator& a, int64_t z);     ///< alpha_z(A)
Operator modulate_operator(const Operator& a, int64_t z);  ///< gamma_z(A)
Operator involution_operator(const Operator& a);           ///< P A^dagger P
Operator parity_conjugate(const Operator& a);              ///< P A P

Operator conv_fn_op(const PhaseFunction& f, const Operator& a);
PhaseFunction conv_op_op(const Operator& a, const Operator& b);

/// Discrete convolution of a finitely supported measure sum_k w_k delta_{z_k}
/// with an operator: (1/d) sum_k w_k alpha_{z_k}(A).  An empty measure yields
/// the zero operator (the integral over an empty support), not an error.
Operator conv_measure_op(const std::vector<cplx>& weights, const std::vector<int64_t>& points,
                         const Operator& a);

PhaseFunction fourier_weyl(const Operator& a);
Operator inv_fourier_weyl(const PhaseFunction& f);

/// Weyl quantisation  f -> P F_W^-1(F(f)) P  and its exact inverse.
Operator weyl_quantize(const PhaseFunction& f);
PhaseFunction weyl_symbol(const Operator& a);

/// Rank-one operator (s,t) -> phi(s) * conj(psi(t)).
Operator rank_one(const StateVector& phi, const StateVector& psi);

/// Short-time Fourier transform of states:
/// V_g f(x, xi) = sum_t f(t) conj(g(t - x)) omega^{-xi.t}  (plain sums).
PhaseFunction stft(const StateVector& f, const StateVector& g);

/// Localisation operator with symbol g and windows (phi, psi):
/// (1/d) sum_z g(z) alpha_z(phi x psi) = conv_fn_op(g, rank_one(phi, psi)).
Operator localization_operator(const PhaseFunction& g, const StateVector& phi,
                               const StateVector& psi);

/// Schatten p-norm via singular values; p in [1, inf], inf = operator norm.
double schatten_norm(const Operator& a, double p);

/// Singular values, descending (stable SVD).
std::vector<double> singular_values(const Operator& a);

/// True when min_z |F_W(A)(z)| > tol, i.e. the operator's transform never
/// vanishes and spectral division by it is well posed.
bool is_regular(const Operator& a, double tol = 1e-8);

// --- linear/trace helpers ---------------------------------------------------
cplx op_trace(const Operator& a);
Operator op_add(const Operator& a, const Operator& b);
Operator op_sub(const Operator& a, const Operator& b);
Operator op_scale(const cplx& c, const Operator& a);
Operator op_mul(const Operator& a, const Operator& b);
Operator op_adjoint(const Operator& a);
double op_max_abs_diff(const Operator& a, const Operator& b);
double op_max_abs(const Operator& a);

cplx state_inner(const StateVector& f, const StateVector& g);  ///< sum f conj(g)
double state_norm(const StateVector& f);
double state_max_abs_diff(const StateVector& f, const StateVector& g);

/// Optional precomputed table of all d^2 Weyl matrices.  Built once,
/// single-threaded, then read-only; worthwhile when many operator products
/// against the full system are formed at small d.
class WeylCache {
public:
    explicit WeylCache(const ModelParams& p);
    const Operator& at(int64_t z) const { return table_[static_cast<size_t>(z)]; }
    const ModelParams& params() const { return p_; }

private:
    ModelParams p_;
    std::vector<Operator> table_;
};

}  // namespace qhal
