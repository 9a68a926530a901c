#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace qhal {

using cplx = std::complex<double>;

/// Parameters of one finite model: n degrees of freedom over Z_N with N odd.
///
/// The Hilbert space is C^d with d = N^n, positions indexed by (Z_N)^n.
/// The phase space is Lambda = (Z_N)^{2n} (d^2 points), carrying the
/// normalised counting measure with weight 1/d per point, so that the
/// whole phase space has mass d.  All residues are kept canonical in
/// [0, N).  two_inv is the multiplicative inverse of 2 mod N (it exists
/// exactly because N is odd; doubling is a bijection on Z_N).
struct ModelParams {
    int32_t n = 1;       ///< degrees of freedom, >= 1
    int64_t N = 3;       ///< odd modulus, >= 3
    int64_t d = 3;       ///< Hilbert dimension N^n
    int64_t points = 9;  ///< number of phase-space points, d^2
    int64_t two_inv = 2; ///< (N+1)/2, the inverse of 2 mod N

    /// Validates and builds the parameter block.  Throws std::invalid_argument
    /// on even, non-positive or too-small modulus, on n < 1, and when d^2
    /// would overflow the 64-bit index type (documented bound: N^{2n} < 2^62).
    static ModelParams make(int32_t n, int64_t N);

    bool operator==(const ModelParams& o) const { return n == o.n && N == o.N; }
    bool operator!=(const ModelParams& o) const { return !(*this == o); }

    // --- flat position indices -------------------------------------------
    // A position s in (Z_N)^n is stored as a flat index in [0, d) with the
    // first coordinate most significant (row-major).

    int64_t pos_digit(int64_t s, int32_t i) const;     ///< i-th coordinate of s
    int64_t pos_add(int64_t s, int64_t t) const;       ///< componentwise s+t mod N
    int64_t pos_sub(int64_t s, int64_t t) const;       ///< componentwise s-t mod N
    int64_t pos_neg(int64_t s) const;                  ///< componentwise -s mod N
    int64_t pos_dot(int64_t s, int64_t t) const;       ///< sum_i s_i t_i mod N
    int64_t pos_scale(int64_t c, int64_t s) const;     ///< componentwise c*s mod N

    // --- flat phase-space indices ----------------------------------------
    // A phase point z = (x, xi) is stored as x_flat * d + xi_flat.

    int64_t point(int64_t x, int64_t xi) const { return x * d + xi; }
    int64_t point_x(int64_t z) const { return z / d; }
    int64_t point_xi(int64_t z) const { return z % d; }
    int64_t point_add(int64_t z, int64_t w) const;
    int64_t point_sub(int64_t z, int64_t w) const;
    int64_t point_neg(int64_t z) const;
    int64_t point_scale(int64_t c, int64_t z) const;

    /// Symplectic form sigma((x,xi),(x',xi')) = xi.x' - x.xi' mod N, in [0, N).
    int64_t sigma(int64_t z, int64_t w) const;
};

/// A phase point given by coordinate vectors; the user-facing form of the
/// flat indices used internally.
struct PhasePoint {
    std::vector<int64_t> x;
    std::vector<int64_t> xi;
};

/// Canonicalises and flattens a PhasePoint (residues reduced into [0, N)).
/// Throws std::invalid_argument if the coordinate count does not match n.
int64_t flatten_point(const ModelParams& p, const PhasePoint& z);
PhasePoint unflatten_point(const ModelParams& p, int64_t z);

/// A complex function on the phase space Lambda; values laid out row-major,
/// x major and xi minor: index(x, xi) = x_flat * d + xi_flat.
struct PhaseFunction {
    ModelParams p;
    std::vector<cplx> v;

    PhaseFunction() = default;
    explicit PhaseFunction(const ModelParams& params)
        : p(params), v(static_cast<size_t>(params.points), cplx(0.0, 0.0)) {}

    cplx& at(int64_t x, int64_t xi) { return v[static_cast<size_t>(x * p.d + xi)]; }
    const cplx& at(int64_t x, int64_t xi) const { return v[static_cast<size_t>(x * p.d + xi)]; }
    cplx& operator[](int64_t z) { return v[static_cast<size_t>(z)]; }
    const cplx& operator[](int64_t z) const { return v[static_cast<size_t>(z)]; }
};

/// A vector in the model Hilbert space C^d.
struct StateVector {
    ModelParams p;
    Eigen::VectorXcd v;

    StateVector() = default;
    explicit StateVector(const ModelParams& params)
        : p(params), v(Eigen::VectorXcd::Zero(params.d)) {}
};

/// A linear operator on C^d, entry (s, t) = m(s, t).
struct Operator {
    ModelParams p;
    Eigen::MatrixXcd m;

    Operator() = default;
    explicit Operator(const ModelParams& params)
        : p(params), m(Eigen::MatrixXcd::Zero(params.d, params.d)) {}
};

/// Table of the N-th roots of unity: roots[r] = exp(2*pi*i*r/N) for r in [0,N).
/// Every phase occurring in the engine is an integer power of the primitive
/// root, so kernels share this table instead of calling exp() in inner loops.
std::vector<cplx> unit_roots(const ModelParams& p);

/// Throws std::invalid_argument when two objects live on different models.
void require_same_model(const ModelParams& a, const ModelParams& b, const char* where);

}  // namespace qhal
