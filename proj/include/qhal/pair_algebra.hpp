#pragma once

#include <Eigen/Dense>
#include <vector>

#include "qhal/model.hpp"
#include "qhal/operator_engine.hpp"
#include "qhal/phase_function.hpp"

namespace qhal {

// ---------------------------------------------------------------------------
// The doubled algebra: pairs (f, A) of a phase-space function and an operator
// with the commutative product
//
//     (f, A) * (g, B) = (f*g + A*B,  f*B + g*A),
//
// involution (f, A)^* = (f^*, A^*), and unit (d*delta_0, 0).  Under the
// doubled transform
//
//     Gamma(f, A)(z, j) = F_sigma(f)(z) + (-1)^j F_W(A)(z)
//
// the product becomes pointwise multiplication on Lambda x {0,1}; all 2d^2
// evaluation functionals chi_{z,j} are multiplicative and Gamma is a linear
// bijection, so the algebra is semisimple and its ideals are exactly the
// coordinate subspaces in Gamma coordinates.
// ---------------------------------------------------------------------------

struct QhaPair {
    PhaseFunction f;
    Operator a;

    QhaPair() = default;
    explicit QhaPair(const ModelParams& params) : f(params), a(params) {}
    QhaPair(PhaseFunction fn, Operator op);

    const ModelParams& params() const { return f.p; }
};

/// A point of the doubled phase space Lambda x {0,1}; z is a flat phase index.
struct DoubledPoint {
    int64_t z = 0;
    int32_t j = 0;

    friend bool operator==(const DoubledPoint& a, const DoubledPoint& b) {
        return a.z == b.z && a.j == b.j;
    }
    friend bool operator<(const DoubledPoint& a, const DoubledPoint& b) {
        return a.z != b.z ? a.z < b.z : a.j < b.j;
    }
};

/// A complex function on Lambda x {0,1}, stored with the sheet index minor:
/// value (z, j) sits at 2*z + j.
struct DoubledFunction {
    ModelParams p;
    std::vector<cplx> v;

    DoubledFunction() = default;
    explicit DoubledFunction(const ModelParams& params)
        : p(params), v(static_cast<size_t>(2 * params.points), cplx(0.0, 0.0)) {}

    cplx& at(int64_t z, int32_t j) { return v[static_cast<size_t>(2 * z + j)]; }
    const cplx& at(int64_t z, int32_t j) const { return v[static_cast<size_t>(2 * z + j)]; }
};

QhaPair pair_unit(const ModelParams& p);

QhaPair pair_add(const QhaPair& p, const QhaPair& q);
QhaPair pair_sub(const QhaPair& p, const QhaPair& q);
QhaPair pair_scale(const cplx& c, const QhaPair& p);

QhaPair pair_product(const QhaPair& p, const QhaPair& q);
QhaPair pair_involution(const QhaPair& p);
QhaPair pair_shift(const QhaPair& p, int64_t z);
QhaPair pair_modulate(const QhaPair& p, int64_t z);

/// L^1-module action g.(f, A) = (g*f, g*A); identical to pair_product((g,0), p).
QhaPair module_action(const PhaseFunction& g, const QhaPair& p);

/// The sheet-flip automorphism J(f, A) = (f, -A).
QhaPair j_map(const QhaPair& p);

/// The algebra norm lp_norm(f, 1) + schatten_norm(A, 1).
double pair_norm(const QhaPair& p);

/// Entrywise sup distance over both components (a test metric, not the norm).
double pair_max_abs_diff(const QhaPair& p, const QhaPair& q);

/// All 2d^2 character values at once.
DoubledFunction gelfand_transform(const QhaPair& p);

/// Linear inverse of gelfand_transform (the algebra is semisimple, so the
/// transform is a bijection; no pseudo-inverse involved).
QhaPair inverse_gelfand(const DoubledFunction& t);

/// Single character chi_{z,j}(f, A) = F_sigma(f)(z) + (-1)^j F_W(A)(z),
/// evaluated by direct sums (no full transform).
cplx character_eval(const DoubledPoint& c, const QhaPair& p);

/// Points of Lambda x {0,1} where |Gamma(p)| <= tol.  A negative tol selects
/// the default relative threshold 1e-10 * pair_norm(p).
std::vector<DoubledPoint> zero_set(const QhaPair& p, double tol = -1.0);

/// The 2d^2 x 2d^2 matrix of the Gelfand transform in plain coordinates
/// (function values first, then operator entries row-major).  Its singular
/// values are sqrt(2) and sqrt(2d), each d^2-fold, so the map is uniformly
/// well conditioned.
Eigen::MatrixXcd gelfand_matrix(const ModelParams& p);

}  // namespace qhal
