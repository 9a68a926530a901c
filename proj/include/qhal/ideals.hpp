#pragma once

#include <vector>

#include "qhal/pair_algebra.hpp"

namespace qhal {

// ---------------------------------------------------------------------------
// Closed ideals of the doubled algebra.  Because the Gelfand transform is a
// bijection onto C^(2d^2) with pointwise product, every ideal is exactly a
// coordinate subspace: it is determined by its zero set S, and the pairs
// obtained by inverse-transforming the coordinate indicators off S form an
// orthonormal basis in Gelfand coordinates.  Spectral synthesis holds at
// finite scale, so these constructions are exact rather than approximate.
// ---------------------------------------------------------------------------

struct IdealBasis {
    ModelParams p;
    std::vector<DoubledPoint> zero_set;  ///< sorted, duplicate-free
    std::vector<QhaPair> basis;          ///< Gamma-orthonormal, one per coordinate off the set
};

/// The pair whose Gelfand transform is the indicator of the single coordinate
/// (z0, j0); evaluated in closed form (no transform is run).
QhaPair coordinate_pair(const ModelParams& p, int64_t z0, int32_t j0);

/// The ideal {p : Gamma(p) = 0 on S}; dimension 2d^2 - |S|.
IdealBasis ideal_from_zero_set(const ModelParams& p, std::vector<DoubledPoint> s);

/// Exact gradedness test: the ideal splits as a direct sum of its function and
/// operator parts iff its zero set is invariant under the sheet flip.
bool is_graded(const IdealBasis& ideal);

/// Image of the ideal under the sheet-flip automorphism J.
IdealBasis ideal_j_map(const IdealBasis& ideal);

/// Intersection of two ideals; in zero-set terms this is the union of sets.
IdealBasis ideal_intersection(const IdealBasis& a, const IdealBasis& b);

/// The discrete analogue of the split half-plane pattern (one degree of
/// freedom only): S = {(z, j) : (-1)^j xi_c >= 0} with xi_c the centered
/// residue of the momentum coordinate.  S together with its flip covers the
/// whole doubled space, so the graded part of the resulting ideal is {0}.
std::vector<DoubledPoint> half_plane_zero_set(const ModelParams& p);

// --- span utilities in Gelfand coordinates ---------------------------------

/// Saturation by operator pairs: the span of {(0,B) * v}.  Fiberwise over z
/// this flips the sign of the second sheet and decouples the fibers; the
/// result is returned as a Gamma-orthonormal list grouped by fiber.
std::vector<QhaPair> saturate_with_operators(const std::vector<QhaPair>& v, double tol = 1e-9);

int64_t span_dimension(const std::vector<QhaPair>& v, double tol = 1e-9);

/// Whether q lies in span(v) up to a relative residual of tol.
bool span_contains(const std::vector<QhaPair>& v, const QhaPair& q, double tol = 1e-9);

/// Coordinates where every element of the span vanishes (absolute threshold).
std::vector<DoubledPoint> zero_set_of_span(const std::vector<QhaPair>& v, double tol);

}  // namespace qhal
