#include "qhal/ideals.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <stdexcept>

namespace qhal {

namespace {

void validate_set(const ModelParams& p, const std::vector<DoubledPoint>& s) {
    for (const auto& c : s)
        if (c.z < 0 || c.z >= p.points || (c.j != 0 && c.j != 1))
            throw std::invalid_argument("zero set contains a point outside Lambda x {0,1}");
}

std::vector<DoubledPoint> sorted_unique(std::vector<DoubledPoint> s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

/// Gelfand coordinate vectors of a list of pairs, one column each.
Eigen::MatrixXcd gamma_columns(const std::vector<QhaPair>& v) {
    if (v.empty()) return {};
    const ModelParams& p = v.front().params();
    Eigen::MatrixXcd m(2 * p.points, static_cast<int64_t>(v.size()));
    for (size_t k = 0; k < v.size(); ++k) {
        require_same_model(p, v[k].params(), "span utility");
        const DoubledFunction t = gelfand_transform(v[k]);
        for (int64_t i = 0; i < 2 * p.points; ++i) m(i, static_cast<int64_t>(k)) = t.v[i];
    }
    return m;
}

}  // namespace

QhaPair coordinate_pair(const ModelParams& p, int64_t z0, int32_t j0) {
    if (z0 < 0 || z0 >= p.points || (j0 != 0 && j0 != 1))
        throw std::invalid_argument("coordinate_pair: point outside Lambda x {0,1}");
    const auto roots = unit_roots(p);
    const double half = 0.5 / static_cast<double>(p.d);
    QhaPair out(p);

    // function sheet: F_sigma of (1/2) delta_{z0}
    for (int64_t w = 0; w < p.points; ++w)
        out.f[w] = half * std::conj(roots[static_cast<size_t>(p.sigma(w, z0))]);

    // operator sheet: inverse Weyl transform of (+/- 1/2) delta_{z0}; only the
    // diagonal t - s = x0 is touched
    const int64_t x0 = p.point_x(z0), xi0 = p.point_xi(z0);
    const double sgn = (j0 == 0) ? half : -half;
    for (int64_t s = 0; s < p.d; ++s) {
        const int64_t t = p.pos_add(s, x0);
        const int64_t e = (p.two_inv * p.pos_dot(xi0, p.pos_add(s, t))) % p.N;
        out.a.m(s, t) = sgn * roots[static_cast<size_t>(e)];
    }
    return out;
}

IdealBasis ideal_from_zero_set(const ModelParams& p, std::vector<DoubledPoint> s) {
    validate_set(p, s);
    IdealBasis ideal;
    ideal.p = p;
    ideal.zero_set = sorted_unique(std::move(s));
    ideal.basis.reserve(static_cast<size_t>(2 * p.points) - ideal.zero_set.size());
    auto it = ideal.zero_set.begin();
    for (int64_t z = 0; z < p.points; ++z)
        for (int32_t j = 0; j < 2; ++j) {
            const DoubledPoint c{z, j};
            if (it != ideal.zero_set.end() && *it == c) {
                ++it;
                continue;
            }
            ideal.basis.push_back(coordinate_pair(p, z, j));
        }
    return ideal;
}

bool is_graded(const IdealBasis& ideal) {
    for (const auto& c : ideal.zero_set) {
        const DoubledPoint flipped{c.z, 1 - c.j};
        if (!std::binary_search(ideal.zero_set.begin(), ideal.zero_set.end(), flipped))
            return false;
    }
    return true;
}

IdealBasis ideal_j_map(const IdealBasis& ideal) {
    std::vector<DoubledPoint> flipped;
    flipped.reserve(ideal.zero_set.size());
    for (const auto& c : ideal.zero_set) flipped.push_back({c.z, 1 - c.j});
    return ideal_from_zero_set(ideal.p, std::move(flipped));
}

IdealBasis ideal_intersection(const IdealBasis& a, const IdealBasis& b) {
    require_same_model(a.p, b.p, "ideal_intersection");
    std::vector<DoubledPoint> merged = a.zero_set;
    merged.insert(merged.end(), b.zero_set.begin(), b.zero_set.end());
    return ideal_from_zero_set(a.p, std::move(merged));
}

std::vector<DoubledPoint> half_plane_zero_set(const ModelParams& p) {
    if (p.n != 1)
        throw std::invalid_argument("half_plane_zero_set: defined for one degree of freedom");
    std::vector<DoubledPoint> s;
    for (int64_t z = 0; z < p.points; ++z) {
        const int64_t xi = p.point_xi(z);
        const int64_t centered = (2 * xi <= p.N - 1) ? xi : xi - p.N;
        for (int32_t j = 0; j < 2; ++j) {
            const int64_t signed_val = (j == 0) ? centered : -centered;
            if (signed_val >= 0) s.push_back({z, j});
        }
    }
    return s;
}

std::vector<QhaPair> saturate_with_operators(const std::vector<QhaPair>& v, double tol) {
    if (v.empty()) return {};
    const ModelParams& p = v.front().params();
    const Eigen::MatrixXcd cols = gamma_columns(v);
    const double scale = std::max(1.0, cols.norm());

    std::vector<QhaPair> out;
    for (int64_t z = 0; z < p.points; ++z) {
        // fiber matrix: rows (z,0) and (z,1), second sheet negated
        Eigen::MatrixXcd fiber(2, cols.cols());
        fiber.row(0) = cols.row(2 * z);
        fiber.row(1) = -cols.row(2 * z + 1);
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(fiber, Eigen::ComputeThinU);
        for (int k = 0; k < svd.nonzeroSingularValues(); ++k) {
            if (svd.singularValues()(k) <= tol * scale) break;
            const Eigen::Vector2cd dir = svd.matrixU().col(k);
            out.push_back(pair_add(pair_scale(dir(0), coordinate_pair(p, z, 0)),
                                   pair_scale(dir(1), coordinate_pair(p, z, 1))));
        }
    }
    return out;
}

int64_t span_dimension(const std::vector<QhaPair>& v, double tol) {
    if (v.empty()) return 0;
    const Eigen::MatrixXcd cols = gamma_columns(v);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(cols);
    const double top = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
    int64_t rank = 0;
    for (int k = 0; k < svd.singularValues().size(); ++k)
        if (svd.singularValues()(k) > tol * std::max(1.0, top)) ++rank;
    return rank;
}

bool span_contains(const std::vector<QhaPair>& v, const QhaPair& q, double tol) {
    const DoubledFunction tq = gelfand_transform(q);
    Eigen::VectorXcd target(static_cast<int64_t>(tq.v.size()));
    for (size_t i = 0; i < tq.v.size(); ++i) target(static_cast<int64_t>(i)) = tq.v[i];
    const double tnorm = target.norm();
    if (v.empty()) return tnorm <= tol;
    const Eigen::MatrixXcd cols = gamma_columns(v);
    const Eigen::VectorXcd coeff = cols.colPivHouseholderQr().solve(target);
    const double resid = (cols * coeff - target).norm();
    return resid <= tol * std::max(1.0, tnorm);
}

std::vector<DoubledPoint> zero_set_of_span(const std::vector<QhaPair>& v, double tol) {
    if (v.empty()) throw std::invalid_argument("zero_set_of_span: empty span");
    const ModelParams& p = v.front().params();
    const Eigen::MatrixXcd cols = gamma_columns(v);
    std::vector<DoubledPoint> s;
    for (int64_t z = 0; z < p.points; ++z)
        for (int32_t j = 0; j < 2; ++j)
            if (cols.row(2 * z + j).cwiseAbs().maxCoeff() <= tol) s.push_back({z, j});
    return s;
}

}  // namespace qhal
