#include "qhal/pair_algebra.hpp"

#include <stdexcept>

namespace qhal {

QhaPair::QhaPair(PhaseFunction fn, Operator op) : f(std::move(fn)), a(std::move(op)) {
    require_same_model(f.p, a.p, "QhaPair");
}

QhaPair pair_unit(const ModelParams& p) {
    QhaPair e(p);
    e.f = unit_function(p);
    return e;
}

QhaPair pair_add(const QhaPair& p, const QhaPair& q) {
    return {fn_add(p.f, q.f), op_add(p.a, q.a)};
}

QhaPair pair_sub(const QhaPair& p, const QhaPair& q) {
    return {fn_sub(p.f, q.f), op_sub(p.a, q.a)};
}

QhaPair pair_scale(const cplx& c, const QhaPair& p) {
    return {fn_scale(c, p.f), op_scale(c, p.a)};
}

QhaPair pair_product(const QhaPair& p, const QhaPair& q) {
    require_same_model(p.params(), q.params(), "pair_product");
    PhaseFunction f = fn_add(convolve_functions(p.f, q.f), conv_op_op(p.a, q.a));
    Operator a = op_add(conv_fn_op(p.f, q.a), conv_fn_op(q.f, p.a));
    return {std::move(f), std::move(a)};
}

QhaPair pair_involution(const QhaPair& p) {
    return {involution_function(p.f), involution_operator(p.a)};
}

QhaPair pair_shift(const QhaPair& p, int64_t z) {
    return {shift_function(p.f, z), shift_operator(p.a, z)};
}

QhaPair pair_modulate(const QhaPair& p, int64_t z) {
    return {modulate_function(p.f, z), modulate_operator(p.a, z)};
}

QhaPair module_action(const PhaseFunction& g, const QhaPair& p) {
    require_same_model(g.p, p.params(), "module_action");
    return {convolve_functions(g, p.f), conv_fn_op(g, p.a)};
}

QhaPair j_map(const QhaPair& p) { return {p.f, op_scale(cplx(-1.0, 0.0), p.a)}; }

double pair_norm(const QhaPair& p) { return lp_norm(p.f, 1.0) + schatten_norm(p.a, 1.0); }

double pair_max_abs_diff(const QhaPair& p, const QhaPair& q) {
    return std::max(fn_max_abs_diff(p.f, q.f), op_max_abs_diff(p.a, q.a));
}

DoubledFunction gelfand_transform(const QhaPair& p) {
    const PhaseFunction fs = symplectic_fourier(p.f);
    const PhaseFunction aw = fourier_weyl(p.a);
    DoubledFunction t(p.params());
    for (int64_t z = 0; z < p.params().points; ++z) {
        t.at(z, 0) = fs[z] + aw[z];
        t.at(z, 1) = fs[z] - aw[z];
    }
    return t;
}

QhaPair inverse_gelfand(const DoubledFunction& t) {
    const ModelParams& p = t.p;
    PhaseFunction fs(p), aw(p);
    for (int64_t z = 0; z < p.points; ++z) {
        fs[z] = 0.5 * (t.at(z, 0) + t.at(z, 1));
        aw[z] = 0.5 * (t.at(z, 0) - t.at(z, 1));
    }
    // F_sigma is an involution, so it is its own inverse on the function sheet.
    return {symplectic_fourier(fs), inv_fourier_weyl(aw)};
}

cplx character_eval(const DoubledPoint& c, const QhaPair& p) {
    const ModelParams& mp = p.params();
    if (c.z < 0 || c.z >= mp.points || (c.j != 0 && c.j != 1))
        throw std::invalid_argument("character_eval: point outside Lambda x {0,1}");
    const auto roots = unit_roots(mp);

    cplx fs = 0;
    for (int64_t u = 0; u < mp.points; ++u)
        fs += p.f[u] * std::conj(roots[static_cast<size_t>(mp.sigma(c.z, u))]);
    fs /= static_cast<double>(mp.d);

    // F_W(A)(x, xi) = omega^{two_inv x.xi} sum_t A[t-x, t] omega^{-xi.t}
    const int64_t x = mp.point_x(c.z), xi = mp.point_xi(c.z);
    cplx aw = 0;
    for (int64_t t = 0; t < mp.d; ++t) {
        int64_t e = (mp.pos_dot(xi, t) - mp.two_inv * mp.pos_dot(x, xi)) % mp.N;
        if (e < 0) e += mp.N;
        aw += p.a.m(mp.pos_sub(t, x), t) * std::conj(roots[static_cast<size_t>(e)]);
    }
    return (c.j == 0) ? fs + aw : fs - aw;
}

std::vector<DoubledPoint> zero_set(const QhaPair& p, double tol) {
    if (tol < 0.0) tol = 1e-10 * pair_norm(p);
    const DoubledFunction t = gelfand_transform(p);
    std::vector<DoubledPoint> out;
    for (int64_t z = 0; z < p.params().points; ++z)
        for (int32_t j = 0; j < 2; ++j)
            if (std::abs(t.at(z, j)) <= tol) out.push_back({z, j});
    return out;
}

Eigen::MatrixXcd gelfand_matrix(const ModelParams& p) {
    const auto roots = unit_roots(p);
    const int64_t m = 2 * p.points;
    Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(m, m);
    const double invd = 1.0 / static_cast<double>(p.d);
    for (int64_t z = 0; z < p.points; ++z) {
        const int64_t x = p.point_x(z), xi = p.point_xi(z);
        for (int32_t j = 0; j < 2; ++j) {
            const int64_t row = 2 * z + j;
            // function block: coefficient of f(u) is (1/d) omega^{-sigma(z,u)}
            for (int64_t u = 0; u < p.points; ++u)
                g(row, u) = invd * std::conj(roots[static_cast<size_t>(p.sigma(z, u))]);
            // operator block: F_W touches only the diagonal t - s = x
            const double sgn = (j == 0) ? 1.0 : -1.0;
            for (int64_t t = 0; t < p.d; ++t) {
                int64_t e = (p.pos_dot(xi, t) - p.two_inv * p.pos_dot(x, xi)) % p.N;
                if (e < 0) e += p.N;
                const int64_t s = p.pos_sub(t, x);
                g(row, p.points + s * p.d + t) = sgn * std::conj(roots[static_cast<size_t>(e)]);
            }
        }
    }
    return g;
}

}  // namespace qhal
