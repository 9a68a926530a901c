#include <stdexcept>

#include "qhal/operator_engine.hpp"
#include "qhal/parallel.hpp"

namespace qhal {

Operator weyl_operator(const ModelParams& p, int64_t z) {
    const auto roots = unit_roots(p);
    const int64_t x = p.point_x(z), xi = p.point_xi(z);
    const int64_t half = p.pos_dot(p.pos_scale(p.two_inv, x), xi);  // two_inv * x.xi mod N
    Operator w(p);
    for (int64_t s = 0; s < p.d; ++s) {
        int64_t e = half - p.pos_dot(xi, s);  // -xi.s + two_inv*x.xi
        e %= p.N;
        if (e < 0) e += p.N;
        w.m(s, p.pos_sub(s, x)) = roots[static_cast<size_t>(e)];
    }
    return w;
}

Operator parity_operator(const ModelParams& p) {
    Operator w(p);
    for (int64_t s = 0; s < p.d; ++s) w.m(s, p.pos_neg(s)) = 1.0;
    return w;
}

Operator identity_operator(const ModelParams& p) {
    Operator w(p);
    w.m = Eigen::MatrixXcd::Identity(p.d, p.d);
    return w;
}

StateVector apply_weyl(int64_t z, const StateVector& phi) {
    const ModelParams& p = phi.p;
    const auto roots = unit_roots(p);
    const int64_t x = p.point_x(z), xi = p.point_xi(z);
    const int64_t half = p.pos_dot(p.pos_scale(p.two_inv, x), xi);
    StateVector out(p);
    for (int64_t s = 0; s < p.d; ++s) {
        int64_t e = half - p.pos_dot(xi, s);
        e %= p.N;
        if (e < 0) e += p.N;
        out.v(s) = roots[static_cast<size_t>(e)] * phi.v(p.pos_sub(s, x));
    }
    return out;
}

Operator shift_operator(const Operator& a, int64_t z) {
    const ModelParams& p = a.p;
    const auto roots = unit_roots(p);
    const int64_t x = p.point_x(z), xi = p.point_xi(z);
    Operator out(p);
    // alpha_z(A)[s,t] = omega^{-xi.(s-t)} A[s-x, t-x]
    for (int64_t s = 0; s < p.d; ++s) {
        const int64_t sx = p.pos_sub(s, x);
        for (int64_t t = 0; t < p.d; ++t) {
            int64_t e = p.pos_dot(xi, p.pos_sub(s, t));
            cplx ph = std::conj(roots[static_cast<size_t>(e)]);
            out.m(s, t) = ph * a.m(sx, p.pos_sub(t, x));
        }
    }
    return out;
}

Operator modulate_operator(const Operator& a, int64_t z) {
    const ModelParams& p = a.p;
    const auto roots = unit_roots(p);
    const int64_t hx = p.pos_scale(p.two_inv, p.point_x(z));
    const int64_t hxi = p.pos_scale(p.two_inv, p.point_xi(z));
    Operator out(p);
    // gamma_z(A)[s,t] = omega^{hxi.(s+t)} A[s+hx, t-hx],  h = z/2
    for (int64_t s = 0; s < p.d; ++s) {
        const int64_t sx = p.pos_add(s, hx);
        for (int64_t t = 0; t < p.d; ++t) {
            int64_t e = p.pos_dot(hxi, p.pos_add(s, t));
            out.m(s, t) = roots[static_cast<size_t>(e)] * a.m(sx, p.pos_sub(t, hx));
        }
    }
    return out;
}

Operator involution_operator(const Operator& a) {
    const ModelParams& p = a.p;
    Operator out(p);
    // (P A^dagger P)[s,t] = conj(A[-t, -s])
    for (int64_t s = 0; s < p.d; ++s)
        for (int64_t t = 0; t < p.d; ++t)
            out.m(s, t) = std::conj(a.m(p.pos_neg(t), p.pos_neg(s)));
    return out;
}

Operator parity_conjugate(const Operator& a) {
    const ModelParams& p = a.p;
    Operator out(p);
    for (int64_t s = 0; s < p.d; ++s)
        for (int64_t t = 0; t < p.d; ++t) out.m(s, t) = a.m(p.pos_neg(s), p.pos_neg(t));
    return out;
}

WeylCache::WeylCache(const ModelParams& p) : p_(p) {
    table_.reserve(static_cast<size_t>(p.points));
    for (int64_t z = 0; z < p.points; ++z) table_.push_back(weyl_operator(p, z));
}

}  // namespace qhal
