#include "qhal/reference.hpp"

namespace qhal::ref {

PhaseFunction convolve_functions(const PhaseFunction& f, const PhaseFunction& g) {
    require_same_model(f.p, g.p, "ref::convolve_functions");
    const ModelParams& p = f.p;
    PhaseFunction out(p);
    for (int64_t w = 0; w < p.points; ++w) {
        cplx acc(0.0, 0.0);
        for (int64_t z = 0; z < p.points; ++z) acc += f[z] * g[p.point_sub(w, z)];
        out[w] = acc / static_cast<double>(p.d);
    }
    return out;
}

PhaseFunction symplectic_fourier(const PhaseFunction& f) {
    const ModelParams& p = f.p;
    const auto roots = unit_roots(p);
    PhaseFunction out(p);
    for (int64_t w = 0; w < p.points; ++w) {
        cplx acc(0.0, 0.0);
        for (int64_t z = 0; z < p.points; ++z)
            acc += f[z] * std::conj(roots[static_cast<size_t>(p.sigma(w, z))]);
        out[w] = acc / static_cast<double>(p.d);
    }
    return out;
}

Operator shift_operator(const Operator& a, int64_t z) {
    const Operator w = weyl_operator(a.p, z);
    const Operator wneg = weyl_operator(a.p, a.p.point_neg(z));
    Operator out(a.p);
    out.m = w.m * a.m * wneg.m;
    return out;
}

Operator modulate_operator(const Operator& a, int64_t z) {
    const int64_t half = a.p.point_scale(a.p.two_inv, z);
    const Operator w = weyl_operator(a.p, a.p.point_neg(half));
    Operator out(a.p);
    out.m = w.m * a.m * w.m;
    return out;
}

Operator conv_fn_op(const PhaseFunction& f, const Operator& a) {
    require_same_model(f.p, a.p, "ref::conv_fn_op");
    const ModelParams& p = f.p;
    Operator out(p);
    for (int64_t z = 0; z < p.points; ++z) {
        const Operator shifted = ref::shift_operator(a, z);
        out.m += f[z] * shifted.m;
    }
    out.m /= static_cast<double>(p.d);
    return out;
}

PhaseFunction conv_op_op(const Operator& a, const Operator& b) {
    require_same_model(a.p, b.p, "ref::conv_op_op");
    const ModelParams& p = a.p;
    const Operator par = parity_operator(p);
    Operator pbp(p);
    pbp.m = par.m * b.m * par.m;
    PhaseFunction out(p);
    for (int64_t z = 0; z < p.points; ++z) {
        const Operator shifted = ref::shift_operator(pbp, z);
        out[z] = (a.m * shifted.m).trace();
    }
    return out;
}

PhaseFunction fourier_weyl(const Operator& a) {
    const ModelParams& p = a.p;
    PhaseFunction out(p);
    for (int64_t z = 0; z < p.points; ++z) {
        const Operator w = weyl_operator(p, z);
        out[z] = (a.m * w.m).trace();
    }
    return out;
}

Operator inv_fourier_weyl(const PhaseFunction& f) {
    const ModelParams& p = f.p;
    Operator out(p);
    for (int64_t z = 0; z < p.points; ++z) {
        const Operator w = weyl_operator(p, p.point_neg(z));
        out.m += f[z] * w.m;
    }
    out.m /= static_cast<double>(p.d);
    return out;
}

Operator localization_operator(const PhaseFunction& g, const StateVector& phi,
                               const StateVector& psi) {
    require_same_model(g.p, phi.p, "ref::localization_operator");
    require_same_model(g.p, psi.p, "ref::localization_operator");
    const ModelParams& p = g.p;
    Operator out(p);
    for (int64_t z = 0; z < p.points; ++z) {
        const StateVector wphi = apply_weyl(z, phi);
        const StateVector wpsi = apply_weyl(z, psi);
        out.m += g[z] * (wphi.v * wpsi.v.adjoint());
    }
    out.m /= static_cast<double>(p.d);
    return out;
}

}  // namespace qhal::ref
