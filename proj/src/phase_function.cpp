#include "qhal/phase_function.hpp"

#include <cmath>
#include <stdexcept>

#include "qhal/parallel.hpp"

namespace qhal {

PhaseFunction delta_function(const ModelParams& p) {
    PhaseFunction f(p);
    f.v[0] = 1.0;
    return f;
}

PhaseFunction unit_function(const ModelParams& p) {
    PhaseFunction f(p);
    f.v[0] = static_cast<double>(p.d);
    return f;
}

PhaseFunction one_function(const ModelParams& p) {
    PhaseFunction f(p);
    for (auto& value : f.v) value = 1.0;
    return f;
}

PhaseFunction shift_function(const PhaseFunction& f, int64_t z) {
    const ModelParams& p = f.p;
    PhaseFunction out(p);
    for (int64_t w = 0; w < p.points; ++w) out[w] = f[p.point_sub(w, z)];
    return out;
}

PhaseFunction modulate_function(const PhaseFunction& f, int64_t z) {
    const ModelParams& p = f.p;
    const auto roots = unit_roots(p);
    PhaseFunction out(p);
    for (int64_t w = 0; w < p.points; ++w) {
        int64_t s = p.sigma(w, z);  // in [0, N)
        out[w] = std::conj(roots[static_cast<size_t>(s)]) * f[w];
    }
    return out;
}

PhaseFunction reflect_function(const PhaseFunction& f) {
    const ModelParams& p = f.p;
    PhaseFunction out(p);
    for (int64_t w = 0; w < p.points; ++w) out[w] = f[p.point_neg(w)];
    return out;
}

PhaseFunction involution_function(const PhaseFunction& f) {
    const ModelParams& p = f.p;
    PhaseFunction out(p);
    for (int64_t w = 0; w < p.points; ++w) out[w] = std::conj(f[p.point_neg(w)]);
    return out;
}

PhaseFunction convolve_functions(const PhaseFunction& f, const PhaseFunction& g) {
    require_same_model(f.p, g.p, "convolve_functions");
    const ModelParams& p = f.p;
    PhaseFunction out(p);
    const double inv_d = 1.0 / static_cast<double>(p.d);
#pragma omp parallel for schedule(static) num_threads(max_threads())
    for (int64_t w = 0; w < p.points; ++w) {
        cplx acc(0.0, 0.0);
        for (int64_t z = 0; z < p.points; ++z) acc += f[z] * g[p.point_sub(w, z)];
        out[w] = acc * inv_d;
    }
    return out;
}

PhaseFunction symplectic_fourier(const PhaseFunction& f) {
    const ModelParams& p = f.p;
    const auto roots = unit_roots(p);
    PhaseFunction out(p);
    const double inv_d = 1.0 / static_cast<double>(p.d);
#pragma omp parallel for schedule(static) num_threads(max_threads())
    for (int64_t w = 0; w < p.points; ++w) {
        cplx acc(0.0, 0.0);
        for (int64_t z = 0; z < p.points; ++z) {
            int64_t s = p.sigma(w, z);
            acc += f[z] * std::conj(roots[static_cast<size_t>(s)]);
        }
        out[w] = acc * inv_d;
    }
    return out;
}

double lp_norm(const PhaseFunction& f, double p) {
    if (p < 1.0) throw std::invalid_argument("lp_norm: p must be >= 1");
    if (p == kPInf) {
        double m = 0.0;
        for (const auto& value : f.v) m = std::max(m, std::abs(value));
        return m;
    }
    const double inv_d = 1.0 / static_cast<double>(f.p.d);
    double acc = 0.0;
    if (p == 1.0) {
        for (const auto& value : f.v) acc += std::abs(value);
    } else if (p == 2.0) {
        for (const auto& value : f.v) acc += std::norm(value);
        return std::sqrt(acc * inv_d);
    } else {
        for (const auto& value : f.v) acc += std::pow(std::abs(value), p);
        return std::pow(acc * inv_d, 1.0 / p);
    }
    return acc * inv_d;
}

cplx function_inner(const PhaseFunction& f, const PhaseFunction& g) {
    require_same_model(f.p, g.p, "function_inner");
    cplx acc(0.0, 0.0);
    for (int64_t z = 0; z < f.p.points; ++z) acc += f[z] * std::conj(g[z]);
    return acc / static_cast<double>(f.p.d);
}

PhaseFunction fn_add(const PhaseFunction& f, const PhaseFunction& g) {
    require_same_model(f.p, g.p, "fn_add");
    PhaseFunction out = f;
    for (int64_t z = 0; z < f.p.points; ++z) out[z] += g[z];
    return out;
}

PhaseFunction fn_sub(const PhaseFunction& f, const PhaseFunction& g) {
    require_same_model(f.p, g.p, "fn_sub");
    PhaseFunction out = f;
    for (int64_t z = 0; z < f.p.points; ++z) out[z] -= g[z];
    return out;
}

PhaseFunction fn_scale(const cplx& c, const PhaseFunction& f) {
    PhaseFunction out = f;
    for (auto& value : out.v) value *= c;
    return out;
}

PhaseFunction fn_conj(const PhaseFunction& f) {
    PhaseFunction out = f;
    for (auto& value : out.v) value = std::conj(value);
    return out;
}

PhaseFunction fn_mul(const PhaseFunction& f, const PhaseFunction& g) {
    require_same_model(f.p, g.p, "fn_mul");
    PhaseFunction out = f;
    for (int64_t z = 0; z < f.p.points; ++z) out[z] *= g[z];
    return out;
}

double fn_max_abs(const PhaseFunction& f) {
    double m = 0.0;
    for (const auto& value : f.v) m = std::max(m, std::abs(value));
    return m;
}

double fn_max_abs_diff(const PhaseFunction& f, const PhaseFunction& g) {
    require_same_model(f.p, g.p, "fn_max_abs_diff");
    double m = 0.0;
    for (int64_t z = 0; z < f.p.points; ++z) m = std::max(m, std::abs(f[z] - g[z]));
    return m;
}

}  // namespace qhal
