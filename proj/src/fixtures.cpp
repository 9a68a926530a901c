#include "qhal/fixtures.hpp"

#include <cmath>
#include <numbers>

#include "qhal/rng.hpp"

namespace qhal {

StateVector gaussian_state(const ModelParams& p) {
    // One-dimensional profile, then an n-fold product across coordinates.
    std::vector<double> profile(static_cast<size_t>(p.N));
    for (int64_t x = 0; x < p.N; ++x) {
        const double c = static_cast<double>(x) - p.N * std::round(static_cast<double>(x) / p.N);
        double acc = 0.0;
        for (int k = -1; k <= 1; ++k) {
            const double u = c + static_cast<double>(k) * static_cast<double>(p.N);
            acc += std::exp(-std::numbers::pi * u * u / static_cast<double>(p.N));
        }
        profile[static_cast<size_t>(x)] = acc;
    }
    StateVector phi(p);
    for (int64_t s = 0; s < p.d; ++s) {
        double value = 1.0;
        for (int32_t i = 0; i < p.n; ++i)
            value *= profile[static_cast<size_t>(p.pos_digit(s, i))];
        phi.v(s) = value;
    }
    phi.v /= phi.v.norm();
    return phi;
}

StateVector chirp_state(const ModelParams& p, uint64_t seed) {
    Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
    const auto roots = unit_roots(p);
    const int64_t a = 1 + static_cast<int64_t>(rng.uniform_below(static_cast<uint64_t>(p.N - 1)));
    std::vector<int64_t> b(static_cast<size_t>(p.n));
    for (auto& bi : b) bi = static_cast<int64_t>(rng.uniform_below(static_cast<uint64_t>(p.N)));
    StateVector phi(p);
    const double scale = 1.0 / std::sqrt(static_cast<double>(p.d));
    for (int64_t s = 0; s < p.d; ++s) {
        int64_t e = (a * p.pos_dot(s, s)) % p.N;
        for (int32_t i = 0; i < p.n; ++i)
            e = (e + b[static_cast<size_t>(i)] * p.pos_digit(s, i)) % p.N;
        phi.v(s) = roots[static_cast<size_t>(e)] * scale;
    }
    return phi;
}

StateVector random_state(const ModelParams& p, uint64_t seed) {
    Rng rng(seed);
    StateVector phi(p);
    for (int64_t s = 0; s < p.d; ++s) phi.v(s) = cplx(rng.normal(), rng.normal());
    phi.v /= phi.v.norm();
    return phi;
}

Operator random_operator(const ModelParams& p, uint64_t seed) {
    Rng rng(seed ^ 0xa5a5a5a5a5a5a5a5ULL);
    Operator a(p);
    const double scale = 1.0 / std::sqrt(static_cast<double>(p.d));
    for (int64_t s = 0; s < p.d; ++s)
        for (int64_t t = 0; t < p.d; ++t) a.m(s, t) = cplx(rng.normal(), rng.normal()) * scale;
    return a;
}

Operator random_psd(const ModelParams& p, uint64_t seed) {
    Operator x = random_operator(p, seed ^ 0x5c5c5c5c5c5c5c5cULL);
    Operator out(p);
    out.m = x.m * x.m.adjoint();
    const double tr = out.m.trace().real();
    if (tr > 0.0) out.m /= tr;
    return out;
}

Operator discrete_gaussian_operator(const ModelParams& p) {
    const StateVector g = gaussian_state(p);
    return rank_one(g, g);
}

PhaseFunction random_phase_function(const ModelParams& p, uint64_t seed) {
    Rng rng(seed ^ 0x3c3c3c3c3c3c3c3cULL);
    PhaseFunction f(p);
    for (auto& value : f.v) value = cplx(rng.normal(), rng.normal());
    return f;
}

StateVector flat_state(const ModelParams& p) {
    StateVector phi(p);
    const double scale = 1.0 / std::sqrt(static_cast<double>(p.d));
    for (int64_t s = 0; s < p.d; ++s) phi.v(s) = scale;
    return phi;
}

PhaseFunction gaussian_window(const ModelParams& p) {
    std::vector<double> profile(static_cast<size_t>(p.N));
    for (int64_t x = 0; x < p.N; ++x) {
        const double c = static_cast<double>(x) - p.N * std::round(static_cast<double>(x) / p.N);
        double acc = 0.0;
        for (int k = -1; k <= 1; ++k) {
            const double u = c + static_cast<double>(k) * static_cast<double>(p.N);
            acc += std::exp(-std::numbers::pi * u * u / static_cast<double>(p.N));
        }
        profile[static_cast<size_t>(x)] = acc;
    }
    PhaseFunction w(p);
    for (int64_t x = 0; x < p.d; ++x) {
        double vx = 1.0;
        for (int32_t i = 0; i < p.n; ++i) vx *= profile[static_cast<size_t>(p.pos_digit(x, i))];
        for (int64_t xi = 0; xi < p.d; ++xi) {
            double v = vx;
            for (int32_t i = 0; i < p.n; ++i) v *= profile[static_cast<size_t>(p.pos_digit(xi, i))];
            w.at(x, xi) = v;
        }
    }
    return w;
}

}  // namespace qhal
