#include <cmath>
#include <stdexcept>

#include <Eigen/SVD>

#include "qhal/operator_engine.hpp"
#include "qhal/parallel.hpp"

namespace qhal {

Operator conv_fn_op(const PhaseFunction& f, const Operator& a) {
    require_same_model(f.p, a.p, "conv_fn_op");
    const ModelParams& p = f.p;
    const auto roots = unit_roots(p);

    // Partial transform over the momentum leg: Phi(x, m) = sum_xi f(x,xi) omega^{-xi.m}.
    Eigen::MatrixXcd phi(p.d, p.d);
#pragma omp parallel for schedule(static) num_threads(max_threads())
    for (int64_t x = 0; x < p.d; ++x) {
        for (int64_t m = 0; m < p.d; ++m) {
            cplx acc(0.0, 0.0);
            for (int64_t xi = 0; xi < p.d; ++xi) {
                int64_t e = p.pos_dot(xi, m);
                acc += f.at(x, xi) * std::conj(roots[static_cast<size_t>(e)]);
            }
            phi(x, m) = acc;
        }
    }

    // (f * A)[s,t] = (1/d) sum_x Phi(x, s-t) A[s-x, t-x]
    Operator out(p);
    const double inv_d = 1.0 / static_cast<double>(p.d);
#pragma omp parallel for schedule(static) num_threads(max_threads())
    for (int64_t s = 0; s < p.d; ++s) {
        for (int64_t t = 0; t < p.d; ++t) {
            const int64_t m = p.pos_sub(s, t);
            cplx acc(0.0, 0.0);
            for (int64_t x = 0; x < p.d; ++x)
                acc += phi(x, m) * a.m(p.pos_sub(s, x), p.pos_sub(t, x));
            out.m(s, t) = acc * inv_d;
        }
    }
    return out;
}

PhaseFunction conv_op_op(const Operator& a, const Operator& b) {
    require_same_model(a.p, b.p, "conv_op_op");
    const ModelParams& p = a.p;
    const auto roots = unit_roots(p);
    const Operator c = parity_conjugate(b);

    // G(x, m) = sum_s A[s, s+m] C[s+m-x, s-x]   with C = P B P, so that
    // (A * B)(x, xi) = sum_m omega^{-xi.m} G(x, m).
    Eigen::MatrixXcd g(p.d, p.d);
#pragma omp parallel for schedule(static) num_threads(max_threads())
    for (int64_t x = 0; x < p.d; ++x) {
        for (int64_t m = 0; m < p.d; ++m) {
            cplx acc(0.0, 0.0);
            for (int64_t s = 0; s < p.d; ++s) {
                const int64_t sm = p.pos_add(s, m);
                acc += a.m(s, sm) * c.m(p.pos_sub(sm, x), p.pos_sub(s, x));
            }
            g(x, m) = acc;
        }
    }

    PhaseFunction out(p);
#pragma omp parallel for schedule(static) num_threads(max_threads())
    for (int64_t x = 0; x < p.d; ++x) {
        for (int64_t xi = 0; xi < p.d; ++xi) {
            cplx acc(0.0, 0.0);
            for (int64_t m = 0; m < p.d; ++m) {
                int64_t e = p.pos_dot(xi, m);
                acc += std::conj(roots[static_cast<size_t>(e)]) * g(x, m);
            }
            out.at(x, xi) = acc;
        }
    }
    return out;
}

Operator conv_measure_op(const std::vector<cplx>& weights, const std::vector<int64_t>& points,
                         const Operator& a) {
    if (weights.size() != points.size())
        throw std::invalid_argument("conv_measure_op: weight/point count mismatch");
    const ModelParams& p = a.p;
    Operator out(p);  // empty measure -> zero operator
    for (size_t k = 0; k < weights.size(); ++k) {
        if (points[k] < 0 || points[k] >= p.points)
            throw std::invalid_argument("conv_measure_op: phase point out of range");
        Operator shifted = shift_operator(a, points[k]);
        out.m += weights[k] * shifted.m;
    }
    out.m *= 1.0 / static_cast<double>(p.d);
    return out;
}

PhaseFunction fourier_weyl(const Operator& a) {
    const ModelParams& p = a.p;
    const auto roots = unit_roots(p);
    PhaseFunction out(p);
    // F_W(A)(x, xi) = omega^{two_inv*x.xi} sum_t A[t-x, t] omega^{-xi.t}
#pragma omp parallel for schedule(static) num_threads(max_threads())
    for (int64_t x = 0; x < p.d; ++x) {
        const int64_t hx = p.pos_scale(p.two_inv, x);
        for (int64_t xi = 0; xi < p.d; ++xi) {
            const int64_t half = p.pos_dot(hx, xi);
            cplx acc(0.0, 0.0);
            for (int64_t t = 0; t < p.d; ++t) {
                int64_t e = p.pos_dot(xi, t) - half;
                e %= p.N;
                if (e < 0) e += p.N;
                acc += a.m(p.pos_sub(t, x), t) * std::conj(roots[static_cast<size_t>(e)]);
            }
            out.at(x, xi) = acc;
        }
    }
    return out;
}

Operator inv_fourier_weyl(const PhaseFunction& f) {
    const ModelParams& p = f.p;
    const auto roots = unit_roots(p);
    Operator out(p);
    const double inv_d = 1.0 / static_cast<double>(p.d);
    // B[s,t] = (1/d) sum_xi f(t-s, xi) omega^{xi.(two_inv*(s+t))}
#pragma omp parallel for schedule(static) num_threads(max_threads())
    for (int64_t s = 0; s < p.d; ++s) {
        for (int64_t t = 0; t < p.d; ++t) {
            const int64_t x = p.pos_sub(t, s);
            const int64_t mid = p.pos_scale(p.two_inv, p.pos_add(s, t));
            cplx acc(0.0, 0.0);
            for (int64_t xi = 0; xi < p.d; ++xi) {
                int64_t e = p.pos_dot(xi, mid);
                acc += f.at(x, xi) * roots[static_cast<size_t>(e)];
            }
            out.m(s, t) = acc * inv_d;
        }
    }
    return out;
}

Operator weyl_quantize(const PhaseFunction& f) {
    return parity_conjugate(inv_fourier_weyl(symplectic_fourier(f)));
}

PhaseFunction weyl_symbol(const Operator& a) {
    return symplectic_fourier(fourier_weyl(parity_conjugate(a)));
}

Operator rank_one(const StateVector& phi, const StateVector& psi) {
    require_same_model(phi.p, psi.p, "rank_one");
    Operator out(phi.p);
    out.m = phi.v * psi.v.adjoint();
    return out;
}

PhaseFunction stft(const StateVector& f, const StateVector& g) {
    require_same_model(f.p, g.p, "stft");
    const ModelParams& p = f.p;
    const auto roots = unit_roots(p);
    PhaseFunction out(p);
#pragma omp parallel for schedule(static) num_threads(max_threads())
    for (int64_t x = 0; x < p.d; ++x) {
        for (int64_t xi = 0; xi < p.d; ++xi) {
            cplx acc(0.0, 0.0);
            for (int64_t t = 0; t < p.d; ++t) {
                int64_t e = p.pos_dot(xi, t);
                acc += f.v(t) * std::conj(g.v(p.pos_sub(t, x))) *
                       std::conj(roots[static_cast<size_t>(e)]);
            }
            out.at(x, xi) = acc;
        }
    }
    return out;
}

Operator localization_operator(const PhaseFunction& g, const StateVector& phi,
                               const StateVector& psi) {
    require_same_model(g.p, phi.p, "localization_operator");
    return conv_fn_op(g, rank_one(phi, psi));
}

std::vector<double> singular_values(const Operator& a) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a.m);
    const auto& sv = svd.singularValues();
    return std::vector<double>(sv.data(), sv.data() + sv.size());
}

double schatten_norm(const Operator& a, double p) {
    if (p < 1.0) throw std::invalid_argument("schatten_norm: p must be >= 1");
    const auto sv = singular_values(a);
    if (p == kPInf) return sv.empty() ? 0.0 : sv.front();
    if (p == 2.0) return a.m.norm();  // Frobenius, cheaper and exact
    double acc = 0.0;
    if (p == 1.0) {
        for (double s : sv) acc += s;
        return acc;
    }
    for (double s : sv) acc += std::pow(s, p);
    return std::pow(acc, 1.0 / p);
}

bool is_regular(const Operator& a, double tol) {
    const PhaseFunction t = fourier_weyl(a);
    double mn = std::numeric_limits<double>::infinity();
    for (const auto& value : t.v) mn = std::min(mn, std::abs(value));
    return mn > tol;
}

cplx op_trace(const Operator& a) { return a.m.trace(); }

Operator op_add(const Operator& a, const Operator& b) {
    require_same_model(a.p, b.p, "op_add");
    Operator out = a;
    out.m += b.m;
    return out;
}

Operator op_sub(const Operator& a, const Operator& b) {
    require_same_model(a.p, b.p, "op_sub");
    Operator out = a;
    out.m -= b.m;
    return out;
}

Operator op_scale(const cplx& c, const Operator& a) {
    Operator out = a;
    out.m *= c;
    return out;
}

Operator op_mul(const Operator& a, const Operator& b) {
    require_same_model(a.p, b.p, "op_mul");
    Operator out(a.p);
    out.m = a.m * b.m;
    return out;
}

Operator op_adjoint(const Operator& a) {
    Operator out(a.p);
    out.m = a.m.adjoint();
    return out;
}

double op_max_abs_diff(const Operator& a, const Operator& b) {
    require_same_model(a.p, b.p, "op_max_abs_diff");
    return (a.m - b.m).cwiseAbs().maxCoeff();
}

double op_max_abs(const Operator& a) { return a.m.cwiseAbs().maxCoeff(); }

cplx state_inner(const StateVector& f, const StateVector& g) {
    require_same_model(f.p, g.p, "state_inner");
    // Eigen's dot conjugates the first argument; the engine convention is
    // linear in the first slot, conjugate in the second.
    return g.v.dot(f.v);
}

double state_norm(const StateVector& f) { return f.v.norm(); }

double state_max_abs_diff(const StateVector& f, const StateVector& g) {
    require_same_model(f.p, g.p, "state_max_abs_diff");
    return (f.v - g.v).cwiseAbs().maxCoeff();
}

}  // namespace qhal
