#include "qhal/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qhal/fixtures.hpp"
#include "qhal/ideals.hpp"
#include "qhal/model.hpp"
#include "qhal/norms.hpp"
#include "qhal/operator_engine.hpp"
#include "qhal/pair_algebra.hpp"
#include "qhal/phase_function.hpp"
#include "qhal/rng.hpp"

namespace qhal {

namespace {

// Builds a report line by line.  Every checker computes a defect (or a bound)
// and the builder turns it into a CheckResult with the configured tolerance;
// the polarity of the comparison is explicit at each call site.
class Suite {
public:
    Suite(std::string name, const RunConfig& cfg) : cfg_(cfg), start_(clock::now()) {
        r_.suite = std::move(name);
        r_.n = cfg.n;
        r_.N = cfg.N;
        r_.seed = cfg.seed;
    }

    /// pass iff defect <= tol.
    void defect(const std::string& id, double value, double tol, const std::string& note = "") {
        push(id, value, use_tol(tol), value <= use_tol(tol) ? "pass" : "fail", note);
    }

    /// pass iff value > floor (well-conditioning style bounds).
    void above(const std::string& id, double value, double floor, const std::string& note = "") {
        push(id, value, use_tol(floor), value > use_tol(floor) ? "pass" : "fail", note);
    }

    /// pass iff ok; value carries a count or flag for the record.
    void exact(const std::string& id, bool ok, double value, const std::string& note = "") {
        push(id, value, 0.0, ok ? "pass" : "fail", note);
    }

    void not_applicable(const std::string& id, const std::string& note) {
        push(id, 0.0, 0.0, "n/a", note);
    }

    VerificationReport finish() {
        r_.wall_seconds =
            std::chrono::duration<double>(clock::now() - start_).count();
        return std::move(r_);
    }

    ModelParams params() const { return ModelParams::make(cfg_.n, cfg_.N); }
    uint64_t seed() const { return cfg_.seed; }

private:
    using clock = std::chrono::steady_clock;

    double use_tol(double def) const { return cfg_.tolerance ? *cfg_.tolerance : def; }

    void push(const std::string& id, double value, double tol, const char* status,
              const std::string& note) {
        CheckResult c;
        c.id = id;
        c.value = value;
        c.tolerance = tol;
        c.status = status;
        c.note = note;
        r_.checks.push_back(std::move(c));
    }

    RunConfig cfg_;
    VerificationReport r_;
    clock::time_point start_;
};

uint64_t stream(uint64_t seed, uint64_t salt) { return seed * 0x9e3779b97f4a7c15ULL + salt; }

// --- ccr ---------------------------------------------------------------------
// W_z W_w = omega^{-two_inv sigma(z,w)} W_{z+w} over every ordered pair, plus
// the adjoint, parity-conjugation and unitarity identities over all z.

VerificationReport suite_ccr(const RunConfig& cfg) {
    Suite s("ccr", cfg);
    const ModelParams p = s.params();
    const WeylCache cache(p);
    const std::vector<cplx> roots = unit_roots(p);
    const Operator id = identity_operator(p);
    const Operator par = parity_operator(p);

    double worst_comp = 0.0;
    double worst_adj = 0.0;
    double worst_par = 0.0;
    double worst_uni = 0.0;
#pragma omp parallel for schedule(static) reduction(max : worst_comp, worst_adj, worst_par, worst_uni)
    for (int64_t z = 0; z < p.points; ++z) {
        const Operator& wz = cache.at(z);
        for (int64_t w = 0; w < p.points; ++w) {
            const cplx phase = std::conj(roots[static_cast<size_t>(
                p.sigma(z, w) * p.two_inv % p.N)]);
            const Operator lhs = op_mul(wz, cache.at(w));
            const Operator rhs = op_scale(phase, cache.at(p.point_add(z, w)));
            worst_comp = std::max(worst_comp, op_max_abs_diff(lhs, rhs));
        }
        worst_adj = std::max(worst_adj,
                             op_max_abs_diff(op_adjoint(wz), cache.at(p.point_neg(z))));
        worst_par = std::max(worst_par, op_max_abs_diff(op_mul(par, op_mul(wz, par)),
                                                        cache.at(p.point_neg(z))));
        worst_uni = std::max(worst_uni, op_max_abs_diff(op_mul(wz, op_adjoint(wz)), id));
    }

    std::ostringstream note;
    note << p.points * p.points << " ordered pairs";
    s.defect("composition-phase", worst_comp, 1e-12, note.str());
    s.defect("adjoint-is-inverse-point", worst_adj, 1e-12);
    s.defect("parity-conjugation", worst_par, 1e-12);
    s.defect("unitarity", worst_uni, 1e-12);
    return s.finish();
}

// --- fourier -------------------------------------------------------------------

VerificationReport suite_fourier(const RunConfig& cfg) {
    Suite s("fourier", cfg);
    const ModelParams p = s.params();
    const int trials = 50;

    double worst_invol = 0.0;
    double worst_plancherel_fn = 0.0;
    for (int t = 0; t < trials; ++t) {
        const PhaseFunction f = random_phase_function(p, stream(s.seed(), 100 + t));
        worst_invol = std::max(worst_invol,
                               fn_max_abs_diff(symplectic_fourier(symplectic_fourier(f)), f));
        worst_plancherel_fn =
            std::max(worst_plancherel_fn,
                     std::abs(lp_norm(symplectic_fourier(f), 2) - lp_norm(f, 2)) /
                         std::max(lp_norm(f, 2), 1e-300));
    }
    s.defect("symplectic-involution", worst_invol, 1e-10);
    s.defect("symplectic-plancherel", worst_plancherel_fn, 1e-10, "relative");

    double worst_round = 0.0;
    double worst_plancherel = 0.0;
    double worst_parseval = 0.0;
    for (int t = 0; t < trials; ++t) {
        const Operator a = random_operator(p, stream(s.seed(), 200 + t));
        const PhaseFunction fa = fourier_weyl(a);
        worst_round = std::max(worst_round, op_max_abs_diff(inv_fourier_weyl(fa), a));
        worst_plancherel =
            std::max(worst_plancherel, std::abs(lp_norm(fa, 2) - schatten_norm(a, 2)) /
                                           std::max(schatten_norm(a, 2), 1e-300));
        const Operator b = random_operator(p, stream(s.seed(), 300 + t));
        const cplx lhs = op_trace(op_mul(a, op_adjoint(b)));
        const cplx rhs = function_inner(fa, fourier_weyl(b));
        worst_parseval = std::max(worst_parseval, std::abs(lhs - rhs));
    }
    s.defect("weyl-round-trip", worst_round, 1e-10);
    s.defect("weyl-plancherel", worst_plancherel, 1e-10, "relative");
    s.defect("weyl-parseval", worst_parseval, 1e-10);
    return s.finish();
}

// --- convolution -----------------------------------------------------------------

VerificationReport suite_convolution(const RunConfig& cfg) {
    Suite s("convolution", cfg);
    const ModelParams p = s.params();
    const int trials = 100;

    double worst_opop = 0.0;
    double worst_fnop = 0.0;
    double worst_fnfn = 0.0;
    double worst_comm = 0.0;
    for (int t = 0; t < trials; ++t) {
        const Operator a = random_operator(p, stream(s.seed(), 400 + t));
        const Operator b = random_operator(p, stream(s.seed(), 500 + t));
        const PhaseFunction f = random_phase_function(p, stream(s.seed(), 600 + t));
        const PhaseFunction g = random_phase_function(p, stream(s.seed(), 700 + t));

        worst_opop = std::max(worst_opop,
                              fn_max_abs_diff(symplectic_fourier(conv_op_op(a, b)),
                                              fn_mul(fourier_weyl(a), fourier_weyl(b))));
        worst_fnop = std::max(worst_fnop,
                              fn_max_abs_diff(fourier_weyl(conv_fn_op(f, a)),
                                              fn_mul(symplectic_fourier(f), fourier_weyl(a))));
        worst_fnfn = std::max(worst_fnfn,
                              fn_max_abs_diff(symplectic_fourier(convolve_functions(f, g)),
                                              fn_mul(symplectic_fourier(f), symplectic_fourier(g))));
        worst_comm = std::max(worst_comm, fn_max_abs_diff(conv_op_op(a, b), conv_op_op(b, a)));
    }
    s.defect("operator-operator-transform", worst_opop, 1e-9);
    s.defect("function-operator-transform", worst_fnop, 1e-9);
    s.defect("function-function-transform", worst_fnfn, 1e-9);
    s.defect("commutativity", worst_comm, 1e-10);

    double worst_trace = 0.0;
    for (int t = 0; t < 50; ++t) {
        const Operator a = random_operator(p, stream(s.seed(), 800 + t));
        const Operator b = random_operator(p, stream(s.seed(), 900 + t));
        const PhaseFunction c = conv_op_op(a, b);
        cplx mass(0.0, 0.0);
        for (int64_t z = 0; z < p.points; ++z) mass += c[z];
        mass /= static_cast<double>(p.d);
        worst_trace = std::max(worst_trace, std::abs(mass - op_trace(a) * op_trace(b)));
    }
    s.defect("total-mass-trace", worst_trace, 1e-9);
    return s.finish();
}

// --- involution --------------------------------------------------------------

VerificationReport suite_involution(const RunConfig& cfg) {
    Suite s("involution", cfg);
    const ModelParams p = s.params();
    const int trials = 50;

    double worst_opop = 0.0;
    double worst_fnop = 0.0;
    double worst_invol = 0.0;
    double worst_transform = 0.0;
    double worst_assoc_fab = 0.0;
    double worst_assoc_fga = 0.0;
    for (int t = 0; t < trials; ++t) {
        const Operator a = random_operator(p, stream(s.seed(), 1000 + t));
        const Operator b = random_operator(p, stream(s.seed(), 1100 + t));
        const PhaseFunction f = random_phase_function(p, stream(s.seed(), 1200 + t));
        const PhaseFunction g = random_phase_function(p, stream(s.seed(), 1300 + t));

        worst_opop = std::max(worst_opop,
                              fn_max_abs_diff(involution_function(conv_op_op(a, b)),
                                              conv_op_op(involution_operator(a),
                                                         involution_operator(b))));
        worst_fnop = std::max(worst_fnop,
                              op_max_abs_diff(involution_operator(conv_fn_op(f, a)),
                                              conv_fn_op(involution_function(f),
                                                         involution_operator(a))));
        worst_invol = std::max(
            worst_invol, op_max_abs_diff(involution_operator(involution_operator(a)), a));
        worst_transform = std::max(
            worst_transform, fn_max_abs_diff(symplectic_fourier(involution_function(f)),
                                             fn_conj(symplectic_fourier(f))));
        worst_assoc_fab = std::max(
            worst_assoc_fab, fn_max_abs_diff(convolve_functions(f, conv_op_op(a, b)),
                                             conv_op_op(conv_fn_op(f, a), b)));
        worst_assoc_fga = std::max(
            worst_assoc_fga, op_max_abs_diff(conv_fn_op(f, conv_fn_op(g, a)),
                                             conv_fn_op(convolve_functions(f, g), a)));
    }
    s.defect("operator-convolution-star", worst_opop, 1e-10);
    s.defect("module-action-star", worst_fnop, 1e-10);
    s.defect("involutive", worst_invol, 1e-12);
    s.defect("transform-conjugation", worst_transform, 1e-10);
    s.defect("associativity-f-ab", worst_assoc_fab, 1e-10);
    s.defect("associativity-fg-a", worst_assoc_fga, 1e-10);
    return s.finish();
}

// --- quantization --------------------------------------------------------------

VerificationReport suite_quantization(const RunConfig& cfg) {
    Suite s("quantization", cfg);
    const ModelParams p = s.params();
    const int trials = 30;

    double worst_module = 0.0;
    double worst_product = 0.0;
    double worst_round = 0.0;
    for (int t = 0; t < trials; ++t) {
        const PhaseFunction f = random_phase_function(p, stream(s.seed(), 1400 + t));
        const PhaseFunction g = random_phase_function(p, stream(s.seed(), 1500 + t));
        worst_module = std::max(
            worst_module,
            op_max_abs_diff(conv_fn_op(f, weyl_quantize(g)),
                            weyl_quantize(convolve_functions(reflect_function(f), g))));
        worst_product = std::max(
            worst_product,
            fn_max_abs_diff(conv_op_op(weyl_quantize(f), weyl_quantize(g)),
                            reflect_function(convolve_functions(f, g))));
        worst_round = std::max(worst_round,
                               fn_max_abs_diff(weyl_symbol(weyl_quantize(f)), f));
    }
    s.defect("module-covariance", worst_module, 1e-9);
    s.defect("product-formula", worst_product, 1e-9);
    s.defect("symbol-round-trip", worst_round, 1e-10);

    s.defect("point-mass-to-parity",
             op_max_abs_diff(weyl_quantize(unit_function(p)), parity_operator(p)), 1e-12);
    s.defect("flat-symbol-to-identity",
             op_max_abs_diff(weyl_quantize(one_function(p)), identity_operator(p)), 1e-12);
    return s.finish();
}

// --- gelfand ---------------------------------------------------------------------

VerificationReport suite_gelfand(const RunConfig& cfg) {
    Suite s("gelfand", cfg);
    const ModelParams p = s.params();
    const int pairs = 20;

    double worst_mult = 0.0;
    double worst_conj = 0.0;
    for (int t = 0; t < pairs; ++t) {
        const QhaPair u(random_phase_function(p, stream(s.seed(), 1600 + t)),
                        random_operator(p, stream(s.seed(), 1700 + t)));
        const QhaPair v(random_phase_function(p, stream(s.seed(), 1800 + t)),
                        random_operator(p, stream(s.seed(), 1900 + t)));
        const DoubledFunction prod = gelfand_transform(pair_product(u, v));
        const DoubledFunction gu = gelfand_transform(u);
        const DoubledFunction gv = gelfand_transform(v);
        const DoubledFunction star = gelfand_transform(pair_involution(u));
        for (int64_t z = 0; z < p.points; ++z)
            for (int32_t j = 0; j < 2; ++j) {
                worst_mult = std::max(worst_mult,
                                      std::abs(prod.at(z, j) - gu.at(z, j) * gv.at(z, j)));
                worst_conj = std::max(worst_conj,
                                      std::abs(star.at(z, j) - std::conj(gu.at(z, j))));
            }
    }
    s.defect("character-multiplicativity", worst_mult, 1e-9);
    s.defect("involution-conjugation", worst_conj, 1e-10);

    // Uniform invertibility of the transform: the smallest singular value of
    // the full Gelfand matrix stays above the semisimplicity floor.
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(gelfand_matrix(p));
    const double smallest = svd.singularValues()(svd.singularValues().size() - 1);
    s.above("semisimplicity-floor", smallest, 1e-8);
    return s.finish();
}

// --- ideals ----------------------------------------------------------------------

VerificationReport suite_ideals(const RunConfig& cfg) {
    Suite s("ideals", cfg);
    const ModelParams p = s.params();
    Rng rng(stream(s.seed(), 2000));
    const int sets = 20;

    double worst_closure = 0.0;
    int graded_mismatch = 0;
    int flip_mismatch = 0;
    for (int t = 0; t < sets; ++t) {
        std::set<DoubledPoint> sset;
        const int size = 1 + static_cast<int>(rng.uniform_below(
                                 static_cast<uint64_t>(2 * p.points - 2)));
        while (static_cast<int>(sset.size()) < size) {
            DoubledPoint pt;
            pt.z = static_cast<int64_t>(rng.uniform_below(static_cast<uint64_t>(p.points)));
            pt.j = static_cast<int32_t>(rng.uniform_below(2));
            sset.insert(pt);
        }
        // Every third set is made sheet-symmetric so both sides of the
        // gradedness equivalence are exercised.
        if (t % 3 == 0) {
            std::set<DoubledPoint> sym = sset;
            for (const DoubledPoint& pt : sset) {
                DoubledPoint q;
                q.z = pt.z;
                q.j = 1 - pt.j;
                sym.insert(q);
            }
            sset = sym;
        }
        std::vector<DoubledPoint> svec(sset.begin(), sset.end());
        const IdealBasis ideal = ideal_from_zero_set(p, svec);

        // Product closure, measured as the Gelfand size of products on S
        // (spectral synthesis is exact, so vanishing there is membership).
        for (int k = 0; k < 5 && !ideal.basis.empty(); ++k) {
            const size_t i = rng.uniform_below(ideal.basis.size());
            const size_t j = rng.uniform_below(ideal.basis.size());
            const QhaPair prod = pair_product(ideal.basis[i], ideal.basis[j]);
            for (const DoubledPoint& pt : svec)
                worst_closure = std::max(worst_closure, std::abs(character_eval(pt, prod)));
        }
        const QhaPair outside(random_phase_function(p, stream(s.seed(), 2100 + t)),
                              random_operator(p, stream(s.seed(), 2200 + t)));
        if (!ideal.basis.empty()) {
            const QhaPair prod = pair_product(outside, ideal.basis[0]);
            for (const DoubledPoint& pt : svec)
                worst_closure = std::max(worst_closure, std::abs(character_eval(pt, prod)));
        }

        bool symmetric = true;
        for (const DoubledPoint& pt : svec) {
            DoubledPoint q;
            q.z = pt.z;
            q.j = 1 - pt.j;
            if (!sset.count(q)) symmetric = false;
        }
        if (is_graded(ideal) != symmetric) ++graded_mismatch;

        const IdealBasis flipped = ideal_j_map(ideal);
        std::set<DoubledPoint> want;
        for (const DoubledPoint& pt : svec) {
            DoubledPoint q;
            q.z = pt.z;
            q.j = 1 - pt.j;
            want.insert(q);
        }
        std::set<DoubledPoint> got(flipped.zero_set.begin(), flipped.zero_set.end());
        if (got != want) ++flip_mismatch;
    }
    s.defect("product-closure", worst_closure, 1e-10);
    s.exact("gradedness-iff-sheet-symmetry", graded_mismatch == 0,
            static_cast<double>(graded_mismatch), "mismatch count");
    s.exact("jmap-flips-zero-set", flip_mismatch == 0, static_cast<double>(flip_mismatch),
            "mismatch count");

    if (p.n == 1) {
        const std::vector<DoubledPoint> hp = half_plane_zero_set(p);
        const IdealBasis ideal = ideal_from_zero_set(p, hp);
        const IdealBasis inter = ideal_intersection(ideal, ideal_j_map(ideal));
        std::set<DoubledPoint> covered(hp.begin(), hp.end());
        for (const DoubledPoint& pt : hp) {
            DoubledPoint q;
            q.z = pt.z;
            q.j = 1 - pt.j;
            covered.insert(q);
        }
        const int64_t expected = 2 * p.points - static_cast<int64_t>(covered.size());
        s.exact("half-plane-graded-part",
                static_cast<int64_t>(inter.basis.size()) == expected,
                static_cast<double>(static_cast<int64_t>(inter.basis.size()) - expected),
                "dimension defect");
    } else {
        s.not_applicable("half-plane-graded-part", "defined for one degree of freedom");
    }
    return s.finish();
}

// --- norms -----------------------------------------------------------------------

VerificationReport suite_norms(const RunConfig& cfg) {
    Suite s("norms", cfg);
    const ModelParams p = s.params();
    const int trials = 200;

    // Axiom sweeps: each shipped functional is summarized by its worst
    // tolerance-normalized defect (value/tol over the applicable sub-checks).
    PhaseFunction mu = one_function(p);
    mu.at(0, 0) = cplx(3.0, 0.0);
    mu.at(1, 0) = cplx(0.25, 0.0);
    const Operator regular = discrete_gaussian_operator(p);
    const NormFunctional base = make_s_p_norm(p, 2.0);
    const std::vector<std::pair<NormFunctional, AxiomScope>> functionals = {
        {make_s_p_norm(p, 2.0), AxiomScope::segal},
        {make_s_p_norm(p, kPInf), AxiomScope::segal},
        {make_s_p_mu_norm(p, 2.0, mu), AxiomScope::segal},
        {make_t_norm(p), AxiomScope::segal},
        {make_feichtinger_norm(p, gaussian_window(p)), AxiomScope::segal},
        {make_pair_norm(p), AxiomScope::qsa},
        {make_qsa_s_p_mu_norm(p, 2.0, mu), AxiomScope::qsa},
        {make_induced_qsa_norm(p, regular, base), AxiomScope::qsa},
        {make_twisted_qsa_norm(p, make_s_p_norm(p, 2.0), make_s_p_norm(p, 2.0)),
         AxiomScope::qsa},
    };
    for (size_t i = 0; i < functionals.size(); ++i) {
        const VerificationReport sub = axiom_check(
            functionals[i].first, functionals[i].second, stream(s.seed(), 2300 + i), trials);
        double worst = 0.0;
        int applicable = 0;
        int na = 0;
        for (const CheckResult& c : sub.checks) {
            if (c.status == "n/a") {
                ++na;
                continue;
            }
            ++applicable;
            if (c.tolerance > 0.0) worst = std::max(worst, c.value / c.tolerance);
            if (c.status == "fail") worst = std::max(worst, 2.0);
        }
        std::ostringstream note;
        note << applicable << " checks, " << na << " n/a";
        s.defect("axioms: " + functionals[i].first.name, worst, 1.0, note.str());
    }

    // Induced-algebra round trip: g is recovered from g*A by spectral division.
    double worst_rec = 0.0;
    for (int t = 0; t < 20; ++t) {
        const PhaseFunction g = random_phase_function(p, stream(s.seed(), 2400 + t));
        const Operator ga = conv_fn_op(g, regular);
        worst_rec = std::max(worst_rec,
                             fn_max_abs_diff(recover_convolution_factor(ga, regular), g));
    }
    s.defect("induced-recovery", worst_rec, 1e-9);
    return s.finish();
}

// Equivalence study shared by run_suite("norms") callers that want the
// operator-level intervals; exposed through the same suite to keep the report
// count at ten.
void append_equivalence_checks(Suite& s, const ModelParams& p, uint64_t seed) {
    const Operator window_op = discrete_gaussian_operator(p);
    const PhaseFunction window = gaussian_window(p);
    struct Named {
        const char* name;
        std::function<double(const Operator&)> eval;
    };
    const std::vector<Named> norms = {
        {"transform", [&](const Operator& a) {
             return feichtinger_norm(fourier_weyl(a), window);
         }},
        {"kernel", [&](const Operator& a) {
             return feichtinger_norm(operator_kernel_function(a), window);
         }},
        {"gamma", [&](const Operator& a) {
             return feichtinger_op_norm_gamma(a, window_op);
         }},
        {"alphagamma", [&](const Operator& a) {
             return feichtinger_op_norm_alphagamma(a, window_op);
         }},
    };

    // Three seeds; every pairwise interval must stay positive-finite with a
    // stable spread.  The four norms are evaluated once per member and the
    // intervals are read off the cached values.
    std::vector<std::vector<double>> spreads(3);
    int64_t degenerate = 0;  // ratio intervals that are not inside (0, inf)
    double worst_spread = 0.0;
    for (int run = 0; run < 3; ++run) {
        const uint64_t sd = seed + static_cast<uint64_t>(run);
        const std::vector<Operator> family = feichtinger_family(p, 30, sd);
        std::vector<std::vector<double>> values(norms.size());
        for (const Operator& a : family)
            for (size_t i = 0; i < norms.size(); ++i) values[i].push_back(norms[i].eval(a));
        for (size_t i = 0; i < norms.size(); ++i)
            for (size_t j = i + 1; j < norms.size(); ++j) {
                double lo = std::numeric_limits<double>::infinity();
                double hi = 0.0;
                for (size_t k = 0; k < family.size(); ++k) {
                    const double r = values[i][k] / values[j][k];
                    lo = std::min(lo, r);
                    hi = std::max(hi, r);
                }
                if (!(lo > 0.0) || !std::isfinite(hi)) ++degenerate;
                spreads[static_cast<size_t>(run)].push_back(hi / lo);
            }
    }
    for (size_t k = 0; k < spreads[0].size(); ++k) {
        const double lo = std::min({spreads[0][k], spreads[1][k], spreads[2][k]});
        const double hi = std::max({spreads[0][k], spreads[1][k], spreads[2][k]});
        worst_spread = std::max(worst_spread, hi / lo - 1.0);
    }
    s.exact("equivalence-intervals-finite", degenerate == 0, static_cast<double>(degenerate),
            "6 norm pairs x 3 seeds");
    s.defect("equivalence-seed-drift", worst_spread, 0.05, "relative spread drift");
}

VerificationReport suite_norms_full(const RunConfig& cfg) {
    VerificationReport base = suite_norms(cfg);
    Suite s("norms", cfg);
    append_equivalence_checks(s, ModelParams::make(cfg.n, cfg.N), cfg.seed);
    VerificationReport extra = s.finish();
    for (CheckResult& c : extra.checks) base.checks.push_back(std::move(c));
    base.wall_seconds += extra.wall_seconds;
    return base;
}

// --- poisson ---------------------------------------------------------------------

VerificationReport suite_poisson(const RunConfig& cfg) {
    Suite s("poisson", cfg);
    const ModelParams p = s.params();

    std::vector<int64_t> divisors;
    for (int64_t k = 1; k <= p.N; ++k)
        if (p.N % k == 0) divisors.push_back(k);

    for (int64_t k : divisors) {
        double worst = 0.0;
        double c_k = 0.0;
        for (int t = 0; t < 5; ++t) {
            const PhaseFunction g = random_phase_function(p, stream(s.seed(), 2500 + t));
            const PoissonCheck chk = poisson_sum_check(g, k);
            worst = std::max(worst, chk.defect);
            c_k = chk.c_k;
        }
        worst = std::max(worst, poisson_sum_check(gaussian_window(p), k).defect);
        worst = std::max(worst, poisson_sum_check(one_function(p), k).defect);
        std::ostringstream id;
        id << "lattice K=" << k;
        std::ostringstream note;
        note << "c_K = " << c_k;
        s.defect(id.str(), worst, 1e-9, note.str());
    }
    return s.finish();
}

// --- hausdorff-young ---------------------------------------------------------------

double conjugate_exponent(double q) {
    if (q == 1.0) return kPInf;
    if (q == kPInf) return 1.0;
    return q / (q - 1.0);
}

VerificationReport suite_hausdorff_young(const RunConfig& cfg) {
    Suite s("hausdorff-young", cfg);
    const ModelParams p = s.params();
    const int trials = 200;

    const std::pair<double, const char*> exponents[] = {
        {1.0, "bound p=1"}, {4.0 / 3.0, "bound p=4/3"}, {1.5, "bound p=3/2"}, {2.0, "bound p=2"}};
    for (const auto& [lp, id] : exponents) {
        const double lq = conjugate_exponent(lp);
        double worst = -1.0;
        for (int t = 0; t < trials; ++t) {
            const PhaseFunction f =
                random_phase_function(p, stream(s.seed(), 2600 + t));
            const double num = schatten_norm(inv_fourier_weyl(f), lq);
            const double den = lp_norm(f, lp);
            worst = std::max(worst, num / den - 1.0);
        }
        s.defect(id, worst, 1e-10, "max of ratio - 1");
    }
    return s.finish();
}

}  // namespace

// --- driver ------------------------------------------------------------------

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "ccr",     "fourier", "convolution", "involution", "quantization",
        "gelfand", "ideals",  "norms",       "poisson",    "hausdorff-young"};
    return names;
}

bool is_suite_name(const std::string& name) {
    const auto& names = suite_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

void RunConfig::validate() const {
    ModelParams::make(n, N);  // throws with a precise message on bad (n, N)
    if (tolerance && !(*tolerance > 0.0))
        throw std::invalid_argument("config: tolerance must be > 0");
    for (const std::string& name : suites)
        if (!is_suite_name(name)) {
            std::string msg = "config: unknown suite '" + name + "'; valid names:";
            for (const std::string& s : suite_names()) msg += " " + s;
            throw std::invalid_argument(msg);
        }
}

VerificationReport run_suite(const std::string& name, const RunConfig& cfg) {
    cfg.validate();
    if (name == "ccr") return suite_ccr(cfg);
    if (name == "fourier") return suite_fourier(cfg);
    if (name == "convolution") return suite_convolution(cfg);
    if (name == "involution") return suite_involution(cfg);
    if (name == "quantization") return suite_quantization(cfg);
    if (name == "gelfand") return suite_gelfand(cfg);
    if (name == "ideals") return suite_ideals(cfg);
    if (name == "norms") return suite_norms_full(cfg);
    if (name == "poisson") return suite_poisson(cfg);
    if (name == "hausdorff-young") return suite_hausdorff_young(cfg);
    std::string msg = "unknown suite '" + name + "'; valid names:";
    for (const std::string& s : suite_names()) msg += " " + s;
    throw std::invalid_argument(msg);
}

std::vector<VerificationReport> run_verify(const RunConfig& cfg) {
    cfg.validate();
    const std::vector<std::string>& selected = cfg.suites.empty() ? suite_names() : cfg.suites;
    std::vector<VerificationReport> out;
    out.reserve(selected.size());
    for (const std::string& name : selected) out.push_back(run_suite(name, cfg));
    return out;
}

bool all_passed(const std::vector<VerificationReport>& reports) {
    for (const VerificationReport& r : reports)
        if (!r.passed()) return false;
    return true;
}

}  // namespace qhal
