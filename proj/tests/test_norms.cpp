#include "test_support.hpp"

#include <cmath>
#include <vector>

#include "qhal/norms.hpp"
#include "qhal/pair_algebra.hpp"
#include "qhal/rng.hpp"

using namespace qhal;

namespace {

PhaseFunction nonneg_weight(const ModelParams& p, uint64_t seed) {
    PhaseFunction mu = random_phase_function(p, seed);
    for (auto& value : mu.v) value = std::abs(value);
    return mu;
}

bool check_status(const VerificationReport& rep, const std::string& id, const std::string& want) {
    for (const auto& c : rep.checks)
        if (c.id == id) return c.status == want;
    return false;
}

}  // namespace

// --- pinned closed-form values ----------------------------------------------

TEST_CASE("pinned values of the simple norms") {
    auto p = qt::model(1, 9);
    const double d = static_cast<double>(p.d);

    // unit = d * delta_0: L1 mass 1, L2 mass sqrt(d), quantizes to parity
    CHECK(s_p_norm(unit_function(p), 2.0) == doctest::Approx(1.0 + std::sqrt(d)).epsilon(1e-13));
    CHECK(t_norm(unit_function(p)) == doctest::Approx(1.0 + d).epsilon(1e-12));

    // the constant function: L1 mass d, sup 1, quantizes to the identity
    CHECK(s_p_norm(one_function(p), kPInf) == doctest::Approx(d + 1.0).epsilon(1e-13));
    CHECK(t_norm(one_function(p)) == doctest::Approx(2.0 * d).epsilon(1e-12));

    CHECK(s_p_norm(PhaseFunction(p), 2.0) == 0.0);
    CHECK_THROWS_AS(s_p_norm(one_function(p), 0.5), std::invalid_argument);
}

TEST_CASE("weighted transform norm: flat weight recovers Plancherel") {
    auto p = qt::model(1, 9);
    const PhaseFunction flat = one_function(p);
    for (uint64_t seed = 0; seed < 4; ++seed) {
        const PhaseFunction f = random_phase_function(p, 20 + seed);
        // ||F f||_{L^2(1)} = ||F f||_2 = ||f||_2
        CHECK(s_p_mu_norm(f, 2.0, flat) == doctest::Approx(s_p_norm(f, 2.0)).epsilon(1e-12));
    }
    // weight validation
    PhaseFunction bad(p);
    bad[3] = cplx(-1.0, 0.0);
    CHECK_THROWS_AS(s_p_mu_norm(one_function(p), 2.0, bad), std::invalid_argument);
    bad[3] = cplx(0.0, 0.5);
    CHECK_THROWS_AS(s_p_mu_norm(one_function(p), 2.0, bad), std::invalid_argument);

    // a weight supported on one point turns the p = inf norm into evaluation
    PhaseFunction spike(p);
    spike[5] = 1.0;
    const PhaseFunction f = random_phase_function(p, 77);
    const double got = s_p_mu_norm(f, kPInf, spike);
    CHECK(got == doctest::Approx(lp_norm(f, 1.0) + qt::cabs(symplectic_fourier(f)[5]))
                     .epsilon(1e-12));
}

TEST_CASE("pair-level weighted norm adds the operator terms") {
    auto p = qt::model(1, 9);
    const PhaseFunction mu = nonneg_weight(p, 4);
    const QhaPair q(random_phase_function(p, 5), random_operator(p, 6));
    const double got = qsa_sp_mu_norm(q, 2.0, mu);
    // independent recomputation from the pieces
    double acc = 0.0;
    const PhaseFunction tf = symplectic_fourier(q.f);
    const PhaseFunction ta = fourier_weyl(q.a);
    double sf = 0.0, sa = 0.0;
    for (int64_t z = 0; z < p.points; ++z) {
        sf += mu[z].real() * std::norm(tf[z]);
        sa += mu[z].real() * std::norm(ta[z]);
    }
    acc = lp_norm(q.f, 1.0) + std::sqrt(sf / static_cast<double>(p.d)) +
          schatten_norm(q.a, 1.0) + std::sqrt(sa / static_cast<double>(p.d));
    CHECK(got == doctest::Approx(acc).epsilon(1e-12));
}

// --- the calibrated time-frequency norm ---------------------------------------

TEST_CASE("time-frequency norm: closed forms for the unit and the constant") {
    auto p = qt::model(1, 9);
    const PhaseFunction h = gaussian_window(p);
    const double d = static_cast<double>(p.d);
    const double h1 = lp_norm(h, 1.0);
    const double h2 = lp_norm(h, 2.0);

    // f = d delta_0: |<f, gamma_w alpha_z h>| = |h(-z)|, so the doubled sum
    // collapses to d ||h||_1 and the calibrated value is d ||h||_1^2/||h||_2^2
    CHECK(feichtinger_norm(unit_function(p), h) ==
          doctest::Approx(d * h1 * h1 / (h2 * h2)).epsilon(1e-11));

    // f = 1: |V(z, w)| = |F_sigma h(w)|, so the value is
    // ||h||_1 d ||F_sigma h||_1 / ||h||_2^2
    const double th1 = lp_norm(symplectic_fourier(h), 1.0);
    CHECK(feichtinger_norm(one_function(p), h) ==
          doctest::Approx(h1 * d * th1 / (h2 * h2)).epsilon(1e-11));

    CHECK_THROWS_AS(feichtinger_norm(one_function(p), PhaseFunction(p)), std::invalid_argument);
}

TEST_CASE("time-frequency norm dominates the L1 norm and is L1-bounded") {
    // the two inequalities behind the calibration: ||f||_1 <= N(f) and
    // N(g * f) <= ||g||_1 N(f)
    auto p = qt::model(1, 9);
    const PhaseFunction h = gaussian_window(p);
    for (uint64_t seed = 0; seed < 5; ++seed) {
        const PhaseFunction f = random_phase_function(p, 300 + seed);
        const PhaseFunction g = random_phase_function(p, 400 + seed);
        const double nf = feichtinger_norm(f, h);
        CHECK(lp_norm(f, 1.0) <= nf * (1.0 + 1e-12));
        CHECK(feichtinger_norm(convolve_functions(g, f), h) <=
              lp_norm(g, 1.0) * nf * (1.0 + 1e-12));
    }
}

TEST_CASE("time-frequency norm symmetry flags follow the window") {
    auto p = qt::model(1, 9);
    const NormFunctional even = make_feichtinger_norm(p, gaussian_window(p));
    CHECK(even.star_symmetric);
    CHECK(even.modulation_invariant);

    // a shifted window is no longer even, so the star claim must drop
    const NormFunctional shifted =
        make_feichtinger_norm(p, shift_function(gaussian_window(p), p.point(1, 2)));
    CHECK_FALSE(shifted.star_symmetric);
    CHECK(shifted.modulation_invariant);

    // modulation invariance is exact regardless of the window
    const PhaseFunction f = random_phase_function(p, 11);
    const PhaseFunction w = shift_function(gaussian_window(p), p.point(1, 2));
    for (int64_t z : {p.point(1, 0), p.point(0, 4), p.point(8, 8)})
        CHECK(feichtinger_norm(modulate_function(f, z), w) ==
              doctest::Approx(feichtinger_norm(f, w)).epsilon(1e-11));
}

// --- axiom checker: positive and negative controls -----------------------------

TEST_CASE("axiom checker passes every shipped functional") {
    auto p = qt::model(1, 9);
    const PhaseFunction mu = nonneg_weight(p, 1);
    const Operator gauss = discrete_gaussian_operator(p);

    std::vector<NormFunctional> function_level = {
        make_s_p_norm(p, 2.0),
        make_s_p_norm(p, kPInf),
        make_s_p_mu_norm(p, 2.0, mu),
        make_t_norm(p),
        make_feichtinger_norm(p, gaussian_window(p)),
    };
    for (const auto& norm : function_level) {
        const auto rep = axiom_check(norm, AxiomScope::segal, 1234, 40);
        INFO(norm.name);
        CHECK(rep.passed());
        CHECK(check_status(rep, "density", "n/a"));
        CHECK(check_status(rep, "shift-isometry", "pass"));
        CHECK(check_status(rep, "submultiplicative", "pass"));
        CHECK(check_status(rep, "l1-module-bound", "pass"));
    }

    std::vector<NormFunctional> pair_level = {
        make_qsa_s_p_mu_norm(p, 2.0, mu),
        make_pair_norm(p),
        make_induced_qsa_norm(p, gauss, make_s_p_norm(p, 2.0)),
        make_twisted_qsa_norm(p, make_s_p_norm(p, 2.0), make_t_norm(p)),
    };
    for (const auto& norm : pair_level) {
        const auto rep = axiom_check(norm, AxiomScope::qsa, 4321, 25);
        INFO(norm.name);
        CHECK(rep.passed());
        CHECK(check_status(rep, "submultiplicative", "pass"));
        CHECK(check_status(rep, "l1-module-bound", "pass"));
    }

    // claimed symmetries actually get exercised, not skipped
    const auto fei = axiom_check(function_level[4], AxiomScope::segal, 99, 25);
    CHECK(check_status(fei, "star-isometry", "pass"));
    CHECK(check_status(fei, "modulation-isometry", "pass"));
    const auto ind = axiom_check(pair_level[2], AxiomScope::qsa, 98, 20);
    CHECK(check_status(ind, "star-isometry", "pass"));       // gaussian generator is star-fixed
    CHECK(check_status(ind, "modulation-isometry", "n/a"));  // not claimed
}

TEST_CASE("axiom checker rejects broken functionals for the right reason") {
    auto p = qt::model(1, 9);

    // sup norm: a perfectly good Banach norm that is not an algebra norm for
    // the Haar convolution.  Nonnegative samples keep the convolution from
    // cancelling, so the violation shows up at every trial.
    NormFunctional sup;
    sup.name = "sup";
    sup.kind = NormFunctional::Kind::function_level;
    sup.fn_eval = [](const PhaseFunction& f) { return fn_max_abs(f); };
    sup.fn_sample = [p](uint64_t s) {
        PhaseFunction f = random_phase_function(p, s);
        for (auto& value : f.v) value = std::abs(value);
        return f;
    };
    const auto rep = axiom_check(sup, AxiomScope::segal, 7, 40);
    CHECK_FALSE(rep.passed());
    CHECK(check_status(rep, "submultiplicative", "fail"));
    CHECK(check_status(rep, "triangle", "pass"));

    // L1 plus a point evaluation: breaks shift invariance
    NormFunctional pinned;
    pinned.name = "l1-plus-origin";
    pinned.kind = NormFunctional::Kind::function_level;
    pinned.fn_eval = [](const PhaseFunction& f) { return lp_norm(f, 1.0) + qt::cabs(f[0]); };
    pinned.fn_sample = [p](uint64_t s) { return random_phase_function(p, s); };
    const auto rep2 = axiom_check(pinned, AxiomScope::segal, 8, 40);
    CHECK_FALSE(rep2.passed());
    CHECK(check_status(rep2, "shift-isometry", "fail"));

    // a falsely claimed star symmetry must be caught
    NormFunctional liar = pinned;
    liar.name = "asymmetric-with-claims";
    liar.fn_eval = [](const PhaseFunction& f) {
        return lp_norm(f, 1.0) + qt::cabs(f[1]);
    };
    liar.star_symmetric = true;
    const auto rep3 = axiom_check(liar, AxiomScope::segal, 9, 40);
    CHECK(check_status(rep3, "star-isometry", "fail"));
}

// --- the induced subalgebra norm ----------------------------------------------

TEST_CASE("convolution factors are recovered exactly through a regular operator") {
    auto p = qt::model(1, 9);
    const Operator gauss = discrete_gaussian_operator(p);
    for (uint64_t seed = 0; seed < 5; ++seed) {
        const PhaseFunction g = random_phase_function(p, 500 + seed);
        const Operator b = conv_fn_op(g, gauss);
        CHECK(fn_max_abs_diff(recover_convolution_factor(b, gauss), g) < 1e-9);
    }
    // a random dense operator is regular with overwhelming probability
    const Operator a = random_operator(p, 42);
    REQUIRE(is_regular(a));
    const PhaseFunction g = random_phase_function(p, 43);
    CHECK(fn_max_abs_diff(recover_convolution_factor(conv_fn_op(g, a), a), g) < 1e-8);

    // the flat-state projector has transform zeros: recovery must refuse
    const Operator flat = rank_one(flat_state(p), flat_state(p));
    REQUIRE_FALSE(is_regular(flat));
    CHECK_THROWS_AS(recover_convolution_factor(conv_fn_op(g, flat), flat), std::invalid_argument);
    CHECK_THROWS_AS(
        make_induced_qsa_norm(p, flat, make_s_p_norm(p, 2.0)), std::invalid_argument);
}

TEST_CASE("induced norm evaluates through the recovery round trip") {
    auto p = qt::model(1, 9);
    const Operator gauss = discrete_gaussian_operator(p);
    const NormFunctional base = make_s_p_norm(p, 2.0);
    const NormFunctional induced = make_induced_qsa_norm(p, gauss, base);
    const double s1a = schatten_norm(gauss, 1.0);

    for (uint64_t seed = 0; seed < 4; ++seed) {
        const PhaseFunction f = random_phase_function(p, 600 + seed);
        const PhaseFunction g = random_phase_function(p, 700 + seed);
        const QhaPair member(f, conv_fn_op(g, gauss));
        const double want = base.fn_eval(f) + s1a * base.fn_eval(g);
        const double got = induced.pair_eval(member);
        CHECK(std::abs(got - want) <= 1e-9 * std::max(1.0, want));
        CHECK(got == doctest::Approx(induced_qsa_norm(f, g, gauss, base)).epsilon(1e-12));
    }
    CHECK_THROWS_AS(induced_qsa_norm(one_function(p), one_function(p),
                                     rank_one(flat_state(p), flat_state(p)), base),
                    std::invalid_argument);
}

// --- the twisted subalgebra norm ------------------------------------------------

TEST_CASE("twisted members factor through the sum and difference coordinates") {
    auto p = qt::model(1, 9);
    const NormFunctional s1 = make_s_p_norm(p, 2.0);
    const NormFunctional s2 = make_t_norm(p);
    const NormFunctional twisted = make_twisted_qsa_norm(p, s1, s2);

    const PhaseFunction f1 = random_phase_function(p, 800);
    const PhaseFunction g1 = random_phase_function(p, 801);
    const PhaseFunction f2 = random_phase_function(p, 802);
    const PhaseFunction g2 = random_phase_function(p, 803);

    const QhaPair m1(f1, weyl_quantize(reflect_function(g1)));
    const QhaPair m2(f2, weyl_quantize(reflect_function(g2)));

    // evaluation matches the definition on the original coordinates
    CHECK(twisted.pair_eval(m1) ==
          doctest::Approx(s1.fn_eval(fn_add(f1, g1)) + s2.fn_eval(fn_sub(f1, g1)))
              .epsilon(1e-10));

    // the recovered symbol of the product is f1*g2 + f2*g1, i.e. the sum and
    // difference coordinates multiply componentwise
    const QhaPair prod = pair_product(m1, m2);
    const PhaseFunction g_prod = reflect_function(weyl_symbol(prod.a));
    const PhaseFunction u_prod = fn_add(prod.f, g_prod);
    const PhaseFunction v_prod = fn_sub(prod.f, g_prod);
    const PhaseFunction u_want = convolve_functions(fn_add(f1, g1), fn_add(f2, g2));
    const PhaseFunction v_want = convolve_functions(fn_sub(f1, g1), fn_sub(f2, g2));
    CHECK(fn_max_abs_diff(u_prod, u_want) < 1e-9);
    CHECK(fn_max_abs_diff(v_prod, v_want) < 1e-9);

    // and the twisted norm is therefore submultiplicative with constant 1
    CHECK(twisted.pair_eval(prod) <=
          twisted.pair_eval(m1) * twisted.pair_eval(m2) * (1.0 + 1e-12));
}

// --- Poisson summation -----------------------------------------------------------

TEST_CASE("lattice summation: oracle-fixed constants and small defects") {
    // The constants below were fixed by an independent empirical fit of
    // lhs/rhs0 over random symbols before this test was written; the closed
    // form (N/K)^{2n}/d reproduces them.
    struct Pin {
        int n;
        long long N;
        int64_t K;
        double c;
    };
    const std::vector<Pin> pins = {
        {1, 3, 1, 3.0},          {1, 3, 3, 1.0 / 3.0}, {1, 9, 1, 9.0}, {1, 9, 3, 1.0},
        {1, 9, 9, 1.0 / 9.0},    {2, 3, 1, 9.0},       {2, 3, 3, 1.0 / 9.0},
    };
    for (const auto& pin : pins) {
        auto p = qt::model(pin.n, pin.N);
        for (uint64_t seed = 0; seed < 3; ++seed) {
            const PhaseFunction g = random_phase_function(p, 900 + seed);
            const PoissonCheck chk = poisson_sum_check(g, pin.K);
            INFO("n=", pin.n, " N=", pin.N, " K=", pin.K);
            CHECK(chk.c_k == doctest::Approx(pin.c).epsilon(1e-14));
            CHECK(chk.defect < 1e-9);
            CHECK(qt::cabs(chk.lhs - chk.rhs) == chk.defect);
        }
        // deterministic witness too
        const PoissonCheck det = poisson_sum_check(gaussian_window(p), pin.K);
        CHECK(det.defect < 1e-10);
    }
    auto p = qt::model(1, 9);
    CHECK_THROWS_AS(poisson_sum_check(one_function(p), 2), std::invalid_argument);
    CHECK_THROWS_AS(poisson_sum_check(one_function(p), 0), std::invalid_argument);
}

// --- decomposition bounds ----------------------------------------------------------

TEST_CASE("decomposition bound: rank-one exactness and homogeneity") {
    auto p = qt::model(1, 3);
    const StateNorm s0 = [](const StateVector& v) { return state_feichtinger_norm(v); };

    for (uint64_t seed = 0; seed < 5; ++seed) {
        const StateVector phi = random_state(p, 30 + seed);
        const StateVector psi = random_state(p, 60 + seed);
        const double want = s0(phi) * s0(psi);
        CHECK(std::abs(svd_fin_bound(rank_one(phi, psi), s0) - want) <
              1e-9 * std::max(1.0, want));
    }

    const Operator a = random_operator(p, 5);
    CHECK(svd_fin_bound(op_scale(cplx(0.0, -3.0), a), s0) ==
          doctest::Approx(3.0 * svd_fin_bound(a, s0)).epsilon(1e-11));
    CHECK(svd_fin_bound(Operator(p), s0) == 0.0);
}

TEST_CASE("decomposition bound against randomized factorizations") {
    // Frozen from an offline sweep (80 operators x 400 random mixings of the
    // SVD factors): random factorizations evaluate to at least 0.9586 times
    // the SVD value, and occasionally *below* the SVD value, so the SVD
    // evaluation is a good surrogate but not the infimum.  We freeze the 0.9
    // floor and one undercut witness.
    auto p = qt::model(1, 3);
    const StateNorm s0 = [](const StateVector& v) { return state_feichtinger_norm(v); };

    const auto decomposition_value = [&](const Operator& a, uint64_t mix_seed, int trials,
                                         double* best, double* reconstruction_worst) {
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a.m, Eigen::ComputeThinU | Eigen::ComputeThinV);
        const Eigen::MatrixXcd us = svd.matrixU() * svd.singularValues().asDiagonal();
        const Eigen::MatrixXcd v = svd.matrixV();
        Rng rng(mix_seed);
        *best = std::numeric_limits<double>::infinity();
        *reconstruction_worst = 0.0;
        for (int trial = 0; trial < trials; ++trial) {
            Eigen::MatrixXcd m(p.d, p.d);
            for (int64_t i = 0; i < p.d; ++i)
                for (int64_t j = 0; j < p.d; ++j) m(i, j) = cplx(rng.normal(), rng.normal());
            if (std::abs(m.determinant()) < 1e-6) continue;
            const Eigen::MatrixXcd left = us * m;
            const Eigen::MatrixXcd right = v * m.inverse().adjoint();
            *reconstruction_worst = std::max(
                *reconstruction_worst,
                (left * right.adjoint() - a.m).cwiseAbs().maxCoeff());
            double value = 0.0;
            for (int64_t k = 0; k < p.d; ++k) {
                StateVector lk(p), rk(p);
                lk.v = left.col(k);
                rk.v = right.col(k);
                value += s0(lk) * s0(rk);
            }
            *best = std::min(*best, value);
        }
    };

    double undercuts = 0;
    for (uint64_t t = 0; t < 8; ++t) {
        const Operator a = random_operator(p, 100 + t);
        const double svd_value = svd_fin_bound(a, s0);
        double best = 0.0, recon = 0.0;
        decomposition_value(a, 7000 + t, 120, &best, &recon);
        CHECK(recon < 1e-12);                       // every factorization is genuine
        CHECK(best >= 0.9 * svd_value);             // frozen stability floor
        if (best < svd_value) undercuts += 1;
    }

    // pinned witness: operator seed 103 with mixing stream 7003 finds a
    // factorization strictly below the SVD evaluation
    const Operator w = random_operator(p, 103);
    double best = 0.0, recon = 0.0;
    decomposition_value(w, 7003, 400, &best, &recon);
    CHECK(recon < 1e-12);
    CHECK(best < svd_fin_bound(w, s0));
}

// --- equivalence scaffolding -----------------------------------------------------

TEST_CASE("operator family is deterministic, nonzero, and seed-sensitive only in its random part") {
    auto p = qt::model(1, 9);
    const auto fam1 = feichtinger_family(p, 30, 11);
    const auto fam2 = feichtinger_family(p, 30, 11);
    const auto fam3 = feichtinger_family(p, 30, 12);
    REQUIRE(fam1.size() == 30);
    for (size_t k = 0; k < fam1.size(); ++k) {
        CHECK(op_max_abs(fam1[k]) > 0.0);
        CHECK(op_max_abs_diff(fam1[k], fam2[k]) == 0.0);
    }
    // the displaced-projector members do not depend on the seed
    CHECK(op_max_abs_diff(fam1[0], fam3[0]) == 0.0);
    CHECK(op_max_abs_diff(fam1[1], fam3[1]) == 0.0);
    // the random members do
    CHECK(op_max_abs_diff(fam1[3], fam3[3]) > 1e-3);
}

TEST_CASE("equivalence report records the ratio interval") {
    auto p = qt::model(1, 9);
    const auto family = feichtinger_family(p, 10, 3);
    const auto s1 = [](const Operator& a) { return schatten_norm(a, 1.0); };
    const auto s2 = [](const Operator& a) { return schatten_norm(a, 2.0); };
    const auto rep = equivalence_report("schatten-1", s1, "schatten-2", s2, family, 3);
    CHECK(rep.family_size == 10);
    CHECK(rep.ratio_min >= 1.0 - 1e-12);  // s1 >= s2 always
    CHECK(rep.ratio_max <= 3.0 + 1e-12);  // s1 <= sqrt(d) s2 = 3 s2
    CHECK(rep.ratio_max >= rep.ratio_min);
    CHECK_THROWS_AS(equivalence_report("a", s1, "b", s2, {}, 0), std::invalid_argument);
}
