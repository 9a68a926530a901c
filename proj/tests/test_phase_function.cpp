#include <stdexcept>

#include "test_support.hpp"

using namespace qhal;

namespace {

// Independent brute-force convolution: literal double loop with its own
// modular arithmetic, used as the oracle for the production kernel.
PhaseFunction oracle_convolve(const PhaseFunction& f, const PhaseFunction& g) {
    const auto& p = f.p;
    PhaseFunction out(p);
    for (int64_t wx = 0; wx < p.d; ++wx)
        for (int64_t wxi = 0; wxi < p.d; ++wxi) {
            cplx acc(0.0, 0.0);
            for (int64_t zx = 0; zx < p.d; ++zx)
                for (int64_t zxi = 0; zxi < p.d; ++zxi)
                    acc += f.at(zx, zxi) * g.at(p.pos_sub(wx, zx), p.pos_sub(wxi, zxi));
            out.at(wx, wxi) = acc / static_cast<double>(p.d);
        }
    return out;
}

}  // namespace

TEST_CASE("lp_norm pinned values and edge cases") {
    auto p = qt::model(1, 9);
    const PhaseFunction one = one_function(p);
    CHECK(lp_norm(one, 1.0) == doctest::Approx(9.0).epsilon(1e-14));
    CHECK(lp_norm(one, kPInf) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(lp_norm(one, 2.0) == doctest::Approx(3.0).epsilon(1e-14));

    const PhaseFunction u = unit_function(p);  // d * delta_0
    CHECK(lp_norm(u, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(lp_norm(u, kPInf) == doctest::Approx(9.0).epsilon(1e-14));

    CHECK_THROWS_AS(lp_norm(one, 0.5), std::invalid_argument);
}

TEST_CASE("mismatched models are rejected") {
    auto p = qt::model(1, 9);
    auto q = qt::model(1, 5);
    CHECK_THROWS_AS(convolve_functions(one_function(p), one_function(q)), std::invalid_argument);
    CHECK_THROWS_AS(fn_add(one_function(p), one_function(q)), std::invalid_argument);
}

TEST_CASE("shift is exact index arithmetic") {
    auto p = qt::model(1, 9);
    const PhaseFunction f = random_phase_function(p, 17);
    const int64_t z = p.point(4, 7);
    CHECK(fn_max_abs_diff(shift_function(f, 0), f) == 0.0);
    CHECK(fn_max_abs_diff(shift_function(shift_function(f, z), p.point_neg(z)), f) == 0.0);
    // (alpha_z f)(w) = f(w - z): spot-check one entry literally.
    const PhaseFunction sf = shift_function(f, z);
    CHECK(sf.at(5, 2) == f.at(p.pos_sub(5, 4), p.pos_sub(2, 7)));
}

TEST_CASE("convolution of point masses: two-point brute force") {
    auto p = qt::model(1, 9);
    const int64_t a = p.point(2, 5), b = p.point(6, 6);
    PhaseFunction da(p), db(p);
    da[a] = 1.0;
    db[b] = 1.0;

    const PhaseFunction got = convolve_functions(da, db);
    const PhaseFunction want = oracle_convolve(da, db);
    CHECK(fn_max_abs_diff(got, want) < 1e-15);

    // and the closed form (1/d) delta_{a+b}
    for (int64_t w = 0; w < p.points; ++w) {
        const cplx expect = (w == p.point_add(a, b)) ? cplx(1.0 / 9.0, 0.0) : cplx(0.0, 0.0);
        CHECK(qt::cabs(got[w] - expect) < 1e-15);
    }
}

TEST_CASE("convolution kernel vs brute-force oracle on random data") {
    for (long long N : {3LL, 5LL, 9LL}) {
        auto p = qt::model(1, N);
        const PhaseFunction f = random_phase_function(p, 100 + N);
        const PhaseFunction g = random_phase_function(p, 200 + N);
        CHECK(fn_max_abs_diff(convolve_functions(f, g), oracle_convolve(f, g)) < 1e-12);
    }
    // one multi-degree model
    auto p2 = qt::model(2, 3);
    const PhaseFunction f = random_phase_function(p2, 300);
    const PhaseFunction g = random_phase_function(p2, 301);
    CHECK(fn_max_abs_diff(convolve_functions(f, g), oracle_convolve(f, g)) < 1e-12);
}

TEST_CASE("convolution unit and commutativity") {
    auto p = qt::model(1, 9);
    const PhaseFunction f = random_phase_function(p, 7);
    CHECK(fn_max_abs_diff(convolve_functions(f, unit_function(p)), f) < 1e-13);
    CHECK(fn_max_abs_diff(convolve_functions(unit_function(p), f), f) < 1e-13);
    const PhaseFunction g = random_phase_function(p, 8);
    CHECK(fn_max_abs_diff(convolve_functions(f, g), convolve_functions(g, f)) < 1e-13);
}

TEST_CASE("transform of a point mass: direct character evaluation") {
    auto p = qt::model(1, 9);
    const int64_t z0 = p.point(1, 2);
    PhaseFunction f(p);
    f[z0] = 1.0;
    const PhaseFunction got = symplectic_fourier(f);
    for (int64_t w = 0; w < p.points; ++w) {
        // (F f)(w) = (1/d) exp(-2 pi i sigma(w, z0)/N), evaluated independently
        const cplx want = qt::phase(-p.sigma(w, z0), p.N) / 9.0;
        CHECK(qt::cabs(got[w] - want) < 1e-15);
    }
}

TEST_CASE("transform fixed points: unit and constant") {
    auto p = qt::model(1, 9);
    CHECK(fn_max_abs_diff(symplectic_fourier(unit_function(p)), one_function(p)) < 1e-13);
    CHECK(fn_max_abs_diff(symplectic_fourier(one_function(p)), unit_function(p)) < 1e-12);
}

TEST_CASE("transform is an involution and a Plancherel isometry") {
    for (long long N : {3LL, 5LL, 9LL, 27LL}) {
        auto p = qt::model(1, N);
        for (uint64_t seed = 0; seed < 5; ++seed) {
            const PhaseFunction f = random_phase_function(p, 1000 * N + seed);
            const PhaseFunction ff = symplectic_fourier(symplectic_fourier(f));
            CHECK(fn_max_abs_diff(ff, f) < 1e-11);
            CHECK(lp_norm(symplectic_fourier(f), 2.0) ==
                  doctest::Approx(lp_norm(f, 2.0)).epsilon(1e-12));
        }
    }
}

TEST_CASE("convolution theorem for the function calculus") {
    auto p = qt::model(1, 9);
    for (uint64_t seed = 0; seed < 10; ++seed) {
        const PhaseFunction f = random_phase_function(p, 40 + seed);
        const PhaseFunction g = random_phase_function(p, 90 + seed);
        const PhaseFunction lhs = symplectic_fourier(convolve_functions(f, g));
        const PhaseFunction rhs = fn_mul(symplectic_fourier(f), symplectic_fourier(g));
        CHECK(fn_max_abs_diff(lhs, rhs) < 1e-11);
    }
}

TEST_CASE("modulation intertwines with shift under the transform") {
    auto p = qt::model(1, 9);
    const PhaseFunction f = random_phase_function(p, 55);
    for (int64_t z : {p.point(1, 0), p.point(0, 1), p.point(3, 8), p.point(7, 7)}) {
        CHECK(fn_max_abs_diff(symplectic_fourier(modulate_function(f, z)),
                              shift_function(symplectic_fourier(f), z)) < 1e-12);
        CHECK(fn_max_abs_diff(symplectic_fourier(shift_function(f, z)),
                              modulate_function(symplectic_fourier(f), z)) < 1e-12);
    }
    // |gamma_z f| = |f| pointwise
    const PhaseFunction mf = modulate_function(f, p.point(2, 3));
    for (int64_t w = 0; w < p.points; ++w)
        CHECK(qt::cabs(mf[w]) == doctest::Approx(qt::cabs(f[w])).epsilon(1e-14));
}

TEST_CASE("involution behaves like a star operation") {
    auto p = qt::model(1, 9);
    const PhaseFunction f = random_phase_function(p, 61);
    const PhaseFunction g = random_phase_function(p, 62);

    CHECK(fn_max_abs_diff(involution_function(involution_function(f)), f) == 0.0);
    CHECK(fn_max_abs_diff(symplectic_fourier(involution_function(f)),
                          fn_conj(symplectic_fourier(f))) < 1e-12);
    CHECK(fn_max_abs_diff(involution_function(convolve_functions(f, g)),
                          convolve_functions(involution_function(f), involution_function(g))) <
          1e-11);
    CHECK(lp_norm(involution_function(f), 1.0) == doctest::Approx(lp_norm(f, 1.0)).epsilon(1e-13));

    // reflection is the involution without the conjugation
    const PhaseFunction r = reflect_function(f);
    for (int64_t w = 0; w < p.points; ++w) CHECK(r[w] == f[p.point_neg(w)]);
}

TEST_CASE("Young inequality for convolution") {
    auto p = qt::model(1, 9);
    for (uint64_t seed = 0; seed < 20; ++seed) {
        const PhaseFunction f = random_phase_function(p, 70 + seed);
        const PhaseFunction g = random_phase_function(p, 170 + seed);
        CHECK(lp_norm(convolve_functions(f, g), 1.0) <=
              lp_norm(f, 1.0) * lp_norm(g, 1.0) * (1.0 + 1e-12));
        CHECK(lp_norm(convolve_functions(f, g), 2.0) <=
              lp_norm(f, 1.0) * lp_norm(g, 2.0) * (1.0 + 1e-12));
    }
}

TEST_CASE("convolution associativity") {
    auto p = qt::model(1, 5);
    const PhaseFunction f = random_phase_function(p, 81);
    const PhaseFunction g = random_phase_function(p, 82);
    const PhaseFunction h = random_phase_function(p, 83);
    CHECK(fn_max_abs_diff(convolve_functions(convolve_functions(f, g), h),
                          convolve_functions(f, convolve_functions(g, h))) < 1e-11);
}
