#include "test_support.hpp"

using namespace qhal;

TEST_CASE("quantization units: flat symbol and point mass") {
    for (long long N : {3LL, 5LL, 9LL}) {
        auto p = qt::model(1, N);
        CHECK(op_max_abs_diff(weyl_quantize(one_function(p)), identity_operator(p)) < 1e-12);
        CHECK(op_max_abs_diff(weyl_quantize(unit_function(p)), parity_operator(p)) < 1e-12);
    }
    auto p2 = qt::model(2, 3);
    CHECK(op_max_abs_diff(weyl_quantize(one_function(p2)), identity_operator(p2)) < 1e-12);
}

TEST_CASE("quantize and symbol are mutually inverse") {
    auto p = qt::model(1, 9);
    for (int seed : {7, 8, 9}) {
        const PhaseFunction f = random_phase_function(p, seed);
        CHECK(fn_max_abs_diff(weyl_symbol(weyl_quantize(f)), f) < 1e-11);
        const Operator a = random_operator(p, seed + 100);
        CHECK(op_max_abs_diff(weyl_quantize(weyl_symbol(a)), a) < 1e-11);
    }
}

TEST_CASE("transform of a quantized symbol reflects the plane transform") {
    auto p = qt::model(1, 9);
    const PhaseFunction f = random_phase_function(p, 17);
    const PhaseFunction lhs = fourier_weyl(weyl_quantize(f));
    const PhaseFunction rhs = reflect_function(symplectic_fourier(f));
    CHECK(fn_max_abs_diff(lhs, rhs) < 1e-11);
}

TEST_CASE("shift equivariance of the quantization map") {
    auto p = qt::model(1, 9);
    const PhaseFunction f = random_phase_function(p, 27);
    for (int64_t z : {p.point(1, 0), p.point(0, 1), p.point(3, 8)}) {
        const Operator lhs = shift_operator(weyl_quantize(f), z);
        const Operator rhs = weyl_quantize(shift_function(f, p.point_neg(z)));
        CHECK(op_max_abs_diff(lhs, rhs) < 1e-11);
    }
}

TEST_CASE("convolution formulas through the quantization map") {
    auto p = qt::model(1, 9);
    for (int seed : {37, 38, 39}) {
        const PhaseFunction f = random_phase_function(p, seed);
        const PhaseFunction g = random_phase_function(p, seed + 50);

        // f * A_g = A_{reflect(f) * g}
        const Operator lhs1 = conv_fn_op(f, weyl_quantize(g));
        const Operator rhs1 = weyl_quantize(convolve_functions(reflect_function(f), g));
        CHECK(op_max_abs_diff(lhs1, rhs1) < 1e-11);

        // A_f * A_g = reflect(f * g)
        const PhaseFunction lhs2 = conv_op_op(weyl_quantize(f), weyl_quantize(g));
        const PhaseFunction rhs2 = reflect_function(convolve_functions(f, g));
        CHECK(fn_max_abs_diff(lhs2, rhs2) < 1e-11);
    }
}

TEST_CASE("quantization respects the function involution") {
    auto p = qt::model(1, 9);
    const PhaseFunction f = random_phase_function(p, 47);
    const Operator lhs = weyl_quantize(involution_function(f));
    const Operator rhs = involution_operator(weyl_quantize(f));
    CHECK(op_max_abs_diff(lhs, rhs) < 1e-11);
}

namespace {

double conjugate_exponent(double q) {
    if (q == 1.0) return qhal::kPInf;
    if (q == qhal::kPInf) return 1.0;
    return q / (q - 1.0);
}

}  // namespace

TEST_CASE("Hausdorff-Young: inverse transform is bounded L^p -> T^q") {
    auto p = qt::model(1, 9);
    for (double lp : {1.0, 4.0 / 3.0, 1.5, 2.0}) {
        const double tq = conjugate_exponent(lp);
        for (int seed = 0; seed < 25; ++seed) {
            const PhaseFunction f = random_phase_function(p, 1000 + seed);
            const double lhs = schatten_norm(inv_fourier_weyl(f), tq);
            const double rhs = lp_norm(f, lp);
            CHECK(lhs <= rhs * (1.0 + 1e-10));
        }
        // equality witness: the convolution unit saturates the bound
        const double lhs = schatten_norm(inv_fourier_weyl(unit_function(p)), tq);
        const double rhs = lp_norm(unit_function(p), lp);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
    // p = 2 is an equality for every input (Plancherel)
    const PhaseFunction f = random_phase_function(p, 2024);
    CHECK(schatten_norm(inv_fourier_weyl(f), 2.0) == doctest::Approx(lp_norm(f, 2.0)).epsilon(1e-12));
}
