#include "qhal/model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qhal {

ModelParams ModelParams::make(int32_t n, int64_t N) {
    if (n < 1) throw std::invalid_argument("model: n must be >= 1, got " + std::to_string(n));
    if (N <= 0) throw std::invalid_argument("model: modulus must be positive, got " + std::to_string(N));
    if (N % 2 == 0) throw std::invalid_argument("model: modulus must be odd, got " + std::to_string(N));
    if (N < 3) throw std::invalid_argument("model: modulus must be >= 3, got " + std::to_string(N));

    // d^2 = N^{2n} must stay clear of int64 overflow; keep a safety margin so
    // downstream index arithmetic (products of two indices never occur, but
    // sums do) cannot wrap.
    constexpr int64_t kIndexCap = int64_t(1) << 62;
    long double dd = 1.0L;
    for (int32_t i = 0; i < 2 * n; ++i) {
        dd *= static_cast<long double>(N);
        if (dd >= static_cast<long double>(kIndexCap))
            throw std::invalid_argument("model: N^(2n) overflows the 64-bit index type");
    }

    ModelParams p;
    p.n = n;
    p.N = N;
    p.d = 1;
    for (int32_t i = 0; i < n; ++i) p.d *= N;
    p.points = p.d * p.d;
    p.two_inv = (N + 1) / 2;
    return p;
}

int64_t ModelParams::pos_digit(int64_t s, int32_t i) const {
    for (int32_t k = n - 1; k > i; --k) s /= N;
    return s % N;
}

int64_t ModelParams::pos_add(int64_t s, int64_t t) const {
    if (n == 1) { int64_t r = s + t; return r >= N ? r - N : r; }
    int64_t out = 0, place = 1;
    for (int32_t i = 0; i < n; ++i) {
        int64_t a = s % N, b = t % N, c = a + b;
        if (c >= N) c -= N;
        out += c * place;
        place *= N;
        s /= N;
        t /= N;
    }
    return out;
}

int64_t ModelParams::pos_sub(int64_t s, int64_t t) const {
    if (n == 1) { int64_t r = s - t; return r < 0 ? r + N : r; }
    int64_t out = 0, place = 1;
    for (int32_t i = 0; i < n; ++i) {
        int64_t a = s % N, b = t % N, c = a - b;
        if (c < 0) c += N;
        out += c * place;
        place *= N;
        s /= N;
        t /= N;
    }
    return out;
}

int64_t ModelParams::pos_neg(int64_t s) const {
    if (n == 1) return s == 0 ? 0 : N - s;
    int64_t out = 0, place = 1;
    for (int32_t i = 0; i < n; ++i) {
        int64_t a = s % N;
        out += (a == 0 ? 0 : N - a) * place;
        place *= N;
        s /= N;
    }
    return out;
}

int64_t ModelParams::pos_dot(int64_t s, int64_t t) const {
    if (n == 1) return (s * t) % N;
    int64_t acc = 0;
    for (int32_t i = 0; i < n; ++i) {
        acc += (s % N) * (t % N) % N;
        s /= N;
        t /= N;
    }
    return acc % N;
}

int64_t ModelParams::pos_scale(int64_t c, int64_t s) const {
    c %= N;
    if (c < 0) c += N;
    if (n == 1) return (c * s) % N;
    int64_t out = 0, place = 1;
    for (int32_t i = 0; i < n; ++i) {
        out += (c * (s % N)) % N * place;
        place *= N;
        s /= N;
    }
    return out;
}

int64_t ModelParams::point_add(int64_t z, int64_t w) const {
    return pos_add(point_x(z), point_x(w)) * d + pos_add(point_xi(z), point_xi(w));
}

int64_t ModelParams::point_sub(int64_t z, int64_t w) const {
    return pos_sub(point_x(z), point_x(w)) * d + pos_sub(point_xi(z), point_xi(w));
}

int64_t ModelParams::point_neg(int64_t z) const {
    return pos_neg(point_x(z)) * d + pos_neg(point_xi(z));
}

int64_t ModelParams::point_scale(int64_t c, int64_t z) const {
    return pos_scale(c, point_x(z)) * d + pos_scale(c, point_xi(z));
}

int64_t ModelParams::sigma(int64_t z, int64_t w) const {
    // sigma((x,xi),(x',xi')) = xi.x' - x.xi'  mod N
    int64_t r = pos_dot(point_xi(z), point_x(w)) - pos_dot(point_x(z), point_xi(w));
    r %= N;
    return r < 0 ? r + N : r;
}

int64_t flatten_point(const ModelParams& p, const PhasePoint& z) {
    if (static_cast<int32_t>(z.x.size()) != p.n || static_cast<int32_t>(z.xi.size()) != p.n)
        throw std::invalid_argument("phase point: coordinate count does not match n");
    int64_t xf = 0, xif = 0;
    for (int32_t i = 0; i < p.n; ++i) {
        int64_t a = z.x[i] % p.N, b = z.xi[i] % p.N;
        if (a < 0) a += p.N;
        if (b < 0) b += p.N;
        xf = xf * p.N + a;
        xif = xif * p.N + b;
    }
    return xf * p.d + xif;
}

PhasePoint unflatten_point(const ModelParams& p, int64_t z) {
    PhasePoint out;
    out.x.resize(p.n);
    out.xi.resize(p.n);
    int64_t x = p.point_x(z), xi = p.point_xi(z);
    for (int32_t i = p.n - 1; i >= 0; --i) {
        out.x[i] = x % p.N;
        out.xi[i] = xi % p.N;
        x /= p.N;
        xi /= p.N;
    }
    return out;
}

std::vector<cplx> unit_roots(const ModelParams& p) {
    std::vector<cplx> roots(static_cast<size_t>(p.N));
    const double step = 2.0 * std::numbers::pi / static_cast<double>(p.N);
    for (int64_t r = 0; r < p.N; ++r)
        roots[static_cast<size_t>(r)] = std::polar(1.0, step * static_cast<double>(r));
    return roots;
}

void require_same_model(const ModelParams& a, const ModelParams& b, const char* where) {
    if (a != b)
        throw std::invalid_argument(std::string(where) +
                                    ": arguments live on different models (n or N mismatch)");
}

}  // namespace qhal
