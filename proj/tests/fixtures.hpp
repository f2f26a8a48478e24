#pragma once

// Shared test fixtures: seeded random surfaces passing through chosen
// rational points, the periodic-point surface and a degenerate-fiber
// surface.

#include <random>

#include "k3dyn/pointdyn.hpp"

namespace k3fix {

using namespace k3dyn;
using Rng = std::mt19937_64;

inline BigRational rand_coeff(Rng& rng) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 3);
    return BigRational(num(rng), den(rng));
}

inline P1Point rand_p1(Rng& rng) {
    std::uniform_int_distribution<int> d(-5, 5);
    int a = 0, b = 0;
    while (a == 0 && b == 0) { a = d(rng); b = d(rng); }
    return P1Point(a, b);
}

inline P2Point rand_p2(Rng& rng) {
    std::uniform_int_distribution<int> d(-5, 5);
    int a = 0, b = 0, c = 0;
    while (a == 0 && b == 0 && c == 0) { a = d(rng); b = d(rng); c = d(rng); }
    return P2Point(a, b, c);
}

// Random (2,2,2) surface containing p: all 27 coefficients random, then one
// whose monomial is nonzero at p absorbs the rest.
inline Wehler222Surface seeded_222(Rng& rng, const SurfacePoint222& p) {
    Wehler222Surface s;
    for (int i1 = 0; i1 <= 2; ++i1)
        for (int i2 = 0; i2 <= 2; ++i2)
            for (int i3 = 0; i3 <= 2; ++i3) s.set_c(i1, i2, i3, rand_coeff(rng));
    auto pick = [](const P1Point& q) { return q.c0 != 0 ? 2 : 0; };
    int e1 = pick(p.x), e2 = pick(p.y), e3 = pick(p.z);
    s.set_c(e1, e2, e3, 0);
    BigRational rest = s.eval(p.x, p.y, p.z);
    auto monopow = [](const BigInt& b, int e) {
        BigInt r = 1;
        for (int i = 0; i < e; ++i) r *= b;
        return r;
    };
    BigInt mono = monopow(p.x.c0, e1) * monopow(p.x.c1, 2 - e1) *
                  monopow(p.y.c0, e2) * monopow(p.y.c1, 2 - e2) *
                  monopow(p.z.c0, e3) * monopow(p.z.c1, 2 - e3);
    s.set_c(e1, e2, e3, -rest / BigRational(mono));
    if (!s.contains(p.x, p.y, p.z)) throw Error("seeded_222 construction failed");
    s.validate();
    return s;
}

// Random (1,1)+(2,2) surface containing p: one a- and one b-coefficient
// solved so both forms vanish at p.
inline Wehler22Surface seeded_22(Rng& rng, const SurfacePoint22& p) {
    Wehler22Surface s;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s.a[i][j] = rand_coeff(rng);
    for (int i = 0; i < 3; ++i)
        for (int k = i; k < 3; ++k)
            for (int j = 0; j < 3; ++j)
                for (int l = j; l < 3; ++l) s.set_b(i, j, k, l, rand_coeff(rng));
    const BigInt xs[3] = {p.x.c0, p.x.c1, p.x.c2};
    const BigInt ys[3] = {p.y.c0, p.y.c1, p.y.c2};
    int xi = xs[0] != 0 ? 0 : xs[1] != 0 ? 1 : 2;
    int yj = ys[0] != 0 ? 0 : ys[1] != 0 ? 1 : 2;
    s.a[xi][yj] = 0;
    s.a[xi][yj] = -s.eval_linear(p.x, p.y) / BigRational(xs[xi] * ys[yj]);
    s.set_b(xi, yj, xi, yj, 0);
    BigRational rest = s.eval_quadratic(p.x, p.y);
    s.set_b(xi, yj, xi, yj,
            -rest / BigRational(xs[xi] * xs[xi] * ys[yj] * ys[yj]));
    if (!s.contains(p.x, p.y)) throw Error("seeded_22 construction failed");
    s.validate();
    return s;
}

// (x0-2x1)²y0²z0² + x0²(y0-2y1)²z0² + x0²y0²(z0-2z1)²: the point
// ((2:1),(2:1),(2:1)) is a double root of every fiber quadratic, hence is
// fixed by all three involutions.
inline Wehler222Surface periodic_fixture_222() {
    Wehler222Surface s;
    s.set_c(2, 2, 2, 3);
    s.set_c(1, 2, 2, -4);
    s.set_c(0, 2, 2, 4);
    s.set_c(2, 1, 2, -4);
    s.set_c(2, 0, 2, 4);
    s.set_c(2, 2, 1, -4);
    s.set_c(2, 2, 0, 4);
    return s;
}

inline SurfacePoint222 periodic_point_222() {
    return {P1Point(2, 1), P1Point(2, 1), P1Point(2, 1)};
}

// x0x1(y0²z0² - y1²z1²): the x-fiber through ((1:0),(1:1),(1:1)) vanishes
// identically, so σ1 hits a degenerate fiber there.
inline Wehler222Surface degenerate_fixture_222() {
    Wehler222Surface s;
    s.set_c(1, 2, 2, 1);
    s.set_c(1, 0, 0, -1);
    return s;
}

inline SurfacePoint222 degenerate_point_222() {
    return {P1Point(1, 0), P1Point(1, 1), P1Point(1, 1)};
}

}  // namespace k3fix
