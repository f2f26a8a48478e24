#include "k3dyn/pointdyn.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace k3dyn {

namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::lcm;
using boost::multiprecision::numerator;

// Scale (A,B,C) to a primitive integer triple.
void clear_denominators(const BigRational& a, const BigRational& b,
                        const BigRational& c, BigInt& ia, BigInt& ib, BigInt& ic) {
    BigInt d = lcm(lcm(denominator(a), denominator(b)), denominator(c));
    ia = numerator(a) * (d / denominator(a));
    ib = numerator(b) * (d / denominator(b));
    ic = numerator(c) * (d / denominator(c));
}

}  // namespace

P1Point vieta_other_root(const BigRational& a, const BigRational& b,
                         const BigRational& c, const P1Point& t) {
    if (a == 0 && b == 0 && c == 0)
        throw DegenerateFiber("fiber quadratic vanishes identically");
    BigInt ia, ib, ic;
    clear_denominators(a, b, c, ia, ib, ic);
    BigInt value = ia * t.c0 * t.c0 + ib * t.c0 * t.c1 + ic * t.c1 * t.c1;
    if (value != 0) throw NotARoot("given point is not a root of the fiber");
    if (ia != 0) {
        if (t.c0 != 0) return P1Point(ic * t.c1, ia * t.c0);  // product of roots
        return P1Point(-ib * t.c1 - ia * t.c0, ia * t.c1);    // sum of roots
    }
    // A = 0: the root pair is {(1:0), (-C:B)} (a double root (1:0) if B = 0).
    if (ib == 0) return t;
    if (t.c1 == 0) return P1Point(-ic, ib);
    return P1Point(1, 0);
}

long SurfacePoint222::max_bits() const {
    long m = 0;
    for (const BigInt* c : {&x.c0, &x.c1, &y.c0, &y.c1, &z.c0, &z.c1})
        m = std::max(m, bit_length(*c));
    return m;
}

long SurfacePoint22::max_bits() const {
    long m = 0;
    for (const BigInt* c : {&x.c0, &x.c1, &x.c2, &y.c0, &y.c1, &y.c2})
        m = std::max(m, bit_length(*c));
    return m;
}

SurfacePoint222 involution_222(const Wehler222Surface& s, int axis,
                               const SurfacePoint222& p) {
    if (!s.contains(p.x, p.y, p.z))
        throw PointNotOnSurface("point does not satisfy the (2,2,2) form");
    const P1Point* coords[3] = {&p.x, &p.y, &p.z};
    if (axis < 1 || axis > 3) throw Error("axis must be 1, 2 or 3");
    int o1 = -1, o2 = -1;
    for (int i = 0; i < 3; ++i) {
        if (i == axis - 1) continue;
        (o1 < 0 ? o1 : o2) = i;
    }
    FiberQuadratic f = fiber_quadratic(s, axis, *coords[o1], *coords[o2]);
    if (f.degenerate())
        throw DegenerateFiber("fiber through the point is not generic");
    P1Point other = vieta_other_root(f.a, f.b, f.c, *coords[axis - 1]);
    SurfacePoint222 q = p;
    (axis == 1 ? q.x : axis == 2 ? q.y : q.z) = other;
    if (!s.contains(q.x, q.y, q.z))
        throw Error("involution image left the surface");
    return q;
}

SurfacePoint22 involution_22(const Wehler22Surface& s, Side side,
                             const SurfacePoint22& p) {
    if (!s.contains(p.x, p.y))
        throw PointNotOnSurface("point does not satisfy both defining forms");
    // σ_x fixes the x factor and swaps the fiber of p_x, and dually for σ_y.
    const Side moving = (side == Side::X) ? Side::Y : Side::X;
    const P2Point& fixed = (side == Side::X) ? p.x : p.y;
    const P2Point& mov = (side == Side::X) ? p.y : p.x;
    LineConic lc = fiber_line_conic(s, moving, fixed);

    BigInt l[3];
    clear_denominators(lc.line[0], lc.line[1], lc.line[2], l[0], l[1], l[2]);
    if (l[0] == 0 && l[1] == 0 && l[2] == 0)
        throw DegenerateFiber("restricted linear form vanishes identically");
    int piv = l[0] != 0 ? 0 : l[1] != 0 ? 1 : 2;
    int j1 = -1, j2 = -1;
    for (int i = 0; i < 3; ++i) {
        if (i == piv) continue;
        (j1 < 0 ? j1 : j2) = i;
    }
    // Two independent points spanning the line l·t = 0.
    BigInt u[3] = {0, 0, 0}, v[3] = {0, 0, 0};
    u[j1] = l[piv];
    u[piv] = -l[j1];
    v[j2] = l[piv];
    v[piv] = -l[j2];

    auto q = [&lc](const BigInt a[3], const BigInt b[3]) {
        BigRational acc = 0;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (lc.conic[i][j] != 0)
                    acc += lc.conic[i][j] * BigRational(a[i] * b[j]);
        return acc;
    };
    BigRational qa = q(u, u), qb = 2 * q(u, v), qc = q(v, v);
    if (qa == 0 && qb == 0 && qc == 0)
        throw DegenerateFiber("restricted conic vanishes on the line");

    // Locate the parameter (s:t) of the moving coordinate on the line.
    const BigInt m[3] = {mov.c0, mov.c1, mov.c2};
    BigInt sp, tp;
    bool found = false;
    for (int r1 = 0; r1 < 3 && !found; ++r1)
        for (int r2 = r1 + 1; r2 < 3 && !found; ++r2) {
            BigInt det = u[r1] * v[r2] - u[r2] * v[r1];
            if (det == 0) continue;
            sp = m[r1] * v[r2] - m[r2] * v[r1];
            tp = u[r1] * m[r2] - u[r2] * m[r1];
            found = true;
        }
    if (!found || (sp == 0 && tp == 0))
        throw DegenerateFiber("line parametrization degenerated");
    for (int i = 0; i < 3; ++i) {
        // s·u + t·v must be proportional to the moving coordinate.
        for (int j = i + 1; j < 3; ++j) {
            BigInt wi = sp * u[i] + tp * v[i];
            BigInt wj = sp * u[j] + tp * v[j];
            if (wi * m[j] != wj * m[i])
                throw Error("moving coordinate is not on the fiber line");
        }
    }
    P1Point param(sp, tp);
    P1Point other = vieta_other_root(qa, qb, qc, param);
    P2Point image(other.c0 * u[0] + other.c1 * v[0],
                  other.c0 * u[1] + other.c1 * v[1],
                  other.c0 * u[2] + other.c1 * v[2]);
    SurfacePoint22 out = p;
    (side == Side::X ? out.y : out.x) = image;
    if (!s.contains(out.x, out.y))
        throw Error("involution image left the surface");
    return out;
}

double weil_height(const P1Point& p) {
    using boost::multiprecision::abs;
    BigInt m = std::max(abs(p.c0), abs(p.c1));
    return log_abs(m);
}

double weil_height(const P2Point& p) {
    using boost::multiprecision::abs;
    BigInt m = std::max({abs(p.c0), abs(p.c1), abs(p.c2)});
    return log_abs(m);
}

double divisor_height(const DivisorClass& e, const SurfacePoint222& p) {
    if (e.coords.size() != 3)
        throw LatticeMismatch("(2,2,2) points pair with rank-3 classes");
    return e.coords[0].to_double() * weil_height(p.x) +
           e.coords[1].to_double() * weil_height(p.y) +
           e.coords[2].to_double() * weil_height(p.z);
}

double divisor_height(const DivisorClass& e, const SurfacePoint22& p) {
    if (e.coords.size() != 2)
        throw LatticeMismatch("P²×P² points pair with rank-2 classes");
    return e.coords[0].to_double() * weil_height(p.x) +
           e.coords[1].to_double() * weil_height(p.y);
}

namespace {

std::vector<double> coordinate_heights(const Wehler222Surface&,
                                       const SurfacePoint222& p) {
    return {weil_height(p.x), weil_height(p.y), weil_height(p.z)};
}

std::vector<double> coordinate_heights(const Wehler22Surface&,
                                       const SurfacePoint22& p) {
    return {weil_height(p.x), weil_height(p.y)};
}

template <class Surface, class PointT, class Apply>
OrbitRecord<PointT> orbit_impl(const Surface& s, const std::vector<int>& word,
                               const PointT& p, int steps, long bit_budget,
                               Apply apply_involution) {
    if (word.empty()) throw Error("orbit word must be non-empty");
    if (steps < 0) throw Error("steps must be >= 0");
    OrbitRecord<PointT> rec;
    rec.word = word;
    auto record = [&rec, &s](const PointT& pt) {
        rec.points.push_back(pt);
        rec.heights.push_back(coordinate_heights(s, pt));
        rec.bit_sizes.push_back(pt.max_bits());
    };
    record(p);
    PointT cur = p;
    for (int n = 0; n < steps; ++n) {
        try {
            for (auto it = word.rbegin(); it != word.rend(); ++it)
                cur = apply_involution(s, *it, cur);
        } catch (const DegenerateFiber& e) {
            rec.truncated = true;
            rec.error = std::string("DegenerateFiber: ") + e.what();
            return rec;
        }
        if (cur.max_bits() > bit_budget) {
            rec.truncated = true;
            rec.error = "BudgetExceeded";
            return rec;
        }
        record(cur);
    }
    return rec;
}

template <class Surface, class PointT, class Apply>
HeightEstimate canonical_height_impl(const Surface& s, const LatticeModel& model,
                                     const PolarizedSystem& sys,
                                     const std::vector<int>& word,
                                     const PointT& p, int steps, long bit_budget,
                                     Apply apply_involution) {
    if (steps < 1) throw Error("canonical height needs steps >= 1");
    PullbackMap composite = word_pullback(model, word);
    if (!(composite.matrix == sys.pullback.matrix))
        throw WordMismatch("word pullback does not match the polarized system");
    sys.validate();
    auto rec = orbit_impl(s, word, p, steps, bit_budget, apply_involution);
    HeightEstimate est;
    est.alpha = sys.alpha;
    est.truncated = rec.truncated;
    double alpha = sys.alpha.to_double();
    double scale = 1.0;
    for (std::size_t k = 0; k < rec.points.size(); ++k) {
        est.per_step_estimates.push_back(
            scale * divisor_height(sys.polarizing_class, rec.points[k]));
        scale /= alpha;
    }
    est.steps = static_cast<int>(rec.points.size()) - 1;
    est.value = est.per_step_estimates.back();
    return est;
}

}  // namespace

OrbitRecord<SurfacePoint222> orbit(const Wehler222Surface& s,
                                   const std::vector<int>& word,
                                   const SurfacePoint222& p, int steps,
                                   long bit_budget) {
    return orbit_impl(s, word, p, steps, bit_budget,
                      [](const Wehler222Surface& sf, int i,
                         const SurfacePoint222& pt) {
                          return involution_222(sf, i, pt);
                      });
}

OrbitRecord<SurfacePoint22> orbit(const Wehler22Surface& s,
                                  const std::vector<int>& word,
                                  const SurfacePoint22& p, int steps,
                                  long bit_budget) {
    return orbit_impl(s, word, p, steps, bit_budget,
                      [](const Wehler22Surface& sf, int i,
                         const SurfacePoint22& pt) {
                          if (i != 1 && i != 2)
                              throw Error("involution id must be 1 (x) or 2 (y)");
                          return involution_22(sf, i == 1 ? Side::X : Side::Y, pt);
                      });
}

HeightEstimate canonical_height(const Wehler222Surface& s,
                                const LatticeModel& model,
                                const PolarizedSystem& sys,
                                const std::vector<int>& word,
                                const SurfacePoint222& p, int steps,
                                long bit_budget) {
    return canonical_height_impl(
        s, model, sys, word, p, steps, bit_budget,
        [](const Wehler222Surface& sf, int i, const SurfacePoint222& pt) {
            return involution_222(sf, i, pt);
        });
}

HeightEstimate canonical_height(const Wehler22Surface& s,
                                const LatticeModel& model,
                                const PolarizedSystem& sys,
                                const std::vector<int>& word,
                                const SurfacePoint22& p, int steps,
                                long bit_budget) {
    return canonical_height_impl(
        s, model, sys, word, p, steps, bit_budget,
        [](const Wehler22Surface& sf, int i, const SurfacePoint22& pt) {
            if (i != 1 && i != 2)
                throw Error("involution id must be 1 (x) or 2 (y)");
            return involution_22(sf, i == 1 ? Side::X : Side::Y, pt);
        });
}

}  // namespace k3dyn
