// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <random>
#include <string>

#include "fixtures.hpp"
#include "k3dyn/pointdyn.hpp"
#include "k3dyn/verify.hpp"

using namespace k3dyn;
using k3fix::Rng;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& what, bool pass,
            const std::string& note = "") {
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << criterion
              << ": " << what;
    if (!note.empty()) std::cout << " — " << note;
    std::cout << std::endl;
    if (!pass) ++g_failures;
}

template <typename Fn>
void guarded(int criterion, const std::string& what, Fn&& fn) {
    try {
        fn();
    } catch (const std::exception& e) {
        report(criterion, what, false, std::string("exception: ") + e.what());
    }
}

// 1. Six-word table: eigenvalues {9+4√5, 9-4√5, -1}, eigenvectors
// proportional to the tabulated classes.
void criterion1() {
    auto data = sc_data();
    QuadExt b3 = data.beta.pow(3), b3i = data.beta.pow(-3);
    bool ok = b3 == QuadExt(BigRational(9), BigRational(4), 5);
    for (const auto& row : data.table) {
        auto pairs = spectrum(data.model.composites.at(word_key(row.word)),
                              data.model.lattice);
        ok = ok && pairs.size() == 3;
        DivisorClass neg = data.model.lattice->from_ints(row.neg_vec);
        for (const auto& pr : pairs) {
            if (pr.value == b3)
                ok = ok && proportional(pr.vec, data.e[row.plus_idx]);
            else if (pr.value == b3i)
                ok = ok && proportional(pr.vec, data.e[row.minus_idx]);
            else if (pr.value == QuadExt(-1))
                ok = ok && proportional(pr.vec, neg);
            else
                ok = false;
        }
    }
    report(1, "six-word eigen-table reproduced exactly", ok);
}

// 2. Rank-2 composites: (7+4√3, ∝[β,-1]) / (7+4√3, ∝[-1,β]); witness
// (1+√3, 1+√3).
void criterion2() {
    auto data = sab_data();
    QuadExt b2 = data.beta.pow(2);
    bool ok = true;
    auto fwd = spectrum(data.model.composites.at("2,1"), data.model.lattice);
    auto bwd = spectrum(data.model.composites.at("1,2"), data.model.lattice);
    bool fwd_ok = false, bwd_ok = false;
    for (const auto& pr : fwd)
        if (pr.value == b2) fwd_ok = proportional(pr.vec, data.e_plus);
    for (const auto& pr : bwd)
        if (pr.value == b2) bwd_ok = proportional(pr.vec, data.e_minus);
    ok = ok && fwd_ok && bwd_ok;
    auto w = positive_span_certificate(
        data.e_plus + data.e_minus,
        {data.model.lattice->basis_class(1), data.model.lattice->basis_class(2)});
    QuadExt expect = QuadExt(1) + QuadExt::sqrt_of(3);
    ok = ok && w && *w == std::vector<QuadExt>{expect, expect};
    report(2, "rank-2 eigenpairs and ample witness (1+√3, 1+√3)", ok);
}

// 3. All eight boundary classes have exact self-intersection zero.
void criterion3() {
    auto ab = sab_data();
    auto sc = sc_data();
    bool ok = intersect(ab.e_plus, ab.e_plus).is_zero() &&
              intersect(ab.e_minus, ab.e_minus).is_zero();
    for (const auto& e : sc.e) ok = ok && intersect(e, e).is_zero();
    report(3, "self-intersections (E⁺)², (E⁻)², (E₁)²..(E₆)² all zero", ok);
}

// 4. Strict positivity against every basis class; spot values 2√3 and
// -4+2√5.
void criterion4() {
    auto ab = sab_data();
    auto sc = sc_data();
    bool ok = true;
    for (int i = 1; i <= 2; ++i) {
        ok = ok && qe_sign(intersect(ab.e_plus, ab.model.lattice->basis_class(i))) == 1;
        ok = ok && qe_sign(intersect(ab.e_minus, ab.model.lattice->basis_class(i))) == 1;
    }
    for (const auto& e : sc.e)
        for (int i = 1; i <= 3; ++i)
            ok = ok && qe_sign(intersect(e, sc.model.lattice->basis_class(i))) == 1;
    ok = ok && intersect(ab.e_plus, ab.model.lattice->basis_class(1)) ==
                   QuadExt(BigRational(0), BigRational(2), 3);
    ok = ok && intersect(sc.e[0], sc.model.lattice->basis_class(1)) ==
                   QuadExt(BigRational(-4), BigRational(2), 5);
    report(4, "positivity on all basis classes with spot values 2√3 and -4+2√5",
           ok);
}

// 5. αⁿ(E,D)+α⁻ⁿ(E',D) equals the direct matrix-power pullback for n=0..6
// with every term positive (the sequence function verifies both internally).
void criterion5() {
    auto ab = sab_data();
    auto sc = sc_data();
    bool ok = true;
    auto cert_ab = hyperbolic_certificate(ab.sys_plus);
    for (int i = 1; i <= 2; ++i)
        ok = ok && pullback_intersection_sequence(
                       cert_ab, ab.model.lattice->basis_class(i), 6).size() == 7;
    PolarizedSystem tau2{sc.model.lattice, sc.model.composites.at("1,3,2"),
                         sc.beta.pow(3), sc.e[0]};
    auto cert_sc = hyperbolic_certificate(tau2);
    for (int i = 1; i <= 3; ++i)
        ok = ok && pullback_intersection_sequence(
                       cert_sc, sc.model.lattice->basis_class(i), 6).size() == 7;
    report(5, "growth sequences match direct pullback and stay positive, n=0..6",
           ok);
}

// 6. The verify command reports the Dirichlet failures with evidence and
// exits 0; the library verdicts back it up.
void criterion6() {
    bool lib_ok = true;
    auto ab = sab_data();
    for (const auto* sys : {&ab.sys_plus, &ab.sys_minus}) {
        Verdict v = dirichlet_verdict(hyperbolic_certificate(*sys));
        lib_ok = lib_ok && v.holds && !v.evidence.empty();
    }
    auto sc = sc_data();
    for (const auto& row : {std::pair<const char*, int>{"1,3,2", 0},
                            {"3,2,1", 2},
                            {"2,1,3", 4}}) {
        PolarizedSystem sys{sc.model.lattice, sc.model.composites.at(row.first),
                            sc.beta.pow(3), sc.e[row.second]};
        Verdict v = dirichlet_verdict(hyperbolic_certificate(sys));
        lib_ok = lib_ok && v.holds && !v.evidence.empty();
    }

    bool cli_ok = true;
    std::string note;
    if (const char* bin = std::getenv("K3DYN_BIN")) {
        std::string cmd = std::string(bin) + " verify --family all > /dev/null 2>&1";
        int ret = std::system(cmd.c_str());
        cli_ok = WIFEXITED(ret) && WEXITSTATUS(ret) == 0;
        note = "verify exit code " + std::to_string(WEXITSTATUS(ret));
    } else {
        note = "K3DYN_BIN unset: CLI exit code not exercised here";
    }
    report(6, "Dirichlet failure verdicts with evidence; verify exits 0",
           lib_ok && cli_ok, note);
}

// 7. Formal arithmetic-degree derivation with exact nonzero factor 1-α³.
void criterion7() {
    auto ab = sab_data();
    auto sc = sc_data();
    bool ok = true;
    struct Case { PolarizedSystem sys; QuadExt factor; };
    PolarizedSystem tau2{sc.model.lattice, sc.model.composites.at("1,3,2"),
                         sc.beta.pow(3), sc.e[0]};
    std::vector<Case> cases{{ab.sys_plus, QuadExt(1) - ab.beta.pow(6)},
                            {tau2, QuadExt(1) - sc.beta.pow(9)}};
    for (const auto& c : cases) {
        Verdict v = arithmetic_degree_zero(c.sys, 2);
        bool found = false;
        for (const auto& s : v.evidence)
            if (s.value && *s.value == c.factor) found = true;
        ok = ok && v.holds && found;
    }
    report(7, "arithmetic degree 0 with exact nonzero factor 1-α³", ok);
}

// 8. Point dynamics: 200 seeded points per family, orbit growth ratios,
// canonical-height scaling, periodic-point decay.
void criterion8() {
    Rng rng(160915);
    bool ok = true;
    std::string note;

    int done = 0, attempts = 0;
    while (done < 200 && attempts < 2000) {
        ++attempts;
        SurfacePoint222 p{k3fix::rand_p1(rng), k3fix::rand_p1(rng),
                          k3fix::rand_p1(rng)};
        Wehler222Surface s = k3fix::seeded_222(rng, p);
        try {
            for (int axis = 1; axis <= 3; ++axis) {
                auto q = involution_222(s, axis, p);
                ok = ok && s.contains(q.x, q.y, q.z) &&
                     involution_222(s, axis, q) == p;
            }
        } catch (const DegenerateFiber&) {
            continue;
        }
        ++done;
    }
    ok = ok && done == 200;

    done = 0;
    attempts = 0;
    while (done < 200 && attempts < 2000) {
        ++attempts;
        SurfacePoint22 p{k3fix::rand_p2(rng), k3fix::rand_p2(rng)};
        Wehler22Surface s = k3fix::seeded_22(rng, p);
        try {
            for (Side side : {Side::X, Side::Y}) {
                auto q = involution_22(s, side, p);
                ok = ok && s.contains(q.x, q.y) && involution_22(s, side, q) == p;
            }
        } catch (const DegenerateFiber&) {
            continue;
        }
        ++done;
    }
    ok = ok && done == 200;

    // Orbit step-height growth within [0.5·β³, 2·β³] once heights pass 10.
    auto sc = sc_data();
    double alpha = sc.beta.pow(3).to_double();
    DivisorClass sum = sc.model.lattice->from_ints({1, 1, 1});
    int measured = 0;
    attempts = 0;
    while (measured < 3 && attempts < 200) {
        ++attempts;
        SurfacePoint222 p{k3fix::rand_p1(rng), k3fix::rand_p1(rng),
                          k3fix::rand_p1(rng)};
        Wehler222Surface s = k3fix::seeded_222(rng, p);
        auto rec = orbit(s, {1, 3, 2}, p, 3);
        if (rec.truncated || rec.points.size() < 4) continue;
        std::vector<double> h;
        for (const auto& pt : rec.points) h.push_back(divisor_height(sum, pt));
        bool usable = true;
        for (std::size_t i = 1; i + 1 < h.size(); ++i) {
            if (h[i] <= 10) { usable = false; break; }
            double ratio = h[i + 1] / h[i];
            ok = ok && ratio > 0.5 * alpha && ratio < 2.0 * alpha;
        }
        if (usable) ++measured;
    }
    ok = ok && measured == 3;

    // Canonical-height scaling within 10% at n=3.
    PolarizedSystem tau2{sc.model.lattice, sc.model.composites.at("1,3,2"),
                         sc.beta.pow(3), sc.e[0]};
    measured = 0;
    attempts = 0;
    while (measured < 2 && attempts < 100) {
        ++attempts;
        SurfacePoint222 p{k3fix::rand_p1(rng), k3fix::rand_p1(rng),
                          k3fix::rand_p1(rng)};
        Wehler222Surface s = k3fix::seeded_222(rng, p);
        try {
            auto base = canonical_height(s, sc.model, tau2, {1, 3, 2}, p, 3);
            if (base.truncated || base.value < 0.5) continue;
            SurfacePoint222 q = involution_222(
                s, 1, involution_222(s, 3, involution_222(s, 2, p)));
            auto shifted = canonical_height(s, sc.model, tau2, {1, 3, 2}, q, 3);
            if (shifted.truncated) continue;
            double rel = std::fabs(shifted.value / base.value - alpha) / alpha;
            ok = ok && rel < 0.10;
            ++measured;
        } catch (const DegenerateFiber&) {
            continue;
        }
    }
    ok = ok && measured == 2;

    // Periodic fixture: estimates shrink by at least 10× per step.
    auto per = k3fix::periodic_fixture_222();
    auto est = canonical_height(per, sc.model, tau2, {1, 3, 2},
                                k3fix::periodic_point_222(), 4);
    ok = ok && est.per_step_estimates.size() == 5 &&
         est.per_step_estimates[0] > 0;
    for (std::size_t k = 1; k < est.per_step_estimates.size(); ++k)
        ok = ok && est.per_step_estimates[k] <=
                       est.per_step_estimates[k - 1] / 10.0;

    report(8, "point-dynamics properties on seeded fixtures", ok);
}

// 9. Exact-arithmetic suite: field axioms, 1000-element sign oracle,
// bilinearity/symmetry/isometry-scaling.
void criterion9() {
    using Dec = boost::multiprecision::cpp_dec_float_100;
    Rng rng(271828);
    bool ok = true;

    auto rand_qe = [&rng](std::int64_t d) {
        std::uniform_int_distribution<long> num(-100000, 100000);
        std::uniform_int_distribution<long> den(1, 1000);
        BigRational p(num(rng), den(rng)), q(num(rng), den(rng));
        if (q == 0) return QuadExt(p);
        return QuadExt(p, q, d);
    };
    for (std::int64_t d : {2, 3, 5}) {
        for (int it = 0; it < 100; ++it) {
            QuadExt x = rand_qe(d), y = rand_qe(d), z = rand_qe(d);
            ok = ok && (x + y) + z == x + (y + z);
            ok = ok && x * (y + z) == x * y + x * z;
            ok = ok && (x * y) * z == x * (y * z);
            if (!x.is_zero()) ok = ok && x * x.inverse() == QuadExt(1);
            ok = ok && (x * y).norm() == x.norm() * y.norm();
        }
    }

    auto to_dec = [](const BigRational& r) {
        return Dec(numerator(r).str()) / Dec(denominator(r).str());
    };
    int checked = 0;
    for (std::int64_t d : {2, 3, 5, 7}) {
        for (int it = 0; it < 250; ++it) {
            QuadExt x = rand_qe(d);
            Dec v = to_dec(x.rat());
            if (x.disc() != 0) v += to_dec(x.rad()) * sqrt(Dec(x.disc()));
            int ds = v > Dec("1e-80") ? 1 : v < Dec("-1e-80") ? -1 : 0;
            ok = ok && x.sign() == ds;
            ++checked;
        }
    }
    ok = ok && checked == 1000;

    auto sc = lattice_model_s_c();
    auto rand_class = [&](const LatticePtr& l) {
        std::vector<QuadExt> v;
        for (int i = 0; i < l->rank; ++i) v.push_back(rand_qe(l->field_disc));
        return l->from_coords(std::move(v));
    };
    for (int it = 0; it < 100; ++it) {
        DivisorClass d1 = rand_class(sc.lattice), d2 = rand_class(sc.lattice),
                     d3 = rand_class(sc.lattice);
        QuadExt a = rand_qe(5), b = rand_qe(5);
        ok = ok && intersect(d1 * a + d2 * b, d3) ==
                       a * intersect(d1, d3) + b * intersect(d2, d3);
        ok = ok && intersect(d1, d2) == intersect(d2, d1);
        for (const auto& m : sc.involutions)
            ok = ok && intersect(pullback_apply(m, d1), pullback_apply(m, d2)) ==
                           intersect(d1, d2);
    }

    report(9, "exact-arithmetic axioms, sign oracle and form invariants", ok);
}

}  // namespace

int main() {
    guarded(1, "six-word eigen-table reproduced exactly", criterion1);
    guarded(2, "rank-2 eigenpairs and ample witness (1+√3, 1+√3)", criterion2);
    guarded(3, "self-intersections all zero", criterion3);
    guarded(4, "positivity with spot values", criterion4);
    guarded(5, "growth sequences", criterion5);
    guarded(6, "Dirichlet verdicts via verify", criterion6);
    guarded(7, "arithmetic degree derivation", criterion7);
    guarded(8, "point-dynamics properties", criterion8);
    guarded(9, "exact-arithmetic suite", criterion9);
    if (g_failures) {
        std::cout << g_failures << " criterion(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all 9 acceptance criteria passed" << std::endl;
    return 0;
}
