#include "k3dyn/surfaces.hpp"

#include <utility>

namespace k3dyn {

namespace {

BigInt ipow(const BigInt& base, int e) {
    BigInt r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

void check_index(int i) {
    if (i < 0 || i > 2) throw Error("surface index out of range");
}

}  // namespace

void Wehler22Surface::set_b(int i, int j, int k, int l, BigRational v) {
    check_index(i); check_index(j); check_index(k); check_index(l);
    if (i > k) std::swap(i, k);
    if (j > l) std::swap(j, l);
    if (v == 0)
        b.erase({i, j, k, l});
    else
        b[{i, j, k, l}] = std::move(v);
}

BigRational Wehler22Surface::eval_linear(const P2Point& x, const P2Point& y) const {
    const BigInt xs[3] = {x.c0, x.c1, x.c2};
    const BigInt ys[3] = {y.c0, y.c1, y.c2};
    BigRational acc = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (a[i][j] != 0) acc += a[i][j] * BigRational(xs[i] * ys[j]);
    return acc;
}

BigRational Wehler22Surface::eval_quadratic(const P2Point& x, const P2Point& y) const {
    const BigInt xs[3] = {x.c0, x.c1, x.c2};
    const BigInt ys[3] = {y.c0, y.c1, y.c2};
    BigRational acc = 0;
    for (const auto& [key, v] : b) {
        auto [i, j, k, l] = key;
        acc += v * BigRational(xs[i] * xs[k] * ys[j] * ys[l]);
    }
    return acc;
}

bool Wehler22Surface::contains(const P2Point& x, const P2Point& y) const {
    return eval_linear(x, y) == 0 && eval_quadratic(x, y) == 0;
}

void Wehler22Surface::validate() const {
    bool any_a = false;
    for (const auto& row : a)
        for (const auto& v : row) any_a = any_a || v != 0;
    if (!any_a || b.empty())
        throw Error("Wehler (1,1)+(2,2) surface needs nonzero forms");
}

void Wehler222Surface::set_c(int i1, int i2, int i3, BigRational v) {
    check_index(i1); check_index(i2); check_index(i3);
    if (v == 0)
        c.erase({i1, i2, i3});
    else
        c[{i1, i2, i3}] = std::move(v);
}

BigRational Wehler222Surface::eval(const P1Point& x, const P1Point& y,
                                   const P1Point& z) const {
    BigRational acc = 0;
    for (const auto& [key, v] : c) {
        auto [i1, i2, i3] = key;
        BigInt mono = ipow(x.c0, i1) * ipow(x.c1, 2 - i1) * ipow(y.c0, i2) *
                      ipow(y.c1, 2 - i2) * ipow(z.c0, i3) * ipow(z.c1, 2 - i3);
        acc += v * BigRational(mono);
    }
    return acc;
}

bool Wehler222Surface::contains(const P1Point& x, const P1Point& y,
                                const P1Point& z) const {
    return eval(x, y, z) == 0;
}

void Wehler222Surface::validate() const {
    if (c.empty()) throw Error("(2,2,2) surface needs a nonzero coefficient");
}

FiberQuadratic fiber_quadratic(const Wehler222Surface& s, int axis,
                               const P1Point& first, const P1Point& second) {
    if (axis < 1 || axis > 3) throw Error("axis must be 1, 2 or 3");
    FiberQuadratic f;
    for (const auto& [key, v] : s.c) {
        auto [i1, i2, i3] = key;
        int e[3] = {i1, i2, i3};
        int moving = e[axis - 1];
        int oth[2], n = 0;
        for (int t = 0; t < 3; ++t)
            if (t != axis - 1) oth[n++] = e[t];
        BigInt mono = ipow(first.c0, oth[0]) * ipow(first.c1, 2 - oth[0]) *
                      ipow(second.c0, oth[1]) * ipow(second.c1, 2 - oth[1]);
        BigRational term = v * BigRational(mono);
        if (moving == 2)
            f.a += term;
        else if (moving == 1)
            f.b += term;
        else
            f.c += term;
    }
    return f;
}

LineConic fiber_line_conic(const Wehler22Surface& s, Side moving,
                           const P2Point& fixed) {
    const BigInt fx[3] = {fixed.c0, fixed.c1, fixed.c2};
    LineConic lc{};
    if (moving == Side::Y) {
        for (int j = 0; j < 3; ++j)
            for (int i = 0; i < 3; ++i)
                if (s.a[i][j] != 0) lc.line[j] += s.a[i][j] * BigRational(fx[i]);
        for (const auto& [key, v] : s.b) {
            auto [i, j, k, l] = key;
            BigRational w = v * BigRational(fx[i] * fx[k]);
            if (j == l) {
                lc.conic[j][j] += w;
            } else {
                lc.conic[j][l] += w / 2;
                lc.conic[l][j] += w / 2;
            }
        }
    } else {
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (s.a[i][j] != 0) lc.line[i] += s.a[i][j] * BigRational(fx[j]);
        for (const auto& [key, v] : s.b) {
            auto [i, j, k, l] = key;
            BigRational w = v * BigRational(fx[j] * fx[l]);
            if (i == k) {
                lc.conic[i][i] += w;
            } else {
                lc.conic[i][k] += w / 2;
                lc.conic[k][i] += w / 2;
            }
        }
    }
    bool line_zero = lc.line[0] == 0 && lc.line[1] == 0 && lc.line[2] == 0;
    bool conic_zero = true;
    for (const auto& row : lc.conic)
        for (const auto& v : row) conic_zero = conic_zero && v == 0;
    if (line_zero && conic_zero)
        throw DegenerateFiber("both restricted forms vanish identically");
    return lc;
}

std::string word_key(const std::vector<int>& word) {
    std::string key;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) key += ',';
        key += std::to_string(word[i]);
    }
    return key;
}

PullbackMap word_pullback(const LatticeModel& model, const std::vector<int>& word) {
    if (word.empty()) throw Error("empty involution word");
    int n = model.lattice->rank;
    PullbackMap m = PullbackMap::identity(n);
    // (σ_{w1}∘…∘σ_{wk})* = σ_{wk}*∘…∘σ_{w1}*, so the matrix is M_{wk}···M_{w1}.
    for (int w : word) {
        if (w < 1 || w > static_cast<int>(model.involutions.size()))
            throw Error("involution id out of range: " + std::to_string(w));
        m = model.involutions[w - 1].compose(m);
    }
    m.label = "σ_{" + word_key(word) + "}*";
    return m;
}

LatticeModel lattice_model_s_ab() {
    LatticeModel model;
    model.lattice = PicLattice::create(
        2, {"D1", "D2"}, {{2, 4}, {4, 2}}, {1, 2}, {0, 0}, 3);
    PullbackMap sx{{{1, 4}, {0, -1}}, 1, "σx*"};
    PullbackMap sy{{{-1, 0}, {4, 1}}, 1, "σy*"};
    model.involutions = {sx, sy};
    // φ⁺ = σy∘σx has word (2,1); its pullback is σx*·σy* = [[15,4],[-4,-1]].
    model.composites["2,1"] = word_pullback(model, {2, 1});
    model.composites["1,2"] = word_pullback(model, {1, 2});
    return model;
}

LatticeModel lattice_model_s_c() {
    LatticeModel model;
    model.lattice = PicLattice::create(
        3, {"D1", "D2", "D3"}, {{0, 2, 2}, {2, 0, 2}, {2, 2, 0}}, {1, 2, 3},
        {0, 0, 0}, 5);
    // σi*: Di ↦ -Di + 2Dj + 2Dk, the other two basis classes fixed.
    PullbackMap s1{{{-1, 0, 0}, {2, 1, 0}, {2, 0, 1}}, 1, "σ1*"};
    PullbackMap s2{{{1, 2, 0}, {0, -1, 0}, {0, 2, 1}}, 1, "σ2*"};
    PullbackMap s3{{{1, 0, 2}, {0, 1, 2}, {0, 0, -1}}, 1, "σ3*"};
    model.involutions = {s1, s2, s3};
    const int words[6][3] = {{3, 2, 1}, {1, 3, 2}, {2, 1, 3},
                             {3, 1, 2}, {2, 3, 1}, {1, 2, 3}};
    for (const auto& w : words) {
        std::vector<int> word{w[0], w[1], w[2]};
        model.composites[word_key(word)] = word_pullback(model, word);
    }
    return model;
}

}  // namespace k3dyn
