#include "k3dyn/piclattice.hpp"

#include <utility>

namespace k3dyn {

namespace {

void require_same_lattice(const DivisorClass& a, const DivisorClass& b) {
    if (a.lattice != b.lattice)
        throw LatticeMismatch("divisor classes live on different lattices");
}

}  // namespace

LatticePtr PicLattice::create(int rank, std::vector<std::string> labels,
                              std::vector<std::vector<std::int64_t>> gram,
                              std::vector<int> ample_basis,
                              std::vector<std::int64_t> canonical_class,
                              std::int64_t field_disc) {
    auto l = std::make_shared<PicLattice>();
    l->rank = rank;
    l->basis_labels = std::move(labels);
    l->gram = std::move(gram);
    l->ample_basis = std::move(ample_basis);
    l->canonical_class = std::move(canonical_class);
    l->field_disc = field_disc;
    if (static_cast<int>(l->gram.size()) != rank)
        throw Error("gram matrix size does not match rank");
    for (int i = 0; i < rank; ++i) {
        if (static_cast<int>(l->gram[i].size()) != rank)
            throw Error("gram matrix is not square");
        for (int j = 0; j < rank; ++j)
            if (l->gram[i][j] != l->gram[j][i])
                throw Error("gram matrix is not symmetric");
    }
    if (field_disc != 0 && !is_squarefree(field_disc))
        throw Error("lattice field discriminant must be squarefree");
    if (l->canonical_class.empty()) l->canonical_class.assign(rank, 0);
    return l;
}

DivisorClass PicLattice::basis_class(int i) const {
    DivisorClass d = zero_class();
    d.coords[i - 1] = QuadExt(1);
    return d;
}

DivisorClass PicLattice::zero_class() const {
    DivisorClass d;
    d.lattice = shared_from_this();
    d.coords.assign(rank, QuadExt(0));
    return d;
}

DivisorClass PicLattice::from_ints(const std::vector<std::int64_t>& v) const {
    DivisorClass d = zero_class();
    for (int i = 0; i < rank; ++i) d.coords[i] = QuadExt(static_cast<long>(v[i]));
    return d;
}

DivisorClass PicLattice::from_coords(std::vector<QuadExt> v) const {
    if (static_cast<int>(v.size()) != rank)
        throw LatticeMismatch("coordinate vector length does not match rank");
    DivisorClass d;
    d.lattice = shared_from_this();
    d.coords = std::move(v);
    return d;
}

DivisorClass PicLattice::canonical() const { return from_ints(canonical_class); }

DivisorClass PicLattice::ample_sum() const {
    DivisorClass d = zero_class();
    for (int i : ample_basis) d.coords[i - 1] = QuadExt(1);
    return d;
}

DivisorClass DivisorClass::operator+(const DivisorClass& o) const {
    require_same_lattice(*this, o);
    DivisorClass r = *this;
    for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] += o.coords[i];
    return r;
}

DivisorClass DivisorClass::operator-(const DivisorClass& o) const {
    require_same_lattice(*this, o);
    DivisorClass r = *this;
    for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] -= o.coords[i];
    return r;
}

DivisorClass DivisorClass::operator*(const QuadExt& scalar) const {
    DivisorClass r = *this;
    for (auto& c : r.coords) c *= scalar;
    return r;
}

bool DivisorClass::operator==(const DivisorClass& o) const {
    return lattice == o.lattice && coords == o.coords;
}

bool DivisorClass::is_zero() const {
    for (const auto& c : coords)
        if (!c.is_zero()) return false;
    return true;
}

QuadExt intersect(const DivisorClass& d1, const DivisorClass& d2) {
    require_same_lattice(d1, d2);
    const auto& gram = d1.lattice->gram;
    QuadExt acc(0);
    for (std::size_t i = 0; i < d1.coords.size(); ++i) {
        if (d1.coords[i].is_zero()) continue;
        QuadExt row(0);
        for (std::size_t j = 0; j < d2.coords.size(); ++j)
            row += d2.coords[j] * QuadExt(static_cast<long>(gram[i][j]));
        acc += d1.coords[i] * row;
    }
    return acc;
}

DivisorClass pullback_apply(const PullbackMap& m, const DivisorClass& d) {
    if (m.rank() != static_cast<int>(d.coords.size()))
        throw LatticeMismatch("pullback matrix rank does not match class");
    DivisorClass r = d.lattice->zero_class();
    for (int i = 0; i < m.rank(); ++i)
        for (int j = 0; j < m.rank(); ++j)
            r.coords[i] += QuadExt(static_cast<long>(m.matrix[i][j])) * d.coords[j];
    return r;
}

bool validate_scaled_isometry(const PullbackMap& m, const PicLattice& l) {
    int n = l.rank;
    if (m.rank() != n) return false;
    // Mᵀ·G·M == deg·G over the integers.
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            std::int64_t acc = 0;
            for (int k = 0; k < n; ++k)
                for (int t = 0; t < n; ++t)
                    acc += m.matrix[k][i] * l.gram[k][t] * m.matrix[t][j];
            if (acc != m.declared_degree * l.gram[i][j]) return false;
        }
    }
    return true;
}

PullbackMap PullbackMap::compose(const PullbackMap& rhs) const {
    int n = rank();
    PullbackMap r;
    r.matrix.assign(n, std::vector<std::int64_t>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                r.matrix[i][j] += matrix[i][k] * rhs.matrix[k][j];
    r.declared_degree = declared_degree * rhs.declared_degree;
    r.label = label + "·" + rhs.label;
    return r;
}

PullbackMap PullbackMap::power(int n) const {
    PullbackMap r = identity(rank());
    for (int i = 0; i < n; ++i) r = compose(r);
    r.label = label + "^" + std::to_string(n);
    return r;
}

PullbackMap PullbackMap::identity(int rank, std::string label) {
    PullbackMap r;
    r.matrix.assign(rank, std::vector<std::int64_t>(rank, 0));
    for (int i = 0; i < rank; ++i) r.matrix[i][i] = 1;
    r.declared_degree = 1;
    r.label = std::move(label);
    return r;
}

std::optional<std::vector<QuadExt>> solve_linear(
    std::vector<std::vector<QuadExt>> a, std::vector<QuadExt> b) {
    const int n = static_cast<int>(a.size());
    // Gaussian elimination with exact pivoting by nonzero sign.
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int row = col; row < n; ++row)
            if (!a[row][col].is_zero()) { pivot = row; break; }
        if (pivot < 0) return std::nullopt;
        std::swap(a[col], a[pivot]);
        std::swap(b[col], b[pivot]);
        QuadExt inv = a[col][col].inverse();
        for (int j = col; j < n; ++j) a[col][j] *= inv;
        b[col] *= inv;
        for (int row = 0; row < n; ++row) {
            if (row == col || a[row][col].is_zero()) continue;
            QuadExt f = a[row][col];
            for (int j = col; j < n; ++j) a[row][j] -= f * a[col][j];
            b[row] -= f * b[col];
        }
    }
    return b;
}

std::vector<QuadExt> span_coefficients(
    const DivisorClass& d, const std::vector<DivisorClass>& generators) {
    if (generators.empty()) throw DegenerateGenerators("no generators");
    for (const auto& g : generators) require_same_lattice(d, g);
    const int rank = static_cast<int>(d.coords.size());
    const int m = static_cast<int>(generators.size());
    if (m != rank)
        throw DegenerateGenerators(
            "span solve expects a basis-sized generator set");
    std::vector<std::vector<QuadExt>> a(rank, std::vector<QuadExt>(m, QuadExt(0)));
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < m; ++j) a[i][j] = generators[j].coords[i];
    auto sol = solve_linear(std::move(a), d.coords);
    if (!sol) throw DegenerateGenerators("generators are linearly dependent");
    return *sol;
}

std::optional<std::vector<QuadExt>> positive_span_certificate(
    const DivisorClass& d, const std::vector<DivisorClass>& generators) {
    auto sol = span_coefficients(d, generators);
    for (const auto& c : sol)
        if (qe_sign(c) <= 0) return std::nullopt;
    return sol;
}

}  // namespace k3dyn
