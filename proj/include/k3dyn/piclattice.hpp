#pragma once

// Picard-lattice model: divisor classes with coefficients in a fixed real
// quadratic field, the integer intersection form, pullback matrices and
// positive-span (ample-witness) certificates.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "k3dyn/exactnum.hpp"

namespace k3dyn {

struct PicLattice;
using LatticePtr = std::shared_ptr<const PicLattice>;

struct DivisorClass {
    LatticePtr lattice;
    std::vector<QuadExt> coords;

    DivisorClass operator+(const DivisorClass& o) const;
    DivisorClass operator-(const DivisorClass& o) const;
    DivisorClass operator*(const QuadExt& scalar) const;
    bool operator==(const DivisorClass& o) const;
    bool is_zero() const;
};

struct PicLattice : std::enable_shared_from_this<PicLattice> {
    int rank = 0;
    std::vector<std::string> basis_labels;
    std::vector<std::vector<std::int64_t>> gram;   // symmetric (D_i, D_j)
    std::vector<int> ample_basis;                  // 1-based indices
    std::vector<std::int64_t> canonical_class;     // K_X in basis coordinates
    std::int64_t field_disc = 0;                   // d of the coefficient field

    static LatticePtr create(int rank, std::vector<std::string> labels,
                             std::vector<std::vector<std::int64_t>> gram,
                             std::vector<int> ample_basis,
                             std::vector<std::int64_t> canonical_class,
                             std::int64_t field_disc);

    DivisorClass basis_class(int i) const;     // 1-based
    DivisorClass zero_class() const;
    DivisorClass from_ints(const std::vector<std::int64_t>& v) const;
    DivisorClass from_coords(std::vector<QuadExt> v) const;
    DivisorClass canonical() const;
    DivisorClass ample_sum() const;            // Σ of declared ample basis classes
};

struct PullbackMap {
    std::vector<std::vector<std::int64_t>> matrix;  // column j = image of basis j
    std::int64_t declared_degree = 1;
    std::string label;

    int rank() const { return static_cast<int>(matrix.size()); }
    PullbackMap compose(const PullbackMap& rhs) const;  // this * rhs
    PullbackMap power(int n) const;                     // n >= 0
    static PullbackMap identity(int rank, std::string label = "id");
    bool operator==(const PullbackMap& o) const {
        return matrix == o.matrix && declared_degree == o.declared_degree;
    }
};

QuadExt intersect(const DivisorClass& d1, const DivisorClass& d2);
DivisorClass pullback_apply(const PullbackMap& m, const DivisorClass& d);
bool validate_scaled_isometry(const PullbackMap& m, const PicLattice& l);

// Solve D = Σ a_i gen_i exactly; returns the coefficients when all are
// strictly positive, nothing otherwise.  Throws DegenerateGenerators when
// the generators are linearly dependent.
std::optional<std::vector<QuadExt>> positive_span_certificate(
    const DivisorClass& d, const std::vector<DivisorClass>& generators);

// Same solve without the positivity requirement; the coefficients may have
// any sign.  Throws DegenerateGenerators when dependent.
std::vector<QuadExt> span_coefficients(const DivisorClass& d,
                                       const std::vector<DivisorClass>& generators);

// Exact solve of a square linear system over Q(√d); empty optional when the
// matrix is singular.
std::optional<std::vector<QuadExt>> solve_linear(
    std::vector<std::vector<QuadExt>> a, std::vector<QuadExt> b);

}  // namespace k3dyn
