#pragma once

// Built-in Wehler families: coefficient-level defining forms for the
// (1,1)+(2,2) family in P²×P² and the (2,2,2) family in P¹×P¹×P¹, their
// derived lattice models and involution pullback matrices, and the fiber
// restrictions feeding the Vieta involutions.

#include <array>
#include <map>
#include <vector>

#include "k3dyn/piclattice.hpp"
#include "k3dyn/projective.hpp"

namespace k3dyn {

// Complete intersection of Σ a_ij x_i y_j and Σ b_ijkl x_i x_k y_j y_l in
// P²×P².  Indices are 0-based; b keys are stored with i<=k, j<=l.
struct Wehler22Surface {
    std::array<std::array<BigRational, 3>, 3> a{};
    std::map<std::array<int, 4>, BigRational> b;  // key (i,j,k,l)

    void set_b(int i, int j, int k, int l, BigRational v);
    BigRational eval_linear(const P2Point& x, const P2Point& y) const;
    BigRational eval_quadratic(const P2Point& x, const P2Point& y) const;
    bool contains(const P2Point& x, const P2Point& y) const;
    void validate() const;  // at least one a and one b nonzero
};

// Zero locus of a (2,2,2)-form in P¹×P¹×P¹.  A key stores the exponents of
// (x0, y0, z0); the complementary exponents are 2 minus those.
struct Wehler222Surface {
    std::map<std::array<int, 3>, BigRational> c;

    void set_c(int i1, int i2, int i3, BigRational v);
    BigRational eval(const P1Point& x, const P1Point& y, const P1Point& z) const;
    bool contains(const P1Point& x, const P1Point& y, const P1Point& z) const;
    void validate() const;
};

struct FiberQuadratic {
    BigRational a, b, c;  // A t0² + B t0 t1 + C t1²
    bool degenerate() const { return a == 0 && b == 0 && c == 0; }
};

// Restriction of the (2,2,2)-form along one axis with the other two P¹
// coordinates fixed (axis 1 moves x, 2 moves y, 3 moves z; `first`/`second`
// are the remaining coordinates in increasing x,y,z order).
FiberQuadratic fiber_quadratic(const Wehler222Surface& s, int axis,
                               const P1Point& first, const P1Point& second);

enum class Side { X, Y };

struct LineConic {
    std::array<BigRational, 3> line;                 // Σ line_j t_j = 0
    std::array<std::array<BigRational, 3>, 3> conic; // tᵀ·conic·t = 0, symmetric
};

// Restriction of both defining forms with one P² factor fixed.  Throws
// DegenerateFiber when both restricted forms vanish identically.
LineConic fiber_line_conic(const Wehler22Surface& s, Side moving,
                           const P2Point& fixed);

struct LatticeModel {
    LatticePtr lattice;
    std::vector<PullbackMap> involutions;            // σ_i*, 1-based via index+1
    std::map<std::string, PullbackMap> composites;   // keyed by word, e.g. "1,3,2"
};

// Rank-2 model of the P²×P² family: gram [[2,4],[4,2]], field Q(√3),
// involutions σx*, σy* and the composites for the words "2,1" (σy∘σx) and
// "1,2" (σx∘σy).
LatticeModel lattice_model_s_ab();

// Rank-3 model of the (2,2,2) family: gram [[0,2,2],[2,0,2],[2,2,0]], field
// Q(√5), involutions σ1*,σ2*,σ3* and all six composite words.
LatticeModel lattice_model_s_c();

// Pullback matrix of a composite word.  Words list the involutions in
// composition order (rightmost acts on points first), so the matrix is
// M_{w_k}···M_{w_1}.
PullbackMap word_pullback(const LatticeModel& model, const std::vector<int>& word);

std::string word_key(const std::vector<int>& word);

}  // namespace k3dyn
