#pragma once

// Concrete dynamics on rational points: Vieta involutions, orbit iteration
// with exact coprime coordinates, Weil heights and canonical-height
// estimation via α⁻ⁿ·h_E(φⁿP).

#include <optional>
#include <string>
#include <vector>

#include "k3dyn/dynsys.hpp"
#include "k3dyn/projective.hpp"
#include "k3dyn/surfaces.hpp"

namespace k3dyn {

inline constexpr long kDefaultBitBudget = 1L << 20;

struct SurfacePoint222 {
    P1Point x, y, z;
    bool operator==(const SurfacePoint222& o) const {
        return x == o.x && y == o.y && z == o.z;
    }
    std::string str() const { return x.str() + "," + y.str() + "," + z.str(); }
    long max_bits() const;
};

struct SurfacePoint22 {
    P2Point x, y;
    bool operator==(const SurfacePoint22& o) const { return x == o.x && y == o.y; }
    std::string str() const { return x.str() + ";" + y.str(); }
    long max_bits() const;
};

// The second root of A t0² + B t0 t1 + C t1² given the root t.  A double
// root returns t itself.
P1Point vieta_other_root(const BigRational& a, const BigRational& b,
                         const BigRational& c, const P1Point& t);

SurfacePoint222 involution_222(const Wehler222Surface& s, int axis,
                               const SurfacePoint222& p);
SurfacePoint22 involution_22(const Wehler22Surface& s, Side side,
                             const SurfacePoint22& p);

double weil_height(const P1Point& p);
double weil_height(const P2Point& p);

double divisor_height(const DivisorClass& e, const SurfacePoint222& p);
double divisor_height(const DivisorClass& e, const SurfacePoint22& p);

template <class PointT>
struct OrbitRecord {
    std::vector<PointT> points;               // steps+1 entries unless truncated
    std::vector<int> word;
    std::vector<std::vector<double>> heights; // per step, per basis index
    std::vector<long> bit_sizes;              // per step, max coordinate bits
    bool truncated = false;
    std::string error;                        // set when truncated
};

// Applies the word `steps` times (rightmost involution acts first).  A
// DegenerateFiber along the way, or a coordinate exceeding the bit budget,
// truncates the record instead of throwing.
OrbitRecord<SurfacePoint222> orbit(const Wehler222Surface& s,
                                   const std::vector<int>& word,
                                   const SurfacePoint222& p, int steps,
                                   long bit_budget = kDefaultBitBudget);
OrbitRecord<SurfacePoint22> orbit(const Wehler22Surface& s,
                                  const std::vector<int>& word,
                                  const SurfacePoint22& p, int steps,
                                  long bit_budget = kDefaultBitBudget);

struct HeightEstimate {
    double value = 0;
    std::vector<double> per_step_estimates;  // α⁻ᵏ·h_E(φᵏP), k = 0..steps
    int steps = 0;
    QuadExt alpha;
    bool truncated = false;
};

// The word's composite pullback must equal sys.pullback (WordMismatch
// otherwise); n >= 1.
HeightEstimate canonical_height(const Wehler222Surface& s,
                                const LatticeModel& model,
                                const PolarizedSystem& sys,
                                const std::vector<int>& word,
                                const SurfacePoint222& p, int steps,
                                long bit_budget = kDefaultBitBudget);
HeightEstimate canonical_height(const Wehler22Surface& s,
                                const LatticeModel& model,
                                const PolarizedSystem& sys,
                                const std::vector<int>& word,
                                const SurfacePoint22& p, int steps,
                                long bit_budget = kDefaultBitBudget);

}  // namespace k3dyn
