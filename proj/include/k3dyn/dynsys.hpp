#pragma once

// Polarized-system analysis on Picard lattices: exact spectra of pullback
// maps (rank <= 3), hyperbolic/ample certificates and the packaged verdicts
// (self-intersection zero, positivity, non-effectivity, Kodaira obstruction,
// Dirichlet failure, arithmetic degree zero).

#include <optional>
#include <string>
#include <vector>

#include "k3dyn/piclattice.hpp"

namespace k3dyn {

struct EigenPair {
    QuadExt value;
    DivisorClass vec;
};

// Exact eigen-decomposition of an integer pullback matrix over the lattice
// coefficient field.  Eigenvectors are normalized so the first nonzero
// coordinate is 1, then sign-adjusted so the pairing with the ample basis
// sum is >= 0 when nonzero.
std::vector<EigenPair> spectrum(const PullbackMap& m, const LatticePtr& l);

struct PolarizedSystem {
    LatticePtr lattice;
    PullbackMap pullback;
    QuadExt alpha;                  // > 1
    DivisorClass polarizing_class;  // E with φ*E = αE

    void validate() const;  // checks the defining relation and α > 1
};

std::vector<PolarizedSystem> find_polarizations(const PullbackMap& m,
                                                const LatticePtr& l);

struct DegreeCheck {
    std::int64_t degree = 1;
    QuadExt alpha_power;  // α^dim used by the comparison
    bool equal = false;   // deg(φ) == α^dim
};

struct HyperbolicCertificate {
    PolarizedSystem system;
    DivisorClass dual_class;            // E' with φ*E' = α⁻¹E'
    std::vector<QuadExt> ample_witness; // positive span of E+E' over ample basis
    DegreeCheck degree_check;           // deg(φ) vs α²
};

HyperbolicCertificate hyperbolic_certificate(const PolarizedSystem& sys);

enum class Claim {
    SelfIntersectionZero,
    PositivityOnSamples,
    NotEffective,
    KodairaObstruction,
    DirichletFails,
    ArithmeticDegreeZero,
};

std::string claim_name(Claim c);

struct EvidenceStep {
    std::string step;
    std::optional<QuadExt> value;
};

struct Verdict {
    Claim claim;
    bool holds = false;
    std::vector<EvidenceStep> evidence;
};

Verdict self_intersection_verdict(const PolarizedSystem& sys);

// ((φⁿ)*(E+E'), D) for n = 0..n_max via αⁿ(E,D) + α⁻ⁿ(E',D); each term is
// cross-checked against the direct matrix-power pullback and verified > 0.
std::vector<QuadExt> pullback_intersection_sequence(
    const HyperbolicCertificate& cert, const DivisorClass& d, int n_max);

Verdict positivity_verdict(const HyperbolicCertificate& cert,
                           const std::vector<DivisorClass>& samples);
Verdict effectivity_verdict(const HyperbolicCertificate& cert);
Verdict kodaira_verdict(const HyperbolicCertificate& cert, bool etale);
Verdict dirichlet_verdict(const HyperbolicCertificate& cert);
Verdict arithmetic_degree_zero(const PolarizedSystem& sys, int dim);

// True when every coordinate of D is >= 0 and D != 0 (the effectivity
// sampling convention: non-negative combinations of basis classes).
bool is_effective_sample(const DivisorClass& d);

}  // namespace k3dyn
