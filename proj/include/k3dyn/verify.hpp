#pragma once

// The built-in certificate suite: every lattice-level identity and verdict
// for the two Wehler families, packaged as named pass/fail checks.  Shared
// by the CLI `verify` command and the test suites.

#include <string>
#include <vector>

#include "k3dyn/dynsys.hpp"
#include "k3dyn/surfaces.hpp"

namespace k3dyn {

struct CheckLine {
    std::string name;
    bool pass = false;
    std::string detail;  // exact values / failure diagnostics
};

struct FamilyReport {
    std::string family;
    std::vector<CheckLine> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// family: "s_ab" or "s_c"; throws Error otherwise.
FamilyReport verify_family(const std::string& family);

// Both families, ordered by family name.
std::vector<FamilyReport> verify_all();

// True when v = c·w for some nonzero scalar c of the field.
bool proportional(const DivisorClass& v, const DivisorClass& w);

// Named classes and systems for the built-ins, in the reference scaling
// used throughout the certificate suite.
struct SabData {
    LatticeModel model;
    QuadExt beta;                       // 2+√3
    DivisorClass e_plus, e_minus;       // [β,-1], [-1,β]
    PolarizedSystem sys_plus, sys_minus;
};
SabData sab_data();

struct ScData {
    LatticeModel model;
    QuadExt beta;          // (3+√5)/2
    QuadExt a, b;          // (-3+√5)/2, (-1+√5)/2
    std::vector<DivisorClass> e;          // E1..E6 at indices 0..5
    std::vector<std::vector<int>> words;  // the six composite words
    // Per word: index (0-based into e) of the β³ and β⁻³ eigenvectors and
    // the -1 eigenvector.
    struct Row {
        std::vector<int> word;
        int plus_idx;
        int minus_idx;
        std::vector<std::int64_t> neg_vec;
    };
    std::vector<Row> table;
};
ScData sc_data();

}  // namespace k3dyn
