#pragma once

// Projective points with coprime big-integer coordinates, normalized so the
// last nonzero coordinate is positive.

#include <array>
#include <string>
#include <vector>

#include "k3dyn/exactnum.hpp"

namespace k3dyn {

struct P1Point {
    BigInt c0, c1;

    P1Point() : c0(0), c1(1) {}
    P1Point(BigInt a, BigInt b);  // normalizes

    bool operator==(const P1Point& o) const { return c0 == o.c0 && c1 == o.c1; }
    std::string str() const;
};

struct P2Point {
    BigInt c0, c1, c2;

    P2Point() : c0(0), c1(0), c2(1) {}
    P2Point(BigInt a, BigInt b, BigInt c);  // normalizes

    bool operator==(const P2Point& o) const {
        return c0 == o.c0 && c1 == o.c1 && c2 == o.c2;
    }
    std::string str() const;
};

// Reduce to coprime coordinates with the last nonzero one positive; throws
// on the all-zero vector.
void normalize_coords(std::vector<BigInt>& v);

// Natural log of max |coordinate|; exact integers are never converted
// wholesale to floating point (bit length + leading bits).
double log_abs(const BigInt& x);  // x != 0
long bit_length(const BigInt& x);

}  // namespace k3dyn
