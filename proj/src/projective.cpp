#include "k3dyn/projective.hpp"

#include <cmath>

namespace k3dyn {

void normalize_coords(std::vector<BigInt>& v) {
    BigInt g = 0;
    for (const auto& c : v) g = boost::multiprecision::gcd(g, c);
    if (g == 0) throw Error("projective point cannot be all zero");
    for (auto& c : v) c /= g;
    for (auto it = v.rbegin(); it != v.rend(); ++it) {
        if (*it == 0) continue;
        if (*it < 0)
            for (auto& c : v) c = -c;
        break;
    }
}

P1Point::P1Point(BigInt a, BigInt b) {
    std::vector<BigInt> v{std::move(a), std::move(b)};
    normalize_coords(v);
    c0 = std::move(v[0]);
    c1 = std::move(v[1]);
}

std::string P1Point::str() const { return c0.str() + ":" + c1.str(); }

P2Point::P2Point(BigInt a, BigInt b, BigInt c) {
    std::vector<BigInt> v{std::move(a), std::move(b), std::move(c)};
    normalize_coords(v);
    c0 = std::move(v[0]);
    c1 = std::move(v[1]);
    c2 = std::move(v[2]);
}

std::string P2Point::str() const {
    return c0.str() + ":" + c1.str() + ":" + c2.str();
}

long bit_length(const BigInt& x) {
    if (x == 0) return 0;
    return static_cast<long>(boost::multiprecision::msb(boost::multiprecision::abs(x))) + 1;
}

double log_abs(const BigInt& x) {
    BigInt a = boost::multiprecision::abs(x);
    if (a == 0) throw Error("log of zero");
    long n = static_cast<long>(boost::multiprecision::msb(a));
    if (n <= 52) return std::log(a.convert_to<double>());
    BigInt top = a >> (n - 52);  // 53 leading bits
    return std::log(top.convert_to<double>()) +
           static_cast<double>(n - 52) * std::log(2.0);
}

}  // namespace k3dyn
