#include "k3dyn/exactnum.hpp"

#include <sstream>
#include <utility>

namespace k3dyn {

namespace {

BigInt parse_int(const std::string& s) {
    if (s.empty()) throw ParseError("empty integer literal");
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) throw ParseError("bare sign: '" + s + "'");
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            throw ParseError("bad integer literal: '" + s + "'");
    return BigInt(s);
}

}  // namespace

BigRational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return BigRational(parse_int(text));
    BigInt num = parse_int(text.substr(0, slash));
    BigInt den = parse_int(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator: '" + text + "'");
    return BigRational(num, den);
}

std::string rational_to_string(const BigRational& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << "/" << denominator(r);
    return os.str();
}

bool is_squarefree(std::int64_t d) {
    if (d < 1) return false;
    for (std::int64_t p = 2; p * p <= d; ++p) {
        if (d % (p * p) == 0) return false;
    }
    return true;
}

QuadExt::QuadExt(BigRational p, BigRational q, std::int64_t d)
    : rat_(std::move(p)), rad_(std::move(q)), disc_(d) {
    if (rad_ != 0) {
        if (disc_ <= 1 || !is_squarefree(disc_))
            throw Error("discriminant must be squarefree and > 1, got " +
                        std::to_string(d));
    }
    normalize();
}

void QuadExt::normalize() {
    if (rad_ == 0) disc_ = 0;
}

std::int64_t QuadExt::common_disc(const QuadExt& a, const QuadExt& b) {
    if (a.disc_ == 0) return b.disc_;
    if (b.disc_ == 0 || a.disc_ == b.disc_) return a.disc_;
    throw IncompatibleField("cannot mix sqrt(" + std::to_string(a.disc_) +
                            ") with sqrt(" + std::to_string(b.disc_) + ")");
}

QuadExt QuadExt::operator-() const {
    QuadExt r;
    r.rat_ = -rat_;
    r.rad_ = -rad_;
    r.disc_ = disc_;
    return r;
}

QuadExt QuadExt::operator+(const QuadExt& o) const {
    QuadExt r;
    r.disc_ = common_disc(*this, o);
    r.rat_ = rat_ + o.rat_;
    r.rad_ = rad_ + o.rad_;
    r.normalize();
    return r;
}

QuadExt QuadExt::operator-(const QuadExt& o) const { return *this + (-o); }

QuadExt QuadExt::operator*(const QuadExt& o) const {
    QuadExt r;
    r.disc_ = common_disc(*this, o);
    r.rat_ = rat_ * o.rat_ + rad_ * o.rad_ * r.disc_;
    r.rad_ = rat_ * o.rad_ + rad_ * o.rat_;
    r.normalize();
    return r;
}

QuadExt QuadExt::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    // 1/(p+q√d) = (p-q√d)/(p²-q²d); the norm is nonzero since √d is
    // irrational and (p,q) ≠ (0,0).
    BigRational n = norm();
    QuadExt r;
    r.disc_ = disc_;
    r.rat_ = rat_ / n;
    r.rad_ = -rad_ / n;
    r.normalize();
    return r;
}

QuadExt QuadExt::operator/(const QuadExt& o) const {
    if (o.is_zero()) throw DivisionByZero();
    common_disc(*this, o);
    return *this * o.inverse();
}

bool QuadExt::operator==(const QuadExt& o) const {
    if (rat_ != o.rat_ || rad_ != o.rad_) return false;
    return rad_ == 0 || disc_ == o.disc_;
}

QuadExt QuadExt::conjugate() const {
    QuadExt r;
    r.rat_ = rat_;
    r.rad_ = -rad_;
    r.disc_ = disc_;
    r.normalize();
    return r;
}

BigRational QuadExt::norm() const { return rat_ * rat_ - rad_ * rad_ * disc_; }

QuadExt QuadExt::pow(long n) const {
    if (n < 0) return inverse().pow(-n);
    QuadExt acc(1), base = *this;
    while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

int QuadExt::sign() const {
    int sp = rat_.sign();
    int sq = rad_.sign();
    if (sq == 0) return sp;
    if (sp == 0) return sq;
    if (sp == sq) return sp;
    // Opposite signs: compare p² against q²d.
    BigRational p2 = rat_ * rat_;
    BigRational q2d = rad_ * rad_ * disc_;
    if (p2 == q2d) return 0;  // impossible for irrational √d, kept for safety
    return (p2 > q2d) ? sp : sq;
}

BigInt floor_quad(const BigInt& a, const BigInt& b, const BigInt& c, std::int64_t d) {
    using boost::multiprecision::sqrt;
    auto floor_div = [](const BigInt& n, const BigInt& m) {  // m > 0
        BigInt q = n / m, r = n % m;
        if (r != 0 && n < 0) --q;
        return q;
    };
    if (b == 0) return floor_div(a, c);
    BigInt n = b * b * d;
    BigInt s = sqrt(n);  // floor of the integer square root
    if (b > 0) {
        // b√d ∈ [s, s+1); the value lies in [(a+s)/c, (a+s+1)/c) which
        // contains no integer past floor((a+s)/c).
        return floor_div(a + s, c);
    }
    // b√d ∈ (-(s+1), -s]; exact when n is a perfect square.
    BigInt g = a - s;
    if (s * s == n) return floor_div(g, c);
    if (g % c == 0) return g / c - 1;  // value strictly below g/c
    return floor_div(g, c);
}

std::string QuadExt::to_decimal(unsigned digits) const {
    if (digits < 1) digits = 1;
    // Scale by 10^digits, round to nearest via floor(x*10^k + 1/2), print.
    BigInt scale = 1;
    for (unsigned i = 0; i < digits; ++i) scale *= 10;
    // x*10^k + 1/2 = (A + B√d)/C with integer A, B, C.
    BigRational p = rat_ * scale + BigRational(1, 2);
    BigRational q = rad_ * scale;
    BigInt C = boost::multiprecision::lcm(denominator(p), denominator(q));
    BigInt A = numerator(p) * (C / denominator(p));
    BigInt B = numerator(q) * (C / denominator(q));
    BigInt n = floor_quad(A, B, C, disc_);

    bool neg = n < 0;
    if (neg) n = -n;
    std::string raw = n.str();
    if (raw.size() <= digits) raw.insert(0, digits + 1 - raw.size(), '0');
    std::string out;
    if (neg) out += '-';
    out += raw.substr(0, raw.size() - digits);
    out += '.';
    out += raw.substr(raw.size() - digits);
    return out;
}

double QuadExt::to_double() const {
    double v = rat_.convert_to<double>();
    if (rad_ != 0)
        v += rad_.convert_to<double>() * std::sqrt(static_cast<double>(disc_));
    return v;
}

std::optional<BigRational> rational_sqrt(const BigRational& x) {
    using boost::multiprecision::sqrt;
    if (x < 0) return std::nullopt;
    if (x == 0) return BigRational(0);
    BigInt sn = sqrt(numerator(x)), sd = sqrt(denominator(x));
    if (sn * sn != numerator(x) || sd * sd != denominator(x)) return std::nullopt;
    return BigRational(sn, sd);
}

std::optional<QuadExt> quad_sqrt(const QuadExt& x, std::int64_t field_disc) {
    if (x.sign() < 0) return std::nullopt;
    if (x.is_zero()) return QuadExt(0);
    // y = u + v√d with y² = x: u² + v²d = p and 2uv = q.
    if (x.rad() == 0) {
        if (auto u = rational_sqrt(x.rat())) return QuadExt(*u);
        if (field_disc > 1) {  // maybe y = v√d with v²d = p
            if (auto v = rational_sqrt(x.rat() / field_disc))
                return QuadExt(0, *v, field_disc);
        }
        return std::nullopt;
    }
    // u² solves 4t² − 4pt + q²d = 0, so u² = (p ± √(p²−q²d))/2 with the
    // inner root rational.
    auto inner = rational_sqrt(x.norm());
    if (!inner) return std::nullopt;
    for (int s : {1, -1}) {
        BigRational u2 = (x.rat() + BigRational(s) * (*inner)) / 2;
        auto u = rational_sqrt(u2);
        if (!u || *u == 0) continue;
        BigRational v = x.rad() / (2 * (*u));
        QuadExt y(*u, v, x.disc());
        if (y.sign() < 0) y = -y;
        if (y * y == x) return y;
    }
    return std::nullopt;
}

std::string QuadExt::str() const {
    if (rad_ == 0) return rational_to_string(rat_);
    std::string radical = "√" + std::to_string(disc_);
    std::string qpart;
    if (rad_ == 1)
        qpart = radical;
    else if (rad_ == -1)
        qpart = "-" + radical;
    else
        qpart = rational_to_string(rad_) + radical;
    if (rat_ == 0) return qpart;
    std::string out = rational_to_string(rat_);
    if (qpart[0] != '-') out += '+';
    return out + qpart;
}

}  // namespace k3dyn
