#include "knottunnel/exactnum.hpp"

#include <sstream>
#include <stdexcept>

namespace knottunnel {

namespace {

Integer gcd(Integer a, Integer b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Integer r = a % b;
        a = b;
        b = r;
    }
    return a;
}

} // namespace

Fraction reduce(Integer num, Integer den) {
    if (den == 0) {
        throw std::domain_error("reduce: zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (num == 0) {
        return Fraction{0, 1};
    }
    Integer g = gcd(num, den);
    return Fraction{num / g, den / g};
}

SimpleSlope simple_slope(Integer num, Integer den) {
    Fraction f = reduce(std::move(num), std::move(den));
    Integer r = f.num % f.den;
    if (r < 0) {
        r += f.den;
    }
    return SimpleSlope{r, f.den};
}

SimpleSlope negate(const SimpleSlope& s) {
    if (s.num == 0) {
        return s;
    }
    return SimpleSlope{s.den - s.num, s.den};
}

std::string to_string(const Fraction& f) {
    std::ostringstream os;
    os << f.num << '/' << f.den;
    return os.str();
}

std::string to_string(const SimpleSlope& s) {
    std::ostringstream os;
    os << '[' << s.num << '/' << s.den << ']';
    return os.str();
}

Mat2 mat_mul(const Mat2& lhs, const Mat2& rhs) {
    return Mat2{lhs.a * rhs.a + lhs.b * rhs.c, lhs.a * rhs.b + lhs.b * rhs.d,
                lhs.c * rhs.a + lhs.d * rhs.c, lhs.c * rhs.b + lhs.d * rhs.d};
}

Mat2 operator*(const Mat2& lhs, const Mat2& rhs) { return mat_mul(lhs, rhs); }

Integer det(const Mat2& m) { return m.a * m.d - m.b * m.c; }

Integer permanent(const Mat2& m) { return m.a * m.d + m.b * m.c; }

Mat2 mat2_identity() { return Mat2{1, 0, 0, 1}; }

Mat2 mat2_u() { return Mat2{1, 1, 0, 1}; }

Mat2 mat2_l() { return Mat2{1, 0, 1, 1}; }

std::string to_string(const Mat2& m) {
    std::ostringstream os;
    os << "[ [ " << m.a << ", " << m.b << " ], [ " << m.c << ", " << m.d
       << " ] ]";
    return os.str();
}

CF cf_expand(Integer p, Integer q) {
    if (q < 1 || p <= q) {
        throw std::domain_error("cf_expand: requires p > q >= 1");
    }
    if (gcd(p, q) != 1) {
        throw std::domain_error("cf_expand: p and q must be coprime");
    }
    CF cf;
    while (q != 0) {
        cf.terms.push_back(p / q);
        Integer r = p % q;
        p = q;
        q = r;
    }
    // Euclid never emits a trailing 1 here (p > q), but fold defensively for
    // term lists arriving from other constructions.
    if (cf.terms.size() >= 2 && cf.terms.back() == 1) {
        cf.terms.pop_back();
        cf.terms.back() += 1;
    }
    return cf;
}

Fraction cf_value(const CF& cf) {
    if (cf.terms.empty()) {
        throw std::domain_error("cf_value: empty continued fraction");
    }
    Integer num = cf.terms.back();
    Integer den = 1;
    for (auto it = cf.terms.rbegin() + 1; it != cf.terms.rend(); ++it) {
        // [.., n, num/den] = n + den/num
        Integer new_num = *it * num + den;
        den = num;
        num = new_num;
    }
    return reduce(num, den);
}

std::string to_string(const CF& cf) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < cf.terms.size(); ++i) {
        if (i > 0) os << ',';
        os << cf.terms[i];
    }
    os << ']';
    return os.str();
}

Integer fibonacci(const Integer& n) {
    if (n < 1) {
        throw std::domain_error("fibonacci: requires n >= 1");
    }
    Integer a = 1; // F_1
    Integer b = 1; // F_2
    for (Integer i = 2; i < n; ++i) {
        Integer next = a + b;
        a = b;
        b = next;
    }
    return n == 1 ? a : b;
}

} // namespace knottunnel
