#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace knottunnel {

/// Arbitrary-precision signed integer. All arithmetic in this library is
/// exact; no floating point is used anywhere.
using Integer = boost::multiprecision::cpp_int;

/// A reduced fraction. The sign lives on the numerator and the denominator
/// is strictly positive; zero is represented as 0/1.
struct Fraction {
    Integer num;
    Integer den;

    bool operator==(const Fraction& other) const = default;
};

/// Canonicalize num/den. Throws std::domain_error when den == 0.
Fraction reduce(Integer num, Integer den);

/// A slope in Q/Z, represented by the unique value in [0,1).
/// Invariant: 0 <= num < den and gcd(num, den) = 1.
struct SimpleSlope {
    Integer num;
    Integer den;

    bool operator==(const SimpleSlope& other) const = default;
};

/// Reduce num/den into [0,1). Throws std::domain_error when den == 0.
SimpleSlope simple_slope(Integer num, Integer den);

/// The Q/Z negation [s] -> [-s], i.e. num/den -> (den-num)/den.
SimpleSlope negate(const SimpleSlope& s);

std::string to_string(const Fraction& f);
std::string to_string(const SimpleSlope& s);

/// A 2x2 integer matrix [[a,b],[c,d]].
struct Mat2 {
    Integer a;
    Integer b;
    Integer c;
    Integer d;

    bool operator==(const Mat2& other) const = default;
};

Mat2 mat_mul(const Mat2& lhs, const Mat2& rhs);
Mat2 operator*(const Mat2& lhs, const Mat2& rhs);

Integer det(const Mat2& m);

/// The 2x2 permanent a*d + b*c. For a unimodular matrix this is always odd,
/// since the permanent and the determinant agree mod 2.
Integer permanent(const Mat2& m);

Mat2 mat2_identity();

/// U = [[1,1],[0,1]] and L = [[1,0],[1,1]].
Mat2 mat2_u();
Mat2 mat2_l();

std::string to_string(const Mat2& m);

/// A continued fraction [n_1, n_2, ..., n_k] with all terms >= 1 and the
/// last term >= 2 whenever k >= 2.
struct CF {
    std::vector<Integer> terms;

    bool operator==(const CF& other) const = default;
};

/// Euclidean expansion of p/q for p > q >= 1 with gcd(p,q) = 1. A trailing
/// term of 1 is folded into its predecessor so that n_k >= 2 when k >= 2.
CF cf_expand(Integer p, Integer q);

/// Evaluate a continued fraction back to a fraction.
Fraction cf_value(const CF& cf);

std::string to_string(const CF& cf);

/// Fibonacci numbers with F_1 = F_2 = 1. Throws std::domain_error for n < 1.
Integer fibonacci(const Integer& n);

} // namespace knottunnel
