#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace incid4 {

// Exact rational scalar. gmpxx keeps values in canonical reduced form with a
// positive denominator after every arithmetic operation.
using Scalar = mpq_class;

using Vec4 = std::array<Scalar, 4>;
using Point4 = Vec4;

// "num/den" or "num"; accepts decimal fractions such as "0.125" and "-1e-3".
Scalar parse_scalar(std::string_view text);
std::string to_string(const Scalar& value);
std::string to_string(const Vec4& v);

int sign(const Scalar& value);
Scalar scalar_from_int(std::int64_t v);
Scalar scalar_from_double(double v);  // exact binary value of v

Vec4 operator+(const Vec4& a, const Vec4& b);
Vec4 operator-(const Vec4& a, const Vec4& b);
Vec4 operator*(const Scalar& s, const Vec4& a);
Scalar dot(const Vec4& a, const Vec4& b);
bool is_zero(const Vec4& v);

}  // namespace incid4
