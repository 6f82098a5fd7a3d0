#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace lya {

// mpq_class keeps numerator/denominator canonical after every operation.
using Scalar = mpq_class;
using Vector = std::vector<Scalar>;

// Accepts "p", "-p", "p/q". Throws ParseError on anything else or q == 0.
Scalar parse_scalar(std::string_view text);
std::string to_string(const Scalar& s);

inline bool is_zero(const Scalar& s) { return sgn(s) == 0; }
bool is_zero(const Vector& v);

Vector zeros(std::size_t n);
Vector unit(std::size_t n, std::size_t i);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scale(const Scalar& s, const Vector& a);
// a += s * b
void axpy(Vector& a, const Scalar& s, const Vector& b);

}  // namespace lya
