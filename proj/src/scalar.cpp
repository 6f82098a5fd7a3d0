#include "lya/scalar.hpp"

#include "lya/errors.hpp"

#include <cctype>

namespace lya {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty()) return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text)
{
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    std::string_view sign;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        sign = s.substr(0, 1);
        s.remove_prefix(1);
    }
    auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw ParseError("not a rational number: \"" + std::string(text) + "\"");
    mpz_class p{std::string(num)}, q{std::string(den)};
    if (q == 0) throw ParseError("zero denominator: \"" + std::string(text) + "\"");
    Scalar r(p, q);
    r.canonicalize();
    if (sign == "-") r = -r;
    return r;
}

std::string to_string(const Scalar& s) { return s.get_str(); }

bool is_zero(const Vector& v)
{
    for (const auto& x : v)
        if (sgn(x) != 0) return false;
    return true;
}

Vector zeros(std::size_t n) { return Vector(n); }

Vector unit(std::size_t n, std::size_t i)
{
    Vector v(n);
    v[i] = 1;
    return v;
}

Vector add(const Vector& a, const Vector& b)
{
    Vector r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vector sub(const Vector& a, const Vector& b)
{
    Vector r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vector scale(const Scalar& s, const Vector& a)
{
    Vector r = a;
    for (auto& x : r) x *= s;
    return r;
}

void axpy(Vector& a, const Scalar& s, const Vector& b)
{
    if (sgn(s) == 0) return;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (sgn(b[i]) != 0) a[i] += s * b[i];
}

}  // namespace lya
