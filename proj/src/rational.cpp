#include "bihom/rational.hpp"

#include <cctype>
#include <stdexcept>

#include "bihom/errors.hpp"

namespace bihom {

namespace {

bool is_integer_text(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    // GMP accepts a leading '+' only on some versions; strip it ourselves.
    if (!is_integer_text(num) || !is_integer_text(den) || den.front() == '-' || den.front() == '+')
        throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    if (num.front() == '+') num.remove_prefix(1);
    mpz_class p(std::string(num), 10);
    mpz_class q(std::string(den), 10);
    if (q == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& value) { return value.get_str(); }

bool is_zero(const Vector& v) {
    for (const auto& x : v)
        if (sgn(x) != 0) return false;
    return true;
}

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
    Vector v(n);
    v.at(i) = 1;
    return v;
}

void axpy(Vector& y, const Rational& c, const Vector& x) {
    if (y.size() != x.size()) throw DimensionError("axpy: length mismatch");
    if (sgn(c) == 0) return;
    for (std::size_t i = 0; i < y.size(); ++i)
        if (sgn(x[i]) != 0) y[i] += c * x[i];
}

Vector scaled(const Vector& x, const Rational& c) {
    Vector out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = c * x[i];
    return out;
}

Vector operator+(const Vector& a, const Vector& b) {
    Vector out = a;
    axpy(out, 1, b);
    return out;
}

Vector operator-(const Vector& a, const Vector& b) {
    Vector out = a;
    axpy(out, -1, b);
    return out;
}

}  // namespace bihom
