#pragma once

#include <map>
#include <string>
#include <vector>

#include "bihom/algebra.hpp"
#include "bihom/report.hpp"

namespace bihom {

/// Sparse Laurent polynomial in t; zero coefficients are never stored.
class LaurentPoly {
   public:
    LaurentPoly() = default;
    static LaurentPoly monomial(const Rational& c, long exponent);

    const std::map<long, Rational>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Rational coefficient(long exponent) const;

    LaurentPoly& operator+=(const LaurentPoly& rhs);
    friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
    friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    std::string to_string() const;

   private:
    void add_term(long exponent, const Rational& c);
    std::map<long, Rational> terms_;
};

struct LaurentComponent {
    Element element;
    LaurentPoly poly;
};

/// [x (x) f, y (x) g] = [x, y] (x) fg. When [x,y] is homogeneous the result
/// has a single component; otherwise one component per degree present.
std::vector<LaurentComponent> laurent_bracket(const ColourAlgebra& a, const Element& x, const LaurentPoly& f,
                                              const Element& y, const LaurentPoly& g);

/// General element of A (x) Q[t, 1/t] stored as exponent -> coefficient vector.
using LaurentElement = std::map<long, Element>;

LaurentElement tensor(const Element& x, const LaurentPoly& f);

struct LaurentSample {
    Element x;
    LaurentPoly f;
};

/// Checks BiHom-skewsymmetry on every ordered pair and eps-BiHom-Jacobi on
/// every ordered triple of the samples, with maps alpha (x) id and beta (x) id.
AxiomReport check_laurent_samples(const ColourAlgebra& a, const std::vector<LaurentSample>& samples);

}  // namespace bihom
