#include "bihom/admissibility.hpp"

#include <stdexcept>

#include "bihom/axioms.hpp"
#include "bihom/errors.hpp"

namespace bihom {

std::vector<Permutation3> Permutation3::all() {
    return {id(), s1(), s2(), s1s2(), s2s1(), s2s1s2()};
}

int Permutation3::sign() const {
    int inversions = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) inversions += image[i] > image[j];
    return inversions % 2 ? -1 : 1;
}

Permutation3 Permutation3::compose(const Permutation3& other) const {
    // this(other(x)): position p of the result holds other(x)[image[p]-1].
    Permutation3 out;
    for (int p = 0; p < 3; ++p) out.image[p] = other.image[image[p] - 1];
    return out;
}

std::string Permutation3::name() const {
    if (*this == id()) return "Id";
    if (*this == s1()) return "s1";
    if (*this == s2()) return "s2";
    if (*this == s1s2()) return "s1s2";
    if (*this == s2s1()) return "s2s1";
    return "s2s1s2";
}

Subgroup parse_subgroup(std::string_view text) {
    if (text.size() == 2 && (text[0] == 'G' || text[0] == 'g') && text[1] >= '1' && text[1] <= '6')
        return static_cast<Subgroup>(text[1] - '0');
    throw std::invalid_argument("subgroup must be one of G1..G6, got '" + std::string(text) + "'");
}

std::string to_string(Subgroup g) { return "G" + std::to_string(static_cast<int>(g)); }

std::vector<Permutation3> elements(Subgroup g) {
    using P = Permutation3;
    switch (g) {
        case Subgroup::G1: return {P::id()};
        case Subgroup::G2: return {P::id(), P::s1()};
        case Subgroup::G3: return {P::id(), P::s2()};
        case Subgroup::G4: return {P::id(), P::s2s1s2()};
        case Subgroup::G5: return {P::id(), P::s1s2(), P::s2s1()};
        case Subgroup::G6: return P::all();
    }
    return {};
}

Element associator(const ColourAlgebra& a, const Element& x, const Element& y, const Element& z) {
    Element out = a.multiply(a.alpha().apply(x), a.multiply(y, z));
    axpy(out, -1, a.multiply(a.multiply(x, y), a.beta().apply(z)));
    return out;
}

Rational perm_degree(const Bicharacter& eps, const Permutation3& p, const std::array<GroupElement, 3>& degrees) {
    int value = 1;
    for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j) {
            int pos_i = 0, pos_j = 0;
            for (int q = 0; q < 3; ++q) {
                if (p.image[q] == i) pos_i = q;
                if (p.image[q] == j) pos_j = q;
            }
            if (pos_j < pos_i) value *= eps.sign(degrees[i - 1], degrees[j - 1]);
        }
    return value;
}

Rational perm_degree_by_composition(const Bicharacter& eps, const Permutation3& p,
                                    const std::array<GroupElement, 3>& degrees) {
    // Words read left to right as compositions, so the last letter acts first.
    std::vector<int> word;
    if (p == Permutation3::s1()) word = {1};
    if (p == Permutation3::s2()) word = {2};
    if (p == Permutation3::s1s2()) word = {1, 2};
    if (p == Permutation3::s2s1()) word = {2, 1};
    if (p == Permutation3::s2s1s2()) word = {2, 1, 2};
    Rational value = 1;
    std::array<GroupElement, 3> current = degrees;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        int i = *it;
        value *= eps(current[i - 1], current[i]);
        std::swap(current[i - 1], current[i]);
    }
    return value;
}

namespace {

struct Maps {
    Matrix a, b, ai, b2, aib2, ab, a2, aib3;
    explicit Maps(const ColourAlgebra& alg) {
        a = alg.alpha();
        b = alg.beta();
        ai = invert(a);
        b2 = b * b;
        aib2 = ai * b2;
        ab = a * b;
        a2 = a * a;
        aib3 = aib2 * b;
    }
};

void require_regular(const ColourAlgebra& a, const char* what) {
    if (!is_invertible(a.alpha()) || !is_invertible(a.beta()))
        throw SingularMatrixError(std::string(what) + ": alpha and beta must be invertible");
}

Witness witness(const ColourAlgebra& a, std::initializer_list<std::size_t> idx, const Element& d) {
    Witness w;
    for (auto i : idx) w.tuple.push_back(a.basis().name(i));
    w.defect = labelled(d, a.basis().names());
    return w;
}

}  // namespace

Element cyclic_S(const ColourAlgebra& a, const Element& x, const Element& y, const Element& z) {
    require_regular(a, "cyclic_S");
    if (!check_multiplicative(a, a.alpha(), "alpha").passed || !check_multiplicative(a, a.beta(), "beta").passed)
        throw ValidationError("cyclic_S: alpha and beta must be multiplicative");
    Maps m(a);
    Matrix bi = invert(m.b);
    Matrix aib = m.ai * m.b;
    Matrix abi = m.a * bi;
    const std::array<const Element*, 3> v{&x, &y, &z};
    std::array<GroupElement, 3> d{a.degree_of(x), a.degree_of(y), a.degree_of(z)};
    const auto& G = a.basis().group();

    Element s_assoc(a.dim()), s_bracket(a.dim());
    for (int c = 0; c < 3; ++c) {
        const Element& p = *v[c];
        const Element& q = *v[(c + 1) % 3];
        const Element& r = *v[(c + 2) % 3];
        Rational e = a.eps()(d[(c + 2) % 3], d[c]);
        axpy(s_assoc, e, associator(a, m.aib2.apply(p), m.b.apply(q), m.a.apply(r)));

        Element u = m.b2.apply(p);
        Element w = a.multiply(m.b.apply(q), m.a.apply(r));
        Element br = a.multiply(u, w);
        axpy(br, -a.eps()(d[c], G.add(d[(c + 1) % 3], d[(c + 2) % 3])), a.multiply(aib.apply(w), abi.apply(u)));
        axpy(s_bracket, e, br);
    }
    if (s_assoc != s_bracket)
        throw std::logic_error("cyclic_S: associator and bracket forms disagree");
    return s_assoc;
}

Element g_signed_sum(const ColourAlgebra& a, Subgroup g, std::size_t i, std::size_t j, std::size_t k) {
    require_regular(a, "g_signed_sum");
    Maps m(a);
    std::array<std::size_t, 3> idx{i, j, k};
    std::array<GroupElement, 3> deg{a.basis().degree(i), a.basis().degree(j), a.basis().degree(k)};
    Element out(a.dim());
    for (const auto& p : elements(g)) {
        auto u = p.apply(idx);
        Rational coeff = p.sign() * perm_degree(a.eps(), p, deg);
        axpy(out, coeff, associator(a, m.aib2.column(u[0]), m.b.column(u[1]), m.a.column(u[2])));
    }
    return out;
}

Element g_expanded(const ColourAlgebra& a, Subgroup g, std::size_t i, std::size_t j, std::size_t k) {
    require_regular(a, "g_expanded");
    Maps m(a);
    auto mu = [&](const Element& p, const Element& q) { return a.multiply(p, q); };
    // T(u,v,w) = beta^2 u (beta v alpha w) - (alpha^-1 beta^2 u beta v) alpha beta w
    auto T = [&](std::size_t u, std::size_t v, std::size_t w) {
        Element t = mu(m.b2.column(u), mu(m.b.column(v), m.a.column(w)));
        axpy(t, -1, mu(mu(m.aib2.column(u), m.b.column(v)), m.ab.column(w)));
        return t;
    };
    const std::size_t x = i, y = j, z = k;
    auto e = [&](std::size_t p, std::size_t q) { return Rational(a.sign(p, q)); };
    Element id = T(x, y, z);
    auto s1 = [&] { return scaled(T(y, x, z), -e(x, y)); };
    auto s2 = [&] { return scaled(T(x, z, y), -e(y, z)); };
    auto s13 = [&] { return scaled(T(z, y, x), -e(x, y) * e(y, z) * e(x, z)); };
    auto s1s2 = [&] { return scaled(T(z, x, y), e(x, z) * e(y, z)); };
    auto s2s1 = [&] { return scaled(T(y, z, x), e(x, y) * e(x, z)); };
    switch (g) {
        case Subgroup::G1: return id;
        case Subgroup::G2: return id + s1();
        case Subgroup::G3: return id + s2();
        case Subgroup::G4: return id + s13();
        case Subgroup::G5: return id + s1s2() + s2s1();
        case Subgroup::G6: return id + s1() + s2() + s13() + s1s2() + s2s1();
    }
    return id;
}

Element g_printed_condition(const ColourAlgebra& a, Subgroup g, std::size_t i, std::size_t j, std::size_t k) {
    require_regular(a, "g_printed_condition");
    Maps m(a);
    const auto& G = a.basis().group();
    auto mu = [&](const Element& p, const Element& q) { return a.multiply(p, q); };
    const std::size_t x = i, y = j, z = k;
    auto e = [&](std::size_t p, std::size_t q) { return Rational(a.sign(p, q)); };
    const auto& dx = a.basis().degree(x);
    const auto& dy = a.basis().degree(y);
    const auto& dz = a.basis().degree(z);

    // Common left part: beta^2 x (beta y alpha z) - (alpha^-1 beta^2 x beta y) alpha beta z.
    Element base = mu(m.b2.column(x), mu(m.b.column(y), m.a.column(z)));
    axpy(base, -1, mu(mu(m.aib2.column(x), m.b.column(y)), m.ab.column(z)));

    switch (g) {
        case Subgroup::G2: {
            Element r = mu(m.ab.column(y), mu(m.aib2.column(x), m.a.column(z)));
            axpy(r, -1, mu(mu(m.b.column(y), m.aib2.column(x)), m.ab.column(z)));
            axpy(base, -e(x, y), r);
            return base;
        }
        case Subgroup::G3: {
            Element r = mu(m.b2.column(x), mu(m.b.column(z), m.a.column(y)));
            axpy(r, -1, mu(mu(m.aib2.column(x), m.a.column(z)), m.b2.column(y)));
            axpy(base, -e(y, z), r);
            return base;
        }
        case Subgroup::G4: {
            Element r = mu(m.a2.column(z), mu(m.b.column(y), m.aib2.column(x)));
            axpy(r, -1, mu(mu(m.a.column(z), m.b.column(y)), m.aib3.column(x)));
            axpy(base, -e(x, y) * e(y, z) * e(x, z), r);
            return base;
        }
        case Subgroup::G5: {
            Rational exyz = a.eps()(dx, G.add(dy, dz));
            Rational exy_z = a.eps()(G.add(dx, dy), dz);
            Element lhs = mu(m.b2.column(x), mu(m.b.column(y), m.a.column(z)));
            axpy(lhs, -exyz, mu(m.ab.column(y), mu(m.a.column(z), m.aib2.column(x))));
            axpy(lhs, -exy_z, mu(m.a2.column(z), mu(m.aib2.column(x), m.b.column(y))));
            Element rhs = mu(mu(m.aib2.column(x), m.b.column(y)), m.ab.column(z));
            axpy(rhs, -exyz, mu(mu(m.b.column(y), m.a.column(z)), m.aib3.column(x)));
            axpy(rhs, -exy_z, mu(mu(m.a.column(z), m.aib2.column(x)), m.b2.column(y)));
            return lhs - rhs;
        }
        case Subgroup::G1:
        case Subgroup::G6: return g_signed_sum(a, g, i, j, k);
    }
    return base;
}

AxiomReport check_g_associative(const ColourAlgebra& a, Subgroup g) {
    require_regular(a, "check_g_associative");
    AxiomReport rep;
    rep.subject = to_string(g) + "-BiHom-associativity";
    std::optional<Witness> fail, printed;
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Element s = g_signed_sum(a, g, i, j, k);
                if (s != g_expanded(a, g, i, j, k))
                    throw std::logic_error("check_g_associative: signed sum and expansion disagree");
                if (!fail && !is_zero(s)) fail = witness(a, {i, j, k}, s);
                if (!printed) {
                    Element p = g_printed_condition(a, g, i, j, k);
                    if (!is_zero(p)) printed = witness(a, {i, j, k}, p);
                }
            }
    rep.add("g_associative", !fail, fail);
    auto& flag = rep.add_flag("printed_condition", !printed);
    flag.witness = printed;
    return rep;
}

AxiomReport check_s_symmetry(const ColourAlgebra& a) {
    AxiomReport rep;
    rep.subject = "S-symmetry";
    std::optional<Witness> fail;
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n && !fail; ++i)
        for (std::size_t j = 0; j < n && !fail; ++j)
            for (std::size_t k = 0; k < n && !fail; ++k) {
                Element x = a.basis_vector(i), y = a.basis_vector(j), z = a.basis_vector(k);
                Element d = cyclic_S(a, x, y, z);
                axpy(d, -Rational(a.sign(i, j) * a.sign(j, k) * a.sign(k, i)), cyclic_S(a, x, z, y));
                if (!is_zero(d)) fail = witness(a, {i, j, k}, d);
            }
    rep.add("s_symmetry", !fail, fail);
    return rep;
}

AxiomReport check_flexible(const ColourAlgebra& a) {
    AxiomReport rep;
    rep.subject = "flexibility";
    const std::size_t n = a.dim();
    std::optional<Witness> diag, polar;
    for (std::size_t i = 0; i < n && !diag; ++i)
        for (std::size_t j = 0; j < n && !diag; ++j) {
            Element x = a.basis_vector(i);
            Element d = associator(a, x, a.basis_vector(j), x);
            if (!is_zero(d)) diag = witness(a, {i, j, i}, d);
        }
    rep.add("flexible", !diag, diag);
    for (std::size_t i = 0; i < n && !polar; ++i)
        for (std::size_t j = 0; j < n && !polar; ++j)
            for (std::size_t k = 0; k < n && !polar; ++k) {
                if (a.basis().degree(i) != a.basis().degree(k)) continue;
                Element x = a.basis_vector(i), y = a.basis_vector(j), z = a.basis_vector(k);
                Element d = associator(a, x, y, z) + associator(a, z, y, x);
                if (!is_zero(d)) polar = witness(a, {i, j, k}, d);
            }
    auto& flag = rep.add_flag("flexible_polarized", !polar);
    flag.witness = polar;
    return rep;
}

ColourAlgebra primed_bracket(const ColourAlgebra& a) {
    require_regular(a, "primed_bracket");
    const std::size_t n = a.dim();
    Matrix left = invert(a.alpha()) * a.beta();
    Matrix right = a.alpha() * invert(a.beta());
    std::vector<Element> product(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Element c = a.structure(i, j);
            axpy(c, -a.sign(i, j), a.multiply(left.column(j), right.column(i)));
            product[i * n + j] = std::move(c);
        }
    return a.with_product(std::move(product));
}

}  // namespace bihom
