#include "bihom/cohomology.hpp"

#include <set>

#include "bihom/axioms.hpp"
#include "bihom/errors.hpp"

namespace bihom {

Matrix Representation::action(const Element& x) const {
    if (x.size() != rho.size()) throw DimensionError("action: element length does not match the algebra");
    Matrix out(space.size(), space.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        if (sgn(x[i]) != 0) out += rho[i] * x[i];
    return out;
}

namespace {

void require_shapes(const Representation& rep) {
    const std::size_t m = rep.space.size();
    if (!(rep.space.group() == rep.algebra.basis().group()))
        throw DimensionError("representation space and algebra are graded by different groups");
    if (rep.rho.size() != rep.algebra.dim()) throw DimensionError("rho needs one matrix per algebra basis vector");
    for (const auto& r : rep.rho)
        if (r.rows() != m || r.cols() != m) throw DimensionError("rho matrices must be dim V x dim V");
    if (rep.alpha_v.rows() != m || rep.alpha_v.cols() != m || rep.beta_v.rows() != m || rep.beta_v.cols() != m)
        throw DimensionError("alpha_V and beta_V must be dim V x dim V");
}

// First nonzero column of m as a witness (names..., v).
std::optional<Witness> first_column(const Matrix& m, std::vector<std::string> prefix, const GradedBasis& space) {
    for (std::size_t b = 0; b < m.cols(); ++b) {
        Element col = m.column(b);
        if (is_zero(col)) continue;
        prefix.push_back(space.name(b));
        return Witness{std::move(prefix), labelled(col, space.names())};
    }
    return std::nullopt;
}

std::vector<std::string> names_of(const ColourAlgebra& a, std::initializer_list<std::size_t> idx) {
    std::vector<std::string> out;
    for (auto i : idx) out.push_back(a.basis().name(i));
    return out;
}

}  // namespace

AxiomReport validate_representation(const Representation& rep) {
    require_shapes(rep);
    const auto& a = rep.algebra;
    const auto& V = rep.space;
    AxiomReport out;
    out.subject = "representation";
    out.verdicts.push_back(check_map_even(V, rep.alpha_v, "alpha_v_even"));
    out.verdicts.push_back(check_map_even(V, rep.beta_v, "beta_v_even"));
    out.verdicts.push_back(check_maps_commute(V, rep.alpha_v, rep.beta_v, "alpha_v_beta_v_commute"));

    std::optional<Witness> even;
    for (std::size_t i = 0; i < a.dim() && !even; ++i) {
        const Matrix& r = rep.rho[i];
        Matrix stray(V.size(), V.size());
        for (std::size_t p = 0; p < V.size(); ++p)
            for (std::size_t q = 0; q < V.size(); ++q)
                if (sgn(r(p, q)) != 0 && V.degree(p) != V.group().add(V.degree(q), a.basis().degree(i)))
                    stray(p, q) = r(p, q);
        even = first_column(stray, names_of(a, {i}), V);
    }
    out.add("rho_even", !even, even);

    std::vector<Matrix> rho_alpha, rho_beta;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        rho_alpha.push_back(rep.action(a.alpha().column(i)));
        rho_beta.push_back(rep.action(a.beta().column(i)));
    }
    std::optional<Witness> wa, wb;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (!wa) wa = first_column(rho_alpha[i] * rep.alpha_v - rep.alpha_v * rep.rho[i], names_of(a, {i}), V);
        if (!wb) wb = first_column(rho_beta[i] * rep.beta_v - rep.beta_v * rep.rho[i], names_of(a, {i}), V);
    }
    out.add("rho_alpha", !wa, wa);
    out.add("rho_beta", !wb, wb);

    // rho([beta x, y]) beta_V = rho(alpha beta x) rho(y) - eps(x,y) rho(beta y) rho(alpha x)
    Matrix ab = a.alpha() * a.beta();
    std::optional<Witness> wbr;
    for (std::size_t i = 0; i < a.dim() && !wbr; ++i) {
        Element bx = a.beta().column(i);
        Matrix rho_abx = rep.action(ab.column(i));
        for (std::size_t j = 0; j < a.dim() && !wbr; ++j) {
            Matrix lhs = rep.action(a.multiply(bx, a.basis_vector(j))) * rep.beta_v;
            Matrix rhs = rho_abx * rep.rho[j] - Rational(a.sign(i, j)) * (rho_beta[j] * rho_alpha[i]);
            wbr = first_column(lhs - rhs, names_of(a, {i, j}), V);
        }
    }
    out.add("rho_bracket", !wbr, wbr);
    return out;
}

Representation adjoint_rep(const ColourAlgebra& a, int s, int l) {
    Matrix phi = power(a.alpha(), s) * power(a.beta(), l);
    std::vector<Matrix> rho;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        Element x = phi.column(i);
        std::vector<Vector> cols;
        for (std::size_t j = 0; j < a.dim(); ++j) cols.push_back(a.multiply(x, a.basis_vector(j)));
        rho.push_back(Matrix::from_columns(a.dim(), cols));
    }
    return Representation{a, a.basis(), std::move(rho), a.alpha(), a.beta()};
}

DualResult dual_rep(const Representation& rep) {
    require_shapes(rep);
    const auto& a = rep.algebra;
    const auto& V = rep.space;
    std::vector<std::string> names;
    std::vector<GroupElement> degrees;
    for (std::size_t i = 0; i < V.size(); ++i) {
        names.push_back(V.name(i) + "*");
        degrees.push_back(V.group().negate(V.degree(i)));
    }
    std::vector<Matrix> rho;
    for (const auto& r : rep.rho) rho.push_back(r.transpose() * Rational(-1));
    DualResult out{Representation{a, GradedBasis(V.group(), names, degrees), std::move(rho), rep.alpha_v.transpose(),
                                  rep.beta_v.transpose()},
                   {}};
    out.report.subject = "dual representation";

    // beta_V rho([beta x, y]) = rho(alpha x) rho(beta y) - eps(x,y) rho(y) rho(alpha beta x)
    Matrix ab = a.alpha() * a.beta();
    std::optional<Witness> w;
    for (std::size_t i = 0; i < a.dim() && !w; ++i) {
        Matrix rho_ax = rep.action(a.alpha().column(i));
        Matrix rho_abx = rep.action(ab.column(i));
        Element bx = a.beta().column(i);
        for (std::size_t j = 0; j < a.dim() && !w; ++j) {
            Matrix lhs = rep.beta_v * rep.action(a.multiply(bx, a.basis_vector(j)));
            Matrix rhs = rho_ax * rep.action(a.beta().column(j)) - Rational(a.sign(i, j)) * (rep.rho[j] * rho_abx);
            w = first_column(lhs - rhs, names_of(a, {i, j}), V);
        }
    }
    out.report.add("eq31", !w, w);
    AxiomReport cand = validate_representation(out.candidate);
    std::string failing;
    for (const auto& v : cand.verdicts)
        if (!v.passed) failing += (failing.empty() ? "" : ", ") + v.name;
    out.report.add_flag("candidate_is_representation", cand.passed(), failing.empty() ? "" : "fails " + failing);
    return out;
}

CanonicalTuple canonicalize(const ColourAlgebra& a, std::vector<std::size_t> tuple) {
    int sign = 1;
    const std::size_t n = tuple.size();
    for (std::size_t pass = 0; pass < n; ++pass)
        for (std::size_t p = 0; p + 1 < n - pass; ++p)
            if (tuple[p] > tuple[p + 1]) {
                sign *= -a.sign(tuple[p], tuple[p + 1]);
                std::swap(tuple[p], tuple[p + 1]);
            }
    for (std::size_t p = 0; p + 1 < n; ++p)
        if (tuple[p] == tuple[p + 1] && a.sign(tuple[p], tuple[p]) == 1) return {0, std::move(tuple)};
    return {sign, std::move(tuple)};
}

std::vector<std::vector<std::size_t>> canonical_tuples(const ColourAlgebra& a, int n) {
    std::vector<std::vector<std::size_t>> out;
    if (n < 0) return out;
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (cur.size() == static_cast<std::size_t>(n)) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < a.dim(); ++i) {
            if (!cur.empty() && cur.back() == i && a.sign(i, i) == 1) continue;
            cur.push_back(i);
            self(self, i);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

Element evaluate(const Representation& rep, const Cochain& f, const std::vector<std::size_t>& tuple) {
    if (tuple.size() != static_cast<std::size_t>(f.n)) throw DimensionError("cochain evaluated on a tuple of wrong length");
    auto c = canonicalize(rep.algebra, tuple);
    if (c.sign == 0) return Element(rep.space.size());
    auto it = f.values.find(c.tuple);
    if (it == f.values.end()) return Element(rep.space.size());
    return c.sign == 1 ? it->second : scaled(it->second, -1);
}

Element evaluate(const Representation& rep, const Cochain& f, const std::vector<Element>& args) {
    if (args.size() != static_cast<std::size_t>(f.n)) throw DimensionError("cochain evaluated on wrong number of arguments");
    Element out(rep.space.size());
    std::vector<std::size_t> idx(args.size());
    auto rec = [&](auto&& self, std::size_t pos, const Rational& coeff) -> void {
        if (pos == args.size()) {
            axpy(out, coeff, evaluate(rep, f, idx));
            return;
        }
        for (std::size_t i = 0; i < args[pos].size(); ++i) {
            if (sgn(args[pos][i]) == 0) continue;
            idx[pos] = i;
            Rational c = coeff * args[pos][i];
            self(self, pos + 1, c);
        }
    };
    rec(rec, 0, Rational(1));
    return out;
}

CochainSpace::CochainSpace(const Representation& rep, int n, GroupElement gamma)
    : n_(n), gamma_(std::move(gamma)), dim_v_(rep.space.size()) {
    const auto& a = rep.algebra;
    const auto& G = a.basis().group();
    if (!G.contains(gamma_)) throw DimensionError("cochain degree is not an element of " + G.signature());
    tuples_ = canonical_tuples(a, n);
    for (std::size_t t = 0; t < tuples_.size(); ++t) {
        GroupElement target = gamma_;
        for (auto i : tuples_[t]) target = G.add(target, a.basis().degree(i));
        for (std::size_t w = 0; w < dim_v_; ++w)
            if (rep.space.degree(w) == target) {
                index_[{t, w}] = coords_.size();
                coords_.emplace_back(t, w);
            }
    }
}

Cochain CochainSpace::from_coordinates(const Vector& c) const {
    if (c.size() != coords_.size()) throw DimensionError("cochain coordinates have wrong length");
    Cochain f{n_, gamma_, {}};
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (sgn(c[k]) == 0) continue;
        auto [t, w] = coords_[k];
        auto it = f.values.try_emplace(tuples_[t], Element(dim_v_)).first;
        it->second[w] = c[k];
    }
    return f;
}

Vector CochainSpace::to_coordinates(const Cochain& f) const {
    if (f.n != n_ || f.degree != gamma_) throw DimensionError("cochain does not belong to this space");
    Vector out(coords_.size());
    std::map<std::vector<std::size_t>, std::size_t> tuple_index;
    for (std::size_t t = 0; t < tuples_.size(); ++t) tuple_index[tuples_[t]] = t;
    for (const auto& [tuple, value] : f.values) {
        auto ti = tuple_index.find(tuple);
        if (ti == tuple_index.end()) {
            if (!is_zero(value)) throw ValidationError("cochain has a value on a non-canonical tuple");
            continue;
        }
        for (std::size_t w = 0; w < value.size(); ++w) {
            if (sgn(value[w]) == 0) continue;
            auto it = index_.find({ti->second, w});
            if (it == index_.end()) throw ValidationError("cochain value leaves its degree block");
            out[it->second] = value[w];
        }
    }
    return out;
}

std::vector<GroupElement> realized_degrees(const Representation& rep, int n) {
    const auto& a = rep.algebra;
    const auto& G = a.basis().group();
    std::set<GroupElement> out;
    for (const auto& t : canonical_tuples(a, n)) {
        GroupElement sum = G.zero();
        for (auto i : t) sum = G.add(sum, a.basis().degree(i));
        for (std::size_t w = 0; w < rep.space.size(); ++w) out.insert(G.subtract(rep.space.degree(w), sum));
    }
    return {out.begin(), out.end()};
}

namespace {

std::vector<Element> images(const Matrix& m, const std::vector<std::size_t>& t) {
    std::vector<Element> out;
    for (auto i : t) out.push_back(m.column(i));
    return out;
}

// Stacked defects f(m x_1, ..., m x_n) - m_V f(x) over all canonical tuples.
Vector commutation_defect(const Representation& rep, const Cochain& f, const std::vector<std::vector<std::size_t>>& tuples,
                          const Matrix& m, const Matrix& m_v) {
    Vector out;
    for (const auto& t : tuples) {
        Element d = evaluate(rep, f, images(m, t)) - m_v.apply(evaluate(rep, f, t));
        out.insert(out.end(), d.begin(), d.end());
    }
    return out;
}

}  // namespace

std::vector<Cochain> cochain_basis(const Representation& rep, int n, const GroupElement& gamma) {
    if (n < 0) return {};
    require_shapes(rep);
    CochainSpace space(rep, n, gamma);
    if (space.dim() == 0) return {};
    std::vector<Vector> cols;
    for (std::size_t c = 0; c < space.dim(); ++c) {
        Cochain u = space.from_coordinates(unit_vector(space.dim(), c));
        Vector col = commutation_defect(rep, u, space.tuples(), rep.algebra.alpha(), rep.alpha_v);
        Vector cb = commutation_defect(rep, u, space.tuples(), rep.algebra.beta(), rep.beta_v);
        col.insert(col.end(), cb.begin(), cb.end());
        cols.push_back(std::move(col));
    }
    std::size_t rows = cols.front().size();
    std::vector<Cochain> out;
    for (const auto& k : kernel_basis(Matrix::from_columns(rows, cols))) out.push_back(space.from_coordinates(k));
    return out;
}

AxiomReport check_cochain_membership(const Representation& rep, const Cochain& f) {
    AxiomReport out;
    out.subject = "cochain membership";
    auto tuples = canonical_tuples(rep.algebra, f.n);
    const auto& V = rep.space;
    auto check = [&](const Matrix& m, const Matrix& m_v, const std::string& name) {
        std::optional<Witness> w;
        for (const auto& t : tuples) {
            Element d = evaluate(rep, f, images(m, t)) - m_v.apply(evaluate(rep, f, t));
            if (is_zero(d)) continue;
            std::vector<std::string> tn;
            for (auto i : t) tn.push_back(rep.algebra.basis().name(i));
            w = Witness{tn, labelled(d, V.names())};
            break;
        }
        out.add(name, !w, w);
    };
    check(rep.algebra.alpha(), rep.alpha_v, "commutes_alpha");
    check(rep.algebra.beta(), rep.beta_v, "commutes_beta");
    return out;
}

namespace {

// Maps used by every term of the coboundary, computed once per call.
struct CoboundaryContext {
    Matrix aib;                    // alpha^-1 beta
    std::vector<Matrix> rho_phi;  // rho(alpha beta^{r+n-1} e_i)

    CoboundaryContext(const Representation& rep, int r, int n) {
        const auto& a = rep.algebra;
        aib = invert(a.alpha()) * a.beta();
        Matrix phi = a.alpha() * power(a.beta(), r + n - 1);
        for (std::size_t i = 0; i < a.dim(); ++i) rho_phi.push_back(rep.action(phi.column(i)));
    }
};

Element coboundary_value(const Representation& rep, const CoboundaryContext& ctx, const Cochain& f,
                         const std::vector<std::size_t>& x, EpsConvention conv) {
    const auto& a = rep.algebra;
    const int n = f.n;
    if (x.size() != static_cast<std::size_t>(n + 1)) throw DimensionError("coboundary evaluated on wrong tuple length");
    const auto& G = a.basis().group();
    auto deg = [&](int k) -> const GroupElement& { return a.basis().degree(x[k]); };

    Element out(rep.space.size());
    for (int t = 1; t <= n; ++t)
        for (int s = 0; s < t; ++s) {
            GroupElement e = G.zero();
            for (int k = (conv == EpsConvention::between ? s + 1 : 0); k < t; ++k) e = G.add(e, deg(k));
            Rational coeff = (t % 2 ? -1 : 1) * a.eps().sign(e, deg(t));
            std::vector<Element> args;
            for (int k = 0; k <= n; ++k) {
                if (k == t) continue;
                if (k == s)
                    args.push_back(a.multiply(ctx.aib.column(x[s]), a.basis_vector(x[t])));
                else
                    args.push_back(a.beta().column(x[k]));
            }
            axpy(out, coeff, evaluate(rep, f, args));
        }
    for (int s = 0; s <= n; ++s) {
        GroupElement e = f.degree;
        for (int k = 0; k < s; ++k) e = G.add(e, deg(k));
        Rational coeff = (s % 2 ? -1 : 1) * a.eps().sign(e, deg(s));
        std::vector<std::size_t> rest;
        for (int k = 0; k <= n; ++k)
            if (k != s) rest.push_back(x[k]);
        axpy(out, coeff, ctx.rho_phi[x[s]].apply(evaluate(rep, f, rest)));
    }
    return out;
}

}  // namespace

Element coboundary_value(const Representation& rep, int r, const Cochain& f, const std::vector<std::size_t>& x,
                         EpsConvention conv) {
    require_shapes(rep);
    return coboundary_value(rep, CoboundaryContext(rep, r, f.n), f, x, conv);
}

Cochain apply_coboundary(const Representation& rep, int r, const Cochain& f, EpsConvention conv) {
    require_shapes(rep);
    if (!is_invertible(rep.algebra.alpha())) throw SingularMatrixError("coboundary needs an invertible alpha");
    if (!check_cochain_membership(rep, f).passed())
        throw ValidationError("apply_coboundary: the cochain does not commute with the structure maps");
    const auto& a = rep.algebra;
    const auto& G = a.basis().group();
    CoboundaryContext ctx(rep, r, f.n);
    Cochain out{f.n + 1, f.degree, {}};
    for (const auto& t : canonical_tuples(a, f.n + 1)) {
        Element v = coboundary_value(rep, ctx, f, t, conv);
        if (is_zero(v)) continue;
        GroupElement target = f.degree;
        for (auto i : t) target = G.add(target, a.basis().degree(i));
        for (std::size_t w = 0; w < v.size(); ++w)
            if (sgn(v[w]) != 0 && rep.space.degree(w) != target)
                throw ValidationError("coboundary mixes degree blocks; rho is not even");
        out.values.emplace(t, std::move(v));
    }
    return out;
}

Matrix coboundary_matrix(const Representation& rep, int n, int r, const GroupElement& gamma, EpsConvention conv) {
    auto source = cochain_basis(rep, n, gamma);
    auto target = cochain_basis(rep, n + 1, gamma);
    if (n < 0) return Matrix(target.size(), 0);
    CochainSpace space(rep, n + 1, gamma);
    std::vector<Vector> tcols;
    for (const auto& g : target) tcols.push_back(space.to_coordinates(g));
    Matrix K = Matrix::from_columns(space.dim(), tcols);
    Matrix out(target.size(), source.size());
    for (std::size_t c = 0; c < source.size(); ++c) {
        Vector y = space.to_coordinates(apply_coboundary(rep, r, source[c], conv));
        auto x = solve(K, y);
        if (!x) throw ValidationError("coboundary image leaves the cochain space C^" + std::to_string(n + 1));
        for (std::size_t k = 0; k < target.size(); ++k) out(k, c) = (*x)[k];
    }
    return out;
}

CohomologyResult cohomology_dims(const Representation& rep, int n, int r, const GroupElement& gamma,
                                 EpsConvention conv) {
    CohomologyResult res;
    res.n = n;
    res.r = r;
    res.degree = gamma;
    if (n < 0) return res;
    Matrix dn = coboundary_matrix(rep, n, r, gamma, conv);
    res.dim_cochains = dn.cols();
    res.dim_cocycles = dn.cols() - rank(dn);
    if (n >= 1) {
        Matrix prev = coboundary_matrix(rep, n - 1, r, gamma, conv);
        res.dim_coboundaries = rank(prev);
        res.inclusion_holds = (dn * prev).is_zero();
    }
    res.dim_cohomology = static_cast<long>(res.dim_cocycles) - static_cast<long>(res.dim_coboundaries);
    return res;
}

}  // namespace bihom
