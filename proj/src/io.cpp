#include "bihom/io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "bihom/axioms.hpp"
#include "bihom/errors.hpp"

namespace bihom {

namespace {

struct Line {
    std::size_t number;
    std::string text;
};

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

/// Non-empty lines with comments stripped.
std::vector<Line> content_lines(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        ++number;
        std::string_view line = text.substr(start, end - start);
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (!line.empty()) out.push_back({number, std::string(line)});
        start = end + 1;
    }
    return out;
}

std::vector<std::string> tokens(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    for (std::string t; in >> t;) out.push_back(t);
    return out;
}

std::optional<Rational> try_rational(const std::string& t) {
    try {
        return parse_rational(t);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

Rational rational_at(const Line& line, const std::string& t) {
    try {
        return parse_rational(t);
    } catch (const std::invalid_argument& e) {
        throw ParseError(line.number, e.what());
    }
}

std::int64_t int_at(const Line& line, const std::string& t) {
    try {
        std::size_t used = 0;
        const long long v = std::stoll(t, &used);
        if (used != t.size()) throw std::invalid_argument(t);
        return v;
    } catch (const std::exception&) {
        throw ParseError(line.number, "expected an integer, got '" + t + "'");
    }
}

GroupElement element_at(const Line& line, const GradingGroup& group, const std::string& t) {
    try {
        return group.parse_element(t);
    } catch (const std::exception& e) {
        throw ParseError(line.number, e.what());
    }
}

bool valid_name(const std::string& name) {
    if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
    for (char c : name) {
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '*')) return false;
    }
    return true;
}

std::size_t index_at(const Line& line, const GradedBasis& basis, const std::string& name) {
    auto i = basis.index_of(name);
    if (!i) throw ParseError(line.number, "unknown basis vector '" + name + "'");
    return *i;
}

/// `[+|-] [c] name (+|- [c] name)*` or a lone `0`.
Element parse_combination(const Line& line, const GradedBasis& basis, const std::vector<std::string>& toks,
                          std::size_t from) {
    Element out = zero_vector(basis.size());
    if (toks.size() == from + 1 && toks[from] == "0") return out;
    if (toks.size() == from) throw ParseError(line.number, "missing right-hand side");
    std::size_t p = from;
    bool first = true;
    while (p < toks.size()) {
        Rational sign = 1;
        if (toks[p] == "+" || toks[p] == "-") {
            if (toks[p] == "-") sign = -1;
            ++p;
        } else if (!first) {
            throw ParseError(line.number, "expected '+' or '-' before '" + toks[p] + "'");
        }
        if (p >= toks.size()) throw ParseError(line.number, "dangling operator");
        Rational coeff = 1;
        if (auto c = try_rational(toks[p])) {
            coeff = *c;
            ++p;
            if (p >= toks.size()) throw ParseError(line.number, "coefficient without basis vector");
        }
        const std::size_t k = index_at(line, basis, toks[p]);
        out[k] += sign * coeff;
        ++p;
        first = false;
    }
    return out;
}

std::string format_combination(const Element& v, const GradedBasis& basis) {
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (is_zero(v[k])) continue;
        if (out.empty()) {
            out = to_string(v[k]);
        } else if (sgn(v[k]) < 0) {
            out += " - " + to_string(Rational(-v[k]));
        } else {
            out += " + " + to_string(v[k]);
        }
        out += " " + basis.name(k);
    }
    return out.empty() ? "0" : out;
}

void require_even(const Line& line, const GradedBasis& basis, const GroupElement& source, const Element& image,
                  const std::string& what) {
    for (std::size_t k = 0; k < image.size(); ++k) {
        if (!is_zero(image[k]) && basis.degree(k) != source) {
            throw ValidationError("line " + std::to_string(line.number) + ": " + what + " has a term " +
                                  basis.name(k) + " of degree " + basis.group().format(basis.degree(k)) +
                                  ", expected " + basis.group().format(source));
        }
    }
}

Matrix map_from_lines(const std::vector<Line>& lines, const GradedBasis& basis) {
    Matrix m = Matrix::identity(basis.size());
    std::set<std::size_t> seen;
    for (const Line& line : lines) {
        const auto toks = tokens(line.text);
        if (toks.size() < 3 || toks[1] != "->") throw ParseError(line.number, "expected 'x -> combination'");
        const std::size_t x = index_at(line, basis, toks[0]);
        if (!seen.insert(x).second) throw ParseError(line.number, "image of '" + toks[0] + "' given twice");
        const Element image = parse_combination(line, basis, toks, 2);
        require_even(line, basis, basis.degree(x), image, "image of " + toks[0]);
        for (std::size_t r = 0; r < basis.size(); ++r) m(r, x) = image[r];
    }
    return m;
}

void write_map(std::ostringstream& out, const char* section, const Matrix& m, const GradedBasis& basis) {
    if (m.is_identity()) return;
    out << section << '\n';
    for (std::size_t c = 0; c < basis.size(); ++c) {
        const Vector col = m.column(c);
        if (col == unit_vector(basis.size(), c)) continue;
        out << basis.name(c) << " -> " << format_combination(col, basis) << '\n';
    }
}

const std::set<std::string> kSections = {"group", "bicharacter", "basis", "product", "alpha", "beta", "kind"};

}  // namespace

ColourAlgebra parse_algebra(std::string_view text) {
    std::map<std::string, std::vector<Line>> sections;
    std::map<std::string, std::size_t> headers;
    std::string current;
    bool first = true;
    for (const Line& line : content_lines(text)) {
        if (first && line.text.rfind("version", 0) == 0) {
            const auto toks = tokens(line.text);
            if (toks.size() != 2 || toks[0] != "version") throw ParseError(line.number, "malformed version line");
            if (toks[1] != "1") throw ParseError(line.number, "unsupported format version " + toks[1]);
            first = false;
            continue;
        }
        first = false;
        if (line.text.front() == '[') {
            if (line.text.back() != ']') throw ParseError(line.number, "malformed section header");
            current = std::string(trim(std::string_view(line.text).substr(1, line.text.size() - 2)));
            if (!kSections.contains(current)) throw ParseError(line.number, "unknown section [" + current + "]");
            if (headers.contains(current)) throw ParseError(line.number, "section [" + current + "] repeated");
            headers[current] = line.number;
            sections[current];
            continue;
        }
        if (current.empty()) throw ParseError(line.number, "content before the first section");
        sections[current].push_back(line);
    }
    if (!headers.contains("group")) throw ParseError(0, "missing [group] section");
    if (!headers.contains("basis")) throw ParseError(0, "missing [basis] section");

    const auto& group_lines = sections["group"];
    if (group_lines.size() != 1) throw ParseError(headers["group"], "[group] takes exactly one line");
    GradingGroup group;
    try {
        group = parse_group(group_lines[0].text);
    } catch (const std::exception& e) {
        throw ParseError(group_lines[0].number, e.what());
    }

    std::vector<std::vector<int>> gen(group.rank(), std::vector<int>(group.rank(), 1));
    std::set<std::pair<std::size_t, std::size_t>> stated;
    for (const Line& line : sections["bicharacter"]) {
        const auto toks = tokens(line.text);
        if (toks.size() != 3) throw ParseError(line.number, "expected 'i j value'");
        const auto index = [&](std::string t) {
            if (!t.empty() && t[0] == 'e') t.erase(0, 1);
            const std::int64_t i = int_at(line, t);
            if (i < 1 || static_cast<std::size_t>(i) > group.rank())
                throw ParseError(line.number, "generator index " + t + " out of range");
            return static_cast<std::size_t>(i - 1);
        };
        const std::size_t i = index(toks[0]);
        const std::size_t j = index(toks[1]);
        const std::int64_t v = int_at(line, toks[2]);
        if (v != 1 && v != -1) throw ParseError(line.number, "bicharacter values must be 1 or -1");
        if (!stated.insert({i, j}).second) throw ParseError(line.number, "generator pair given twice");
        gen[i][j] = static_cast<int>(v);
        if (!stated.contains({j, i})) gen[j][i] = static_cast<int>(v);
    }
    Bicharacter eps;
    try {
        eps = Bicharacter(group, gen);
    } catch (const std::exception& e) {
        throw ValidationError(std::string("invalid bicharacter: ") + e.what());
    }
    if (const AxiomReport r = validate_bicharacter(eps); !r.passed()) {
        throw ValidationError("invalid bicharacter:\n" + r.to_string());
    }

    std::vector<std::string> names;
    std::vector<GroupElement> degrees;
    for (const Line& line : sections["basis"]) {
        const auto toks = tokens(line.text);
        if (!valid_name(toks[0])) throw ParseError(line.number, "invalid basis name '" + toks[0] + "'");
        std::vector<std::int64_t> coords;
        for (std::size_t t = 1; t < toks.size(); ++t) coords.push_back(int_at(line, toks[t]));
        if (group.rank() == 0 && coords == std::vector<std::int64_t>{0}) coords.clear();
        if (coords.size() != group.rank()) {
            throw ParseError(line.number, "degree of '" + toks[0] + "' needs " + std::to_string(group.rank()) +
                                              " coordinates");
        }
        names.push_back(toks[0]);
        degrees.push_back(group.element(std::move(coords)));
    }
    GradedBasis basis;
    try {
        basis = GradedBasis(group, names, degrees);
    } catch (const std::exception& e) {
        throw ParseError(headers["basis"], e.what());
    }

    const std::size_t n = basis.size();
    std::vector<Element> product(n * n, zero_vector(n));
    std::set<std::pair<std::size_t, std::size_t>> pairs;
    for (const Line& line : sections["product"]) {
        const auto toks = tokens(line.text);
        if (toks.size() < 4 || toks[2] != "->") throw ParseError(line.number, "expected 'x y -> combination'");
        const std::size_t i = index_at(line, basis, toks[0]);
        const std::size_t j = index_at(line, basis, toks[1]);
        if (!pairs.insert({i, j}).second) throw ParseError(line.number, "product of this pair given twice");
        Element value = parse_combination(line, basis, toks, 3);
        require_even(line, basis, group.add(basis.degree(i), basis.degree(j)), value,
                     "product " + toks[0] + " " + toks[1]);
        product[i * n + j] = std::move(value);
    }

    const Matrix alpha = map_from_lines(sections["alpha"], basis);
    const Matrix beta = map_from_lines(sections["beta"], basis);

    AlgebraKind kind = AlgebraKind::lie;
    if (headers.contains("kind")) {
        const auto& lines = sections["kind"];
        if (lines.size() != 1) throw ParseError(headers["kind"], "[kind] takes exactly one line");
        try {
            kind = parse_kind(lines[0].text);
        } catch (const std::exception& e) {
            throw ParseError(lines[0].number, e.what());
        }
    }
    return ColourAlgebra(basis, eps, std::move(product), alpha, beta, kind);
}

std::string serialize_algebra(const ColourAlgebra& a) {
    const GradedBasis& basis = a.basis();
    const GradingGroup& group = basis.group();
    std::ostringstream out;
    out << "version 1\n[group]\n" << group.signature() << '\n';
    out << "[bicharacter]\n";
    for (std::size_t i = 0; i < group.rank(); ++i) {
        for (std::size_t j = i; j < group.rank(); ++j) out << i + 1 << ' ' << j + 1 << ' ' << a.eps().gen_value(i, j) << '\n';
    }
    out << "[basis]\n";
    for (std::size_t i = 0; i < basis.size(); ++i) {
        out << basis.name(i);
        if (group.rank() == 0) out << " 0";
        for (auto c : basis.degree(i).coords) out << ' ' << c;
        out << '\n';
    }
    out << "[product]\n";
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            const Element& v = a.structure(i, j);
            if (is_zero(v)) continue;
            out << basis.name(i) << ' ' << basis.name(j) << " -> " << format_combination(v, basis) << '\n';
        }
    }
    write_map(out, "[alpha]", a.alpha(), basis);
    write_map(out, "[beta]", a.beta(), basis);
    out << "[kind]\n" << to_string(a.kind()) << '\n';
    return out.str();
}

Matrix parse_map(std::string_view text, const GradedBasis& basis) {
    return map_from_lines(content_lines(text), basis);
}

MultiplierTable parse_multiplier(std::string_view text, const GradingGroup& group) {
    MultiplierTable table(group);
    for (const Line& line : content_lines(text)) {
        const auto toks = tokens(line.text);
        if (toks.size() != 3) throw ParseError(line.number, "expected 'g h value'");
        const GroupElement g = element_at(line, group, toks[0]);
        const GroupElement h = element_at(line, group, toks[1]);
        if (table.contains(g, h)) throw ParseError(line.number, "pair given twice");
        const Rational v = rational_at(line, toks[2]);
        if (is_zero(v)) throw ParseError(line.number, "multiplier values must be nonzero");
        table.set(g, h, v);
    }
    return table;
}

OmegaTable parse_omega(std::string_view text, const GradingGroup& group) {
    OmegaTable omega;
    for (const Line& line : content_lines(text)) {
        const auto toks = tokens(line.text);
        if (toks.size() != 2) throw ParseError(line.number, "expected 'g value'");
        const GroupElement g = element_at(line, group, toks[0]);
        const Rational v = rational_at(line, toks[1]);
        if (is_zero(v)) throw ParseError(line.number, "omega values must be nonzero");
        if (!omega.emplace(g, v).second) throw ParseError(line.number, "degree given twice");
    }
    return omega;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(0, "cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace bihom
