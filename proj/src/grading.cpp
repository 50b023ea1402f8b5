#include "bihom/grading.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

#include "bihom/errors.hpp"

namespace bihom {

namespace {

std::int64_t reduce(std::int64_t v, std::int64_t m) {
    std::int64_t r = v % m;
    return r < 0 ? r + m : r;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::int64_t parse_int(std::string_view s) {
    s = trim(s);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
    return v;
}

}  // namespace

GradingGroup::GradingGroup(std::size_t free_rank, std::vector<std::int64_t> torsion)
    : free_rank_(free_rank), torsion_(std::move(torsion)) {
    for (auto m : torsion_)
        if (m < 2) throw std::invalid_argument("cyclic factor order must be at least 2");
}

GroupElement GradingGroup::zero() const { return {std::vector<std::int64_t>(rank(), 0)}; }

GroupElement GradingGroup::generator(std::size_t i) const {
    if (i >= rank()) throw DimensionError("generator index out of range");
    GroupElement g = zero();
    g.coords[i] = 1;
    return g;
}

GroupElement GradingGroup::element(std::vector<std::int64_t> coords) const {
    if (coords.size() != rank())
        throw DimensionError("group element has " + std::to_string(coords.size()) + " coordinates, group " +
                             signature() + " needs " + std::to_string(rank()));
    for (std::size_t i = 0; i < torsion_.size(); ++i)
        coords[free_rank_ + i] = reduce(coords[free_rank_ + i], torsion_[i]);
    return {std::move(coords)};
}

bool GradingGroup::contains(const GroupElement& g) const {
    if (g.coords.size() != rank()) return false;
    for (std::size_t i = 0; i < torsion_.size(); ++i) {
        auto c = g.coords[free_rank_ + i];
        if (c < 0 || c >= torsion_[i]) return false;
    }
    return true;
}

void GradingGroup::require(const GroupElement& g) const {
    if (!contains(g)) throw DimensionError("element does not belong to group " + signature());
}

GroupElement GradingGroup::add(const GroupElement& g, const GroupElement& h) const {
    require(g);
    require(h);
    std::vector<std::int64_t> c(rank());
    for (std::size_t i = 0; i < rank(); ++i) c[i] = g.coords[i] + h.coords[i];
    return element(std::move(c));
}

GroupElement GradingGroup::negate(const GroupElement& g) const {
    require(g);
    std::vector<std::int64_t> c(rank());
    for (std::size_t i = 0; i < rank(); ++i) c[i] = -g.coords[i];
    return element(std::move(c));
}

GroupElement GradingGroup::subtract(const GroupElement& g, const GroupElement& h) const {
    return add(g, negate(h));
}

std::vector<GroupElement> GradingGroup::elements() const {
    if (!is_finite()) throw LookupError("cannot enumerate the infinite group " + signature());
    std::vector<GroupElement> out;
    GroupElement g = zero();
    for (;;) {
        out.push_back(g);
        std::size_t i = rank();
        while (i > 0) {
            --i;
            if (++g.coords[i] < torsion_[i]) break;
            g.coords[i] = 0;
            if (i == 0) return out;
        }
        if (rank() == 0) return out;
    }
}

std::string GradingGroup::signature() const {
    if (rank() == 0) return "0";
    std::string s;
    for (std::size_t i = 0; i < free_rank_; ++i) s += (s.empty() ? "" : " x ") + std::string("Z");
    for (auto m : torsion_) s += (s.empty() ? "" : " x ") + ("Z" + std::to_string(m));
    return s;
}

std::string GradingGroup::format(const GroupElement& g) const {
    if (rank() == 0) return "0";
    std::string s;
    for (std::size_t i = 0; i < g.coords.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(g.coords[i]);
    }
    return s;
}

GroupElement GradingGroup::parse_element(std::string_view text) const {
    text = trim(text);
    if (rank() == 0) {
        if (text == "0" || text.empty()) return zero();
        throw std::invalid_argument("the trivial group only has the element 0, got '" + std::string(text) + "'");
    }
    std::vector<std::int64_t> c;
    std::size_t start = 0;
    for (;;) {
        auto comma = text.find(',', start);
        c.push_back(parse_int(text.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    if (c.size() != rank())
        throw std::invalid_argument("degree '" + std::string(text) + "' does not match group " + signature());
    return element(std::move(c));
}

GradingGroup parse_group(std::string_view text) {
    text = trim(text);
    if (text == "0" || text == "1" || text.empty()) return GradingGroup::trivial();
    std::size_t free = 0;
    std::vector<std::int64_t> torsion;
    std::size_t start = 0;
    for (;;) {
        auto x = text.find('x', start);
        auto factor = trim(text.substr(start, x == std::string_view::npos ? std::string_view::npos : x - start));
        if (factor.empty() || factor.front() != 'Z') throw std::invalid_argument("bad group factor '" + std::string(factor) + "'");
        factor.remove_prefix(1);
        if (factor.empty()) {
            if (!torsion.empty()) throw std::invalid_argument("free factors Z must precede cyclic factors");
            ++free;
        } else {
            auto m = parse_int(factor);
            if (m < 2) throw std::invalid_argument("cyclic factor order must be at least 2");
            torsion.push_back(m);
        }
        if (x == std::string_view::npos) break;
        start = x + 1;
    }
    return GradingGroup(free, std::move(torsion));
}

GroupElement group_add(const GradingGroup& group, const GroupElement& g, const GroupElement& h) {
    return group.add(g, h);
}

Bicharacter::Bicharacter(GradingGroup group, std::vector<std::vector<int>> gen_values)
    : group_(std::move(group)), gen_values_(std::move(gen_values)) {
    if (gen_values_.size() != group_.rank()) throw DimensionError("bicharacter table has wrong size");
    for (const auto& row : gen_values_) {
        if (row.size() != group_.rank()) throw DimensionError("bicharacter table has wrong size");
        for (int v : row)
            if (v != 1 && v != -1) throw std::invalid_argument("bicharacter values must be +1 or -1");
    }
}

Bicharacter Bicharacter::trivial(const GradingGroup& group) {
    return Bicharacter(group, std::vector<std::vector<int>>(group.rank(), std::vector<int>(group.rank(), 1)));
}

Bicharacter Bicharacter::super() { return Bicharacter(GradingGroup::z2(), {{-1}}); }

int Bicharacter::sign(const GroupElement& g, const GroupElement& h) const {
    if (!group_.contains(g) || !group_.contains(h))
        throw DimensionError("bicharacter evaluated outside its group " + group_.signature());
    std::int64_t parity = 0;
    for (std::size_t i = 0; i < gen_values_.size(); ++i) {
        if ((g.coords[i] & 1) == 0) continue;
        for (std::size_t j = 0; j < gen_values_.size(); ++j)
            if (gen_values_[i][j] == -1) parity ^= (h.coords[j] & 1);
    }
    return parity ? -1 : 1;
}

Rational eps_eval(const Bicharacter& eps, const GroupElement& g, const GroupElement& h) { return eps(g, h); }

}  // namespace bihom
