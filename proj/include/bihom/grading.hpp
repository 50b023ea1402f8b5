#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bihom/rational.hpp"

namespace bihom {

struct GroupElement {
    std::vector<std::int64_t> coords;

    friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
    friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/// Z^r x Z_{m1} x ... x Z_{mk}. The free factors come first.
class GradingGroup {
   public:
    GradingGroup() = default;
    GradingGroup(std::size_t free_rank, std::vector<std::int64_t> torsion);

    static GradingGroup trivial() { return {}; }
    static GradingGroup z2() { return GradingGroup(0, {2}); }

    std::size_t free_rank() const noexcept { return free_rank_; }
    const std::vector<std::int64_t>& torsion() const noexcept { return torsion_; }
    /// Number of generators, r + k.
    std::size_t rank() const noexcept { return free_rank_ + torsion_.size(); }
    bool is_finite() const noexcept { return free_rank_ == 0; }

    GroupElement zero() const;
    GroupElement generator(std::size_t i) const;
    /// Builds an element, reducing torsion coordinates into [0, m_i).
    GroupElement element(std::vector<std::int64_t> coords) const;
    bool contains(const GroupElement& g) const;

    GroupElement add(const GroupElement& g, const GroupElement& h) const;
    GroupElement negate(const GroupElement& g) const;
    GroupElement subtract(const GroupElement& g, const GroupElement& h) const;

    /// All elements of a finite group in lexicographic order.
    std::vector<GroupElement> elements() const;

    /// "0", "Z", "Z2", "Z x Z3", ...
    std::string signature() const;
    /// Comma separated coordinates; the trivial group prints "0".
    std::string format(const GroupElement& g) const;
    /// Inverse of format(); throws std::invalid_argument.
    GroupElement parse_element(std::string_view text) const;

    friend bool operator==(const GradingGroup&, const GradingGroup&) = default;

   private:
    void require(const GroupElement& g) const;

    std::size_t free_rank_ = 0;
    std::vector<std::int64_t> torsion_;
};

/// Parses a group signature such as "0", "Z", "Z2 x Z2" or "Z x Z3".
GradingGroup parse_group(std::string_view text);

GroupElement group_add(const GradingGroup& group, const GroupElement& g, const GroupElement& h);

/// Skew-symmetric bicharacter with values in {+1, -1}, given on generator pairs.
class Bicharacter {
   public:
    Bicharacter() = default;
    Bicharacter(GradingGroup group, std::vector<std::vector<int>> gen_values);

    static Bicharacter trivial(const GradingGroup& group);
    /// (-1)^{|x||y|} on Z2.
    static Bicharacter super();

    const GradingGroup& group() const noexcept { return group_; }
    int gen_value(std::size_t i, std::size_t j) const { return gen_values_.at(i).at(j); }
    const std::vector<std::vector<int>>& gen_values() const noexcept { return gen_values_; }

    /// eps(g, h) as +1 or -1.
    int sign(const GroupElement& g, const GroupElement& h) const;
    Rational operator()(const GroupElement& g, const GroupElement& h) const { return sign(g, h); }

    friend bool operator==(const Bicharacter&, const Bicharacter&) = default;

   private:
    GradingGroup group_;
    std::vector<std::vector<int>> gen_values_;
};

Rational eps_eval(const Bicharacter& eps, const GroupElement& g, const GroupElement& h);

}  // namespace bihom
