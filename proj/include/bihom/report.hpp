#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bihom/rational.hpp"

namespace bihom {

/// The first failing tuple of a check together with its nonzero defect.
struct Witness {
    std::vector<std::string> tuple;
    /// Nonzero coordinates of the defect, labelled by basis name.
    std::vector<std::pair<std::string, Rational>> defect;

    std::string to_string() const;
};

struct Verdict {
    std::string name;
    bool passed = true;
    /// Flags such as regularity or commutativity are reported but do not
    /// decide the overall outcome.
    bool informational = false;
    std::optional<Witness> witness;
    std::string note;
};

struct AxiomReport {
    std::string subject;
    std::vector<Verdict> verdicts;

    /// True when every non-informational verdict passed.
    bool passed() const;
    /// Throws LookupError when no verdict has this name.
    const Verdict& verdict(const std::string& name) const;
    bool has(const std::string& name) const;
    bool passed(const std::string& name) const { return verdict(name).passed; }

    Verdict& add(std::string name, bool passed, std::optional<Witness> witness = std::nullopt);
    Verdict& add_flag(std::string name, bool value, std::string note = {});
    void append(const AxiomReport& other);

    std::string to_string() const;
};

/// Labels the nonzero entries of v by the given names.
std::vector<std::pair<std::string, Rational>> labelled(const Vector& v, const std::vector<std::string>& names);

/// "2*X + -1/3*Y" style rendering, "0" for the zero vector.
std::string format_vector(const Vector& v, const std::vector<std::string>& names);

}  // namespace bihom
