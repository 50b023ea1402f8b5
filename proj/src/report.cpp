#include "bihom/report.hpp"

#include "bihom/errors.hpp"

namespace bihom {

std::string Witness::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < tuple.size(); ++i) s += (i ? ", " : "") + tuple[i];
    s += ") -> ";
    if (defect.empty()) return s + "0";
    for (std::size_t i = 0; i < defect.size(); ++i) {
        if (i) s += " + ";
        s += bihom::to_string(defect[i].second) + "*" + defect[i].first;
    }
    return s;
}

bool AxiomReport::passed() const {
    for (const auto& v : verdicts)
        if (!v.informational && !v.passed) return false;
    return true;
}

const Verdict& AxiomReport::verdict(const std::string& name) const {
    for (const auto& v : verdicts)
        if (v.name == name) return v;
    throw LookupError("report '" + subject + "' has no verdict '" + name + "'");
}

bool AxiomReport::has(const std::string& name) const {
    for (const auto& v : verdicts)
        if (v.name == name) return true;
    return false;
}

Verdict& AxiomReport::add(std::string name, bool passed, std::optional<Witness> witness) {
    verdicts.push_back(Verdict{std::move(name), passed, false, std::move(witness), {}});
    return verdicts.back();
}

Verdict& AxiomReport::add_flag(std::string name, bool value, std::string note) {
    verdicts.push_back(Verdict{std::move(name), value, true, std::nullopt, std::move(note)});
    return verdicts.back();
}

void AxiomReport::append(const AxiomReport& other) {
    verdicts.insert(verdicts.end(), other.verdicts.begin(), other.verdicts.end());
}

std::string AxiomReport::to_string() const {
    std::string s;
    if (!subject.empty()) s += subject + "\n";
    for (const auto& v : verdicts) {
        s += "  " + v.name + ": ";
        if (v.informational)
            s += v.passed ? "yes" : "no";
        else
            s += v.passed ? "pass" : "FAIL";
        if (v.witness) s += "  witness " + v.witness->to_string();
        if (!v.note.empty()) s += "  (" + v.note + ")";
        s += "\n";
    }
    s += passed() ? "overall: pass\n" : "overall: FAIL\n";
    return s;
}

std::vector<std::pair<std::string, Rational>> labelled(const Vector& v, const std::vector<std::string>& names) {
    if (v.size() != names.size()) throw DimensionError("labelled: vector and names differ in length");
    std::vector<std::pair<std::string, Rational>> out;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (sgn(v[i]) != 0) out.emplace_back(names[i], v[i]);
    return out;
}

std::string format_vector(const Vector& v, const std::vector<std::string>& names) {
    std::string s;
    for (const auto& [name, c] : labelled(v, names)) {
        if (!s.empty()) s += " + ";
        s += c == 1 ? name : bihom::to_string(c) + "*" + name;
    }
    return s.empty() ? "0" : s;
}

}  // namespace bihom
