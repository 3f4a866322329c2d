#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ffp {

/// Outcome of one axiom or hypothesis check.
enum class CheckStatus {
    PassExact,    // verified with exact arithmetic over the full probe set
    PassSampled,  // finite/approximate evidence only
    Declared,     // taken from instance metadata, not verified
    Fail,
};

std::string to_string(CheckStatus s);
CheckStatus check_status_from_string(const std::string& s);

/// A concrete counterexample: variable bindings plus the two sides of the
/// inequality (or equality) that failed.
struct Witness {
    std::vector<std::pair<std::string, std::string>> bindings;
    std::string lhs;
    std::string relation;  // the relation that was REQUIRED, e.g. "<="
    std::string rhs;

    std::string str() const;
};

struct CheckItem {
    std::string name;
    CheckStatus status = CheckStatus::PassExact;
    std::optional<Witness> witness;
    std::string note;

    bool passed() const { return status != CheckStatus::Fail; }
};

/// Per-axiom verdicts for a definition checked on a concrete instance.
struct AxiomReport {
    std::string subject;
    std::vector<CheckItem> items;

    bool all_passed() const;
    const CheckItem* find(const std::string& name) const;
    std::string str() const;
};

}  // namespace ffp
