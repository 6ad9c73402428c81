#pragma once

// Results of axiom checkers. Violations are data, never exceptions.

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

namespace wbafrac {

struct Violation {
    std::string check;                 // name of the violated equation
    std::vector<std::string> witness;  // basis labels of the arguments
    std::string lhs;
    std::string rhs;
};

class Report {
public:
    static constexpr std::size_t kStoredViolations = 25;

    explicit Report(std::string suite = "") : suite_(std::move(suite)) {}

    const std::string& suite() const { return suite_; }
    std::size_t checked() const { return checked_; }
    std::size_t failed() const { return failed_; }
    bool passed() const { return failed_ == 0; }
    const std::vector<Violation>& violations() const { return violations_; }
    const std::vector<std::string>& notes() const { return notes_; }

    /// Counts one check. On failure, the sides are rendered lazily.
    void expect(bool ok, const std::string& check, const std::vector<std::string>& witness,
                const std::function<std::string()>& lhs = {}, const std::function<std::string()>& rhs = {});
    void fail(const std::string& check, const std::vector<std::string>& witness, std::string lhs = "",
              std::string rhs = "");
    void note(std::string text) { notes_.push_back(std::move(text)); }
    void merge(const Report& other);

    /// True if some violation's check name starts with prefix.
    bool violated(const std::string& prefix) const;

    nlohmann::json to_json() const;
    std::string to_text() const;

private:
    std::string suite_;
    std::size_t checked_ = 0;
    std::size_t failed_ = 0;
    std::vector<Violation> violations_;
    std::vector<std::string> notes_;
};

}  // namespace wbafrac
