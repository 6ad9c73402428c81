#include "wbafrac/report.hpp"

#include <sstream>

namespace wbafrac {

void Report::expect(bool ok, const std::string& check, const std::vector<std::string>& witness,
                    const std::function<std::string()>& lhs, const std::function<std::string()>& rhs)
{
    ++checked_;
    if (ok) return;
    ++failed_;
    if (violations_.size() < kStoredViolations)
        violations_.push_back({check, witness, lhs ? lhs() : "", rhs ? rhs() : ""});
}

void Report::fail(const std::string& check, const std::vector<std::string>& witness, std::string lhs,
                  std::string rhs)
{
    ++checked_;
    ++failed_;
    if (violations_.size() < kStoredViolations)
        violations_.push_back({check, witness, std::move(lhs), std::move(rhs)});
}

void Report::merge(const Report& other)
{
    checked_ += other.checked_;
    failed_ += other.failed_;
    for (const auto& v : other.violations_) {
        if (violations_.size() >= kStoredViolations) break;
        violations_.push_back(v);
    }
    for (const auto& n : other.notes_) notes_.push_back(n);
}

bool Report::violated(const std::string& prefix) const
{
    for (const auto& v : violations_)
        if (v.check.rfind(prefix, 0) == 0) return true;
    return false;
}

nlohmann::json Report::to_json() const
{
    nlohmann::json j;
    j["suite"] = suite_;
    j["passed"] = passed();
    j["checked"] = checked_;
    j["failed"] = failed_;
    auto vs = nlohmann::json::array();
    for (const auto& v : violations_)
        vs.push_back({{"check", v.check}, {"witness", v.witness}, {"lhs", v.lhs}, {"rhs", v.rhs}});
    j["violations"] = vs;
    if (!notes_.empty()) j["notes"] = notes_;
    return j;
}

std::string Report::to_text() const
{
    std::ostringstream os;
    os << "suite " << suite_ << ": " << (passed() ? "PASS" : "FAIL") << " (" << checked_ << " checks, "
       << failed_ << " failed)\n";
    for (const auto& v : violations_) {
        os << "  violated " << v.check << " at (";
        for (std::size_t i = 0; i < v.witness.size(); ++i) os << (i ? ", " : "") << v.witness[i];
        os << ")";
        if (!v.lhs.empty() || !v.rhs.empty()) os << ": " << v.lhs << " != " << v.rhs;
        os << "\n";
    }
    for (const auto& n : notes_) os << "  note: " << n << "\n";
    return os.str();
}

}  // namespace wbafrac
