#include "repdet/report.hpp"

#include <algorithm>
#include <tuple>
#include <sstream>

#include <json.hpp>

namespace repdet {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::skipped: return "skipped";
    }
    return "?";
}

void VerificationReport::merge(const VerificationReport& other, const std::string& field, std::uint64_t trial) {
    for (auto r : other.records_) {
        r.field = field;
        r.trial = trial;
        records_.push_back(std::move(r));
    }
}

void VerificationReport::merge(const VerificationReport& other) {
    records_.insert(records_.end(), other.records_.begin(), other.records_.end());
}

bool VerificationReport::passed() const { return count(Verdict::fail) == 0; }

std::size_t VerificationReport::count(Verdict v) const {
    return static_cast<std::size_t>(
        std::count_if(records_.begin(), records_.end(), [v](const auto& r) { return r.verdict == v; }));
}

void VerificationReport::sort_records() {
    std::stable_sort(records_.begin(), records_.end(), [](const auto& a, const auto& b) {
        return std::tie(a.trial, a.field, a.identity) < std::tie(b.trial, b.field, b.identity);
    });
}

std::string VerificationReport::to_text() const {
    std::ostringstream os;
    for (const auto& r : records_) {
        os << "[" << to_string(r.verdict) << "] trial " << r.trial << " " << r.field << " " << r.identity;
        for (const auto& w : r.witnesses) os << " " << w.name << "=" << w.value;
        os << "\n";
    }
    os << "aggregate: " << (passed() ? "pass" : "fail") << " (" << count(Verdict::pass) << " pass, "
       << count(Verdict::fail) << " fail, " << count(Verdict::skipped) << " skipped)\n";
    return os.str();
}

std::string VerificationReport::to_json() const {
    nlohmann::json out;
    out["aggregate"] = passed() ? "pass" : "fail";
    auto& recs = out["records"] = nlohmann::json::array();
    for (const auto& r : records_) {
        nlohmann::json j{{"identity", r.identity},
                         {"verdict", to_string(r.verdict)},
                         {"field", r.field},
                         {"trial", r.trial},
                         {"seconds", r.seconds}};
        if (!r.witnesses.empty()) {
            auto& w = j["witnesses"] = nlohmann::json::object();
            for (const auto& [name, value] : r.witnesses) w[name] = value;
        }
        recs.push_back(std::move(j));
    }
    return out.dump(2);
}

}  // namespace repdet
