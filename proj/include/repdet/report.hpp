#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "repdet/scalar.hpp"

namespace repdet {

enum class Verdict { pass, fail, skipped };

const char* to_string(Verdict v);

struct Witness {
    std::string name;
    std::string value;
};

struct VerificationRecord {
    std::string identity;
    Verdict verdict = Verdict::pass;
    std::vector<Witness> witnesses;  // filled on failure (and for skips, the reason)
    std::string field = "Q";
    std::uint64_t trial = 0;
    double seconds = 0.0;
};

/// Per-identity outcomes. Aggregate verdict is pass iff no record failed.
class VerificationReport {
public:
    void add(VerificationRecord record) { records_.push_back(std::move(record)); }

    /// Records `identity` as pass when lhs == rhs, else fail with both sides.
    template <typename S>
    bool check(std::string identity, const S& lhs, const S& rhs) {
        VerificationRecord r{std::move(identity), Verdict::pass, {}};
        const bool ok = (lhs == rhs);
        if (!ok) {
            r.verdict = Verdict::fail;
            r.witnesses = {{"lhs", repdet::to_string(lhs)}, {"rhs", repdet::to_string(rhs)}};
        }
        add(std::move(r));
        return ok;
    }

    void pass(std::string identity) { add({std::move(identity), Verdict::pass, {}}); }

    void skip(std::string identity, std::string reason) {
        add({std::move(identity), Verdict::skipped, {{"reason", std::move(reason)}}});
    }

    void fail(std::string identity, std::vector<Witness> witnesses) {
        add({std::move(identity), Verdict::fail, std::move(witnesses)});
    }

    /// Appends another report, relabelling its records' field and trial.
    void merge(const VerificationReport& other, const std::string& field, std::uint64_t trial);
    void merge(const VerificationReport& other);

    [[nodiscard]] bool passed() const;
    [[nodiscard]] std::size_t count(Verdict v) const;
    [[nodiscard]] const std::vector<VerificationRecord>& records() const { return records_; }
    std::vector<VerificationRecord>& records() { return records_; }

    /// Stable order by (trial, field, identity) for order-independent output.
    void sort_records();

    [[nodiscard]] std::string to_text() const;
    [[nodiscard]] std::string to_json() const;

private:
    std::vector<VerificationRecord> records_;
};

/// Stamps the wall time of its scope onto every record added meanwhile.
class ScopedRecordTimer {
public:
    explicit ScopedRecordTimer(VerificationReport& report)
        : report_(report), first_(report.records().size()), start_(std::chrono::steady_clock::now()) {}
    ScopedRecordTimer(const ScopedRecordTimer&) = delete;
    ScopedRecordTimer& operator=(const ScopedRecordTimer&) = delete;
    ~ScopedRecordTimer() {
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        auto& recs = report_.records();
        for (std::size_t i = first_; i < recs.size(); ++i) recs[i].seconds = s;
    }

private:
    VerificationReport& report_;
    std::size_t first_;
    std::chrono::steady_clock::time_point start_;
};

}  // namespace repdet
