#pragma once

#include <string>
#include <utility>
#include <vector>

namespace arrowsmith {

struct CheckRecord {
    std::string name;
    bool pass = false;
    std::string witness;  // failure location, empty on pass
};

/// Ordered list of named pass/fail checks.  Overall status is the
/// conjunction; a failing record carries a witness pinpointing the broken
/// identity (basis triple, degree, matrix entry).
class Report {
public:
    explicit Report(std::string subject) : subject_(std::move(subject)) {}

    void add(std::string name, bool pass, std::string witness = "") {
        records_.push_back({std::move(name), pass, pass ? "" : std::move(witness)});
    }

    void absorb(const std::string& prefix, const Report& other) {
        for (const auto& rec : other.records_)
            records_.push_back({prefix + rec.name, rec.pass, rec.witness});
    }

    bool ok() const {
        for (const auto& rec : records_)
            if (!rec.pass) return false;
        return true;
    }

    const std::string& subject() const { return subject_; }
    const std::vector<CheckRecord>& records() const { return records_; }

private:
    std::string subject_;
    std::vector<CheckRecord> records_;
};

}  // namespace arrowsmith
