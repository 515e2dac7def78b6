// Reference counts for the full census, embedded as read-only data, and the
// verifier that compares a computed census against them cell by cell.  One
// misprinted total in the reference material is whitelisted: it is reported
// as a note, with the value its own row sums to, instead of as a failure.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lp3/classify.hpp"

namespace lp3 {

enum class VerifyStatus { kPass, kFail, kSkipped, kNoted };

struct VerifyLine {
    VerifyStatus status = VerifyStatus::kSkipped;
    std::string table;     // which reference table the cell belongs to
    std::string cell;      // cell coordinates within that table
    long long expected = 0;
    long long computed = 0;  // meaningful unless skipped
    std::string note;        // set for whitelisted discrepancies
};

struct VerifyReport {
    std::vector<VerifyLine> lines;
    std::size_t passed = 0, failed = 0, skipped = 0, noted = 0;
    bool ok() const { return failed == 0; }
};

// Checks every reference cell the aggregates can answer; cells needing sizes
// beyond the run (or undecidable maximality) come back as skipped.  The
// boxed-generator cells are size-independent and always checked.
VerifyReport verify_census(const CensusAggregates& agg);

// One line per cell ("PASS <table> <cell> ..."), then a summary line.
std::string format_report(const VerifyReport& report);

}  // namespace lp3
