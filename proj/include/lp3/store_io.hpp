// Plain-text persistence for class databases and checkpoints.  A database
// file is line oriented and byte stable: a version header, optional comment
// lines, one record per class listing its canonical representative, and (for
// checkpoints) a trailing block of key=value metadata.  ASCII decimal, single
// spaces, LF endings, trailing newline; records sorted as integer tuples so
// equal databases are equal files.

#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "lp3/equivalence.hpp"
#include "lp3/geometry.hpp"

namespace lp3 {

struct LP3File {
    // Comment lines after the header, verbatim including the leading '#'.
    std::vector<std::string> comments;
    // One point list per record; in strict files each is its own canonical
    // form with lexicographically sorted points.
    std::vector<PointList> records;
    // key=value footer lines, in file order.  Only checkpoints use these.
    std::vector<std::pair<std::string, std::string>> footer;
    // Lenient ingest only: how many records were rewritten, reordered, or
    // dropped as duplicates while normalizing.  Zero after a strict read.
    std::size_t lenient_repairs = 0;

    // Records as canonical forms (re-canonicalizing, so also usable on
    // leniently ingested files).  Sorted and deduplicated.
    std::vector<CanonicalForm> forms() const;

    std::string footer_value(const std::string& key) const;  // "" if absent
};

// Strict mode demands the exact on-disk grammar: the "#LP3 1" header,
// comments before records, records formatted canonically, lexicographically
// sorted, duplicate free, and fixed under re-canonicalization.  Lenient mode
// ingests any whitespace-separated coordinate lists (with or without the
// point-count prefix and header) and normalizes them.
enum class ReadMode { kStrict, kLenient };

// The record line for a point list, without the newline.
std::string format_record(const PointList& points);

// The exact file bytes.
std::string format_db(const LP3File& db);

LP3File parse_db(std::istream& in, ReadMode mode, const std::string& name);
LP3File read_db(const std::string& path, ReadMode mode = ReadMode::kStrict);

// Writes atomically (temp file in the same directory, then rename), so a
// killed run leaves either the old file or the new one, never a torn one.
void write_db(const std::string& path, const LP3File& db);

struct DbDiff {
    std::vector<CanonicalForm> only_in_a;
    std::vector<CanonicalForm> only_in_b;
};

// Set difference by canonical class, after normalizing both sides.
DbDiff diff_db(const LP3File& a, const LP3File& b);

// A TSV report block: table name line, column header line, then rows.
std::string format_tsv(const std::string& name, const std::vector<std::string>& columns,
                       const std::vector<std::vector<std::string>>& rows);

}  // namespace lp3
