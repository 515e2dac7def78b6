#include "lp3/store_io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace lp3 {

namespace {

constexpr const char* kHeader = "#LP3 1";

[[noreturn]] void fail(const std::string& name, std::size_t line, const std::string& what) {
    throw std::runtime_error(name + ":" + std::to_string(line) + ": " + what);
}

// Record order: the full line read as an integer tuple, so the point count
// compares first and coordinates break ties.
bool tuple_less(const PointList& a, const PointList& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

// A footer line is "key=value" where the key is a nonempty identifier that
// does not start with a digit; records and comments can never match that.
bool looks_like_footer(const std::string& line) {
    auto eq = line.find('=');
    if (eq == std::string::npos || eq == 0) return false;
    char c0 = line[0];
    if ((c0 >= '0' && c0 <= '9') || c0 == '-') return false;
    for (std::size_t i = 0; i < eq; ++i) {
        char c = line[i];
        bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                  c == '_';
        if (!ok) return false;
    }
    return true;
}

PointList parse_record_tokens(const std::vector<Int>& tok, ReadMode mode,
                              const std::string& name, std::size_t lineno) {
    std::size_t n = tok.size();
    std::size_t points = 0, offset = 0;
    if (n % 3 == 1 && n >= 4) {
        // Counted form: the point count followed by that many triples.
        if (tok[0] <= 0 || static_cast<std::size_t>(tok[0]) != (n - 1) / 3)
            fail(name, lineno, "point count does not match coordinate count");
        points = static_cast<std::size_t>(tok[0]);
        offset = 1;
    } else if (n % 3 == 0 && n > 0 && mode == ReadMode::kLenient) {
        // Bare coordinate list, accepted on ingest only.
        points = n / 3;
    } else {
        fail(name, lineno, "malformed record");
    }
    PointList pts;
    pts.reserve(points);
    for (std::size_t i = 0; i < points; ++i)
        pts.push_back({tok[offset + 3 * i], tok[offset + 3 * i + 1], tok[offset + 3 * i + 2]});
    return pts;
}

void check_usable(const PointList& pts, const std::string& name, std::size_t lineno) {
    PointList sorted = pts;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        fail(name, lineno, "duplicate point in record");
    if (affine_dimension(pts) != 3) fail(name, lineno, "record is not full-dimensional");
}

}  // namespace

std::vector<CanonicalForm> LP3File::forms() const {
    std::set<CanonicalForm> set;
    for (const PointList& rec : records) set.insert(canonical_form_only(rec));
    return {set.begin(), set.end()};
}

std::string LP3File::footer_value(const std::string& key) const {
    for (const auto& [k, v] : footer)
        if (k == key) return v;
    return "";
}

std::string format_record(const PointList& points) {
    std::string out = std::to_string(points.size());
    for (const LatticePoint& p : points) {
        out += ' ';
        out += std::to_string(p.x);
        out += ' ';
        out += std::to_string(p.y);
        out += ' ';
        out += std::to_string(p.z);
    }
    return out;
}

std::string format_db(const LP3File& db) {
    std::string out = kHeader;
    out += '\n';
    for (const std::string& c : db.comments) {
        if (c.empty() || c[0] != '#')
            throw std::runtime_error("database comment lines must start with '#'");
        out += c;
        out += '\n';
    }
    for (const PointList& rec : db.records) {
        out += format_record(rec);
        out += '\n';
    }
    for (const auto& [k, v] : db.footer) {
        out += k;
        out += '=';
        out += v;
        out += '\n';
    }
    return out;
}

LP3File parse_db(std::istream& in, ReadMode mode, const std::string& name) {
    const bool strict = mode == ReadMode::kStrict;
    LP3File db;
    std::string line;
    std::size_t lineno = 0;
    bool seen_header = false, seen_record = false, seen_footer = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') {
            if (strict) fail(name, lineno, "CR line ending; LF required");
            line.pop_back();
        }
        if (lineno == 1) {
            if (line == kHeader) {
                seen_header = true;
                continue;
            }
            if (strict) {
                if (line.rfind("#LP3", 0) == 0)
                    fail(name, 1, "unsupported database version: " + line);
                fail(name, 1, "missing #LP3 1 header");
            }
        }
        if (line.empty()) {
            if (strict) fail(name, lineno, "blank line");
            continue;
        }
        if (line[0] == '#') {
            if (strict && (seen_record || seen_footer))
                fail(name, lineno, "comment after records");
            db.comments.push_back(line);
            continue;
        }
        if (looks_like_footer(line)) {
            auto eq = line.find('=');
            db.footer.emplace_back(line.substr(0, eq), line.substr(eq + 1));
            seen_footer = true;
            continue;
        }
        if (strict && seen_footer) fail(name, lineno, "record after footer");
        std::istringstream fields(line);
        std::vector<Int> tok;
        Int value;
        while (fields >> value) tok.push_back(value);
        if (!fields.eof()) fail(name, lineno, "non-integer token");
        PointList pts = parse_record_tokens(tok, mode, name, lineno);
        check_usable(pts, name, lineno);
        if (strict) {
            if (format_record(pts) != line) fail(name, lineno, "non-canonical record formatting");
            if (!std::is_sorted(pts.begin(), pts.end())) fail(name, lineno, "points not sorted");
            if (!db.records.empty()) {
                if (db.records.back() == pts) fail(name, lineno, "duplicate record");
                if (!tuple_less(db.records.back(), pts))
                    fail(name, lineno, "records not sorted");
            }
            if (canonical_form_only(pts).points != pts)
                fail(name, lineno, "record is not a canonical form");
            db.records.push_back(std::move(pts));
        } else {
            // Repair on ingest: replace by the canonical representative so the
            // in-memory database already satisfies the strict invariants.
            PointList canon = canonical_form_only(pts).points;
            if (canon != pts) ++db.lenient_repairs;
            db.records.push_back(std::move(canon));
        }
        seen_record = true;
    }
    if (strict && !seen_header) fail(name, 1, "missing #LP3 1 header");
    if (!strict) {
        if (!std::is_sorted(db.records.begin(), db.records.end(), tuple_less)) {
            std::sort(db.records.begin(), db.records.end(), tuple_less);
            ++db.lenient_repairs;
        }
        auto last = std::unique(db.records.begin(), db.records.end());
        db.lenient_repairs += static_cast<std::size_t>(db.records.end() - last);
        db.records.erase(last, db.records.end());
    }
    return db;
}

LP3File read_db(const std::string& path, ReadMode mode) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open database: " + path);
    return parse_db(in, mode, path);
}

void write_db(const std::string& path, const LP3File& db) {
    const std::string bytes = format_db(db);
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write database: " + tmp);
        out << bytes;
        out.flush();
        if (!out) throw std::runtime_error("short write: " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw std::runtime_error("cannot replace database: " + path);
    }
}

DbDiff diff_db(const LP3File& a, const LP3File& b) {
    const auto fa = a.forms();
    const auto fb = b.forms();
    DbDiff d;
    std::set_difference(fa.begin(), fa.end(), fb.begin(), fb.end(),
                        std::back_inserter(d.only_in_a));
    std::set_difference(fb.begin(), fb.end(), fa.begin(), fa.end(),
                        std::back_inserter(d.only_in_b));
    return d;
}

std::string format_tsv(const std::string& name, const std::vector<std::string>& columns,
                       const std::vector<std::vector<std::string>>& rows) {
    std::string out = name;
    out += '\n';
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i) out += '\t';
        out += columns[i];
    }
    out += '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += '\t';
            out += row[i];
        }
        out += '\n';
    }
    return out;
}

}  // namespace lp3
