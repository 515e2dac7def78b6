#include "lp3/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>

#include "lp3/boxed.hpp"
#include "lp3/merging.hpp"
#include "lp3/seeds.hpp"
#include "lp3/spiked.hpp"
#include "lp3/store_io.hpp"

namespace lp3 {

namespace {

using Clock = std::chrono::steady_clock;
using Log = std::function<void(const std::string&)>;

constexpr char kCensusKind[] = "census";

std::string census_path(const std::string& work_dir, Int n) {
    return work_dir + "/classes_size" + std::to_string(n) + ".lp3";
}

std::string merge_checkpoint_path(const std::string& work_dir, Int n) {
    return work_dir + "/merge_size" + std::to_string(n) + ".checkpoint.lp3";
}

[[noreturn]] void reject_census(const std::string& path, const std::string& why) {
    throw std::runtime_error("census database " + path + " " + why +
                             "; delete the file to recompute this size");
}

std::string format_seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1fs", s);
    return buf;
}

struct SizeData {
    std::vector<CanonicalForm> classes;
    std::vector<Provenance> provenance;
};

// Loads a previously persisted size if the file exists; absent files mean the
// size still has to be computed.  Anything present but unusable throws, since
// silently recomputing over a damaged file could mask lost work.
std::optional<SizeData> try_load_census(const std::string& path, Int n,
                                        const std::vector<CanonicalForm>& parents) {
    if (!std::filesystem::exists(path)) return std::nullopt;
    LP3File db;
    try {
        db = read_db(path, ReadMode::kStrict);
    } catch (const std::exception& e) {
        reject_census(path, std::string("is unreadable (") + e.what() + ")");
    }
    if (db.footer_value("kind") != kCensusKind) reject_census(path, "is not a census database");
    if (db.footer_value("size") != std::to_string(n) ||
        db.footer_value("parents") != std::to_string(list_fingerprint(parents))) {
        reject_census(path, "was written for different inputs");
    }
    if (db.footer_value("count") != std::to_string(db.records.size())) {
        reject_census(path, "is inconsistent: count does not match the records");
    }
    const std::string tags = db.footer_value("provenance");
    if (tags.size() != db.records.size()) {
        reject_census(path, "is inconsistent: provenance does not match the records");
    }
    SizeData out;
    out.classes.reserve(db.records.size());
    out.provenance.reserve(db.records.size());
    for (std::size_t i = 0; i < db.records.size(); ++i) {
        const PointList& pts = db.records[i];
        if (static_cast<Int>(pts.size()) != n) {
            reject_census(path, "is inconsistent: record of the wrong size");
        }
        // The strict read proved each record is its own canonical form, so the
        // form can be assembled without canonicalizing again.  The stabilizer
        // count is left at the placeholder value; readers needing automorphisms
        // recompute them from the points.
        out.classes.push_back(CanonicalForm{pts, hash_points(pts), 1});
        switch (tags[i]) {
            case 'q': out.provenance.push_back(Provenance::kQuasiMinimal); break;
            case 'm': out.provenance.push_back(Provenance::kMerged); break;
            default: reject_census(path, "is inconsistent: unknown provenance tag");
        }
    }
    if (db.footer_value("fingerprint") != std::to_string(list_fingerprint(out.classes))) {
        reject_census(path, "is inconsistent: fingerprint mismatch");
    }
    return out;
}

void save_census(const std::string& path, Int n, const SizeData& data,
                 std::uint64_t parents_fingerprint) {
    LP3File db;
    db.comments = {"# width > 1 classes of size " + std::to_string(n),
                   "# provenance: one letter per record, q = quasi-minimal, m = merged"};
    std::string tags;
    tags.reserve(data.classes.size());
    db.records.reserve(data.classes.size());
    for (std::size_t i = 0; i < data.classes.size(); ++i) {
        db.records.push_back(data.classes[i].points);
        tags.push_back(data.provenance[i] == Provenance::kQuasiMinimal ? 'q' : 'm');
    }
    db.footer = {{"kind", kCensusKind},
                 {"size", std::to_string(n)},
                 {"parents", std::to_string(parents_fingerprint)},
                 {"count", std::to_string(db.records.size())},
                 {"provenance", tags},
                 {"fingerprint", std::to_string(list_fingerprint(data.classes))}};
    write_db(path, db);
}

SizeData compute_size(Int n, const std::vector<CanonicalForm>& parents,
                      const EnumerateOptions& options, const Log& log) {
    std::map<CanonicalForm, Provenance> by_form;
    for (CanonicalForm& f : spiked_generate(n)) {
        by_form.emplace(std::move(f), Provenance::kQuasiMinimal);
    }
    for (BoxedClass& b : boxed_quasiminimal(n)) {
        by_form.emplace(std::move(b.form), Provenance::kQuasiMinimal);
    }

    MergeOptions merge_options;
    merge_options.threads = options.threads;
    if (!options.work_dir.empty()) {
        merge_options.checkpoint_path = merge_checkpoint_path(options.work_dir, n);
    }
    if (n >= 10) merge_options.checkpoint_interval = 1024;  // snapshots get large
    merge_options.progress = [&](std::size_t done, std::size_t total) {
        log("size " + std::to_string(n) + ": merged " + std::to_string(done) + "/" +
            std::to_string(total) + " child groups");
    };
    for (CanonicalForm& f : merge_all(parents, n, merge_options)) {
        auto [it, fresh] = by_form.emplace(std::move(f), Provenance::kMerged);
        if (!fresh) {
            // Every class is produced by exactly one of the two routes; a
            // collision means at least one generator is wrong.
            throw std::runtime_error("size-" + std::to_string(n) +
                                     " class generated as both quasi-minimal and merged: " +
                                     format_record(it->first.points));
        }
    }

    SizeData out;
    out.classes.reserve(by_form.size());
    out.provenance.reserve(by_form.size());
    for (auto& [form, tag] : by_form) {
        out.classes.push_back(form);
        out.provenance.push_back(tag);
    }
    return out;
}

SizeResult seed_result(Int n, const std::vector<CanonicalForm>& classes) {
    SizeResult r;
    r.n = n;
    r.classes = classes;
    r.provenance.assign(classes.size(), Provenance::kQuasiMinimal);
    return r;
}

}  // namespace

std::string provenance_name(Provenance p) {
    switch (p) {
        case Provenance::kQuasiMinimal: return "quasi-minimal";
        case Provenance::kMerged: return "merged";
        case Provenance::kBoth: return "both";
    }
    return "?";
}

const SizeResult& EnumerationRun::at(Int n) const {
    for (const SizeResult& r : sizes) {
        if (r.n == n) return r;
    }
    throw std::out_of_range("no size-" + std::to_string(n) + " results in this run");
}

Provenance EnumerationRun::provenance(Int n, const CanonicalForm& f) const {
    const SizeResult& r = at(n);
    auto it = std::lower_bound(r.classes.begin(), r.classes.end(), f);
    if (it == r.classes.end() || !(*it == f)) {
        throw std::out_of_range("class not present in the size-" + std::to_string(n) + " census");
    }
    return r.provenance[static_cast<std::size_t>(it - r.classes.begin())];
}

EnumerationRun enumerate(Int max_size) { return enumerate(max_size, EnumerateOptions{}); }

EnumerationRun enumerate(Int max_size, const EnumerateOptions& options) {
    if (max_size < 7) {
        throw std::invalid_argument("enumerate: max_size must be at least 7; the lists "
                                    "for sizes 5 and 6 are available directly");
    }
    const Log log = options.log ? options.log : Log([](const std::string& m) {
        std::cerr << m << '\n';
    });
    if (max_size > 11) {
        log("warning: beyond size 11 the quasi-minimal side reduces to the spiked "
            "families alone; results there are best-effort");
    }
    if (!options.work_dir.empty()) {
        std::filesystem::create_directories(options.work_dir);
    }

    SeedDatabase seeds =
        options.data_dir.empty() ? seed_database() : seed_database(options.data_dir);

    EnumerationRun run;
    run.max_size = max_size;
    run.sizes.push_back(seed_result(5, seeds.size5));
    run.sizes.push_back(seed_result(6, seeds.size6));
    log("size 5: " + std::to_string(seeds.size5.size()) + " classes from the seed list");
    log("size 6: " + std::to_string(seeds.size6.size()) + " classes from the seed list");

    for (Int n = 7; n <= max_size; ++n) {
        const std::vector<CanonicalForm>& parents = run.sizes.back().classes;
        const auto start = Clock::now();
        SizeResult r;
        r.n = n;

        std::optional<SizeData> loaded;
        std::string path;
        if (!options.work_dir.empty()) {
            path = census_path(options.work_dir, n);
            loaded = try_load_census(path, n, parents);
        }
        if (loaded) {
            r.classes = std::move(loaded->classes);
            r.provenance = std::move(loaded->provenance);
            r.loaded_from_disk = true;
            r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
            log("size " + std::to_string(n) + ": loaded " + std::to_string(r.classes.size()) +
                " classes from " + path);
        } else {
            SizeData data = compute_size(n, parents, options, log);
            if (!path.empty()) {
                save_census(path, n, data, list_fingerprint(parents));
                std::error_code ignored;
                std::filesystem::remove(merge_checkpoint_path(options.work_dir, n), ignored);
            }
            r.classes = std::move(data.classes);
            r.provenance = std::move(data.provenance);
            r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
            const auto quasi = static_cast<std::size_t>(
                std::count(r.provenance.begin(), r.provenance.end(), Provenance::kQuasiMinimal));
            log("size " + std::to_string(n) + ": " + std::to_string(quasi) +
                " quasi-minimal + " + std::to_string(r.classes.size() - quasi) + " merged = " +
                std::to_string(r.classes.size()) + " classes (" + format_seconds(r.seconds) + ")");
        }
        run.sizes.push_back(std::move(r));
    }
    return run;
}

}  // namespace lp3
