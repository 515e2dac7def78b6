// Command-line front end.  Subcommands: enumerate (run the census and store
// it), classify (emit the census tables), verify (compare against the
// embedded reference counts), oracle (brute-force small sizes), canon
// (canonicalize a loose coordinate list), diff (compare two databases).
// Reports go to stdout, progress to stderr; exit 2 flags a usage error and
// exit 1 a failed validation or computation.

#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lp3/classify.hpp"
#include "lp3/expected.hpp"
#include "lp3/parallel.hpp"
#include "lp3/pipeline.hpp"
#include "lp3/seeds.hpp"
#include "lp3/store_io.hpp"

namespace {

using namespace lp3;

// A validation failure: reported on stderr with exit code 1, distinct from
// the exit-2 flag-syntax errors that CLI11 raises.
struct Invalid : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void progress(const std::string& msg) { std::cerr << msg << '\n'; }

std::string census_path(const std::string& dir, Int n) {
    return dir + "/classes_size" + std::to_string(n) + ".lp3";
}

std::string checkpoint_path(const std::string& dir, Int n) {
    return dir + "/merge_size" + std::to_string(n) + ".checkpoint.lp3";
}

SizeResult seeds_as_result(Int n, std::vector<CanonicalForm> classes) {
    SizeResult r;
    r.n = n;
    r.provenance.assign(classes.size(), Provenance::kQuasiMinimal);
    r.classes = std::move(classes);
    return r;
}

// Builds the run for --in DIR: loads every stored size, recomputing any that
// are missing below the largest one present.
EnumerationRun load_run(const std::string& dir, const std::string& data_dir, unsigned threads) {
    Int max = 0;
    for (Int n = 5; n <= 64; ++n) {
        if (std::filesystem::exists(census_path(dir, n))) max = n;
    }
    if (max == 0) {
        throw Invalid("no census files (classes_size*.lp3) in " + dir +
                      "; run the enumerate command first");
    }
    if (max >= 7) {
        EnumerateOptions opt;
        opt.threads = threads;
        opt.data_dir = data_dir;
        opt.work_dir = dir;
        opt.log = progress;
        return enumerate(max, opt);
    }
    SeedDatabase seeds = data_dir.empty() ? seed_database() : seed_database(data_dir);
    EnumerationRun run;
    run.max_size = max;
    run.sizes.push_back(seeds_as_result(5, std::move(seeds.size5)));
    if (max >= 6) run.sizes.push_back(seeds_as_result(6, std::move(seeds.size6)));
    return run;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out.good()) throw Invalid("cannot write " + path);
    out << text;
    if (!out.good()) throw Invalid("cannot write " + path);
}

int cmd_enumerate(Int max_size, unsigned threads, const std::string& out_dir, bool resume,
                  const std::string& data_dir) {
    if (!resume) {
        for (Int n = 5; n <= max_size; ++n) {
            for (const std::string& p : {census_path(out_dir, n), checkpoint_path(out_dir, n)}) {
                if (std::filesystem::exists(p)) {
                    throw Invalid(p + " already exists; pass --resume to continue from stored results");
                }
            }
        }
    }
    std::filesystem::create_directories(out_dir);

    EnumerationRun run;
    if (max_size >= 7) {
        EnumerateOptions opt;
        opt.threads = threads;
        opt.data_dir = data_dir;
        opt.work_dir = out_dir;
        opt.log = progress;
        run = enumerate(max_size, opt);
    } else {
        SeedDatabase seeds = data_dir.empty() ? seed_database() : seed_database(data_dir);
        run.max_size = max_size;
        run.sizes.push_back(seeds_as_result(5, std::move(seeds.size5)));
        if (max_size >= 6) run.sizes.push_back(seeds_as_result(6, std::move(seeds.size6)));
    }

    // The pipeline stores sizes 7 and up itself; the seed sizes are written
    // here so the output directory is the complete database.
    for (const SizeResult& sr : run.sizes) {
        if (sr.n > 6) continue;
        LP3File db;
        db.comments = {"# width > 1 classes of size " + std::to_string(sr.n)};
        for (const CanonicalForm& f : sr.classes) db.records.push_back(f.points);
        write_db(census_path(out_dir, sr.n), db);
    }

    std::vector<std::vector<std::string>> rows;
    for (const SizeResult& sr : run.sizes) {
        std::size_t quasi = 0;
        for (Provenance p : sr.provenance) {
            if (p == Provenance::kQuasiMinimal) ++quasi;
        }
        rows.push_back({std::to_string(sr.n), std::to_string(sr.classes.size()),
                        std::to_string(quasi), std::to_string(sr.classes.size() - quasi),
                        sr.loaded_from_disk ? "disk" : "computed"});
    }
    const std::string summary = format_tsv(
        "enumeration_summary", {"size", "classes", "quasi_minimal", "merged", "source"}, rows);
    write_text_file(out_dir + "/summary.tsv", summary);
    std::cout << summary;
    return 0;
}

int cmd_classify(const std::string& in_dir, const std::string& report_dir, unsigned threads,
                 const std::string& data_dir) {
    EnumerationRun run = load_run(in_dir, data_dir, threads);
    Classification cls = classify_all(run, threads);
    CensusAggregates agg = aggregate_census(run, cls);
    std::filesystem::create_directories(report_dir);
    bool first = true;
    for (const Table& t : census_tables(agg)) {
        const std::string text = format_tsv(t.name, t.columns, t.rows);
        write_text_file(report_dir + "/" + t.name + ".tsv", text);
        if (!first) std::cout << '\n';
        std::cout << text;
        first = false;
    }
    return 0;
}

int cmd_verify(const std::string& in_dir, unsigned threads, const std::string& data_dir) {
    EnumerationRun run = load_run(in_dir, data_dir, threads);
    Classification cls = classify_all(run, threads);
    CensusAggregates agg = aggregate_census(run, cls);
    VerifyReport rep = verify_census(agg);
    std::cout << format_report(rep);
    return rep.ok() ? 0 : 1;
}

int cmd_oracle(Int size, Int volume_bound, unsigned threads, const std::string& out_file) {
    if (size != 5 && size != 6 && size != 7) throw Invalid("size must be 5, 6, or 7");
    const Int bound = volume_bound == 0 ? seed_volume_bound(size) : volume_bound;
    progress("enumerating size " + std::to_string(size) + " up to normalized volume " +
             std::to_string(bound));
    std::vector<CanonicalForm> classes = oracle_enumerate(size, bound, threads);
    LP3File db;
    db.comments = {"# width > 1 classes of size " + std::to_string(size) +
                   ", by exhaustive search up to normalized volume " + std::to_string(bound)};
    for (const CanonicalForm& f : classes) db.records.push_back(f.points);
    if (out_file.empty()) {
        std::cout << format_db(db);
    } else {
        write_db(out_file, db);
        std::cout << classes.size() << " records written to " << out_file << '\n';
    }
    return 0;
}

int cmd_canon(const std::string& file, bool strict) {
    LP3File db = read_db(file, strict ? ReadMode::kStrict : ReadMode::kLenient);
    if (db.lenient_repairs > 0) {
        progress(std::to_string(db.lenient_repairs) + " records normalized while reading " + file);
    }
    for (const CanonicalForm& f : db.forms()) std::cout << format_record(f.points) << '\n';
    return 0;
}

int cmd_diff(const std::string& file_a, const std::string& file_b, bool strict) {
    const ReadMode mode = strict ? ReadMode::kStrict : ReadMode::kLenient;
    DbDiff d = diff_db(read_db(file_a, mode), read_db(file_b, mode));
    for (const CanonicalForm& f : d.only_in_a) std::cout << "< " << format_record(f.points) << '\n';
    for (const CanonicalForm& f : d.only_in_b) std::cout << "> " << format_record(f.points) << '\n';
    return d.only_in_a.empty() && d.only_in_b.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"census of lattice 3-polytopes of width greater than one"};
    app.require_subcommand(1);

    std::string data_dir;
    app.add_option("--data", data_dir, "data directory holding the cached seed lists");

    Int max_size = 11;
    unsigned threads = default_thread_count();
    std::string out_dir, in_dir, report_dir, out_file, file_a, file_b;
    bool resume = false, strict = false;
    Int oracle_size = 0, volume_bound = 0;

    CLI::App* enumerate = app.add_subcommand("enumerate", "run the census and store it");
    enumerate->add_option("--max-size", max_size, "largest size to enumerate (default 11)");
    enumerate->add_option("--out", out_dir, "output directory")->required();
    enumerate->add_option("--threads", threads, "worker thread count");
    enumerate->add_flag("--resume", resume, "reuse stored sizes and checkpoints");

    CLI::App* classify = app.add_subcommand("classify", "emit all census tables");
    classify->add_option("--in", in_dir, "census directory")->required();
    classify->add_option("--report", report_dir, "directory for the TSV tables")->required();
    classify->add_option("--threads", threads, "worker thread count");

    CLI::App* verify = app.add_subcommand("verify", "check a census against the reference counts");
    verify->add_option("--in", in_dir, "census directory")->required();
    verify->add_option("--threads", threads, "worker thread count");

    CLI::App* oracle = app.add_subcommand("oracle", "exhaustive census of one small size");
    oracle->add_option("--size", oracle_size, "size to enumerate (5, 6, or 7)")->required();
    oracle->add_option("--volume-bound", volume_bound,
                       "normalized volume cutoff (default: the completeness bound)");
    oracle->add_option("--threads", threads, "worker thread count");
    oracle->add_option("--out", out_file, "write records here instead of stdout");

    CLI::App* canon = app.add_subcommand("canon", "canonicalize a coordinate list");
    canon->add_option("file", file_a, "input file")->required();
    canon->add_flag("--strict", strict, "reject records that are not already canonical");

    CLI::App* diff = app.add_subcommand("diff", "compare two databases by canonical class");
    diff->add_option("a", file_a, "first file")->required();
    diff->add_option("b", file_b, "second file")->required();
    diff->add_flag("--strict", strict, "reject records that are not already canonical");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n\n";
        std::cerr << (app.get_subcommands().empty() ? app.help()
                                                    : app.get_subcommands().front()->help());
        return 2;
    }

    try {
        if (max_size < 5) throw Invalid("max-size must be at least 5");
        if (threads < 1) throw Invalid("threads must be at least 1");
        if (enumerate->parsed()) return cmd_enumerate(max_size, threads, out_dir, resume, data_dir);
        if (classify->parsed()) return cmd_classify(in_dir, report_dir, threads, data_dir);
        if (verify->parsed()) return cmd_verify(in_dir, threads, data_dir);
        if (oracle->parsed()) return cmd_oracle(oracle_size, volume_bound, threads, out_file);
        if (canon->parsed()) return cmd_canon(file_a, strict);
        if (diff->parsed()) return cmd_diff(file_a, file_b, strict);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
