// Orchestration of the full enumeration by size: the seed lists give sizes 5
// and 6 verbatim, and every later size is the disjoint union of the
// quasi-minimal classes (spiked and boxed generators) with the classes merged
// from the previous size.  Results persist incrementally per size, so an
// interrupted run resumes where it stopped.

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "lp3/equivalence.hpp"
#include "lp3/geometry.hpp"

namespace lp3 {

// How a class entered the census.  A class reported by both routes would
// contradict the generation dichotomy, so composition treats that as a fatal
// inconsistency rather than a value that can ever be stored.
enum class Provenance { kQuasiMinimal, kMerged, kBoth };

std::string provenance_name(Provenance p);

struct SizeResult {
    Int n = 0;
    std::vector<CanonicalForm> classes;    // sorted
    std::vector<Provenance> provenance;    // aligned with classes; sizes 5-6 all quasi-minimal
    bool loaded_from_disk = false;
    double seconds = 0;
};

struct EnumerationRun {
    Int max_size = 0;
    std::vector<SizeResult> sizes;  // n = 5 .. max_size, in order

    const SizeResult& at(Int n) const;  // throws std::out_of_range for other sizes
    Provenance provenance(Int n, const CanonicalForm& f) const;  // unknown class throws
};

struct EnumerateOptions {
    unsigned threads = 0;   // 0: hardware default
    std::string data_dir;   // seed caches; empty: the shipped data directory
    std::string work_dir;   // per-size databases and merge checkpoints; empty: keep in memory
    std::function<void(const std::string&)> log;  // progress; empty: standard error
};

// Enumerates every width > 1 class of size 5..max_size.  max_size must be at
// least 7; values above 11 emit a warning, because past that point the
// quasi-minimal generators reduce to the spiked families alone.
EnumerationRun enumerate(Int max_size = 11);
EnumerationRun enumerate(Int max_size, const EnumerateOptions& options);

}  // namespace lp3
