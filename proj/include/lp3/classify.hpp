// Per-class invariants (vertex, interior and width statistics, volume,
// sublattice index, normality, distinct-pair-sum and minimality properties)
// plus the census aggregation that turns a full enumeration run into the
// summary tables.

#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lp3/geometry.hpp"
#include "lp3/pipeline.hpp"

namespace lp3 {

// A lookup needed databases beyond the sizes the run contains.
struct DatabaseIncomplete : std::runtime_error {
    explicit DatabaseIncomplete(const std::string& what)
        : std::runtime_error("DatabaseIncomplete: " + what) {}
};

struct ClassificationRecord {
    Int size = 0;
    Int vertex_count = 0;
    Int interior_count = 0;
    Int width = 0;
    Int normalized_volume = 0;
    Int sublattice_index = 0;
    bool is_canonical = false;  // exactly one interior point
    bool is_terminal = false;   // canonical and every other point a vertex
    bool is_normal = false;
    bool is_dps = false;
    // Meaningful when is_dps and the owning SizeClassification says the size
    // was decidable (the run reaches size + 1, or size is 8, the largest any
    // distinct-pair-sum class attains).
    bool is_dps_maximal = false;
    bool is_quasi_minimal = false;
    bool is_minimal = false;
    bool is_clean = false;  // every non-vertex lattice point is interior
};

struct SizeClassification {
    Int n = 0;
    // Aligned with EnumerationRun::at(n).classes.
    std::vector<ClassificationRecord> records;
    bool dps_maximal_decided = false;
};

struct Classification {
    Int max_size = 0;
    std::vector<SizeClassification> sizes;  // n = 5 .. max_size

    const SizeClassification& at(Int n) const;  // throws std::out_of_range
};

// The gcd of all 4-point determinants, which equals the index of the affine
// lattice the points span.  Throws NotFullDimensional when that gcd is zero.
Int sublattice_index(const PointList& a);

// Dimension 3 makes one doubling test sufficient: the configuration's hull P
// is normal exactly when the lattice points of 2P are all pairwise sums.
bool is_normal(const PointList& a);

// All pairwise sums a + b with a <= b are distinct ("distinct pair sums").
bool is_dps(const PointList& a);

// No class of the next size has a vertex removal equivalent to this one.
// Size 8 needs no lookup (nothing larger is dps); smaller sizes need the run
// to reach size + 1, otherwise DatabaseIncomplete is thrown.
bool is_dps_maximal(const PointList& a, const EnumerationRun& run);

// The tallest class of each size: a clean width-2 tetrahedron whose volume
// 12(n - 4) + 8 is the maximum over the whole size-n census.  All stated
// properties are re-verified on every call.
PointList make_Tn(Int n);

// Everything except is_dps_maximal, which needs a database.
ClassificationRecord classify_points(const PointList& a);

Classification classify_all(const EnumerationRun& run, unsigned threads = 0);

// Census-wide summaries feeding the table emitters and the verification
// report.  Grids are keyed by (size, ...) and drop empty cells.
struct CensusAggregates {
    Int max_size = 0;
    std::map<Int, std::size_t> totals;
    std::map<std::pair<Int, Int>, std::size_t> by_vertices;
    std::map<std::pair<Int, Int>, std::size_t> by_width;
    std::map<std::pair<Int, Int>, std::size_t> by_index;
    // Keys (size, interior count, vertex count).
    std::map<std::pair<Int, std::pair<Int, Int>>, std::size_t> by_interior_vertices;
    std::map<Int, std::size_t> canonical, terminal, normal;
    std::map<std::pair<Int, Int>, std::size_t> dps_by_vertices;
    std::map<Int, bool> dps_maximal_decided;
    std::map<std::pair<Int, Int>, std::size_t> dps_maximal_by_vertices;
    // Quasi-minimal classes; the boxed sub-grid is populated for sizes >= 7,
    // where boxed and spiked quasi-minimal classes are disjoint.
    std::map<std::pair<Int, Int>, std::size_t> quasi_minimal_by_vertices;
    std::map<std::pair<Int, Int>, std::size_t> quasi_minimal_boxed_by_vertices;

    struct VolumeFacts {
        Int min = 0, max = 0;
        std::size_t min_count = 0, max_count = 0;
        std::size_t max_class_index = 0;  // index into the run's class list
        bool max_is_tall_tetrahedron = false;
    };
    std::map<Int, VolumeFacts> volume;

    // Normal classes with no vertex removal that stays full-dimensional and
    // normal; expected to be zero everywhere.
    std::map<Int, std::size_t> normal_without_normal_removal;
};

CensusAggregates aggregate_census(const EnumerationRun& run, const Classification& c);

struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

// All census tables, in report order.  Render with format_tsv.
std::vector<Table> census_tables(const CensusAggregates& agg);

}  // namespace lp3
