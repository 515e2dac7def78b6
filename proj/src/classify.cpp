#include "lp3/classify.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <set>
#include <stdexcept>

#include "lp3/boxed.hpp"
#include "lp3/equivalence.hpp"
#include "lp3/parallel.hpp"
#include "lp3/width.hpp"

namespace lp3 {

namespace {

PointList erase_point(const PointList& pts, const LatticePoint& v) {
    PointList out;
    out.reserve(pts.size() - 1);
    for (const LatticePoint& p : pts) {
        if (!(p == v)) out.push_back(p);
    }
    return out;
}

// Canonical forms of every full-dimensional single-vertex removal.
std::vector<CanonicalForm> removal_forms(const PointList& pts) {
    std::vector<CanonicalForm> out;
    for (const LatticePoint& v : convex_hull(pts).vertex_points()) {
        PointList child = erase_point(pts, v);
        if (convex_hull(child).dimension == 3) out.push_back(canonical_form_only(child));
    }
    return out;
}

bool has_normal_full_dimensional_removal(const PointList& pts) {
    for (const LatticePoint& v : convex_hull(pts).vertex_points()) {
        PointList child = erase_point(pts, v);
        if (convex_hull(child).dimension == 3 && is_normal(child)) return true;
    }
    return false;
}

}  // namespace

const SizeClassification& Classification::at(Int n) const {
    for (const SizeClassification& s : sizes) {
        if (s.n == n) return s;
    }
    throw std::out_of_range("no size-" + std::to_string(n) + " classification");
}

Int sublattice_index(const PointList& a) {
    const std::size_t n = a.size();
    Int g = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                for (std::size_t l = k + 1; l < n; ++l) {
                    Int d = det3(a[j] - a[i], a[k] - a[i], a[l] - a[i]);
                    if (d < 0) d = -d;
                    g = std::gcd(g, d);
                    if (g == 1) return 1;
                }
            }
        }
    }
    if (g == 0) throw NotFullDimensional();
    return g;
}

bool is_normal(const PointList& a) {
    HullData hull = convex_hull(a);
    if (hull.dimension != 3) throw NotFullDimensional();
    std::set<LatticePoint> sums;
    PointList doubled;
    doubled.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        doubled.push_back(a[i] + a[i]);
        for (std::size_t j = i; j < a.size(); ++j) sums.insert(a[i] + a[j]);
    }
    return lattice_points(convex_hull(doubled)).size() == sums.size();
}

bool is_dps(const PointList& a) {
    std::set<LatticePoint> sums;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = i; j < a.size(); ++j) {
            if (!sums.insert(a[i] + a[j]).second) return false;
        }
    }
    return true;
}

bool is_dps_maximal(const PointList& a, const EnumerationRun& run) {
    const Int n = static_cast<Int>(a.size());
    if (n >= 8) return true;
    if (run.max_size < n + 1) {
        throw DatabaseIncomplete("deciding maximality at size " + std::to_string(n) +
                                 " needs the size-" + std::to_string(n + 1) + " census");
    }
    const CanonicalForm me = canonical_form_only(a);
    for (const CanonicalForm& f : run.at(n + 1).classes) {
        if (!is_dps(f.points)) continue;
        for (const CanonicalForm& child : removal_forms(f.points)) {
            if (child == me) return false;
        }
    }
    return true;
}

PointList make_Tn(Int n) {
    if (n < 5) throw std::invalid_argument("make_Tn: size must be at least 5");
    PointList verts = {{-1, -1, 1}, {-1, 1, -2}, {0, 1, 2 * n - 9}, {2, -1, 0}};
    HullData hull = convex_hull(verts);
    PointList pts = lattice_points(hull);
    const bool clean =
        static_cast<Int>(pts.size()) == n &&
        pts.size() == hull.vertices.size() + interior_lattice_points(hull).size();
    if (!clean || width(pts).width != 2 || hull.normalized_volume != 12 * (n - 4) + 8) {
        throw std::logic_error("make_Tn: family invariant violated");
    }
    return pts;
}

ClassificationRecord classify_points(const PointList& a) {
    HullData hull = convex_hull(a);
    if (hull.dimension != 3) throw NotFullDimensional();
    ClassificationRecord r;
    r.size = static_cast<Int>(a.size());
    r.vertex_count = static_cast<Int>(hull.vertices.size());
    r.interior_count = static_cast<Int>(interior_lattice_points(hull).size());
    r.width = width(a).width;
    r.normalized_volume = hull.normalized_volume;
    r.sublattice_index = sublattice_index(a);
    r.is_canonical = r.interior_count == 1;
    r.is_terminal = r.is_canonical && r.size == r.vertex_count + 1;
    r.is_normal = is_normal(a);
    r.is_dps = is_dps(a);
    r.is_quasi_minimal = is_quasi_minimal(a);
    r.is_minimal = is_minimal(a);
    r.is_clean = r.size == r.vertex_count + r.interior_count;
    return r;
}

Classification classify_all(const EnumerationRun& run, unsigned threads) {
    Classification out;
    out.max_size = run.max_size;
    for (const SizeResult& sr : run.sizes) {
        SizeClassification sc;
        sc.n = sr.n;
        auto jobs = parallel_collect<ClassificationRecord>(
            sr.classes.size(), threads,
            [&](std::size_t i) -> std::vector<ClassificationRecord> {
                return {classify_points(sr.classes[i].points)};
            });
        sc.records.reserve(jobs.size());
        for (auto& j : jobs) sc.records.push_back(j[0]);
        out.sizes.push_back(std::move(sc));
    }

    // Distinct-pair-sum maximality per size: a class is non-maximal exactly
    // when some dps class one size up removes a vertex down to it.
    for (SizeClassification& sc : out.sizes) {
        sc.dps_maximal_decided = sc.n >= 8 || sc.n + 1 <= run.max_size;
        if (!sc.dps_maximal_decided) continue;
        std::set<CanonicalForm> shrunk;
        if (sc.n < 8) {
            const SizeResult& above = run.at(sc.n + 1);
            const SizeClassification& above_c = out.at(sc.n + 1);
            for (std::size_t i = 0; i < above.classes.size(); ++i) {
                if (!above_c.records[i].is_dps) continue;
                for (CanonicalForm& f : removal_forms(above.classes[i].points)) {
                    shrunk.insert(std::move(f));
                }
            }
        }
        const SizeResult& here = run.at(sc.n);
        for (std::size_t i = 0; i < sc.records.size(); ++i) {
            if (!sc.records[i].is_dps) continue;
            sc.records[i].is_dps_maximal = shrunk.count(here.classes[i]) == 0;
        }
    }
    return out;
}

CensusAggregates aggregate_census(const EnumerationRun& run, const Classification& c) {
    CensusAggregates agg;
    agg.max_size = run.max_size;

    for (const SizeClassification& sc : c.sizes) {
        const Int n = sc.n;
        agg.totals[n] = sc.records.size();
        agg.dps_maximal_decided[n] = sc.dps_maximal_decided;
        CensusAggregates::VolumeFacts vol;
        for (std::size_t i = 0; i < sc.records.size(); ++i) {
            const ClassificationRecord& r = sc.records[i];
            ++agg.by_vertices[{n, r.vertex_count}];
            ++agg.by_width[{n, r.width}];
            ++agg.by_index[{n, r.sublattice_index}];
            ++agg.by_interior_vertices[{n, {r.interior_count, r.vertex_count}}];
            if (r.is_canonical) ++agg.canonical[n];
            if (r.is_terminal) ++agg.terminal[n];
            if (r.is_normal) ++agg.normal[n];
            if (r.is_dps) {
                ++agg.dps_by_vertices[{n, r.vertex_count}];
                if (sc.dps_maximal_decided && r.is_dps_maximal) {
                    ++agg.dps_maximal_by_vertices[{n, r.vertex_count}];
                }
            }
            if (r.is_quasi_minimal) ++agg.quasi_minimal_by_vertices[{n, r.vertex_count}];

            if (vol.min_count == 0 || r.normalized_volume < vol.min) {
                vol.min = r.normalized_volume;
                vol.min_count = 0;
            }
            if (r.normalized_volume == vol.min) ++vol.min_count;
            if (vol.max_count == 0 || r.normalized_volume > vol.max) {
                vol.max = r.normalized_volume;
                vol.max_count = 0;
                vol.max_class_index = i;
            }
            if (r.normalized_volume == vol.max) ++vol.max_count;
        }
        if (vol.max_count == 1 && n >= 5) {
            vol.max_is_tall_tetrahedron =
                run.at(n).classes[vol.max_class_index] == canonical_form_only(make_Tn(n));
        }
        agg.volume[n] = vol;

        // The check behind the normal-removal question: every normal class
        // should shrink to some normal full-dimensional one.
        std::size_t stuck = 0;
        const SizeResult& sr = run.at(n);
        for (std::size_t i = 0; i < sc.records.size(); ++i) {
            if (!sc.records[i].is_normal) continue;
            if (!has_normal_full_dimensional_removal(sr.classes[i].points)) ++stuck;
        }
        agg.normal_without_normal_removal[n] = stuck;
    }

    // Boxed quasi-minimal sub-grid; beyond size 6 a quasi-minimal class is
    // boxed or spiked but never both, so the spiked side is the complement.
    for (Int n = 7; n <= run.max_size; ++n) {
        for (const BoxedClass& b : boxed_quasiminimal(n)) {
            const Int verts = static_cast<Int>(convex_hull(b.form.points).vertices.size());
            ++agg.quasi_minimal_boxed_by_vertices[{n, verts}];
        }
    }
    return agg;
}

namespace {

std::string cell(std::size_t v) { return std::to_string(v); }
std::string cell(Int v) { return std::to_string(v); }
std::string yn(bool v) { return v ? "yes" : "no"; }

std::size_t grid(const std::map<std::pair<Int, Int>, std::size_t>& m, Int a, Int b) {
    auto it = m.find({a, b});
    return it == m.end() ? 0 : it->second;
}

std::size_t count_at(const std::map<Int, std::size_t>& m, Int n) {
    auto it = m.find(n);
    return it == m.end() ? 0 : it->second;
}

}  // namespace

std::vector<Table> census_tables(const CensusAggregates& agg) {
    std::vector<Table> tables;
    const Int N = agg.max_size;

    {
        Table t{"census_by_vertices", {"size"}, {}};
        for (Int v = 4; v <= N - 1; ++v) t.columns.push_back("vertices_" + std::to_string(v));
        t.columns.push_back("total");
        for (Int n = 5; n <= N; ++n) {
            std::vector<std::string> row{cell(n)};
            for (Int v = 4; v <= N - 1; ++v) row.push_back(cell(grid(agg.by_vertices, n, v)));
            row.push_back(cell(count_at(agg.totals, n)));
            t.rows.push_back(std::move(row));
        }
        tables.push_back(std::move(t));
    }

    {
        Table t{"quasi_minimal_census",
                {"size", "boxed_v4", "boxed_v5", "boxed_v6", "boxed_total", "spiked_v4",
                 "spiked_v5", "spiked_total", "all_v4", "all_v5", "all_v6", "all_total"},
                {}};
        for (Int n = 5; n <= std::min<Int>(N, 11); ++n) {
            std::vector<std::string> row{cell(n)};
            std::size_t all_total = 0, boxed_total = 0;
            for (Int v = 4; v <= 6; ++v) all_total += grid(agg.quasi_minimal_by_vertices, n, v);
            for (Int v = 4; v <= 6; ++v) boxed_total += grid(agg.quasi_minimal_boxed_by_vertices, n, v);
            if (n < 7) {
                // Boxed and spiked overlap in the smallest sizes, so only the
                // union is attributed.
                for (int blank = 0; blank < 7; ++blank) row.push_back("");
            } else {
                for (Int v = 4; v <= 6; ++v) {
                    row.push_back(cell(grid(agg.quasi_minimal_boxed_by_vertices, n, v)));
                }
                row.push_back(cell(boxed_total));
                for (Int v = 4; v <= 5; ++v) {
                    row.push_back(cell(grid(agg.quasi_minimal_by_vertices, n, v) -
                                       grid(agg.quasi_minimal_boxed_by_vertices, n, v)));
                }
                row.push_back(cell(all_total - boxed_total));
            }
            for (Int v = 4; v <= 6; ++v) row.push_back(cell(grid(agg.quasi_minimal_by_vertices, n, v)));
            row.push_back(cell(all_total));
            t.rows.push_back(std::move(row));
        }
        tables.push_back(std::move(t));
    }

    {
        Table t{"census_by_interior_points", {"size", "interior"}, {}};
        for (Int v = 4; v <= N - 1; ++v) t.columns.push_back("vertices_" + std::to_string(v));
        t.columns.push_back("total");
        for (Int n = 5; n <= N; ++n) {
            for (Int i = 0; i <= N; ++i) {
                std::size_t total = 0;
                std::vector<std::string> row{cell(n), cell(i)};
                for (Int v = 4; v <= N - 1; ++v) {
                    auto it = agg.by_interior_vertices.find({n, {i, v}});
                    const std::size_t cnt = it == agg.by_interior_vertices.end() ? 0 : it->second;
                    total += cnt;
                    row.push_back(cell(cnt));
                }
                if (total == 0) continue;
                row.push_back(cell(total));
                t.rows.push_back(std::move(row));
            }
        }
        tables.push_back(std::move(t));
    }

    {
        Table t{"canonical_and_terminal", {"size", "canonical", "terminal"}, {}};
        for (Int n = 5; n <= N; ++n) {
            t.rows.push_back({cell(n), cell(count_at(agg.canonical, n)), cell(count_at(agg.terminal, n))});
        }
        tables.push_back(std::move(t));
    }

    {
        Table t{"census_by_width", {"size", "width_2", "width_3", "width_4", "width_5_plus"}, {}};
        for (Int n = 5; n <= N; ++n) {
            std::size_t beyond = 0;
            for (const auto& [key, cnt] : agg.by_width) {
                if (key.first == n && key.second >= 5) beyond += cnt;
            }
            t.rows.push_back({cell(n), cell(grid(agg.by_width, n, 2)), cell(grid(agg.by_width, n, 3)),
                              cell(grid(agg.by_width, n, 4)), cell(beyond)});
        }
        tables.push_back(std::move(t));
    }

    {
        Table t{"census_by_sublattice_index",
                {"size", "index_1", "index_2", "index_3", "index_5", "other"},
                {}};
        for (Int n = 5; n <= N; ++n) {
            std::size_t other = 0;
            for (const auto& [key, cnt] : agg.by_index) {
                if (key.first == n && key.second != 1 && key.second != 2 && key.second != 3 &&
                    key.second != 5) {
                    other += cnt;
                }
            }
            t.rows.push_back({cell(n), cell(grid(agg.by_index, n, 1)), cell(grid(agg.by_index, n, 2)),
                              cell(grid(agg.by_index, n, 3)), cell(grid(agg.by_index, n, 5)),
                              cell(other)});
        }
        tables.push_back(std::move(t));
    }

    {
        Table t{"normal_count", {"size", "normal", "fraction"}, {}};
        for (Int n = 5; n <= N; ++n) {
            const double frac = static_cast<double>(count_at(agg.normal, n)) /
                                static_cast<double>(count_at(agg.totals, n));
            char buf[16];
            std::snprintf(buf, sizeof buf, "%.3f", frac);
            t.rows.push_back({cell(n), cell(count_at(agg.normal, n)), buf});
        }
        tables.push_back(std::move(t));
    }

    {
        Table t{"dps_census", {"size", "vertices_4", "vertices_5", "vertices_6", "vertices_7", "total"}, {}};
        for (Int n = 5; n <= std::min<Int>(N, 8); ++n) {
            std::size_t total = 0;
            std::vector<std::string> row{cell(n)};
            for (Int v = 4; v <= 7; ++v) {
                const std::size_t cnt = grid(agg.dps_by_vertices, n, v);
                total += cnt;
                row.push_back(cell(cnt));
            }
            row.push_back(cell(total));
            t.rows.push_back(std::move(row));
        }
        tables.push_back(std::move(t));
    }

    {
        Table t{"dps_maximal", {"size", "vertices_4", "vertices_5", "vertices_6", "vertices_7", "total"}, {}};
        for (Int n = 5; n <= std::min<Int>(N, 8); ++n) {
            if (!agg.dps_maximal_decided.at(n)) continue;
            std::size_t total = 0;
            std::vector<std::string> row{cell(n)};
            for (Int v = 4; v <= 7; ++v) {
                const std::size_t cnt = grid(agg.dps_maximal_by_vertices, n, v);
                total += cnt;
                row.push_back(cell(cnt));
            }
            row.push_back(cell(total));
            t.rows.push_back(std::move(row));
        }
        tables.push_back(std::move(t));
    }

    {
        Table t{"volume_extremes",
                {"size", "min", "min_unique", "max", "max_unique", "max_is_tall_tetrahedron"},
                {}};
        for (Int n = 5; n <= N; ++n) {
            const auto& v = agg.volume.at(n);
            t.rows.push_back({cell(n), cell(v.min), yn(v.min_count == 1), cell(v.max),
                              yn(v.max_count == 1), yn(v.max_is_tall_tetrahedron)});
        }
        tables.push_back(std::move(t));
    }

    {
        Table t{"normal_removal_check", {"size", "normal", "without_normal_removal"}, {}};
        for (Int n = 5; n <= N; ++n) {
            t.rows.push_back({cell(n), cell(count_at(agg.normal, n)),
                              cell(count_at(agg.normal_without_normal_removal, n))});
        }
        tables.push_back(std::move(t));
    }

    return tables;
}

}  // namespace lp3
