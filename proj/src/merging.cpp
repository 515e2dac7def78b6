#include "lp3/merging.hpp"

#include <algorithm>
#include <cassert>
#include <filesystem>
#include <set>
#include <stdexcept>

#include "lp3/parallel.hpp"
#include "lp3/store_io.hpp"
#include "lp3/width.hpp"

namespace lp3 {

namespace {

constexpr const char* kCheckpointKind = "merge-checkpoint";

struct CheckpointHeader {
    Int n = 0;
    std::size_t groups = 0;
    std::uint64_t parents = 0;
    std::size_t done = 0;
};

[[noreturn]] void reject_checkpoint(const std::string& path, const std::string& why) {
    throw std::runtime_error("checkpoint " + path + ": " + why +
                             "; delete the file to restart this merge from scratch");
}

std::size_t parse_count(const LP3File& db, const std::string& path, const std::string& key) {
    const std::string value = db.footer_value(key);
    if (value.empty() || value.find_first_not_of("0123456789") != std::string::npos)
        reject_checkpoint(path, "missing or malformed footer key " + key);
    return std::stoull(value);
}

// Loads an existing snapshot into the store, after proving it belongs to this
// run (same size, same group count, same input fingerprint).
CheckpointHeader resume_checkpoint(const std::string& path, Int n, std::size_t groups,
                                   std::uint64_t parents, CanonicalStore& store) {
    LP3File db;
    try {
        db = read_db(path, ReadMode::kStrict);
    } catch (const std::exception& e) {
        reject_checkpoint(path, std::string("unreadable (") + e.what() + ")");
    }
    if (db.footer_value("kind") != kCheckpointKind)
        reject_checkpoint(path, "not a merge checkpoint");
    CheckpointHeader h;
    h.n = static_cast<Int>(parse_count(db, path, "size"));
    h.groups = parse_count(db, path, "groups");
    h.parents = parse_count(db, path, "parents");
    h.done = parse_count(db, path, "done_prefix");
    if (h.n != n || h.groups != groups || h.parents != parents)
        reject_checkpoint(path, "written for different inputs");
    if (h.done > h.groups) reject_checkpoint(path, "done_prefix exceeds group count");
    for (const PointList& rec : db.records) {
        if (rec.size() != static_cast<std::size_t>(n))
            reject_checkpoint(path, "record of wrong size");
        store.insert(canonical_form_only(rec));
    }
    return h;
}

void write_checkpoint(const std::string& path, Int n, std::size_t groups,
                      std::uint64_t parents, std::size_t done, const CanonicalStore& store) {
    LP3File db;
    db.comments = {"# merge snapshot; every record is a finished size-" + std::to_string(n) +
                   " class"};
    for (const CanonicalForm& f : store.sorted_forms()) db.records.push_back(f.points);
    db.footer = {{"kind", kCheckpointKind},
                 {"size", std::to_string(n)},
                 {"groups", std::to_string(groups)},
                 {"parents", std::to_string(parents)},
                 {"done_prefix", std::to_string(done)}};
    write_db(path, db);
}

// Merges every unordered pair of removals in the group, sending the removed
// vertex of one parent into the other parent's coordinates through each
// child equivalence, and keeps hulls that close over exactly n points.
void process_group(const ChildGroup& group, const std::vector<CanonicalForm>& classes, Int n,
                   CanonicalStore& store) {
    const std::size_t target = static_cast<std::size_t>(n);
    for (std::size_t j = 0; j < group.entries.size(); ++j) {
        const VertexRemoval& e2 = group.entries[j];
        const PointList& parent2 = classes[e2.parent].points;
        const AffineUnimodularMap from_rep2 = e2.to_representative.inverse();
        std::set<LatticePoint> tried;
        for (std::size_t i = 0; i <= j; ++i) {
            const VertexRemoval& e1 = group.entries[i];
            const LatticePoint v1_rep = e1.to_representative(e1.removed);
            for (const AffineUnimodularMap& s : group.automorphisms) {
                const LatticePoint w = from_rep2(s(v1_rep));
                if (!tried.insert(w).second) continue;
                if (std::binary_search(parent2.begin(), parent2.end(), w)) continue;
                PointList pts = parent2;
                pts.insert(std::upper_bound(pts.begin(), pts.end(), w), w);
                HullData hull = convex_hull(pts);
                if (lattice_point_count_capped(hull, target) != target) continue;
                // Width exceeds one automatically: pts contains parent2, and
                // enlarging a configuration never shrinks a functional range.
                assert(!width_at_most_one(pts).value);
                store.insert(canonical_form_only(pts));
            }
        }
    }
}

}  // namespace

std::vector<VertexRemoval> vertex_removals(const PointList& points, std::size_t parent) {
    HullData hull = convex_hull(points);
    if (hull.dimension != 3) throw NotFullDimensional();
    PointList verts = hull.vertex_points();
    std::sort(verts.begin(), verts.end());
    std::vector<VertexRemoval> out;
    out.reserve(verts.size());
    for (const LatticePoint& v : verts) {
        VertexRemoval r;
        r.parent = parent;
        r.removed = v;
        for (const LatticePoint& p : points)
            if (p != v) r.child.push_back(p);
        r.child_full_dimensional = affine_dimension(r.child) == 3;
        if (r.child_full_dimensional) {
            CanonicalizationResult c = canonical_form(r.child);
            r.child_form = std::move(c.form);
            r.to_representative = c.witness;
        }
        out.push_back(std::move(r));
    }
    return out;
}

ChildIndex build_child_index(const std::vector<CanonicalForm>& classes) {
    ChildIndex index;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        for (VertexRemoval& r : vertex_removals(classes[i].points, i)) {
            if (!r.child_full_dimensional) continue;
            auto& ids = index.groups_by_hash[r.child_form.hash];
            std::size_t gid = index.groups.size();
            for (std::size_t id : ids)
                if (index.groups[id].child == r.child_form) {
                    gid = id;
                    break;
                }
            if (gid == index.groups.size()) {
                ChildGroup group;
                group.child = r.child_form;
                group.automorphisms = canonical_form(r.child_form.points).automorphisms;
                index.groups.push_back(std::move(group));
                ids.push_back(gid);
            }
            // The group's child class covers every entry; release the per-entry
            // copies, which dominate memory on large inputs.
            r.child = PointList();
            r.child_form = CanonicalForm();
            index.groups[gid].entries.push_back(std::move(r));
        }
    }
    return index;
}

std::vector<CanonicalForm> merge_all(const std::vector<CanonicalForm>& classes, Int n) {
    return merge_all(classes, n, MergeOptions{});
}

std::vector<CanonicalForm> merge_all(const std::vector<CanonicalForm>& classes, Int n,
                                     const MergeOptions& options) {
    for (const CanonicalForm& f : classes)
        if (f.points.size() + 1 != static_cast<std::size_t>(n))
            throw std::invalid_argument("merge_all: inputs must all have size n - 1");

    const ChildIndex index = build_child_index(classes);
    const std::size_t total = index.groups.size();
    const std::uint64_t parents = list_fingerprint(classes);
    const std::size_t interval = std::max<std::size_t>(1, options.checkpoint_interval);

    CanonicalStore store;
    std::size_t done = 0;
    const bool snapshots = !options.checkpoint_path.empty();
    if (snapshots && std::filesystem::exists(options.checkpoint_path))
        done = resume_checkpoint(options.checkpoint_path, n, total, parents, store).done;

    while (done < total) {
        const std::size_t chunk = std::min(interval, total - done);
        parallel_collect<char>(chunk, options.threads, [&](std::size_t k) {
            process_group(index.groups[done + k], classes, n, store);
            return std::vector<char>{};
        });
        done += chunk;
        if (snapshots) write_checkpoint(options.checkpoint_path, n, total, parents, done, store);
        if (options.progress) options.progress(done, total);
    }
    return store.sorted_forms();
}

}  // namespace lp3
