// Gluing step of the enumeration: every size-n class that contains two
// vertices whose removals leave width > 1 configurations arises by taking two
// size-(n-1) classes, identifying a vertex removal of one with a vertex
// removal of the other through an equivalence of the two children, and
// keeping the hull when it closes over exactly n lattice points.
//
// The pair loop runs per group of removals with equivalent children, and the
// equivalences between two children are enumerated as one witness composed
// with the automorphism group of the child representative; that coset is the
// complete transformation set, so no ordered-basis scan is needed.

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "lp3/equivalence.hpp"
#include "lp3/geometry.hpp"

namespace lp3 {

// One hull vertex of a parent configuration, removed.
struct VertexRemoval {
    std::size_t parent = 0;  // index into the class list passed by the caller
    LatticePoint removed;
    PointList child;  // parent points minus the removed vertex
    bool child_full_dimensional = false;
    // Valid when the child is full-dimensional: its class, and a map carrying
    // the child onto the class representative's points.
    CanonicalForm child_form;
    AffineUnimodularMap to_representative = AffineUnimodularMap::identity();
};

// One entry per hull vertex, ordered by removed point.  Throws
// NotFullDimensional when the input does not span R^3.
std::vector<VertexRemoval> vertex_removals(const PointList& points, std::size_t parent = 0);

// Removals sharing a child class, grouped; only full-dimensional children
// participate.
struct ChildGroup {
    CanonicalForm child;
    std::vector<AffineUnimodularMap> automorphisms;  // stabilizer of child.points
    std::vector<VertexRemoval> entries;
};

struct ChildIndex {
    // Grouped in first-encounter order over the input list, which makes group
    // numbering deterministic and checkpoints portable across runs.  Entries
    // are stored with their child fields released: the group's `child` is the
    // shared class, and the removals themselves keep only what the pair loop
    // needs (parent, removed vertex, map to the representative).
    std::vector<ChildGroup> groups;
    // Hash lookup; distinct classes with colliding hashes keep separate
    // groups, so collisions cost a comparison and never merge groups.
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> groups_by_hash;
};

ChildIndex build_child_index(const std::vector<CanonicalForm>& classes);

struct MergeOptions {
    unsigned threads = 0;  // 0: hardware default
    // When set, a resumable snapshot is maintained at this path: records are
    // the classes found so far and the footer says which group prefix is
    // fully processed.  A snapshot from different inputs is rejected.
    std::string checkpoint_path;
    std::size_t checkpoint_interval = 256;  // groups per snapshot
    // Called after each chunk of groups (and after the snapshot covering it).
    std::function<void(std::size_t groups_done, std::size_t groups_total)> progress;
};

// All size-n classes obtained by merging two of the given size-(n-1) classes.
// The output is sorted and independent of thread count and processing order.
std::vector<CanonicalForm> merge_all(const std::vector<CanonicalForm>& classes, Int n);
std::vector<CanonicalForm> merge_all(const std::vector<CanonicalForm>& classes, Int n,
                                     const MergeOptions& options);

}  // namespace lp3
