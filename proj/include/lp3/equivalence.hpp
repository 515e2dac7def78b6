// Canonical forms, equivalence testing, automorphism groups and cheap
// invariants for full-dimensional lattice point configurations under affine
// maps that preserve the lattice (integer linear part with determinant +-1
// plus an integer translation).
//
// The canonical form is defined constructively: for each ordered 4-tuple
// (p0, p1, p2, p3) of configuration points whose difference matrix
// M = (p1-p0 | p2-p0 | p3-p0) is nonsingular, the Hermite normal form
// (H, U) = hnf(M) determines the map p -> U*(p - p0); the candidate image is
// the lexicographically sorted point list it produces, and the canonical
// representative is the lexicographically smallest candidate.  Left
// multiplication by a unimodular matrix does not change H, so equivalent
// configurations generate identical candidate sets and therefore identical
// representatives.
//
// Only tuples whose |det M| equals the minimal nonzero 4-subset determinant
// are enumerated.  That subset of tuples is itself preserved by unimodular
// maps, so the restriction is sound and cuts the constant factor
// substantially (canonicalization dominates the large enumeration runs).

#pragma once

#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "lp3/geometry.hpp"

namespace lp3 {

struct NotFullDimensional : std::runtime_error {
    NotFullDimensional()
        : std::runtime_error("NotFullDimensional: configuration does not affinely span R^3") {}
};

struct AffineUnimodularMap {
    IntMatrix3 linear;        // |det| = 1
    LatticePoint translation;

    friend constexpr auto operator<=>(const AffineUnimodularMap&,
                                      const AffineUnimodularMap&) = default;

    LatticePoint operator()(const LatticePoint& p) const { return linear * p + translation; }
    PointList operator()(const PointList& pts) const;

    static AffineUnimodularMap identity();
    // (*this) after `inner`: (this o inner)(p) = this(inner(p)).
    AffineUnimodularMap after(const AffineUnimodularMap& inner) const;
    AffineUnimodularMap inverse() const;
};

struct CanonicalForm {
    PointList points;                  // lexicographically sorted representative
    std::uint64_t hash = 0;            // digest of the sorted coordinate stream
    std::size_t automorphism_count = 1;

    bool operator==(const CanonicalForm& o) const { return points == o.points; }
    bool operator<(const CanonicalForm& o) const;
};

std::uint64_t hash_points(const PointList& sorted_points);

// Order-sensitive digest of a class list; used to fingerprint enumeration
// inputs in cache and checkpoint footers.
std::uint64_t list_fingerprint(const std::vector<CanonicalForm>& forms);

struct CanonicalizationResult {
    CanonicalForm form;
    AffineUnimodularMap witness;                    // maps the input onto form.points
    std::vector<AffineUnimodularMap> automorphisms; // stabilizer of form.points (setwise)
};

// Full canonicalization with witness and automorphism group.  Throws
// NotFullDimensional when the input does not span R^3.  Requires >= 4 points.
CanonicalizationResult canonical_form(const PointList& a);

// Same computation without assembling the automorphism list.
CanonicalForm canonical_form_only(const PointList& a);

// Unsigned multiset of all C(n,4) 4-subset determinants, sorted ascending,
// zeros included.  Invariant under every AffineUnimodularMap; used as a cheap
// prefilter, never as a decision procedure.
using VolumeVectorInvariant = std::vector<Int>;
VolumeVectorInvariant volume_vector_invariant(const PointList& a);

struct EquivalenceResult {
    bool equivalent = false;
    AffineUnimodularMap witness;  // t with t(A) = B, valid when equivalent
};

EquivalenceResult are_equivalent(const PointList& a, const PointList& b);

// The complete finite list {t : t(A) = B setwise}; empty when inequivalent.
std::vector<AffineUnimodularMap> transformations_between(const PointList& a,
                                                         const PointList& b);

// Thread-safe insert-if-absent set of canonical forms, keyed by hash with
// full-form confirmation.  Used by every enumeration for deduplication.
class CanonicalStore {
  public:
    // True when the form was new.
    bool insert(const CanonicalForm& form);
    bool contains(const CanonicalForm& form) const;
    std::size_t size() const;
    // All stored forms sorted by (size, points); deterministic regardless of
    // insertion order or thread count.
    std::vector<CanonicalForm> sorted_forms() const;

  private:
    static constexpr std::size_t kShards = 64;
    struct Shard {
        mutable std::mutex mutex;
        std::unordered_map<std::uint64_t, std::vector<CanonicalForm>> buckets;
    };
    Shard shards_[kShards];
};

}  // namespace lp3
