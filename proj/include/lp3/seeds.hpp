// Recursion base: the complete lists of width > 1 classes of sizes 5 and 6,
// produced by an independent volume-bounded brute-force enumeration and
// cached on disk in the LP3 format.
//
// The oracle enumerates every lattice tetrahedron up to equivalence as
// {0, h1, h2, h3} for the columns of a row-style Hermite normal form with
// determinant at most vmax, then extends it by additional lattice points
// drawn from an exact finite region, keeping configurations that are closed
// (their hull contains no further lattice points) and of width larger than
// one.  Completeness rests on two facts: every nonsingular integer matrix is
// left-unimodular-equivalent to its Hermite normal form, and every
// configuration can be grown from a 4-point subset of maximal determinant,
// so extension points never need a 4-subset determinant above the base
// tetrahedron's.

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "lp3/equivalence.hpp"
#include "lp3/geometry.hpp"

namespace lp3 {

struct BoundTooSmall : std::runtime_error {
    explicit BoundTooSmall(const std::string& what)
        : std::runtime_error("BoundTooSmall: " + what) {}
};

struct SeedValidationFailed : std::runtime_error {
    explicit SeedValidationFailed(const std::string& what)
        : std::runtime_error("SeedValidationFailed: " + what) {}
};

// The largest normalized volume a width > 1 configuration of size n can have;
// the enumeration bound must be at least this.
Int seed_volume_bound(Int n);

// All width > 1 classes of size n (n in {5, 6, 7}) with normalized volume at
// most vmax, sorted.  vmax >= seed_volume_bound(n) is required, and with
// equality the list is complete; larger values (the belt-and-braces
// over-bound mode) only slow the scan down.  A nonzero shuffle_seed permutes
// the internal work order; the output is identical for every seed.
std::vector<CanonicalForm> oracle_enumerate(Int n, Int vmax, unsigned threads = 0,
                                            std::uint64_t shuffle_seed = 0);

struct SeedDatabase {
    std::vector<CanonicalForm> size5;  // 9 classes
    std::vector<CanonicalForm> size6;  // 76 classes
};

// Loads the cached seed lists from the data directory, regenerating and
// caching any missing file.  Every load re-validates class counts, sizes,
// closedness, width and the cache fingerprint; any mismatch throws
// SeedValidationFailed.
SeedDatabase seed_database();
SeedDatabase seed_database(const std::string& data_dir);

}  // namespace lp3
