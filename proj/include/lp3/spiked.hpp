// Closed-form generation of the spiked quasi-minimal polytopes of a given
// size.  Twelve parametric families (one minimal, eleven quasi-minimal with a
// distinguished non-essential vertex) cover everything from size seven up;
// instances are swept over the declared parameter ranges, validated by
// recounting lattice points and re-testing width and quasi-minimality, and
// deduplicated by canonical form.

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "lp3/equivalence.hpp"
#include "lp3/geometry.hpp"

namespace lp3 {

struct UseSeedLists : std::runtime_error {
    UseSeedLists()
        : std::runtime_error(
              "UseSeedLists: sizes below seven come from the seed lists, not the family sweep") {}
};

enum class SpikedFamily { kM, kQ1, kQ2, kQ3, kQ4, kQ5, kQ6, kQ7, kQ8, kQ9, kQ10a, kQ10b };

std::string family_name(SpikedFamily f);

enum class SpikedRejection {
    kNone,              // instance kept
    kWrongSize,         // declared size formula does not give the requested size
    kCountMismatch,     // actual lattice point count differs from the formula
    kNotWide,           // width <= 1
    kNotQuasiMinimal,   // more than one non-essential vertex
};

std::string rejection_name(SpikedRejection r);

struct SpikedFamilyInstance {
    SpikedFamily family = SpikedFamily::kM;
    Int k = 0, a = 0, b = 0;   // unused parameters stay 0
    PointList generators;      // defining points, verbatim from the family table
    Int declared_size = 0;     // size predicted by the family's formula
    SpikedRejection rejection = SpikedRejection::kNone;
};

// Raw parameter sweep for the requested size: every family at every k >= 2
// (and every a, b in range) whose size formula does not overshoot n, each
// annotated with the filter that rejected it, if any.  No deduplication.
std::vector<SpikedFamilyInstance> spiked_family_instances(Int n);

// Validated and deduplicated canonical classes of size n.  Throws UseSeedLists
// for n < 7.
std::vector<CanonicalForm> spiked_generate(Int n);

}  // namespace lp3
