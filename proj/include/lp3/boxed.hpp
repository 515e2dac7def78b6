// Enumeration of boxed polytopes: configurations of width > 1 whose lattice
// points are, except for three outliers, confined to a parallelepiped with
// opposite facets at lattice distance one.  Such configurations have at most
// 3 + 2^3 = 11 lattice points, and for size >= 7 the box can always be taken
// to be the unit cube (or, in one borderline family, the parallelepiped Q0
// spanned by the slabs of y+z, x+z and x+y).  Three exhaustive sweeps cover
// them all; every output carries a machine-checkable certificate.

#pragma once

#include <string>
#include <vector>

#include "lp3/equivalence.hpp"
#include "lp3/geometry.hpp"

namespace lp3 {

enum class BoxKind { kUnitCube, kQ0 };

// Certificate of boxedness.  The three functionals are fixed by the kind
// (x, y, z for the unit cube; y+z, x+z, x+y for Q0); outlier v_i violates the
// i-th slab 0 <= f_i <= 1 while sitting inside the other two, and every other
// lattice point of the configuration lies in all three slabs.
struct BoxedCertificate {
    BoxKind kind = BoxKind::kUnitCube;
    Functional f1, f2, f3;
    LatticePoint v1, v2, v3;
    PointList box_points;   // the configuration minus the outliers
};

enum class BoxedReason {
    kValid,
    kTooManyPoints,        // more than 11 lattice points
    kNotFullDimensional,
    kWrongFunctionals,     // functionals do not match the declared kind
    kPointSetMismatch,     // box points + outliers is not the configuration
    kOutlierInsideBox,     // some f_i(v_i) lands in {0,1}
    kOutlierOffSlab,       // some f_i(v_j), i != j, outside {0,1}
    kBoxPointOutsideBox,   // a box point violates one of the slabs
    kNotClosed,            // the hull picks up extra lattice points
    kWidthOne,             // lattice width <= 1
};

std::string boxed_reason_name(BoxedReason r);

// Checks every certificate condition against the configuration exactly.
bool verify_boxed(const PointList& a, const BoxedCertificate& cert);
bool verify_boxed(const PointList& a, const BoxedCertificate& cert, BoxedReason& why);

// One enumerated class: a representative in sweep coordinates, its
// certificate, and the canonical form the dedup ran on.
struct BoxedClass {
    PointList points;
    BoxedCertificate certificate;
    CanonicalForm form;
};

// Sweep of configurations boxed with respect to Q0, the only parallelepiped
// besides the unit cube that can box a polytope of size >= 7.  The four box
// points are fixed and each outlier ranges over an eight-entry menu; the
// 8^3 = 512 combinations collapse to five classes of size seven, every one
// of them also boxed with respect to the unit cube.
std::vector<BoxedClass> boxed_enumerate_Q0();

// Unit-cube sweep for box point sets meeting all twelve cube edges.  Those
// sets are exactly the ones whose complement is independent in the cube edge
// graph (35 of them, reachable from the full cube by peeling vertices one at
// a time in any order), and each outlier sits just past a cube facet, eight
// positions apiece.  Every candidate is validated from scratch.
std::vector<BoxedClass> boxed_enumerate_fulledge();

// Unit-cube sweep for box point sets that leave some cube edge empty.  The
// eight subset shapes (modulo cube symmetry) are hardcoded; outliers over an
// empty edge range twelve deep along their axis instead of two.
std::vector<BoxedClass> boxed_enumerate_missingedge();

// Deduplicated union of the three sweeps, sorted by canonical form (hence
// grouped by size).  Computed on first use and cached for the process.
const std::vector<BoxedClass>& boxed_all();

// The quasi-minimal classes of size n from boxed_all().
std::vector<BoxedClass> boxed_quasiminimal(Int n);

// Canonical forms of the shipped reference vertex matrices of size n,
// re-counted and canonicalized on load.  Throws std::runtime_error if the
// file is missing, malformed, or a record's lattice point count disagrees
// with its header.
std::vector<CanonicalForm> boxed_reference_forms(Int n);
std::vector<CanonicalForm> boxed_reference_forms(Int n, const std::string& path);

}  // namespace lp3
