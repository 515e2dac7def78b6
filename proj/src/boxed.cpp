#include "lp3/boxed.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "lp3/parallel.hpp"
#include "lp3/width.hpp"

namespace lp3 {

namespace {

// 3 outliers plus the 2^3 corners of the box.
constexpr std::size_t kMaxBoxedSize = 11;

Int& coord(LatticePoint& p, int axis) {
    switch (axis) {
        case 0: return p.x;
        case 1: return p.y;
        default: return p.z;
    }
}

// Cube vertices are indexed by bit masks, bit i = coordinate i.
LatticePoint cube_vertex(int mask) {
    return {mask & 1, (mask >> 1) & 1, (mask >> 2) & 1};
}

PointList mask_points(int amask) {
    PointList pts;
    for (int m = 0; m < 8; ++m)
        if (amask & (1 << m)) pts.push_back(cube_vertex(m));
    std::sort(pts.begin(), pts.end());
    return pts;
}

// The outlier on `axis` with coordinate a there and the transverse {0,1}
// coordinates lo, hi on the two remaining axes in increasing axis order.
LatticePoint outlier_point(int axis, Int a, int lo, int hi) {
    LatticePoint p{0, 0, 0};
    coord(p, axis) = a;
    int other[2], n = 0;
    for (int ax = 0; ax < 3; ++ax)
        if (ax != axis) other[n++] = ax;
    coord(p, other[0]) = lo;
    coord(p, other[1]) = hi;
    return p;
}

Functional axis_functional(BoxKind kind, int axis) {
    if (kind == BoxKind::kUnitCube) {
        Functional f;
        (axis == 0 ? f.a : axis == 1 ? f.b : f.c) = 1;
        return f;
    }
    // Q0 slabs: y+z, x+z, x+y.
    switch (axis) {
        case 0: return {0, 1, 1, 0};
        case 1: return {1, 0, 1, 0};
        default: return {1, 1, 0, 0};
    }
}

// Full validation of one sweep candidate: the configuration must consist of
// exactly the box points and the three outliers (hull picks up nothing new),
// be full dimensional, have width > 1, and pass the certificate check.
std::optional<BoxedClass> validate_candidate(BoxKind kind, const PointList& box_pts,
                                             const std::array<LatticePoint, 3>& v) {
    PointList pts = box_pts;
    pts.insert(pts.end(), v.begin(), v.end());
    std::sort(pts.begin(), pts.end());
    if (std::adjacent_find(pts.begin(), pts.end()) != pts.end()) return std::nullopt;
    HullData hull = convex_hull(pts);
    if (hull.dimension != 3) return std::nullopt;
    if (lattice_point_count_capped(hull, pts.size()) != pts.size()) return std::nullopt;
    if (width_at_most_one(pts).value) return std::nullopt;
    BoxedCertificate cert;
    cert.kind = kind;
    cert.f1 = axis_functional(kind, 0);
    cert.f2 = axis_functional(kind, 1);
    cert.f3 = axis_functional(kind, 2);
    cert.v1 = v[0];
    cert.v2 = v[1];
    cert.v3 = v[2];
    cert.box_points = box_pts;
    if (!verify_boxed(pts, cert)) return std::nullopt;
    return BoxedClass{pts, cert, canonical_form_only(pts)};
}

// Job results merged in job order, first representative of a class wins, so
// the output is independent of thread scheduling.
std::vector<BoxedClass> dedup_in_order(std::vector<std::vector<BoxedClass>> per_job) {
    std::map<CanonicalForm, BoxedClass> classes;
    for (auto& job : per_job)
        for (auto& cls : job) classes.try_emplace(cls.form, std::move(cls));
    std::vector<BoxedClass> out;
    out.reserve(classes.size());
    for (auto& [form, cls] : classes) out.push_back(std::move(cls));
    return out;
}

// Outlier menu for one axis of a unit-cube sweep.  When the cube edge at the
// given transverse position still holds a box point, the outlier must be the
// adjacent lattice point beyond one of the two facets; over an empty edge it
// can sit up to six steps out on either side.
std::vector<Int> axis_coordinates(bool edge_met) {
    if (edge_met) return {-1, 2};
    std::vector<Int> a;
    for (Int t = -6; t <= 7; ++t)
        if (t != 0 && t != 1) a.push_back(t);
    return a;
}

// Outlier menus for one box point set.  In near-only mode every outlier is
// restricted to the lattice points adjacent to a cube facet, the positions
// inherited from the maximal sweep that peeling starts from; otherwise the
// twelve-deep range applies over every empty edge.
std::array<std::vector<LatticePoint>, 3> outlier_menus(int amask, bool near_only) {
    std::array<std::vector<LatticePoint>, 3> menus;
    for (int axis = 0; axis < 3; ++axis)
        for (int lo = 0; lo < 2; ++lo)
            for (int hi = 0; hi < 2; ++hi) {
                // Masks of the two endpoints of the cube edge this outlier
                // lines up with.
                LatticePoint e0 = outlier_point(axis, 0, lo, hi);
                LatticePoint e1 = outlier_point(axis, 1, lo, hi);
                int m0 = static_cast<int>(e0.x + 2 * e0.y + 4 * e0.z);
                int m1 = static_cast<int>(e1.x + 2 * e1.y + 4 * e1.z);
                bool met = (amask & (1 << m0)) || (amask & (1 << m1));
                for (Int a : axis_coordinates(near_only || met))
                    menus[axis].push_back(outlier_point(axis, a, lo, hi));
            }
    return menus;
}

std::vector<BoxedClass> sweep_unit_cube(const std::vector<int>& amasks, bool near_only) {
    auto per_job = parallel_collect<BoxedClass>(amasks.size(), 0, [&](std::size_t j) {
        const int amask = amasks[j];
        const PointList box_pts = mask_points(amask);
        const auto menus = outlier_menus(amask, near_only);
        std::vector<BoxedClass> found;
        for (const LatticePoint& v1 : menus[0])
            for (const LatticePoint& v2 : menus[1])
                for (const LatticePoint& v3 : menus[2])
                    if (auto cls = validate_candidate(BoxKind::kUnitCube, box_pts, {v1, v2, v3}))
                        found.push_back(std::move(*cls));
        return found;
    });
    return dedup_in_order(std::move(per_job));
}

}  // namespace

std::string boxed_reason_name(BoxedReason r) {
    switch (r) {
        case BoxedReason::kValid: return "valid";
        case BoxedReason::kTooManyPoints: return "too many points";
        case BoxedReason::kNotFullDimensional: return "not full dimensional";
        case BoxedReason::kWrongFunctionals: return "wrong functionals";
        case BoxedReason::kPointSetMismatch: return "point set mismatch";
        case BoxedReason::kOutlierInsideBox: return "outlier inside box";
        case BoxedReason::kOutlierOffSlab: return "outlier off slab";
        case BoxedReason::kBoxPointOutsideBox: return "box point outside box";
        case BoxedReason::kNotClosed: return "not closed";
        case BoxedReason::kWidthOne: return "width one";
    }
    return "unknown";
}

bool verify_boxed(const PointList& a, const BoxedCertificate& cert) {
    BoxedReason why;
    return verify_boxed(a, cert, why);
}

bool verify_boxed(const PointList& a, const BoxedCertificate& cert, BoxedReason& why) {
    const auto fail = [&](BoxedReason r) {
        why = r;
        return false;
    };
    why = BoxedReason::kValid;
    if (a.size() > kMaxBoxedSize) return fail(BoxedReason::kTooManyPoints);
    if (affine_dimension(a) != 3) return fail(BoxedReason::kNotFullDimensional);

    const std::array<Functional, 3> f = {cert.f1, cert.f2, cert.f3};
    for (int axis = 0; axis < 3; ++axis)
        if (f[axis] != axis_functional(cert.kind, axis)) return fail(BoxedReason::kWrongFunctionals);

    const std::array<LatticePoint, 3> v = {cert.v1, cert.v2, cert.v3};
    PointList assembled = cert.box_points;
    assembled.insert(assembled.end(), v.begin(), v.end());
    std::sort(assembled.begin(), assembled.end());
    PointList sorted = a;
    std::sort(sorted.begin(), sorted.end());
    if (assembled != sorted) return fail(BoxedReason::kPointSetMismatch);
    if (std::adjacent_find(assembled.begin(), assembled.end()) != assembled.end())
        return fail(BoxedReason::kPointSetMismatch);

    for (int i = 0; i < 3; ++i) {
        Int fi = f[i](v[i]);
        if (fi == 0 || fi == 1) return fail(BoxedReason::kOutlierInsideBox);
        for (int j = 0; j < 3; ++j) {
            if (i == j) continue;
            Int fj = f[i](v[j]);
            if (fj != 0 && fj != 1) return fail(BoxedReason::kOutlierOffSlab);
        }
    }
    for (const LatticePoint& p : cert.box_points)
        for (int i = 0; i < 3; ++i) {
            Int fp = f[i](p);
            if (fp != 0 && fp != 1) return fail(BoxedReason::kBoxPointOutsideBox);
        }

    HullData hull = convex_hull(a);
    if (lattice_point_count_capped(hull, a.size()) != a.size())
        return fail(BoxedReason::kNotClosed);
    if (width_at_most_one(a).value) return fail(BoxedReason::kWidthOne);
    return true;
}

std::vector<BoxedClass> boxed_enumerate_Q0() {
    static const PointList base = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    // Possible outliers beyond each slab of Q0, eight per axis.
    static const std::array<std::vector<LatticePoint>, 3> menus = {{
        {{-1, 1, 1}, {-1, 1, 2}, {-1, 2, 1}, {0, 1, 1}, {1, -1, -1}, {1, -1, 0}, {1, 0, -1}, {2, -1, -1}},
        {{1, -1, 1}, {1, -1, 2}, {2, -1, 1}, {1, 0, 1}, {-1, 1, -1}, {-1, 1, 0}, {0, 1, -1}, {-1, 2, -1}},
        {{1, 1, -1}, {1, 2, -1}, {2, 1, -1}, {1, 1, 0}, {-1, -1, 1}, {-1, 0, 1}, {0, -1, 1}, {-1, -1, 2}},
    }};
    std::vector<std::vector<BoxedClass>> per_job(1);
    for (const LatticePoint& v1 : menus[0])
        for (const LatticePoint& v2 : menus[1])
            for (const LatticePoint& v3 : menus[2])
                if (auto cls = validate_candidate(BoxKind::kQ0, base, {v1, v2, v3}))
                    per_job[0].push_back(std::move(*cls));
    return dedup_in_order(std::move(per_job));
}

std::vector<BoxedClass> boxed_enumerate_fulledge() {
    // Every state the peel can reach: any box point set of four or more cube
    // vertices (peeling in all orders from the full cube visits them all,
    // and each state is validated from scratch, so the order never matters),
    // with the outliers kept in their near positions.
    std::vector<int> amasks;
    for (int amask = 0; amask < 256; ++amask)
        if (std::popcount(static_cast<unsigned>(amask)) >= 4) amasks.push_back(amask);
    return sweep_unit_cube(amasks, true);
}

std::vector<BoxedClass> boxed_enumerate_missingedge() {
    // Box point sets leaving some cube edge empty, one representative per
    // orbit of the cube symmetries, written as vertex masks (bit i is
    // coordinate i).  With R the removed complement:
    //   6 points: R is an edge, all edges equivalent (triangular prism);
    //   5 points: R is an edge plus a vertex adjacent to one end (induced
    //     3-path) or adjacent to neither (edge plus its antipodal vertex);
    //   4 points: any 4-set other than the two alternating tetrahedra,
    //     since exactly those have an edge-free complement: a square facet,
    //     a diagonal rectangle, or a unimodular tetrahedron (vertex star,
    //     3-edge path, 2-edge path plus the opposite vertex).
    static const std::array<std::vector<int>, 8> shapes = {{
        {0, 1, 2, 4, 5, 6},  // prism: cube minus edge {3,7}
        {0, 2, 4, 5, 6},     // square pyramid: cube minus the 3-path {1,3,7}
        {0, 1, 2, 5, 6},     // cube minus edge {3,7} and its antipodal vertex 4
        {0, 1, 2, 3},        // square facet z = 0
        {0, 1, 6, 7},        // diagonal rectangle
        {0, 1, 2, 4},        // tetrahedron: star of vertex 0
        {0, 1, 3, 4},        // tetrahedron: 3-edge path 4-0-1-3
        {0, 1, 4, 7},        // tetrahedron: 2-edge path 4-0-1 plus 7
    }};
    std::vector<int> amasks;
    for (const auto& shape : shapes) {
        int amask = 0;
        for (int m : shape) amask |= 1 << m;
        amasks.push_back(amask);
    }
    return sweep_unit_cube(amasks, false);
}

const std::vector<BoxedClass>& boxed_all() {
    static const std::vector<BoxedClass> classes = [] {
        std::vector<std::vector<BoxedClass>> sources;
        sources.push_back(boxed_enumerate_fulledge());
        sources.push_back(boxed_enumerate_missingedge());
        sources.push_back(boxed_enumerate_Q0());
        return dedup_in_order(std::move(sources));
    }();
    return classes;
}

std::vector<BoxedClass> boxed_quasiminimal(Int n) {
    std::vector<BoxedClass> out;
    for (const BoxedClass& cls : boxed_all())
        if (static_cast<Int>(cls.form.points.size()) == n && is_quasi_minimal(cls.points))
            out.push_back(cls);
    return out;
}

std::vector<CanonicalForm> boxed_reference_forms(Int n) {
    return boxed_reference_forms(n, std::string(LP3_DATA_DIR) + "/boxed_quasiminimal.dat");
}

std::vector<CanonicalForm> boxed_reference_forms(Int n, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open boxed reference file: " + path);
    std::string line;
    if (!std::getline(in, line) || line != "#BOXEDREF 1")
        throw std::runtime_error("bad boxed reference header in " + path);
    std::vector<CanonicalForm> matching;
    std::vector<CanonicalForm> all;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream fields(line);
        const auto bad = [&](const std::string& what) {
            return std::runtime_error("boxed reference " + path + " line " +
                                      std::to_string(lineno) + ": " + what);
        };
        long long size = 0, nvert = 0;
        if (!(fields >> size >> nvert)) throw bad("unreadable record header");
        if (size < 7 || size > static_cast<long long>(kMaxBoxedSize) || nvert < 4 || nvert > size)
            throw bad("implausible size or vertex count");
        PointList verts;
        for (long long i = 0; i < nvert; ++i) {
            Int x, y, z;
            if (!(fields >> x >> y >> z)) throw bad("truncated vertex list");
            verts.push_back({x, y, z});
        }
        Int extra;
        if (fields >> extra) throw bad("trailing fields");
        HullData hull = convex_hull(verts);
        if (hull.dimension != 3) throw bad("record is not full dimensional");
        if (hull.vertices.size() != verts.size()) throw bad("listed points are not all vertices");
        PointList pts = lattice_points(hull);
        if (static_cast<long long>(pts.size()) != size)
            throw bad("lattice point recount disagrees with record header");
        CanonicalForm form = canonical_form_only(pts);
        for (const CanonicalForm& seen : all)
            if (seen == form) throw bad("duplicate class in reference file");
        all.push_back(form);
        if (size == n) matching.push_back(std::move(form));
    }
    std::sort(matching.begin(), matching.end());
    return matching;
}

}  // namespace lp3
