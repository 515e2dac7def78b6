// Exact integer linear algebra and exact 3D convex-hull / lattice-point
// primitives.  Everything in this module works on integers only; there is no
// floating point anywhere.  Determinants are evaluated in 128-bit arithmetic
// and narrowing back to 64 bits is checked, so any overflow surfaces as a
// hard error instead of a silent wraparound.

#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace lp3 {

using Int = std::int64_t;
using Wide = __int128;

// Thrown by hnf() (and a few other matrix helpers) when a matrix that must be
// nonsingular has determinant zero.
struct SingularMatrix : std::runtime_error {
    SingularMatrix() : std::runtime_error("SingularMatrix: matrix has determinant zero") {}
};

[[noreturn]] void throw_overflow();

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw_overflow();
    return r;
}
inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw_overflow();
    return r;
}
inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw_overflow();
    return r;
}
// Narrow a 128-bit value back to 64 bits, failing loudly if it does not fit.
Int narrow(Wide v);

struct LatticePoint {
    Int x = 0, y = 0, z = 0;

    friend constexpr auto operator<=>(const LatticePoint&, const LatticePoint&) = default;

    LatticePoint operator+(const LatticePoint& o) const {
        return {checked_add(x, o.x), checked_add(y, o.y), checked_add(z, o.z)};
    }
    LatticePoint operator-(const LatticePoint& o) const {
        return {checked_sub(x, o.x), checked_sub(y, o.y), checked_sub(z, o.z)};
    }
    LatticePoint operator-() const { return {-x, -y, -z}; }
};

using PointList = std::vector<LatticePoint>;

LatticePoint cross(const LatticePoint& a, const LatticePoint& b);
Int dot(const LatticePoint& a, const LatticePoint& b);
// det of the 3x3 matrix with columns a, b, c.
Int det3(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c);
// gcd(|x|,|y|,|z|); zero for the zero vector.
Int content(const LatticePoint& v);

struct IntMatrix3 {
    // Row-major entries.
    std::array<Int, 9> m{};

    static IntMatrix3 identity();

    Int& operator()(int r, int c) { return m[static_cast<std::size_t>(3 * r + c)]; }
    Int operator()(int r, int c) const { return m[static_cast<std::size_t>(3 * r + c)]; }

    friend constexpr auto operator<=>(const IntMatrix3&, const IntMatrix3&) = default;

    static IntMatrix3 from_columns(const LatticePoint& c0, const LatticePoint& c1,
                                   const LatticePoint& c2);
    LatticePoint column(int c) const;
    LatticePoint row(int r) const;

    Int det() const;
    bool unimodular() const;
    IntMatrix3 operator*(const IntMatrix3& o) const;
    // Matrix acting on a column vector.
    LatticePoint operator*(const LatticePoint& p) const;
    IntMatrix3 transposed() const;
    // adjugate() * (*this) == det() * identity.
    IntMatrix3 adjugate() const;
    // Exact inverse; only defined for unimodular matrices.
    IntMatrix3 inverse_unimodular() const;
};

// Affine integer functional f(p) = a*x + b*y + c*z + d.
struct Functional {
    Int a = 0, b = 0, c = 0, d = 0;

    friend constexpr auto operator<=>(const Functional&, const Functional&) = default;

    Int operator()(const LatticePoint& p) const {
        return checked_add(checked_add(checked_mul(a, p.x), checked_mul(b, p.y)),
                           checked_add(checked_mul(c, p.z), d));
    }
    LatticePoint linear() const { return {a, b, c}; }
    bool primitive() const;
};

struct HnfResult {
    IntMatrix3 h;  // the normal form, upper triangular
    IntMatrix3 u;  // |det u| = 1 and u * input == h
};

// Row-style Hermite normal form of a nonsingular matrix: H = U*M is upper
// triangular with H[k][k] >= 1 and 0 <= H[j][k] < H[k][k] for j < k.  H is the
// unique such representative of the orbit {V*M : V integer, |det V| = 1}, which
// is what makes it usable as a canonical-form building block.
HnfResult hnf(const IntMatrix3& mat);

struct HullData {
    // Affine dimension of the input, 0..3.
    int dimension = -1;
    // The input configuration, as given.
    PointList points;
    // Indices into `points` of the vertices of the hull (increasing order).
    std::vector<std::size_t> vertices;
    // Inward facet functionals, primitive, one per facet: the facet is
    // {f = 0} and every input point has f >= 0.  Populated for dimension 3.
    std::vector<Functional> facets;
    // 6 x Euclidean volume (1 for a unimodular tetrahedron).  Dimension 3 only.
    Int normalized_volume = 0;

    PointList vertex_points() const;
};

// Exact hull of a nonempty, deduplicated point list.  Lower-dimensional input
// is legal and reported through the dimension field; facets and volume are
// computed for full-dimensional input only.
HullData convex_hull(const PointList& pts);

// All integer points of the hull, sorted lexicographically.  Dimension 3 uses
// the facet inequalities over the bounding box; lower dimensions are handled
// by a reduced-dimension scan.
PointList lattice_points(const HullData& hull);

// Number of lattice points, aborting early once the count exceeds `limit`
// (returns limit + 1 in that case).  This is the hot path of merge candidate
// acceptance, where only "== n" matters.
std::size_t lattice_point_count_capped(const HullData& hull, std::size_t limit);

// Integer points with f > 0 strictly for every facet functional (dimension 3).
PointList interior_lattice_points(const HullData& hull);

// Affine dimension of a point list (0 for a single repeated point).
int affine_dimension(const PointList& pts);

}  // namespace lp3
