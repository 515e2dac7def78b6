#include "lp3/geometry.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

namespace lp3 {

void throw_overflow() { throw std::overflow_error("integer overflow in exact arithmetic"); }

Int narrow(Wide v) {
    if (v > static_cast<Wide>(std::numeric_limits<Int>::max()) ||
        v < static_cast<Wide>(std::numeric_limits<Int>::min()))
        throw_overflow();
    return static_cast<Int>(v);
}

LatticePoint cross(const LatticePoint& a, const LatticePoint& b) {
    Wide x = static_cast<Wide>(a.y) * b.z - static_cast<Wide>(a.z) * b.y;
    Wide y = static_cast<Wide>(a.z) * b.x - static_cast<Wide>(a.x) * b.z;
    Wide z = static_cast<Wide>(a.x) * b.y - static_cast<Wide>(a.y) * b.x;
    return {narrow(x), narrow(y), narrow(z)};
}

Int dot(const LatticePoint& a, const LatticePoint& b) {
    Wide s = static_cast<Wide>(a.x) * b.x + static_cast<Wide>(a.y) * b.y +
             static_cast<Wide>(a.z) * b.z;
    return narrow(s);
}

Int det3(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c) {
    Wide s = static_cast<Wide>(a.x) * (static_cast<Wide>(b.y) * c.z - static_cast<Wide>(b.z) * c.y) -
             static_cast<Wide>(b.x) * (static_cast<Wide>(a.y) * c.z - static_cast<Wide>(a.z) * c.y) +
             static_cast<Wide>(c.x) * (static_cast<Wide>(a.y) * b.z - static_cast<Wide>(a.z) * b.y);
    return narrow(s);
}

Int content(const LatticePoint& v) {
    return std::gcd(std::gcd(v.x, v.y), v.z);
}

IntMatrix3 IntMatrix3::identity() {
    IntMatrix3 r;
    r.m = {1, 0, 0, 0, 1, 0, 0, 0, 1};
    return r;
}

IntMatrix3 IntMatrix3::from_columns(const LatticePoint& c0, const LatticePoint& c1,
                                    const LatticePoint& c2) {
    IntMatrix3 r;
    r.m = {c0.x, c1.x, c2.x, c0.y, c1.y, c2.y, c0.z, c1.z, c2.z};
    return r;
}

LatticePoint IntMatrix3::column(int c) const { return {(*this)(0, c), (*this)(1, c), (*this)(2, c)}; }
LatticePoint IntMatrix3::row(int r) const { return {(*this)(r, 0), (*this)(r, 1), (*this)(r, 2)}; }

Int IntMatrix3::det() const { return det3(column(0), column(1), column(2)); }

bool IntMatrix3::unimodular() const {
    Int d = det();
    return d == 1 || d == -1;
}

IntMatrix3 IntMatrix3::operator*(const IntMatrix3& o) const {
    IntMatrix3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Wide s = 0;
            for (int k = 0; k < 3; ++k) s += static_cast<Wide>((*this)(i, k)) * o(k, j);
            r(i, j) = narrow(s);
        }
    return r;
}

LatticePoint IntMatrix3::operator*(const LatticePoint& p) const {
    LatticePoint r;
    r.x = narrow(static_cast<Wide>(m[0]) * p.x + static_cast<Wide>(m[1]) * p.y + static_cast<Wide>(m[2]) * p.z);
    r.y = narrow(static_cast<Wide>(m[3]) * p.x + static_cast<Wide>(m[4]) * p.y + static_cast<Wide>(m[5]) * p.z);
    r.z = narrow(static_cast<Wide>(m[6]) * p.x + static_cast<Wide>(m[7]) * p.y + static_cast<Wide>(m[8]) * p.z);
    return r;
}

IntMatrix3 IntMatrix3::transposed() const {
    IntMatrix3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r(i, j) = (*this)(j, i);
    return r;
}

IntMatrix3 IntMatrix3::adjugate() const {
    const IntMatrix3& a = *this;
    IntMatrix3 r;
    // Cofactor expansion; adj(A) * A = det(A) * I.
    r(0, 0) = narrow(static_cast<Wide>(a(1, 1)) * a(2, 2) - static_cast<Wide>(a(1, 2)) * a(2, 1));
    r(0, 1) = narrow(static_cast<Wide>(a(0, 2)) * a(2, 1) - static_cast<Wide>(a(0, 1)) * a(2, 2));
    r(0, 2) = narrow(static_cast<Wide>(a(0, 1)) * a(1, 2) - static_cast<Wide>(a(0, 2)) * a(1, 1));
    r(1, 0) = narrow(static_cast<Wide>(a(1, 2)) * a(2, 0) - static_cast<Wide>(a(1, 0)) * a(2, 2));
    r(1, 1) = narrow(static_cast<Wide>(a(0, 0)) * a(2, 2) - static_cast<Wide>(a(0, 2)) * a(2, 0));
    r(1, 2) = narrow(static_cast<Wide>(a(0, 2)) * a(1, 0) - static_cast<Wide>(a(0, 0)) * a(1, 2));
    r(2, 0) = narrow(static_cast<Wide>(a(1, 0)) * a(2, 1) - static_cast<Wide>(a(1, 1)) * a(2, 0));
    r(2, 1) = narrow(static_cast<Wide>(a(0, 1)) * a(2, 0) - static_cast<Wide>(a(0, 0)) * a(2, 1));
    r(2, 2) = narrow(static_cast<Wide>(a(0, 0)) * a(1, 1) - static_cast<Wide>(a(0, 1)) * a(1, 0));
    return r;
}

IntMatrix3 IntMatrix3::inverse_unimodular() const {
    Int d = det();
    if (d != 1 && d != -1) throw SingularMatrix();
    IntMatrix3 adj = adjugate();
    if (d == -1)
        for (auto& v : adj.m) v = -v;
    return adj;
}

bool Functional::primitive() const {
    return std::gcd(std::gcd(a, b), c) == 1;
}

namespace {

// Extended gcd: returns g = gcd(a, b) >= 0 and (p, q) with p*a + q*b = g.
struct Xgcd {
    Int g, p, q;
};

Xgcd xgcd(Int a, Int b) {
    if (b == 0) {
        if (a < 0) return {-a, -1, 0};
        return {a, 1, 0};
    }
    Xgcd sub = xgcd(b, a % b);
    return {sub.g, sub.q, checked_sub(sub.p, checked_mul(a / b, sub.q))};
}

Int floor_div(Int a, Int b) {
    Int q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

void swap_rows(IntMatrix3& a, int r1, int r2) {
    for (int c = 0; c < 3; ++c) std::swap(a(r1, c), a(r2, c));
}

}  // namespace

HnfResult hnf(const IntMatrix3& mat) {
    if (mat.det() == 0) throw SingularMatrix();
    IntMatrix3 h = mat;
    IntMatrix3 u = IntMatrix3::identity();

    for (int k = 0; k < 3; ++k) {
        // Bring a nonzero entry into the pivot position.
        int piv = -1;
        for (int r = k; r < 3; ++r)
            if (h(r, k) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) throw SingularMatrix();
        if (piv != k) {
            swap_rows(h, k, piv);
            swap_rows(u, k, piv);
        }
        // Clear the entries below the pivot with unimodular row combinations.
        for (int r = k + 1; r < 3; ++r) {
            if (h(r, k) == 0) continue;
            auto [g, p, q] = xgcd(h(k, k), h(r, k));
            Int ak = h(k, k) / g, ar = h(r, k) / g;
            // [p q; -ar ak] has determinant 1 and sends (h_kk, h_rk) to (g, 0).
            for (int c = 0; c < 3; ++c) {
                Int hk = h(k, c), hr = h(r, c);
                h(k, c) = checked_add(checked_mul(p, hk), checked_mul(q, hr));
                h(r, c) = checked_sub(checked_mul(ak, hr), checked_mul(ar, hk));
                Int uk = u(k, c), ur = u(r, c);
                u(k, c) = checked_add(checked_mul(p, uk), checked_mul(q, ur));
                u(r, c) = checked_sub(checked_mul(ak, ur), checked_mul(ar, uk));
            }
        }
        if (h(k, k) < 0) {
            for (int c = 0; c < 3; ++c) {
                h(k, c) = -h(k, c);
                u(k, c) = -u(k, c);
            }
        }
        // Reduce the entries above the pivot into [0, pivot).
        for (int j = 0; j < k; ++j) {
            Int q = floor_div(h(j, k), h(k, k));
            if (q == 0) continue;
            for (int c = 0; c < 3; ++c) {
                h(j, c) = checked_sub(h(j, c), checked_mul(q, h(k, c)));
                u(j, c) = checked_sub(u(j, c), checked_mul(q, u(k, c)));
            }
        }
    }
    return {h, u};
}

PointList HullData::vertex_points() const {
    PointList out;
    out.reserve(vertices.size());
    for (std::size_t i : vertices) out.push_back(points[i]);
    return out;
}

int affine_dimension(const PointList& pts) {
    if (pts.empty()) return -1;
    const LatticePoint& p0 = pts[0];
    LatticePoint d1{}, d2{};
    int dim = 0;
    for (const auto& p : pts) {
        LatticePoint d = p - p0;
        if (dim == 0) {
            if (d != LatticePoint{}) {
                d1 = d;
                dim = 1;
            }
        } else if (dim == 1) {
            if (cross(d1, d) != LatticePoint{}) {
                d2 = d;
                dim = 2;
            }
        } else if (dim == 2) {
            if (det3(d1, d2, d) != 0) return 3;
        }
    }
    return dim;
}

namespace {

int sign_of(Int v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Scaled exact 2D coordinates of coplanar points: q maps to
// (det(q-p0, d2, n), det(d1, q-p0, n)) where n = d1 x d2.  Both coordinates
// are the true affine coordinates multiplied by the positive constant
// det(d1, d2, n), so orientation predicates are unaffected.
struct Planar2D {
    LatticePoint p0, d1, d2, n;

    std::pair<Int, Int> coords(const LatticePoint& q) const {
        LatticePoint d = q - p0;
        return {det3(d, d2, n), det3(d1, d, n)};
    }
};

int orient2d(const std::pair<Int, Int>& a, const std::pair<Int, Int>& b,
             const std::pair<Int, Int>& c) {
    Wide v = static_cast<Wide>(b.first - a.first) * (c.second - a.second) -
             static_cast<Wide>(b.second - a.second) * (c.first - a.first);
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

// Indices of the convex-hull cycle (counterclockwise, strict: no interior or
// edge-interior points included) of exactly computed 2D integer coordinates.
std::vector<std::size_t> chain_hull_2d(const std::vector<std::pair<Int, Int>>& uv) {
    std::vector<std::size_t> order(uv.size());
    for (std::size_t i = 0; i < uv.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return uv[a] < uv[b]; });
    order.erase(std::unique(order.begin(), order.end(),
                            [&](std::size_t a, std::size_t b) { return uv[a] == uv[b]; }),
                order.end());
    std::size_t m = order.size();
    if (m <= 2) return order;
    std::vector<std::size_t> hull(2 * m);
    std::size_t k = 0;
    for (std::size_t idx = 0; idx < m; ++idx) {  // lower
        std::size_t i = order[idx];
        while (k >= 2 && orient2d(uv[hull[k - 2]], uv[hull[k - 1]], uv[i]) <= 0) --k;
        hull[k++] = i;
    }
    for (std::size_t idx = m - 1, t = k + 1; idx-- > 0;) {  // upper
        std::size_t i = order[idx];
        while (k >= t && orient2d(uv[hull[k - 2]], uv[hull[k - 1]], uv[i]) <= 0) --k;
        hull[k++] = i;
    }
    hull.resize(k - 1);
    return hull;
}

LatticePoint primitive_vector(LatticePoint v) {
    Int g = content(v);
    if (g > 1) {
        v.x /= g;
        v.y /= g;
        v.z /= g;
    }
    return v;
}

void hull_dim3(HullData& h) {
    const PointList& pts = h.points;
    std::size_t n = pts.size();

    // Supporting planes from all point triples.  Inputs here never exceed a
    // couple dozen points, so the n^4 scan is cheaper and far simpler than an
    // incremental hull with degenerate-case handling.
    std::set<std::array<Int, 4>> facet_set;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                LatticePoint nrm = cross(pts[j] - pts[i], pts[k] - pts[i]);
                if (nrm == LatticePoint{}) continue;
                bool pos = false, neg = false;
                for (std::size_t t = 0; t < n && !(pos && neg); ++t) {
                    int s = sign_of(dot(nrm, pts[t] - pts[i]));
                    if (s > 0) pos = true;
                    if (s < 0) neg = true;
                }
                if (pos && neg) continue;
                if (neg) nrm = -nrm;  // flip so that every point has f >= 0
                nrm = primitive_vector(nrm);
                Int d = -dot(nrm, pts[i]);
                facet_set.insert({nrm.x, nrm.y, nrm.z, d});
            }
    h.facets.reserve(facet_set.size());
    for (const auto& f : facet_set) h.facets.push_back({f[0], f[1], f[2], f[3]});

    // A point of a full-dimensional polytope is a vertex exactly when its
    // active facet normals span R^3.
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<LatticePoint> active;
        for (const auto& f : h.facets)
            if (f(pts[i]) == 0) active.push_back(f.linear());
        if (active.size() < 3) continue;
        bool rank3 = false;
        for (std::size_t a = 0; a < active.size() && !rank3; ++a)
            for (std::size_t b = a + 1; b < active.size() && !rank3; ++b) {
                if (cross(active[a], active[b]) == LatticePoint{}) continue;
                for (std::size_t c = b + 1; c < active.size() && !rank3; ++c)
                    if (det3(active[a], active[b], active[c]) != 0) rank3 = true;
            }
        if (rank3) h.vertices.push_back(i);
    }

    // Normalized volume via tetrahedral fans from one vertex over the facets
    // it does not lie on.  Each facet polygon is ordered with a planar hull.
    const LatticePoint v0 = pts[h.vertices.front()];
    Wide vol = 0;
    for (const auto& f : h.facets) {
        if (f(v0) == 0) continue;
        std::vector<std::size_t> on;
        for (std::size_t i = 0; i < n; ++i)
            if (f(pts[i]) == 0) on.push_back(i);
        // Build exact planar coordinates inside the facet.
        LatticePoint q0 = pts[on[0]];
        LatticePoint d1{}, d2{};
        bool have1 = false, have2 = false;
        for (std::size_t idx = 1; idx < on.size() && !have2; ++idx) {
            LatticePoint d = pts[on[idx]] - q0;
            if (!have1) {
                if (d != LatticePoint{}) {
                    d1 = d;
                    have1 = true;
                }
            } else if (cross(d1, d) != LatticePoint{}) {
                d2 = d;
                have2 = true;
            }
        }
        Planar2D plane{q0, d1, d2, cross(d1, d2)};
        std::vector<std::pair<Int, Int>> uv;
        uv.reserve(on.size());
        for (std::size_t i : on) uv.push_back(plane.coords(pts[i]));
        std::vector<std::size_t> cyc = chain_hull_2d(uv);
        const LatticePoint c0 = pts[on[cyc[0]]];
        for (std::size_t t = 1; t + 1 < cyc.size(); ++t) {
            Int d = det3(pts[on[cyc[t]]] - c0, pts[on[cyc[t + 1]]] - c0, v0 - c0);
            vol += d < 0 ? -static_cast<Wide>(d) : static_cast<Wide>(d);
        }
    }
    h.normalized_volume = narrow(vol);
}

}  // namespace

HullData convex_hull(const PointList& pts) {
    HullData h;
    h.points = pts;
    if (pts.empty()) return h;

    const LatticePoint& p0 = pts[0];
    LatticePoint d1{}, d2{};
    int dim = 0;
    for (const auto& p : pts) {
        LatticePoint d = p - p0;
        if (dim == 0 && d != LatticePoint{}) {
            d1 = d;
            dim = 1;
        } else if (dim == 1 && cross(d1, d) != LatticePoint{}) {
            d2 = d;
            dim = 2;
        } else if (dim == 2 && det3(d1, d2, d) != 0) {
            dim = 3;
            break;
        }
    }
    h.dimension = dim;

    if (dim == 0) {
        h.vertices.push_back(0);
        return h;
    }
    if (dim == 1) {
        // All points are p0 + t*d for a primitive direction d and integer t;
        // the vertices are the two extremes.
        LatticePoint d = primitive_vector(d1);
        std::size_t lo = 0, hi = 0;
        Int tlo = 0, thi = 0;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            Int t = dot(pts[i] - p0, d);  // monotone in the true parameter
            if (t < tlo) {
                tlo = t;
                lo = i;
            }
            if (t > thi) {
                thi = t;
                hi = i;
            }
        }
        h.vertices = {lo, hi};
        std::sort(h.vertices.begin(), h.vertices.end());
        return h;
    }
    if (dim == 2) {
        Planar2D plane{p0, d1, d2, cross(d1, d2)};
        std::vector<std::pair<Int, Int>> uv;
        uv.reserve(pts.size());
        for (const auto& p : pts) uv.push_back(plane.coords(p));
        h.vertices = chain_hull_2d(uv);
        std::sort(h.vertices.begin(), h.vertices.end());
        return h;
    }

    hull_dim3(h);
    return h;
}

namespace {

struct Box {
    Int xlo, xhi, ylo, yhi, zlo, zhi;
};

Box bounding_box(const HullData& hull) {
    Box b{};
    bool first = true;
    for (std::size_t i : hull.vertices) {
        const LatticePoint& p = hull.points[i];
        if (first) {
            b = {p.x, p.x, p.y, p.y, p.z, p.z};
            first = false;
        } else {
            b.xlo = std::min(b.xlo, p.x);
            b.xhi = std::max(b.xhi, p.x);
            b.ylo = std::min(b.ylo, p.y);
            b.yhi = std::max(b.yhi, p.y);
            b.zlo = std::min(b.zlo, p.z);
            b.zhi = std::max(b.zhi, p.z);
        }
    }
    return b;
}

// Scan the bounding box column by column; for fixed (x, y) each facet yields
// a half-open z-constraint, so the inner loop degenerates to one interval.
template <typename Emit>
void scan_dim3(const HullData& hull, bool strict, Emit&& emit) {
    Box b = bounding_box(hull);
    if (strict) {
        // Interior points cannot lie on the bounding planes of the hull.
        ++b.xlo; --b.xhi; ++b.ylo; --b.yhi; ++b.zlo; --b.zhi;
    }
    for (Int x = b.xlo; x <= b.xhi; ++x)
        for (Int y = b.ylo; y <= b.yhi; ++y) {
            Int zlo = b.zlo, zhi = b.zhi;
            bool empty = false;
            for (const auto& f : hull.facets) {
                // f = a x + b y + c z + d  (>= 0, or > 0 when strict)
                Wide base = static_cast<Wide>(f.a) * x + static_cast<Wide>(f.b) * y + f.d;
                if (f.c == 0) {
                    if (strict ? base <= 0 : base < 0) {
                        empty = true;
                        break;
                    }
                    continue;
                }
                // c*z >= -base (strict: c*z > -base)
                Wide rhs = -base;
                if (f.c > 0) {
                    Wide num = strict ? rhs + 1 : rhs;
                    Wide q = num >= 0 ? (num + f.c - 1) / f.c : -((-num) / f.c);  // ceil
                    zlo = std::max(zlo, narrow(q));
                } else {
                    Int c = -f.c;  // z <= floor(-rhs'/c)
                    Wide num = strict ? -rhs - 1 : -rhs;
                    Wide q = num >= 0 ? num / c : -(((-num) + c - 1) / c);  // floor
                    zhi = std::min(zhi, narrow(q));
                }
                if (zlo > zhi) {
                    empty = true;
                    break;
                }
            }
            if (empty) continue;
            for (Int z = zlo; z <= zhi; ++z)
                if (!emit(LatticePoint{x, y, z})) return;
        }
}

}  // namespace

PointList lattice_points(const HullData& hull) {
    PointList out;
    switch (hull.dimension) {
        case 0:
            out.push_back(hull.points[hull.vertices[0]]);
            return out;
        case 1: {
            const LatticePoint a = hull.points[hull.vertices[0]];
            const LatticePoint b = hull.points[hull.vertices[1]];
            LatticePoint d = primitive_vector(b - a);
            // b - a = g * d with g = content(b - a) > 0.
            Int g = content(b - a);
            for (Int t = 0; t <= g; ++t)
                out.push_back({a.x + t * d.x, a.y + t * d.y, a.z + t * d.z});
            std::sort(out.begin(), out.end());
            return out;
        }
        case 2: {
            // Edge inequalities of the planar hull in scaled 2D coordinates,
            // plus the containing-plane equation in 3D.
            const PointList& pts = hull.points;
            const LatticePoint p0 = pts[hull.vertices[0]];
            LatticePoint d1{}, d2{};
            bool have1 = false, have2 = false;
            for (std::size_t i : hull.vertices) {
                LatticePoint d = pts[i] - p0;
                if (!have1) {
                    if (d != LatticePoint{}) {
                        d1 = d;
                        have1 = true;
                    }
                } else if (!have2 && cross(d1, d) != LatticePoint{}) {
                    d2 = d;
                    have2 = true;
                }
            }
            LatticePoint nrm = primitive_vector(cross(d1, d2));
            Planar2D plane{p0, d1, d2, cross(d1, d2)};
            std::vector<std::pair<Int, Int>> cyc;
            {
                std::vector<std::pair<Int, Int>> uv;
                for (std::size_t i : hull.vertices) uv.push_back(plane.coords(pts[i]));
                for (std::size_t i : chain_hull_2d(uv)) cyc.push_back(uv[i]);
            }
            Box b{};
            bool first = true;
            for (std::size_t i : hull.vertices) {
                const LatticePoint& p = pts[i];
                if (first) {
                    b = {p.x, p.x, p.y, p.y, p.z, p.z};
                    first = false;
                } else {
                    b.xlo = std::min(b.xlo, p.x); b.xhi = std::max(b.xhi, p.x);
                    b.ylo = std::min(b.ylo, p.y); b.yhi = std::max(b.yhi, p.y);
                    b.zlo = std::min(b.zlo, p.z); b.zhi = std::max(b.zhi, p.z);
                }
            }
            for (Int x = b.xlo; x <= b.xhi; ++x)
                for (Int y = b.ylo; y <= b.yhi; ++y)
                    for (Int z = b.zlo; z <= b.zhi; ++z) {
                        LatticePoint q{x, y, z};
                        if (dot(nrm, q - p0) != 0) continue;
                        auto c = plane.coords(q);
                        bool inside = true;
                        for (std::size_t e = 0; e < cyc.size() && inside; ++e) {
                            const auto& a = cyc[e];
                            const auto& bb = cyc[(e + 1) % cyc.size()];
                            if (orient2d(a, bb, c) < 0) inside = false;
                        }
                        if (inside) out.push_back(q);
                    }
            std::sort(out.begin(), out.end());
            return out;
        }
        default:
            break;
    }
    scan_dim3(hull, /*strict=*/false, [&](const LatticePoint& p) {
        out.push_back(p);
        return true;
    });
    // The scan order (x, then y, then z ascending) is already lexicographic.
    return out;
}

std::size_t lattice_point_count_capped(const HullData& hull, std::size_t limit) {
    if (hull.dimension < 3) {
        PointList pts = lattice_points(hull);
        return std::min(pts.size(), limit + 1);
    }
    std::size_t count = 0;
    scan_dim3(hull, false, [&](const LatticePoint&) {
        ++count;
        return count <= limit;
    });
    return count;
}

PointList interior_lattice_points(const HullData& hull) {
    PointList out;
    scan_dim3(hull, /*strict=*/true, [&](const LatticePoint& p) {
        out.push_back(p);
        return true;
    });
    return out;
}

}  // namespace lp3
