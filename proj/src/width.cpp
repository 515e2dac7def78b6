#include "lp3/width.hpp"

#include <algorithm>
#include <optional>

namespace lp3 {

namespace {

// Lexicographic key (a, b, c) used to pick a deterministic witness among all
// functionals achieving the width.
struct LinearKey {
    Int a, b, c;
    friend auto operator<=>(const LinearKey&, const LinearKey&) = default;
};

// Divides out the content and flips the sign so the first nonzero linear
// coefficient is positive.  Expects (a, b, c) != 0.
LinearKey normalize_linear(Int a, Int b, Int c) {
    Int g = content({a, b, c});
    a /= g;
    b /= g;
    c /= g;
    Int lead = a != 0 ? a : (b != 0 ? b : c);
    if (lead < 0) {
        a = -a;
        b = -b;
        c = -c;
    }
    return {a, b, c};
}

Functional with_offset(const LinearKey& k, const PointList& a) {
    Wide lo = 0;
    bool first = true;
    for (const auto& p : a) {
        Wide v = Wide(k.a) * p.x + Wide(k.b) * p.y + Wide(k.c) * p.z;
        if (first || v < lo) lo = v;
        first = false;
    }
    return {k.a, k.b, k.c, narrow(-lo)};
}

Wide range_on(const LinearKey& k, const PointList& a) {
    Wide lo = 0, hi = 0;
    bool first = true;
    for (const auto& p : a) {
        Wide v = Wide(k.a) * p.x + Wide(k.b) * p.y + Wide(k.c) * p.z;
        if (first) {
            lo = hi = v;
            first = false;
        } else {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    return hi - lo;
}

struct DifferenceBasis {
    int dimension = 0;
    LatticePoint d1{}, d2{}, d3{};  // filled up to `dimension`
};

// First three linearly independent difference vectors from the lex-least
// point, upgraded to a minimal |det| triple when the set is full-dimensional.
DifferenceBasis difference_basis(const PointList& a) {
    DifferenceBasis b;
    if (a.empty()) return b;
    const LatticePoint p0 = a.front();
    std::vector<LatticePoint> diffs;
    diffs.reserve(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) diffs.push_back(a[i] - p0);

    for (const auto& d : diffs) {
        if (b.dimension == 0) {
            if (d != LatticePoint{0, 0, 0}) {
                b.d1 = d;
                b.dimension = 1;
            }
        } else if (b.dimension == 1) {
            if (cross(b.d1, d) != LatticePoint{0, 0, 0}) {
                b.d2 = d;
                b.dimension = 2;
            }
        } else if (det3(b.d1, b.d2, d) != 0) {
            b.d3 = d;
            b.dimension = 3;
            break;
        }
    }
    if (b.dimension < 3) return b;

    // A small |det| keeps the integrality test in the sweep selective and the
    // functional coefficients small.
    Wide best = 0;
    for (std::size_t i = 0; i + 2 < diffs.size(); ++i)
        for (std::size_t j = i + 1; j + 1 < diffs.size(); ++j)
            for (std::size_t k = j + 1; k < diffs.size(); ++k) {
                Wide d = det3(diffs[i], diffs[j], diffs[k]);
                if (d < 0) d = -d;
                if (d == 0) continue;
                if (best == 0 || d < best) {
                    best = d;
                    b.d1 = diffs[i];
                    b.d2 = diffs[j];
                    b.d3 = diffs[k];
                }
            }
    return b;
}

// Lex-least primitive normalized functional vanishing on every difference of
// a lower-dimensional configuration.
Functional degenerate_witness(const PointList& a, const DifferenceBasis& b) {
    LinearKey k{0, 0, 1};
    if (b.dimension == 1) {
        // Solutions with zero x-coefficient are multiples of (0, vz, -vy).
        if (b.d1.y != 0 || b.d1.z != 0)
            k = normalize_linear(0, b.d1.z, -b.d1.y);
    } else if (b.dimension == 2) {
        LatticePoint n = cross(b.d1, b.d2);
        k = normalize_linear(n.x, n.y, n.z);
    }
    return with_offset(k, a);
}

// Integer functional f with (f(d1), f(d2), f(d3)) = m, if one exists.
std::optional<LinearKey> solve_functional(const IntMatrix3& adj, Wide det, Int m1, Int m2,
                                          Int m3) {
    Int g[3];
    for (int j = 0; j < 3; ++j) {
        Wide s = Wide(m1) * adj(0, j) + Wide(m2) * adj(1, j) + Wide(m3) * adj(2, j);
        if (s % det != 0) return std::nullopt;
        g[j] = narrow(s / det);
    }
    if (g[0] == 0 && g[1] == 0 && g[2] == 0) return std::nullopt;
    return LinearKey{g[0], g[1], g[2]};
}

PointList sorted_copy(const PointList& a) {
    PointList s = a;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

}  // namespace

WidthResult width(const PointList& a) {
    PointList s = sorted_copy(a);
    DifferenceBasis basis = difference_basis(s);
    if (basis.dimension < 3) {
        WidthResult r;
        r.degenerate = true;
        r.witness = degenerate_witness(s, basis);
        return r;
    }

    IntMatrix3 m = IntMatrix3::from_columns(basis.d1, basis.d2, basis.d3);
    IntMatrix3 adj = m.adjugate();
    Wide det = Wide(m.det());

    // Upper bound from cheap candidates: coordinate functionals, the rows of
    // the HNF transform of the difference matrix, and the facet normals.
    std::vector<LinearKey> candidates = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    IntMatrix3 u = hnf(m).u;
    for (int r = 0; r < 3; ++r) {
        LatticePoint row = u.row(r);
        if (row != LatticePoint{0, 0, 0}) candidates.push_back(normalize_linear(row.x, row.y, row.z));
    }
    HullData hull = convex_hull(s);
    for (const auto& f : hull.facets) candidates.push_back(normalize_linear(f.a, f.b, f.c));

    Wide bound = 0;
    for (const auto& k : candidates) {
        Wide w = range_on(k, s);
        if (bound == 0 || w < bound) bound = w;
    }

    // Every functional of range <= bound maps each difference vector into
    // [-bound, bound], so this sweep is exhaustive.
    Int w0 = narrow(bound);
    Wide best_width = bound + 1;
    LinearKey best_key{0, 0, 0};
    bool have_best = false;
    for (Int m1 = -w0; m1 <= w0; ++m1)
        for (Int m2 = -w0; m2 <= w0; ++m2)
            for (Int m3 = -w0; m3 <= w0; ++m3) {
                if (m1 == 0 && m2 == 0 && m3 == 0) continue;
                auto k = solve_functional(adj, det, m1, m2, m3);
                if (!k) continue;
                if (content({k->a, k->b, k->c}) != 1) continue;
                LinearKey nk = normalize_linear(k->a, k->b, k->c);
                Wide w = range_on(nk, s);
                if (!have_best || w < best_width ||
                    (w == best_width && nk < best_key)) {
                    best_width = w;
                    best_key = nk;
                    have_best = true;
                }
            }

    WidthResult r;
    r.width = narrow(best_width);
    r.witness = with_offset(best_key, s);
    return r;
}

WidthAtMostOne width_at_most_one(const PointList& a) {
    PointList s = sorted_copy(a);
    DifferenceBasis basis = difference_basis(s);
    WidthAtMostOne r;
    if (basis.dimension < 3) {
        r.value = true;
        r.degenerate = true;
        r.witness = degenerate_witness(s, basis);
        return r;
    }

    IntMatrix3 m = IntMatrix3::from_columns(basis.d1, basis.d2, basis.d3);
    IntMatrix3 adj = m.adjugate();
    Wide det = Wide(m.det());

    // A functional of range <= 1 maps each difference vector to -1, 0 or 1.
    LinearKey best_key{0, 0, 0};
    bool found = false;
    for (Int m1 = -1; m1 <= 1; ++m1)
        for (Int m2 = -1; m2 <= 1; ++m2)
            for (Int m3 = -1; m3 <= 1; ++m3) {
                if (m1 == 0 && m2 == 0 && m3 == 0) continue;
                auto k = solve_functional(adj, det, m1, m2, m3);
                if (!k) continue;
                LinearKey nk = normalize_linear(k->a, k->b, k->c);
                if (range_on(nk, s) > 1) continue;
                if (!found || nk < best_key) {
                    best_key = nk;
                    found = true;
                }
            }
    if (found) {
        r.value = true;
        r.witness = with_offset(best_key, s);
    }
    return r;
}

EssentialVertexReport essential_vertices(const PointList& a) {
    PointList s = sorted_copy(a);
    {
        WidthAtMostOne narrow_check = width_at_most_one(s);
        if (narrow_check.value) throw NotWideEnough();
    }
    HullData hull = convex_hull(s);

    EssentialVertexReport report;
    for (std::size_t vi : hull.vertices) {
        VertexEssentiality e;
        e.vertex = hull.points[vi];
        PointList rest;
        rest.reserve(s.size() - 1);
        for (const auto& p : s)
            if (p != e.vertex) rest.push_back(p);
        if (affine_dimension(rest) < 3) {
            e.essential = true;
            e.dimension_drop = true;
        } else {
            WidthAtMostOne w = width_at_most_one(rest);
            if (w.value) {
                e.essential = true;
                e.witness = w.witness;
            }
        }
        if (e.essential)
            ++report.essential_count;
        else
            ++report.non_essential_count;
        report.vertices.push_back(e);
    }
    return report;
}

bool is_quasi_minimal(const PointList& a) {
    return essential_vertices(a).non_essential_count <= 1;
}

bool is_minimal(const PointList& a) {
    return essential_vertices(a).non_essential_count == 0;
}

}  // namespace lp3
