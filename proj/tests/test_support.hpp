// Shared helpers for the unit tests: deterministic random generators for
// matrices and unimodular maps, plus small independent oracles that the tests
// use to cross-check library results.

#pragma once

#include <algorithm>
#include <array>
#include <cstdlib>
#include <numeric>
#include <random>

#include "lp3/equivalence.hpp"
#include "lp3/geometry.hpp"

namespace lp3test {

using lp3::Int;
using lp3::IntMatrix3;
using lp3::LatticePoint;
using lp3::PointList;

inline IntMatrix3 random_matrix(std::mt19937_64& rng, Int lo = -9, Int hi = 9) {
    std::uniform_int_distribution<Int> dist(lo, hi);
    IntMatrix3 m;
    for (auto& v : m.m) v = dist(rng);
    return m;
}

// A random unimodular matrix built from elementary operations: shears,
// transpositions and sign flips.  Entries stay small.
inline IntMatrix3 random_unimodular(std::mt19937_64& rng, int steps = 8) {
    std::uniform_int_distribution<int> pick(0, 2);
    std::uniform_int_distribution<Int> shear(-2, 2);
    IntMatrix3 u = IntMatrix3::identity();
    for (int s = 0; s < steps; ++s) {
        IntMatrix3 e = IntMatrix3::identity();
        int kind = pick(rng);
        int i = pick(rng), j = pick(rng);
        if (kind == 0 && i != j) {
            e(i, j) = shear(rng);
        } else if (kind == 1 && i != j) {
            // swap rows i and j (determinant -1)
            e(i, i) = 0;
            e(j, j) = 0;
            e(i, j) = 1;
            e(j, i) = 1;
        } else {
            e(i, i) = -1;
        }
        u = e * u;
    }
    return u;
}

inline lp3::AffineUnimodularMap random_map(std::mt19937_64& rng, Int tmax = 5) {
    std::uniform_int_distribution<Int> tr(-tmax, tmax);
    return {random_unimodular(rng), {tr(rng), tr(rng), tr(rng)}};
}

// Independent row-style HNF oracle: plain Euclidean row subtractions only, no
// extended gcd, kept deliberately different from the library implementation.
inline lp3::HnfResult oracle_hnf(const IntMatrix3& m) {
    IntMatrix3 h = m, u = IntMatrix3::identity();
    auto subtract_row = [&](int dst, int src, Int q) {
        for (int c = 0; c < 3; ++c) {
            h(dst, c) -= q * h(src, c);
            u(dst, c) -= q * u(src, c);
        }
    };
    auto swap_row = [&](int a, int b) {
        for (int c = 0; c < 3; ++c) {
            std::swap(h(a, c), h(b, c));
            std::swap(u(a, c), u(b, c));
        }
    };
    auto negate_row = [&](int r) {
        for (int c = 0; c < 3; ++c) {
            h(r, c) = -h(r, c);
            u(r, c) = -u(r, c);
        }
    };
    for (int k = 0; k < 3; ++k) {
        for (;;) {  // Euclid on column k, rows k..2
            int best = -1;
            for (int r = k; r < 3; ++r)
                if (h(r, k) != 0 && (best < 0 || std::abs(h(r, k)) < std::abs(h(best, k)))) best = r;
            if (best < 0) throw lp3::SingularMatrix();
            if (best != k) swap_row(k, best);
            if (h(k, k) < 0) negate_row(k);
            bool done = true;
            for (int r = k + 1; r < 3; ++r)
                if (h(r, k) != 0) {
                    done = false;
                    Int q = h(r, k) / h(k, k);
                    subtract_row(r, k, q);
                    if (h(r, k) != 0) subtract_row(r, k, h(r, k) > 0 ? 1 : -1);
                }
            if (done) break;
        }
        for (int j = 0; j < k; ++j) {
            Int v = h(j, k), p = h(k, k);
            Int q = v / p;
            if (v % p < 0) --q;
            if (q != 0) subtract_row(j, k, q);
        }
    }
    return {h, u};
}

// Brute-force equivalence oracle: tries the affine map determined by every
// ordered 4-tuple -> ordered 4-tuple assignment.
inline bool oracle_equivalent(const PointList& a, const PointList& b) {
    if (a.size() != b.size()) return false;
    std::size_t n = a.size();
    std::vector<std::array<std::size_t, 4>> tuples;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    if (i == j || i == k || i == l || j == k || j == l || k == l) continue;
                    tuples.push_back({i, j, k, l});
                }
    PointList bs = b;
    std::sort(bs.begin(), bs.end());
    for (const auto& ta : tuples) {
        IntMatrix3 ma = IntMatrix3::from_columns(a[ta[1]] - a[ta[0]], a[ta[2]] - a[ta[0]],
                                                 a[ta[3]] - a[ta[0]]);
        Int da = ma.det();
        if (da == 0) continue;
        for (const auto& tb : tuples) {
            IntMatrix3 mb = IntMatrix3::from_columns(b[tb[1]] - b[tb[0]], b[tb[2]] - b[tb[0]],
                                                     b[tb[3]] - b[tb[0]]);
            if (mb.det() != da && mb.det() != -da) continue;
            // Solve L * ma = mb over the integers.
            IntMatrix3 adj = ma.adjugate();
            IntMatrix3 num = mb * adj;  // = L * det(ma)
            bool ok = true;
            IntMatrix3 lin;
            for (int r = 0; r < 3 && ok; ++r)
                for (int c = 0; c < 3 && ok; ++c) {
                    if (num(r, c) % da != 0) ok = false;
                    else lin(r, c) = num(r, c) / da;
                }
            if (!ok || !lin.unimodular()) continue;
            LatticePoint t = b[tb[0]] - lin * a[ta[0]];
            PointList img;
            img.reserve(n);
            for (const auto& p : a) img.push_back(lin * p + t);
            std::sort(img.begin(), img.end());
            if (img == bs) return true;
        }
    }
    return false;
}

}  // namespace lp3test
