#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "lp3/geometry.hpp"
#include "test_support.hpp"

using namespace lp3;

namespace {

PointList unit_tetra() { return {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}; }

// Tetrahedron with n lattice points, three of them interior on the z-axis for
// n = 7; used repeatedly as a nontrivial exact fixture.
PointList t7_vertices() { return {{-1, -1, 1}, {-1, 1, -2}, {0, 1, 5}, {2, -1, 0}}; }

PointList cube(Int k) {
    PointList pts;
    for (Int x = 0; x <= k; ++x)
        for (Int y = 0; y <= k; ++y)
            for (Int z = 0; z <= k; ++z) pts.push_back({x, y, z});
    return pts;
}

}  // namespace

TEST_CASE("checked arithmetic traps overflow") {
    CHECK(checked_add(3, 4) == 7);
    CHECK(checked_mul(-5, 7) == -35);
    CHECK_THROWS_AS(checked_mul(INT64_MAX, 2), std::overflow_error);
    CHECK_THROWS_AS(checked_add(INT64_MAX, 1), std::overflow_error);
    CHECK(narrow(Wide(42)) == 42);
    CHECK_THROWS_AS(narrow(Wide(INT64_MAX) * 4), std::overflow_error);
}

TEST_CASE("vector primitives") {
    CHECK(det3({1, 0, 0}, {0, 1, 0}, {0, 0, 1}) == 1);
    CHECK(det3({1, 0, 0}, {0, 1, 0}, {1, 1, 0}) == 0);
    CHECK(cross({1, 0, 0}, {0, 1, 0}) == LatticePoint{0, 0, 1});
    CHECK(dot({1, 2, 3}, {4, 5, 6}) == 32);
    CHECK(content({4, -6, 8}) == 2);
    CHECK(content({0, 0, 0}) == 0);
    CHECK(content({0, 0, -7}) == 7);
}

TEST_CASE("matrix primitives") {
    IntMatrix3 m = IntMatrix3::from_columns({2, 0, 0}, {1, 3, 0}, {5, 4, 7});
    CHECK(m.column(0) == LatticePoint{2, 0, 0});
    CHECK(m.row(0) == LatticePoint{2, 1, 5});
    CHECK(m.det() == 42);
    CHECK_FALSE(m.unimodular());

    IntMatrix3 prod = m.adjugate() * m;
    IntMatrix3 scaled = IntMatrix3::identity();
    for (auto& v : scaled.m) v *= 42;
    CHECK(prod == scaled);

    std::mt19937_64 rng(20240501);
    for (int i = 0; i < 200; ++i) {
        IntMatrix3 u = lp3test::random_unimodular(rng);
        CHECK(u.unimodular());
        CHECK(u * u.inverse_unimodular() == IntMatrix3::identity());
        LatticePoint p{3, -1, 4};
        CHECK(u.inverse_unimodular() * (u * p) == p);
        CHECK(u.transposed().transposed() == u);
    }
}

TEST_CASE("hnf on an already reduced matrix") {
    IntMatrix3 m = IntMatrix3::from_columns({2, 0, 0}, {1, 3, 0}, {5, 4, 7});
    HnfResult r = hnf(m);
    CHECK(r.h == m);
    CHECK(r.u == IntMatrix3::identity());
}

TEST_CASE("hnf structure, transform and oracle agreement") {
    std::mt19937_64 rng(987654321);
    int tested = 0;
    while (tested < 1000) {
        IntMatrix3 m = lp3test::random_matrix(rng);
        if (m.det() == 0) continue;
        ++tested;
        HnfResult r = hnf(m);

        CHECK(r.u.unimodular());
        CHECK(r.u * m == r.h);
        for (int row = 0; row < 3; ++row)
            for (int col = 0; col < row; ++col) CHECK(r.h(row, col) == 0);
        for (int k = 0; k < 3; ++k) {
            CHECK(r.h(k, k) >= 1);
            for (int j = 0; j < k; ++j) {
                CHECK(r.h(j, k) >= 0);
                CHECK(r.h(j, k) < r.h(k, k));
            }
        }

        CHECK(r.h == lp3test::oracle_hnf(m).h);
    }
}

TEST_CASE("hnf is a left-coset invariant") {
    std::mt19937_64 rng(13579);
    int tested = 0;
    while (tested < 100) {
        IntMatrix3 m = lp3test::random_matrix(rng);
        if (m.det() == 0) continue;
        ++tested;
        IntMatrix3 h = hnf(m).h;
        for (int j = 0; j < 10; ++j) {
            IntMatrix3 v = lp3test::random_unimodular(rng);
            CHECK(hnf(v * m).h == h);
        }
    }
}

TEST_CASE("hnf rejects singular input") {
    IntMatrix3 m = IntMatrix3::from_columns({1, 2, 3}, {2, 4, 6}, {0, 1, 0});
    CHECK_THROWS_AS(hnf(m), SingularMatrix);
}

TEST_CASE("affine dimension") {
    CHECK(affine_dimension({{5, 5, 5}}) == 0);
    CHECK(affine_dimension({{5, 5, 5}, {5, 5, 5}}) == 0);
    CHECK(affine_dimension({{0, 0, 0}, {2, 4, 6}, {1, 2, 3}}) == 1);
    CHECK(affine_dimension({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {3, 4, 0}}) == 2);
    CHECK(affine_dimension(unit_tetra()) == 3);
}

TEST_CASE("hull of the unit tetrahedron") {
    HullData h = convex_hull(unit_tetra());
    CHECK(h.dimension == 3);
    CHECK(h.vertices.size() == 4);
    CHECK(h.facets.size() == 4);
    CHECK(h.normalized_volume == 1);
}

TEST_CASE("hull volumes") {
    CHECK(convex_hull(t7_vertices()).normalized_volume == 44);
    CHECK(convex_hull(cube(1)).normalized_volume == 6);
    PointList dil = {{0, 0, 0}, {2, 0, 0}, {0, 2, 0}, {0, 0, 2}};
    CHECK(convex_hull(dil).normalized_volume == 8);
}

TEST_CASE("hull separates vertices from interior points") {
    PointList pts = cube(2);
    HullData h = convex_hull(pts);
    CHECK(h.dimension == 3);
    CHECK(h.vertices.size() == 8);
    CHECK(h.facets.size() == 6);
    CHECK(h.normalized_volume == 48);
    for (std::size_t vi : h.vertices) {
        const LatticePoint& p = h.points[vi];
        CHECK((p.x % 2 == 0));
        CHECK((p.y % 2 == 0));
        CHECK((p.z % 2 == 0));
    }
}

TEST_CASE("facet functionals support the hull") {
    HullData h = convex_hull(t7_vertices());
    for (const auto& f : h.facets) {
        CHECK(f.primitive());
        int on_facet = 0;
        for (const auto& p : h.points) {
            CHECK(f(p) >= 0);
            if (f(p) == 0) ++on_facet;
        }
        CHECK(on_facet >= 3);
    }
}

TEST_CASE("lower dimensional hulls") {
    HullData seg = convex_hull({{0, 0, 0}, {2, 4, 6}, {1, 2, 3}});
    CHECK(seg.dimension == 1);
    CHECK(seg.vertex_points() == PointList{{0, 0, 0}, {2, 4, 6}});

    HullData tri = convex_hull({{0, 0, 1}, {2, 0, 1}, {0, 2, 1}, {1, 1, 1}, {1, 0, 1}});
    CHECK(tri.dimension == 2);
    PointList tv = tri.vertex_points();
    std::sort(tv.begin(), tv.end());
    CHECK(tv == PointList{{0, 0, 1}, {0, 2, 1}, {2, 0, 1}});

    HullData pt = convex_hull({{7, -3, 2}});
    CHECK(pt.dimension == 0);
    CHECK(pt.vertex_points() == PointList{{7, -3, 2}});
}

TEST_CASE("lattice points of small polytopes") {
    PointList ut = lattice_points(convex_hull(unit_tetra()));
    CHECK(ut == PointList{{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {1, 0, 0}});

    PointList t7 = lattice_points(convex_hull(t7_vertices()));
    CHECK(t7 == PointList{{-1, -1, 1},
                          {-1, 1, -2},
                          {0, 0, 0},
                          {0, 0, 1},
                          {0, 0, 2},
                          {0, 1, 5},
                          {2, -1, 0}});

    PointList dil = {{0, 0, 0}, {2, 0, 0}, {0, 2, 0}, {0, 0, 2}};
    CHECK(lattice_points(convex_hull(dil)).size() == 10);
    CHECK(lattice_points(convex_hull(cube(2))).size() == 27);
}

TEST_CASE("lattice points in lower dimensions") {
    PointList seg = lattice_points(convex_hull({{0, 0, 0}, {3, 3, 3}}));
    CHECK(seg == PointList{{0, 0, 0}, {1, 1, 1}, {2, 2, 2}, {3, 3, 3}});

    PointList tri = lattice_points(convex_hull({{0, 0, 1}, {2, 0, 1}, {0, 2, 1}}));
    CHECK(tri == PointList{{0, 0, 1}, {0, 1, 1}, {0, 2, 1}, {1, 0, 1}, {1, 1, 1}, {2, 0, 1}});

    PointList pt = lattice_points(convex_hull({{4, 5, 6}}));
    CHECK(pt == PointList{{4, 5, 6}});
}

TEST_CASE("lattice point enumeration contains the generators") {
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<Int> coord(-4, 4);
    for (int trial = 0; trial < 100; ++trial) {
        PointList pts;
        for (int i = 0; i < 6; ++i) pts.push_back({coord(rng), coord(rng), coord(rng)});
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        HullData h = convex_hull(pts);
        PointList lp = lattice_points(h);
        CHECK(std::is_sorted(lp.begin(), lp.end()));
        for (const auto& p : pts) CHECK(std::binary_search(lp.begin(), lp.end(), p));
        if (h.dimension == 3)
            for (const auto& p : lp)
                for (const auto& f : h.facets) CHECK(f(p) >= 0);
    }
}

TEST_CASE("capped counting") {
    HullData h = convex_hull(cube(2));
    CHECK(lattice_point_count_capped(h, 100) == 27);
    CHECK(lattice_point_count_capped(h, 27) == 27);
    CHECK(lattice_point_count_capped(h, 26) == 27);
    CHECK(lattice_point_count_capped(h, 10) == 11);
}

TEST_CASE("interior lattice points") {
    CHECK(interior_lattice_points(convex_hull(unit_tetra())).empty());
    CHECK(interior_lattice_points(convex_hull(t7_vertices())) ==
          PointList{{0, 0, 0}, {0, 0, 1}, {0, 0, 2}});
    PointList dil = {{0, 0, 0}, {2, 0, 0}, {0, 2, 0}, {0, 0, 2}};
    CHECK(interior_lattice_points(convex_hull(dil)).empty());
    CHECK(interior_lattice_points(convex_hull(cube(2))) == PointList{{1, 1, 1}});
}

TEST_CASE("volume and point count are unimodular invariants") {
    std::mt19937_64 rng(424242);
    PointList base = t7_vertices();
    HullData h0 = convex_hull(base);
    std::size_t count0 = lattice_points(h0).size();
    for (int i = 0; i < 20; ++i) {
        auto map = lp3test::random_map(rng);
        PointList img = map(base);
        HullData h = convex_hull(img);
        CHECK(h.normalized_volume == h0.normalized_volume);
        CHECK(lattice_points(h).size() == count0);
    }
}
