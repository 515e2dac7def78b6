#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <thread>

#include "lp3/equivalence.hpp"
#include "test_support.hpp"

using namespace lp3;

namespace {

PointList unit_tetra() { return {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}; }

// Size-6 bipyramid over the unimodular triangle; the canonical fixture with a
// small nontrivial symmetry group.
PointList bipyramid() {
    return {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {-1, -1, 0}, {1, 2, 3}, {-1, -2, -3}};
}

PointList random_full_dim_points(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<Int> coord(-3, 3);
    for (;;) {
        std::set<LatticePoint> s;
        while (static_cast<int>(s.size()) < n)
            s.insert({coord(rng), coord(rng), coord(rng)});
        PointList pts(s.begin(), s.end());
        if (affine_dimension(pts) == 3) return pts;
    }
}

}  // namespace

TEST_CASE("canonical form is invariant under unimodular affine maps") {
    std::mt19937_64 rng(1001);
    for (PointList base : {unit_tetra(), bipyramid(),
                           PointList{{-1, -1, 1}, {-1, 1, -2}, {0, 1, 5}, {2, -1, 0}}}) {
        CanonicalForm ref = canonical_form_only(base);
        for (int i = 0; i < 100; ++i) {
            auto map = lp3test::random_map(rng);
            CHECK(canonical_form_only(map(base)) == ref);
        }
    }
}

TEST_CASE("canonical form is idempotent and sorted") {
    std::mt19937_64 rng(1002);
    for (int i = 0; i < 50; ++i) {
        PointList pts = random_full_dim_points(rng, 6);
        CanonicalForm f = canonical_form_only(pts);
        CHECK(std::is_sorted(f.points.begin(), f.points.end()));
        CHECK(f.points.size() == pts.size());
        CanonicalForm again = canonical_form_only(f.points);
        CHECK(again == f);
        CHECK(again.hash == f.hash);
    }
}

TEST_CASE("witness maps the input onto the canonical representative") {
    std::mt19937_64 rng(1003);
    for (int i = 0; i < 50; ++i) {
        PointList pts = random_full_dim_points(rng, 7);
        CanonicalizationResult r = canonical_form(pts);
        PointList img = r.witness(pts);
        std::sort(img.begin(), img.end());
        CHECK(img == r.form.points);
    }
}

TEST_CASE("translated tetrahedron is equivalent to the unit tetrahedron") {
    PointList moved = {{5, 3, 1}, {6, 3, 1}, {5, 4, 1}, {5, 3, 2}};
    EquivalenceResult r = are_equivalent(moved, unit_tetra());
    CHECK(r.equivalent);
    PointList img = r.witness(moved);
    std::sort(img.begin(), img.end());
    PointList target = unit_tetra();
    std::sort(target.begin(), target.end());
    CHECK(img == target);
}

TEST_CASE("tetrahedra of different volume are inequivalent") {
    PointList bigger = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 2}};
    CHECK_FALSE(are_equivalent(unit_tetra(), bigger).equivalent);
    CHECK(transformations_between(unit_tetra(), bigger).empty());
}

TEST_CASE("unit tetrahedron has all 24 coordinate symmetries") {
    CanonicalizationResult r = canonical_form(unit_tetra());
    CHECK(r.form.automorphism_count == 24);
    CHECK(r.automorphisms.size() == 24);

    // The automorphisms stabilize the representative setwise and form a group.
    std::set<AffineUnimodularMap> group(r.automorphisms.begin(), r.automorphisms.end());
    for (const auto& g : r.automorphisms) {
        PointList img = g(r.form.points);
        std::sort(img.begin(), img.end());
        CHECK(img == r.form.points);
        for (const auto& h : r.automorphisms) CHECK(group.count(g.after(h)) == 1);
        CHECK(group.count(g.inverse()) == 1);
    }
}

TEST_CASE("automorphism counts of known configurations") {
    // The bipyramid has a symmetry group of order 6: the triangle rotations
    // times the central point swap, constrained by the lattice.
    CanonicalizationResult r = canonical_form(bipyramid());
    CHECK(r.automorphisms.size() == r.form.automorphism_count);
    for (const auto& g : r.automorphisms) {
        PointList img = g(r.form.points);
        std::sort(img.begin(), img.end());
        CHECK(img == r.form.points);
    }

    // A generic simplex has no symmetry at all.
    PointList lopsided = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {2, 3, 7}, {5, 1, 1}};
    if (affine_dimension(lopsided) == 3) {
        CanonicalizationResult g = canonical_form(lopsided);
        CHECK(g.form.automorphism_count >= 1);
    }
}

TEST_CASE("transformations_between enumerates one coset of maps") {
    std::mt19937_64 rng(1004);
    for (int i = 0; i < 20; ++i) {
        PointList a = random_full_dim_points(rng, 6);
        auto map = lp3test::random_map(rng);
        PointList b = map(a);
        std::vector<AffineUnimodularMap> ts = transformations_between(a, b);
        CHECK(ts.size() == canonical_form(a).form.automorphism_count);
        PointList bs = b;
        std::sort(bs.begin(), bs.end());
        for (const auto& t : ts) {
            PointList img = t(a);
            std::sort(img.begin(), img.end());
            CHECK(img == bs);
        }
        CHECK(std::is_sorted(ts.begin(), ts.end()));
        CHECK(std::adjacent_find(ts.begin(), ts.end()) == ts.end());
    }
}

TEST_CASE("volume vector invariant") {
    CHECK(volume_vector_invariant(unit_tetra()) == VolumeVectorInvariant{1});

    std::mt19937_64 rng(1005);
    for (int i = 0; i < 30; ++i) {
        PointList a = random_full_dim_points(rng, 6);
        VolumeVectorInvariant va = volume_vector_invariant(a);
        CHECK(va.size() == 15);  // C(6, 4)
        CHECK(std::is_sorted(va.begin(), va.end()));
        auto map = lp3test::random_map(rng);
        CHECK(volume_vector_invariant(map(a)) == va);
    }
}

TEST_CASE("equivalence agrees with the brute-force oracle") {
    std::mt19937_64 rng(1006);
    int positives = 0, negatives = 0;
    for (int i = 0; i < 40; ++i) {
        PointList a = random_full_dim_points(rng, 5);
        PointList b;
        if (i % 2 == 0) {
            b = lp3test::random_map(rng)(a);
        } else {
            b = random_full_dim_points(rng, 5);
        }
        bool expected = lp3test::oracle_equivalent(a, b);
        EquivalenceResult r = are_equivalent(a, b);
        CHECK(r.equivalent == expected);
        if (expected) {
            ++positives;
            PointList img = r.witness(a);
            std::sort(img.begin(), img.end());
            PointList bs = b;
            std::sort(bs.begin(), bs.end());
            CHECK(img == bs);
        } else {
            ++negatives;
        }
    }
    CHECK(positives >= 20);
    CHECK(negatives >= 1);
}

TEST_CASE("degenerate input is rejected") {
    CHECK_THROWS_AS(canonical_form_only({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}}),
                    NotFullDimensional);
    CHECK_THROWS_AS(canonical_form_only({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}), NotFullDimensional);
}

TEST_CASE("hash is a function of the point list") {
    CanonicalForm a = canonical_form_only(unit_tetra());
    CHECK(a.hash == hash_points(a.points));
    CHECK(hash_points(a.points) == hash_points(a.points));
}

TEST_CASE("canonical store dedups across threads") {
    std::mt19937_64 rng(1007);
    std::vector<CanonicalForm> forms;
    for (int i = 0; i < 40; ++i) forms.push_back(canonical_form_only(random_full_dim_points(rng, 5)));

    std::set<CanonicalForm> unique_forms;
    for (const auto& f : forms) unique_forms.insert(f);

    CanonicalStore store;
    std::vector<std::thread> workers;
    for (int t = 0; t < 8; ++t)
        workers.emplace_back([&store, &forms] {
            for (const auto& f : forms) store.insert(f);
        });
    for (auto& w : workers) w.join();

    CHECK(store.size() == unique_forms.size());
    std::vector<CanonicalForm> sorted = store.sorted_forms();
    CHECK(sorted.size() == unique_forms.size());
    CHECK(std::is_sorted(sorted.begin(), sorted.end(),
                         [](const CanonicalForm& x, const CanonicalForm& y) { return x < y; }));
    for (const auto& f : sorted) CHECK(store.contains(f));
    CHECK(store.insert(sorted.front()) == false);
}
