#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "lp3/spiked.hpp"
#include "lp3/width.hpp"

using namespace lp3;

namespace {

std::map<std::size_t, int> vertex_histogram(const std::vector<CanonicalForm>& classes) {
    std::map<std::size_t, int> hist;
    for (const auto& c : classes) ++hist[convex_hull(c.points).vertices.size()];
    return hist;
}

}  // namespace

TEST_CASE("family sweep census for sizes nine and up") {
    // From size nine on every kept instance is genuinely covered by the
    // closed-form classification, so the class counts are exact.
    auto n9 = spiked_generate(9);
    CHECK(n9.size() == 43);
    auto h9 = vertex_histogram(n9);
    CHECK(h9[4] == 26);
    CHECK(h9[5] == 17);

    auto n10 = spiked_generate(10);
    CHECK(n10.size() == 45);
    auto h10 = vertex_histogram(n10);
    CHECK(h10[4] == 24);
    CHECK(h10[5] == 21);

    auto n11 = spiked_generate(11);
    CHECK(n11.size() == 49);
    auto h11 = vertex_histogram(n11);
    CHECK(h11[4] == 24);
    CHECK(h11[5] == 25);

    // Beyond the tabulated range the counts follow the closed formulas:
    // 26 tetrahedra for multiples of three (24 otherwise) plus 4n-19 others.
    auto n12 = spiked_generate(12);
    CHECK(n12.size() == 55);
    auto h12 = vertex_histogram(n12);
    CHECK(h12[4] == 26);
    CHECK(h12[5] == 29);
}

TEST_CASE("family sweep cover for sizes seven and eight") {
    // At k = 2 a few instances stay quasi-minimal without being covered by
    // the size >= 9 counting argument; they are kept on purpose (the full
    // quasi-minimal census is completed by the box-generated classes, and
    // duplicates between the two generators are removed downstream).  The
    // cover sizes are frozen here as regressions.
    auto n7 = spiked_generate(7);
    CHECK(n7.size() == 31);
    auto h7 = vertex_histogram(n7);
    CHECK(h7[4] == 22);
    CHECK(h7[5] == 9);

    auto n8 = spiked_generate(8);
    CHECK(n8.size() == 37);
    auto h8 = vertex_histogram(n8);
    CHECK(h8[4] == 24);
    CHECK(h8[5] == 13);
}

TEST_CASE("small sizes are delegated to the seed lists") {
    CHECK_THROWS_AS(spiked_generate(6), UseSeedLists);
    CHECK_THROWS_AS(spiked_generate(5), UseSeedLists);
}

TEST_CASE("kept instances validate exactly") {
    for (Int n : {7, 9, 10}) {
        auto instances = spiked_family_instances(n);
        int kept = 0;
        for (const auto& inst : instances) {
            if (inst.rejection != SpikedRejection::kNone) continue;
            ++kept;
            CHECK(inst.declared_size == n);
            PointList pts = lattice_points(convex_hull(inst.generators));
            CHECK(static_cast<Int>(pts.size()) == n);
            CHECK_FALSE(width_at_most_one(pts).value);
            CHECK(is_quasi_minimal(pts));
            for (const auto& g : inst.generators)
                CHECK(std::find(pts.begin(), pts.end(), g) != pts.end());
        }
        CHECK(kept >= static_cast<int>(spiked_generate(n).size()));
    }
}

TEST_CASE("the minimal family contributes three tetrahedra per size") {
    for (Int n : {7, 8, 9, 11}) {
        auto instances = spiked_family_instances(n);
        int minimal_kept = 0;
        for (const auto& inst : instances) {
            if (inst.family != SpikedFamily::kM || inst.declared_size != n) continue;
            CHECK(inst.k == n - 5);
            CHECK(inst.rejection == SpikedRejection::kNone);
            PointList pts = lattice_points(convex_hull(inst.generators));
            CHECK(is_minimal(pts));
            ++minimal_kept;
        }
        CHECK(minimal_kept == 3);
    }
}

TEST_CASE("out-of-size parameters are annotated, not dropped") {
    auto instances = spiked_family_instances(7);
    bool saw_q1_k2 = false;
    for (const auto& inst : instances) {
        if (inst.family == SpikedFamily::kQ1 && inst.k == 2) {
            saw_q1_k2 = true;
            CHECK(inst.declared_size == 6);
            CHECK(inst.rejection == SpikedRejection::kWrongSize);
        }
    }
    CHECK(saw_q1_k2);
}

TEST_CASE("raw parameter counts for one family") {
    // Family Q8 at k = 4 declares size 9 for 9 + 8 = 17 parameter pairs.
    auto instances = spiked_family_instances(9);
    int q8_at_size = 0;
    for (const auto& inst : instances)
        if (inst.family == SpikedFamily::kQ8 && inst.declared_size == 9) {
            CHECK(inst.k == 4);
            CHECK((inst.a == -1 || inst.a == 0));
            CHECK(inst.a <= inst.b);
            CHECK(inst.b < 8);
            ++q8_at_size;
        }
    CHECK(q8_at_size == 17);
}

TEST_CASE("generated classes are canonical, sorted and distinct") {
    auto classes = spiked_generate(9);
    CHECK(std::is_sorted(classes.begin(), classes.end(),
                         [](const CanonicalForm& a, const CanonicalForm& b) { return a < b; }));
    std::set<CanonicalForm> unique(classes.begin(), classes.end());
    CHECK(unique.size() == classes.size());
    for (const auto& c : classes) {
        CHECK(canonical_form_only(c.points) == c);
        CHECK(c.points.size() == 9);
    }
    CHECK(spiked_generate(9) == classes);  // deterministic
}
