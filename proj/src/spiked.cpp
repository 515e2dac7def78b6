#include "lp3/spiked.hpp"

#include <algorithm>
#include <set>

#include "lp3/width.hpp"

namespace lp3 {

std::string family_name(SpikedFamily f) {
    switch (f) {
        case SpikedFamily::kM: return "M";
        case SpikedFamily::kQ1: return "Q1";
        case SpikedFamily::kQ2: return "Q2";
        case SpikedFamily::kQ3: return "Q3";
        case SpikedFamily::kQ4: return "Q4";
        case SpikedFamily::kQ5: return "Q5";
        case SpikedFamily::kQ6: return "Q6";
        case SpikedFamily::kQ7: return "Q7";
        case SpikedFamily::kQ8: return "Q8";
        case SpikedFamily::kQ9: return "Q9";
        case SpikedFamily::kQ10a: return "Q10a";
        case SpikedFamily::kQ10b: return "Q10b";
    }
    return "?";
}

std::string rejection_name(SpikedRejection r) {
    switch (r) {
        case SpikedRejection::kNone: return "kept";
        case SpikedRejection::kWrongSize: return "wrong-size";
        case SpikedRejection::kCountMismatch: return "count-mismatch";
        case SpikedRejection::kNotWide: return "narrow";
        case SpikedRejection::kNotQuasiMinimal: return "not-quasi-minimal";
    }
    return "?";
}

namespace {

struct RawInstance {
    SpikedFamily family;
    Int k, a, b;
    PointList generators;
    Int declared_size;
};

// One entry per (family, parameter) choice at a fixed k.  The coordinates are
// the exact defining vertex sets of the twelve families.
void instances_for_k(Int k, std::vector<RawInstance>& out) {
    // Minimal tetrahedra, size k+5.
    for (auto [a, b] : {std::pair<Int, Int>{0, 0}, {0, 1}, {1, 1}})
        out.push_back({SpikedFamily::kM, k, a, b,
                       {{1, 0, 0}, {0, 1, 0}, {-1, 0, -a}, {0, -1, 2 * k + b}}, k + 5});

    out.push_back({SpikedFamily::kQ1, k, 0, 0,
                   {{1, -1, -1}, {-1, 1, 1}, {-1, -1, 0}, {0, 0, k}}, k + 4});
    out.push_back({SpikedFamily::kQ2, k, 0, 0,
                   {{1, -1, 0}, {-1, 1, -1}, {-1, -1, 0}, {0, 0, k}}, k + 5});
    out.push_back({SpikedFamily::kQ3, k, 0, 0,
                   {{1, -1, 0}, {-1, 1, 0}, {-1, -1, 0}, {0, 0, k}}, k + 6});
    out.push_back({SpikedFamily::kQ4, k, 0, 0,
                   {{2, -1, -1}, {-1, 2, 1}, {-1, -1, 0}, {0, 0, k}}, k + 4});
    for (Int a : {-1, 0})
        out.push_back({SpikedFamily::kQ5, k, a, 0,
                       {{1, -1, -1}, {0, 1, a}, {-1, -1, 0}, {0, 0, k}}, k + 4});
    for (Int a : {-2, -1, 0})
        out.push_back({SpikedFamily::kQ6, k, a, 0,
                       {{1, 0, 0}, {0, 1, a}, {-1, -1, 0}, {0, 0, k}}, k + 4});
    for (Int a : {-5, -1})
        out.push_back({SpikedFamily::kQ7, k, a, 0,
                       {{2, 1, 0}, {-1, 1, a}, {-1, -1, 0}, {0, 0, k}}, k + 4});
    for (Int a : {-1, 0})
        for (Int b = a; b < 2 * k; ++b)
            out.push_back({SpikedFamily::kQ8, k, a, b,
                           {{1, 0, 0}, {0, 1, 0}, {-1, 0, a}, {0, -1, b}, {0, 0, k}}, k + 5});
    for (Int a : {-2, -1, 0})
        for (Int b : {0, 1})
            out.push_back({SpikedFamily::kQ9, k, a, b,
                           {{1, 0, 0}, {0, 1, 0}, {-1, -1, a}, {1, 1, 2 * k - a + b}}, k + 5});
    for (Int a : {-1, 0})
        for (Int b : {-1, 0}) {
            // floor((3k+b)/2) + 5 lattice points; b shifts the parity.
            Int size = (3 * k + b - (((3 * k + b) % 2 + 2) % 2)) / 2 + 5;
            out.push_back({SpikedFamily::kQ10a, k, a, b,
                           {{1, 0, a}, {0, 2, b}, {-1, 0, 0}, {0, 0, k}}, size});
        }
    for (Int a : {-1, 0})
        out.push_back({SpikedFamily::kQ10b, k, a, 0,
                       {{1, 0, 0}, {0, 2, a}, {-1, 0, 0}, {0, 1, k}}, k + 5});
}

}  // namespace

std::vector<SpikedFamilyInstance> spiked_family_instances(Int n) {
    std::vector<RawInstance> raw;
    // Sizes grow with k within each family, and the smallest formula is k+4,
    // so k > n-4 cannot contribute.
    for (Int k = 2; k + 4 <= n; ++k) instances_for_k(k, raw);

    std::vector<SpikedFamilyInstance> out;
    out.reserve(raw.size());
    for (const auto& r : raw) {
        SpikedFamilyInstance inst;
        inst.family = r.family;
        inst.k = r.k;
        inst.a = r.a;
        inst.b = r.b;
        inst.generators = r.generators;
        inst.declared_size = r.declared_size;

        if (r.declared_size != n) {
            inst.rejection = SpikedRejection::kWrongSize;
            out.push_back(std::move(inst));
            continue;
        }
        PointList pts = lattice_points(convex_hull(r.generators));
        if (static_cast<Int>(pts.size()) != r.declared_size) {
            inst.rejection = SpikedRejection::kCountMismatch;
            out.push_back(std::move(inst));
            continue;
        }
        if (width_at_most_one(pts).value) {
            inst.rejection = SpikedRejection::kNotWide;
            out.push_back(std::move(inst));
            continue;
        }
        if (!is_quasi_minimal(pts)) {
            inst.rejection = SpikedRejection::kNotQuasiMinimal;
            out.push_back(std::move(inst));
            continue;
        }
        out.push_back(std::move(inst));
    }
    return out;
}

std::vector<CanonicalForm> spiked_generate(Int n) {
    if (n < 7) throw UseSeedLists();
    std::set<CanonicalForm> classes;
    for (const auto& inst : spiked_family_instances(n)) {
        if (inst.rejection != SpikedRejection::kNone) continue;
        PointList pts = lattice_points(convex_hull(inst.generators));
        classes.insert(canonical_form_only(pts));
    }
    return {classes.begin(), classes.end()};
}

}  // namespace lp3
