#include "lp3/seeds.hpp"

#include <algorithm>
#include <cassert>
#include <filesystem>
#include <random>

#include "lp3/parallel.hpp"
#include "lp3/store_io.hpp"
#include "lp3/width.hpp"

namespace lp3 {

namespace {

// Base tetrahedron {0, (a,0,0), (b,c,0), (d,e,f)} from the columns of an
// upper-triangular Hermite normal form; normalized volume a*c*f.
struct BaseTetra {
    Int a = 1, b = 0, c = 1, d = 0, e = 0, f = 1;

    PointList points() const { return {{0, 0, 0}, {a, 0, 0}, {b, c, 0}, {d, e, f}}; }
    Int volume() const { return a * c * f; }
};

std::vector<BaseTetra> hnf_tetrahedra(Int vmax) {
    std::vector<BaseTetra> out;
    for (Int a = 1; a <= vmax; ++a)
        for (Int c = 1; a * c <= vmax; ++c)
            for (Int f = 1; a * c * f <= vmax; ++f)
                for (Int b = 0; b < c; ++b)
                    for (Int d = 0; d < f; ++d)
                        for (Int e = 0; e < f; ++e) out.push_back({a, b, c, d, e, f});
    return out;
}

Int floor_div(Int num, Int den) {
    Int q = num / den, r = num % den;
    return (r != 0 && (r < 0) != (den < 0)) ? q - 1 : q;
}
Int ceil_div(Int num, Int den) { return -floor_div(-num, den); }

// Largest absolute determinant over the 4-subsets of S that include w; every
// point of a grown configuration must keep this at most the base volume, or
// the base tetrahedron would not be a maximal-determinant 4-subset.
Int max_det_with(const PointList& s, const LatticePoint& w) {
    Int best = 0;
    for (std::size_t i = 0; i + 2 < s.size(); ++i)
        for (std::size_t j = i + 1; j + 1 < s.size(); ++j)
            for (std::size_t k = j + 1; k < s.size(); ++k) {
                Int d = det3(s[j] - s[i], s[k] - s[i], w - s[i]);
                best = std::max(best, d < 0 ? -d : d);
            }
    return best;
}

// Integer points whose four base-tetrahedron replacement determinants are all
// at most the base volume, base vertices excluded.  The coordinate ranges
// come from the barycentric bounds: z fixes the third coordinate, then the
// second varies over an interval of length 2c and the first over 2a.
PointList extension_candidates(const BaseTetra& t) {
    const PointList base = t.points();
    const Int vol = t.volume();
    PointList out;
    for (Int z = -t.f; z <= t.f; ++z) {
        const Int ylo = ceil_div(z * t.e - t.c * t.f, t.f);
        const Int yhi = floor_div(z * t.e + t.c * t.f, t.f);
        for (Int y = ylo; y <= yhi; ++y) {
            const Int q = y * t.f - z * t.e;
            const Int xmid = t.b * q + t.d * t.c * z;
            const Int xlo = ceil_div(xmid - vol, t.c * t.f);
            const Int xhi = floor_div(xmid + vol, t.c * t.f);
            for (Int x = xlo; x <= xhi; ++x) {
                LatticePoint w{x, y, z};
                if (std::find(base.begin(), base.end(), w) != base.end()) continue;
                if (max_det_with(base, w) <= vol) out.push_back(w);
            }
        }
    }
    return out;
}

struct TetraScan {
    Int n;
    Int vmax;
    std::vector<CanonicalForm> found;

    // Grows S by candidates cand[next..], keeping every filter monotone in
    // the point set so each candidate subset is tried exactly once (in index
    // order) and no completion can be missed: 4-subset determinants never
    // exceed the base volume, the hull volume never exceeds vmax, and the
    // hull never acquires more than n lattice points.
    void extend(PointList& s, const PointList& cand, std::size_t next, Int base_vol) {
        if (static_cast<Int>(s.size()) == n) {
            if (width_at_most_one(s).value) return;
            found.push_back(canonical_form_only(s));
            return;
        }
        for (std::size_t i = next; i < cand.size(); ++i) {
            const LatticePoint& w = cand[i];
            if (max_det_with(s, w) > base_vol) continue;
            s.push_back(w);
            HullData hull = convex_hull(s);
            if (hull.normalized_volume <= vmax &&
                lattice_point_count_capped(hull, static_cast<std::size_t>(n)) <=
                    static_cast<std::size_t>(n))
                extend(s, cand, i + 1, base_vol);
            s.pop_back();
        }
    }

    void run(const BaseTetra& t) {
        PointList s = t.points();
        HullData hull = convex_hull(s);
        if (lattice_point_count_capped(hull, static_cast<std::size_t>(n)) >
            static_cast<std::size_t>(n))
            return;
        PointList cand = extension_candidates(t);
        extend(s, cand, 0, t.volume());
    }
};

void validate_seed_list(const std::vector<CanonicalForm>& forms, Int n, std::size_t expected,
                        const std::string& origin) {
    if (forms.size() != expected)
        throw SeedValidationFailed(origin + ": expected " + std::to_string(expected) +
                                   " classes of size " + std::to_string(n) + ", found " +
                                   std::to_string(forms.size()));
    for (const CanonicalForm& f : forms) {
        if (f.points.size() != static_cast<std::size_t>(n))
            throw SeedValidationFailed(origin + ": class of wrong size");
        HullData hull = convex_hull(f.points);
        if (hull.dimension != 3 ||
            lattice_point_count_capped(hull, f.points.size()) != f.points.size())
            throw SeedValidationFailed(origin + ": class is not a closed 3-dimensional set");
        if (width_at_most_one(f.points).value)
            throw SeedValidationFailed(origin + ": class of width at most one");
    }
}

std::vector<CanonicalForm> load_or_generate(Int n, std::size_t expected,
                                            const std::string& path) {
    const Int vmax = seed_volume_bound(n);
    if (std::filesystem::exists(path)) {
        LP3File db = read_db(path, ReadMode::kStrict);
        std::vector<CanonicalForm> forms = db.forms();
        validate_seed_list(forms, n, expected, path);
        const std::string fp = db.footer_value("fingerprint");
        if (fp != std::to_string(list_fingerprint(forms)))
            throw SeedValidationFailed(path + ": fingerprint mismatch");
        return forms;
    }
    std::vector<CanonicalForm> forms = oracle_enumerate(n, vmax);
    validate_seed_list(forms, n, expected, "size-" + std::to_string(n) + " enumeration");
    LP3File db;
    db.comments = {"# complete list of width > 1 classes of size " + std::to_string(n),
                   "# generated by the volume-bounded tetrahedron enumeration"};
    for (const CanonicalForm& f : forms) db.records.push_back(f.points);
    db.footer = {{"kind", "seed-cache"},
                 {"size", std::to_string(n)},
                 {"vmax", std::to_string(vmax)},
                 {"count", std::to_string(forms.size())},
                 {"fingerprint", std::to_string(list_fingerprint(forms))}};
    write_db(path, db);
    return forms;
}

}  // namespace

Int seed_volume_bound(Int n) { return 12 * (n - 4) + 8; }

std::vector<CanonicalForm> oracle_enumerate(Int n, Int vmax, unsigned threads,
                                            std::uint64_t shuffle_seed) {
    if (n < 5 || n > 7)
        throw std::invalid_argument("oracle_enumerate: size must be 5, 6 or 7");
    if (vmax < seed_volume_bound(n))
        throw BoundTooSmall("volume bound " + std::to_string(vmax) + " is below " +
                            std::to_string(seed_volume_bound(n)) + ", the maximum a width > 1 " +
                            "configuration of size " + std::to_string(n) + " can reach");
    if (threads == 0) threads = default_thread_count();

    std::vector<BaseTetra> tetras = hnf_tetrahedra(vmax);
    if (shuffle_seed != 0) {
        std::mt19937_64 rng(shuffle_seed);
        std::shuffle(tetras.begin(), tetras.end(), rng);
    }

    auto per_job = parallel_collect<CanonicalForm>(
        tetras.size(), threads, [&](std::size_t i) {
            TetraScan scan{n, vmax, {}};
            if (shuffle_seed != 0) {
                // Exercise independence from the extension order as well.
                TetraScan shuffled = scan;
                PointList s = tetras[i].points();
                HullData hull = convex_hull(s);
                if (lattice_point_count_capped(hull, static_cast<std::size_t>(n)) >
                    static_cast<std::size_t>(n))
                    return shuffled.found;
                PointList cand = extension_candidates(tetras[i]);
                std::mt19937_64 rng(shuffle_seed ^ (i * 0x9e3779b97f4a7c15ull));
                std::shuffle(cand.begin(), cand.end(), rng);
                shuffled.extend(s, cand, 0, tetras[i].volume());
                return shuffled.found;
            }
            scan.run(tetras[i]);
            return scan.found;
        });

    CanonicalStore store;
    for (const auto& job : per_job)
        for (const CanonicalForm& f : job) store.insert(f);
    return store.sorted_forms();
}

SeedDatabase seed_database() { return seed_database(LP3_DATA_DIR); }

SeedDatabase seed_database(const std::string& data_dir) {
    SeedDatabase db;
    db.size5 = load_or_generate(5, 9, data_dir + "/seeds_size5.lp3");
    db.size6 = load_or_generate(6, 76, data_dir + "/seeds_size6.lp3");
    return db;
}

}  // namespace lp3
