#include "lp3/equivalence.hpp"

#include <algorithm>

namespace lp3 {

PointList AffineUnimodularMap::operator()(const PointList& pts) const {
    PointList out;
    out.reserve(pts.size());
    for (const auto& p : pts) out.push_back((*this)(p));
    return out;
}

AffineUnimodularMap AffineUnimodularMap::identity() {
    return {IntMatrix3::identity(), {0, 0, 0}};
}

AffineUnimodularMap AffineUnimodularMap::after(const AffineUnimodularMap& inner) const {
    return {linear * inner.linear, linear * inner.translation + translation};
}

AffineUnimodularMap AffineUnimodularMap::inverse() const {
    IntMatrix3 inv = linear.inverse_unimodular();
    return {inv, -(inv * translation)};
}

bool CanonicalForm::operator<(const CanonicalForm& o) const {
    if (points.size() != o.points.size()) return points.size() < o.points.size();
    return points < o.points;
}

std::uint64_t hash_points(const PointList& sorted_points) {
    // FNV-1a over the coordinate stream; collisions are resolved by full
    // comparison wherever the hash is used as a key.
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t v) {
        for (int byte = 0; byte < 8; ++byte) {
            h ^= (v >> (8 * byte)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    mix(sorted_points.size());
    for (const auto& p : sorted_points) {
        mix(static_cast<std::uint64_t>(p.x));
        mix(static_cast<std::uint64_t>(p.y));
        mix(static_cast<std::uint64_t>(p.z));
    }
    return h;
}

VolumeVectorInvariant volume_vector_invariant(const PointList& a) {
    std::size_t n = a.size();
    VolumeVectorInvariant vv;
    if (n < 4) return vv;
    vv.reserve(n * (n - 1) * (n - 2) * (n - 3) / 24);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                for (std::size_t l = k + 1; l < n; ++l) {
                    Int d = det3(a[j] - a[i], a[k] - a[i], a[l] - a[i]);
                    vv.push_back(d < 0 ? -d : d);
                }
    std::sort(vv.begin(), vv.end());
    return vv;
}

namespace {

struct CanonicalScratch {
    PointList best;
    std::vector<AffineUnimodularMap> best_maps;
};

// Runs the tuple sweep.  `collect_maps` controls whether every map achieving
// the minimum is kept (needed for witness + automorphisms) or just the first.
void canonicalize_into(const PointList& input, bool collect_maps, CanonicalScratch& out) {
    if (input.size() < 4 || affine_dimension(input) < 3) throw NotFullDimensional();

    PointList a = input;
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    std::size_t n = a.size();

    // Minimal nonzero 4-subset determinant and the subsets achieving it.
    Int best_det = 0;
    std::vector<std::array<std::size_t, 4>> subsets;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                for (std::size_t l = k + 1; l < n; ++l) {
                    Int d = det3(a[j] - a[i], a[k] - a[i], a[l] - a[i]);
                    if (d < 0) d = -d;
                    if (d == 0) continue;
                    if (best_det == 0 || d < best_det) {
                        best_det = d;
                        subsets.clear();
                    }
                    if (d == best_det) subsets.push_back({i, j, k, l});
                }

    out.best.clear();
    out.best_maps.clear();
    PointList image(n);

    static constexpr int kPerms[24][4] = {
        {0, 1, 2, 3}, {0, 1, 3, 2}, {0, 2, 1, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}, {0, 3, 2, 1},
        {1, 0, 2, 3}, {1, 0, 3, 2}, {1, 2, 0, 3}, {1, 2, 3, 0}, {1, 3, 0, 2}, {1, 3, 2, 0},
        {2, 0, 1, 3}, {2, 0, 3, 1}, {2, 1, 0, 3}, {2, 1, 3, 0}, {2, 3, 0, 1}, {2, 3, 1, 0},
        {3, 0, 1, 2}, {3, 0, 2, 1}, {3, 1, 0, 2}, {3, 1, 2, 0}, {3, 2, 0, 1}, {3, 2, 1, 0}};

    for (const auto& sub : subsets) {
        for (const auto& perm : kPerms) {
            const LatticePoint p0 = a[sub[static_cast<std::size_t>(perm[0])]];
            const LatticePoint p1 = a[sub[static_cast<std::size_t>(perm[1])]];
            const LatticePoint p2 = a[sub[static_cast<std::size_t>(perm[2])]];
            const LatticePoint p3 = a[sub[static_cast<std::size_t>(perm[3])]];
            IntMatrix3 m = IntMatrix3::from_columns(p1 - p0, p2 - p0, p3 - p0);
            IntMatrix3 u = hnf(m).u;
            for (std::size_t t = 0; t < n; ++t) image[t] = u * (a[t] - p0);
            std::sort(image.begin(), image.end());
            int cmp = out.best.empty() ? -1
                                       : (image < out.best ? -1 : (image == out.best ? 0 : 1));
            if (cmp > 0) continue;
            if (cmp < 0) {
                out.best = image;
                out.best_maps.clear();
            }
            if (collect_maps || out.best_maps.empty())
                out.best_maps.push_back({u, -(u * p0)});
        }
    }
}

}  // namespace

CanonicalForm canonical_form_only(const PointList& a) {
    CanonicalScratch scratch;
    canonicalize_into(a, false, scratch);
    CanonicalForm form;
    form.points = std::move(scratch.best);
    form.hash = hash_points(form.points);
    form.automorphism_count = 1;  // not computed on this path
    return form;
}

CanonicalizationResult canonical_form(const PointList& a) {
    CanonicalScratch scratch;
    canonicalize_into(a, true, scratch);

    CanonicalizationResult res;
    res.form.points = std::move(scratch.best);
    res.form.hash = hash_points(res.form.points);
    res.witness = scratch.best_maps.front();

    // Every map achieving the minimum sends the input onto the representative,
    // so composing with one fixed inverse yields the full setwise stabilizer.
    AffineUnimodularMap winv = res.witness.inverse();
    std::vector<AffineUnimodularMap> autos;
    autos.reserve(scratch.best_maps.size());
    for (const auto& mp : scratch.best_maps) autos.push_back(mp.after(winv));
    std::sort(autos.begin(), autos.end());
    autos.erase(std::unique(autos.begin(), autos.end()), autos.end());
    res.automorphisms = std::move(autos);
    res.form.automorphism_count = res.automorphisms.size();
    return res;
}

EquivalenceResult are_equivalent(const PointList& a, const PointList& b) {
    EquivalenceResult res;
    if (a.size() != b.size()) return res;
    if (volume_vector_invariant(a) != volume_vector_invariant(b)) return res;
    CanonicalizationResult ca = canonical_form(a);
    CanonicalizationResult cb = canonical_form(b);
    if (!(ca.form == cb.form)) return res;
    res.equivalent = true;
    res.witness = cb.witness.inverse().after(ca.witness);
    return res;
}

std::vector<AffineUnimodularMap> transformations_between(const PointList& a,
                                                         const PointList& b) {
    std::vector<AffineUnimodularMap> out;
    if (a.size() != b.size()) return out;
    CanonicalizationResult ca = canonical_form(a);
    CanonicalizationResult cb = canonical_form(b);
    if (!(ca.form == cb.form)) return out;
    AffineUnimodularMap binv = cb.witness.inverse();
    out.reserve(ca.automorphisms.size());
    for (const auto& s : ca.automorphisms) out.push_back(binv.after(s).after(ca.witness));
    std::sort(out.begin(), out.end());
    return out;
}

bool CanonicalStore::insert(const CanonicalForm& form) {
    Shard& shard = shards_[form.hash % kShards];
    std::lock_guard<std::mutex> lock(shard.mutex);
    auto& bucket = shard.buckets[form.hash];
    for (const auto& f : bucket)
        if (f.points == form.points) return false;
    bucket.push_back(form);
    return true;
}

bool CanonicalStore::contains(const CanonicalForm& form) const {
    const Shard& shard = shards_[form.hash % kShards];
    std::lock_guard<std::mutex> lock(shard.mutex);
    auto it = shard.buckets.find(form.hash);
    if (it == shard.buckets.end()) return false;
    for (const auto& f : it->second)
        if (f.points == form.points) return true;
    return false;
}

std::size_t CanonicalStore::size() const {
    std::size_t total = 0;
    for (const auto& shard : shards_) {
        std::lock_guard<std::mutex> lock(shard.mutex);
        for (const auto& [h, bucket] : shard.buckets) total += bucket.size();
    }
    return total;
}

std::uint64_t list_fingerprint(const std::vector<CanonicalForm>& forms) {
    std::uint64_t h = 1469598103934665603ull;
    for (const CanonicalForm& f : forms) {
        h ^= f.hash;
        h *= 1099511628211ull;
    }
    return h;
}

std::vector<CanonicalForm> CanonicalStore::sorted_forms() const {
    std::vector<CanonicalForm> all;
    for (const auto& shard : shards_) {
        std::lock_guard<std::mutex> lock(shard.mutex);
        for (const auto& [h, bucket] : shard.buckets)
            all.insert(all.end(), bucket.begin(), bucket.end());
    }
    std::sort(all.begin(), all.end());
    return all;
}

}  // namespace lp3
