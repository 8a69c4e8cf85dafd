#include "salkit/arrangement.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace salkit {

Hyperplane canonicalize_normal(std::vector<long long> normal) {
    long long g = 0;
    for (long long x : normal) g = std::gcd(g, x < 0 ? -x : x);
    if (g == 0) throw std::invalid_argument("hyperplane normal must be nonzero");
    for (long long& x : normal) x /= g;
    for (long long x : normal) {
        if (x == 0) continue;
        if (x < 0)
            for (long long& y : normal) y = -y;
        break;
    }
    return Hyperplane{std::move(normal)};
}

int Arrangement::separator_index() const {
    if (family != Family::center_of_mass) return -1;
    int pairs = 0;
    for (const auto& h : hyperplanes) {
        int nonzero = 0;
        for (long long x : h.normal)
            if (x != 0) ++nonzero;
        if (nonzero == 2) ++pairs;
    }
    return pairs == static_cast<int>(hyperplanes.size()) ? -1 : pairs;
}

bool Arrangement::same_hyperplane_set(const Arrangement& o) const {
    if (dim != o.dim || hyperplanes.size() != o.hyperplanes.size()) return false;
    std::set<Hyperplane> a(hyperplanes.begin(), hyperplanes.end());
    std::set<Hyperplane> b(o.hyperplanes.begin(), o.hyperplanes.end());
    return a == b;
}

std::string Arrangement::label() const {
    switch (family) {
        case Family::braid: return "braid(" + std::to_string(family_n) + ")";
        case Family::center_of_mass:
            return "center_of_mass(" + std::to_string(family_n) + "," + std::to_string(family_l) + ")";
        case Family::custom: break;
    }
    return "custom(dim=" + std::to_string(dim) + ",m=" + std::to_string(hyperplanes.size()) + ")";
}

namespace {

std::vector<long long> pair_normal(int n, int i, int j) {
    std::vector<long long> a(n, 0);
    a[i] = 1;
    a[j] = -1;
    return a;
}

std::vector<std::vector<int>> subsets_of_size(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i < n; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

} // namespace

Arrangement braid(int n) {
    if (n < 2) throw std::invalid_argument("braid: n must be at least 2");
    Arrangement arr;
    arr.dim = n;
    arr.family = Family::braid;
    arr.family_n = n;
    for (int i = 0; i + 1 < n; ++i)
        arr.hyperplanes.push_back(Hyperplane{pair_normal(n, i, i + 1)});
    for (int i = 0; i < n; ++i)
        for (int j = i + 2; j < n; ++j)
            arr.hyperplanes.push_back(Hyperplane{pair_normal(n, i, j)});
    return arr;
}

Arrangement center_of_mass(int n, int l) {
    if (l < 1 || l >= n) throw std::invalid_argument("center_of_mass: need 1 <= l < n");
    Arrangement arr = braid(n);
    arr.family = Family::center_of_mass;
    arr.family_n = n;
    arr.family_l = l;
    int kmax = std::min(l, n - l);
    for (int k = 2; k <= kmax; ++k) {
        for (const auto& a_set : subsets_of_size(n, k)) {
            std::vector<int> rest;
            for (int i = 0; i < n; ++i)
                if (!std::binary_search(a_set.begin(), a_set.end(), i)) rest.push_back(i);
            for (const auto& b_idx : subsets_of_size(static_cast<int>(rest.size()), k)) {
                std::vector<int> b_set;
                for (int bi : b_idx) b_set.push_back(rest[bi]);
                // one hyperplane per unordered {I, J}: keep the pair whose
                // first block holds the smallest element
                if (b_set[0] < a_set[0]) continue;
                std::vector<long long> normal(n, 0);
                for (int i : a_set) normal[i] = 1;
                for (int j : b_set) normal[j] = -1;
                arr.hyperplanes.push_back(Hyperplane{std::move(normal)});
            }
        }
    }
    return arr;
}

Arrangement custom_arrangement(int dim, const std::vector<std::vector<long long>>& normals) {
    if (dim < 1) throw std::invalid_argument("custom_arrangement: dimension must be positive");
    Arrangement arr;
    arr.dim = dim;
    std::set<Hyperplane> seen;
    for (const auto& a : normals) {
        if (static_cast<int>(a.size()) != dim)
            throw std::invalid_argument("custom_arrangement: normal of wrong dimension");
        Hyperplane h = canonicalize_normal(a);
        if (seen.insert(h).second) arr.hyperplanes.push_back(std::move(h));
    }
    std::sort(arr.hyperplanes.begin(), arr.hyperplanes.end());
    return arr;
}

std::vector<int> subarrangement_map(const Arrangement& sup, const Arrangement& sub) {
    if (sup.dim != sub.dim)
        throw std::invalid_argument("subarrangement_map: ambient dimensions differ");
    std::vector<int> idx;
    idx.reserve(sub.hyperplanes.size());
    for (const auto& h : sub.hyperplanes) {
        auto it = std::find(sup.hyperplanes.begin(), sup.hyperplanes.end(), h);
        if (it == sup.hyperplanes.end())
            throw std::invalid_argument("subarrangement_map: not a subarrangement");
        idx.push_back(static_cast<int>(it - sup.hyperplanes.begin()));
    }
    return idx;
}

} // namespace salkit
