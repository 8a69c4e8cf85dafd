#pragma once

#include <string>
#include <vector>

namespace salkit {

// Primitive integer normal, gcd of entries 1, first nonzero entry positive.
struct Hyperplane {
    std::vector<long long> normal;

    bool operator==(const Hyperplane& o) const { return normal == o.normal; }
    bool operator<(const Hyperplane& o) const { return normal < o.normal; }
};

Hyperplane canonicalize_normal(std::vector<long long> normal);

enum class Family { custom, braid, center_of_mass };

struct Arrangement {
    int dim = 0;
    std::vector<Hyperplane> hyperplanes;
    Family family = Family::custom;
    int family_n = 0;
    int family_l = 0;

    size_t size() const { return hyperplanes.size(); }

    // Count of pairwise-difference normals, used as the cosmetic '|' position
    // in sign-vector printouts of center-of-mass arrangements.
    int separator_index() const;

    // Equality is the hyperplane sequence; the family tag is a label.
    bool operator==(const Arrangement& o) const {
        return dim == o.dim && hyperplanes == o.hyperplanes;
    }

    bool same_hyperplane_set(const Arrangement& o) const;
    std::string label() const;
};

// Braid arrangement A_{n-1} in R^n, normals e_i - e_j. Walls (i, i+1) come
// first, then the remaining pairs in lexicographic order; this matches the
// normal ordering used for the worked sign-vector examples.
Arrangement braid(int n);

// Center-of-mass arrangement C_{n-1}^l: all hyperplanes equating averages of
// two disjoint equal-size coordinate subsets of size up to min(l, n-l).
// Pairs (I, J) sharing elements reduce to the smaller disjoint condition, so
// normals are generated directly from disjoint pairs; this also makes the
// duality C^l = C^{n-l} hold on the nose.
Arrangement center_of_mass(int n, int l);

// Custom arrangement; normals are canonicalized, deduplicated and sorted.
Arrangement custom_arrangement(int dim, const std::vector<std::vector<long long>>& normals);

// Index of each hyperplane of sub inside sup; throws if sub is not a
// subarrangement of sup.
std::vector<int> subarrangement_map(const Arrangement& sup, const Arrangement& sub);

} // namespace salkit
