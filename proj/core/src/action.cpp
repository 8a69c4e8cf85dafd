#include "salkit/action.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace salkit {

Permutation Permutation::identity(int n) {
    Permutation p;
    p.img.resize(n);
    std::iota(p.img.begin(), p.img.end(), 0);
    return p;
}

Permutation Permutation::compose(const Permutation& then) const {
    // (this ∘ then)(i) = this(then(i))
    Permutation r;
    r.img.resize(img.size());
    for (size_t i = 0; i < img.size(); ++i) r.img[i] = img[then.img[i]];
    return r;
}

Permutation Permutation::inverse() const {
    Permutation r;
    r.img.resize(img.size());
    for (size_t i = 0; i < img.size(); ++i) r.img[img[i]] = static_cast<int>(i);
    return r;
}

int Permutation::sgn() const {
    int inv = 0;
    for (size_t i = 0; i < img.size(); ++i)
        for (size_t j = i + 1; j < img.size(); ++j)
            if (img[i] > img[j]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

std::vector<Permutation> symmetric_group(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    std::vector<Permutation> g;
    do {
        g.push_back(Permutation{v});
    } while (std::next_permutation(v.begin(), v.end()));
    return g;
}

int HyperplaneAction::group_index(const Permutation& g) const {
    auto it = std::lower_bound(group.begin(), group.end(), g);
    if (it == group.end() || !(*it == g)) return -1;
    return static_cast<int>(it - group.begin());
}

int HyperplaneAction::compose(int gi, int hi) const {
    return group_index(group[gi].compose(group[hi]));
}

int HyperplaneAction::inverse(int gi) const { return group_index(group[gi].inverse()); }

HyperplaneAction build_hyperplane_action(const Arrangement& arr) {
    HyperplaneAction act;
    act.group = symmetric_group(arr.dim); // next_permutation yields sorted order
    act.table.resize(act.group.size());

    std::map<Hyperplane, int> hyp_index;
    for (size_t v = 0; v < arr.hyperplanes.size(); ++v)
        hyp_index[arr.hyperplanes[v]] = static_cast<int>(v);

    for (size_t gi = 0; gi < act.group.size(); ++gi) {
        const Permutation& g = act.group[gi];
        act.table[gi].resize(arr.hyperplanes.size());
        for (size_t v = 0; v < arr.hyperplanes.size(); ++v) {
            const auto& a = arr.hyperplanes[v].normal;
            std::vector<long long> moved(a.size());
            for (size_t i = 0; i < a.size(); ++i) moved[g.img[i]] = a[i];
            // canonical form plus the sign it absorbed
            int8_t eps = 1;
            for (long long x : moved) {
                if (x == 0) continue;
                if (x < 0) eps = -1;
                break;
            }
            Hyperplane h = canonicalize_normal(moved);
            auto it = hyp_index.find(h);
            if (it == hyp_index.end())
                throw std::invalid_argument(
                    "build_hyperplane_action: arrangement is not stable under coordinate permutations");
            act.table[gi][v] = {it->second, eps};
        }
    }
    return act;
}

SignVector act_on_covector(const HyperplaneAction& act, int gi, const SignVector& f) {
    SignVector out;
    out.e.assign(f.size(), 0);
    for (size_t v = 0; v < f.size(); ++v) {
        auto [w, eps] = act.table[gi][v];
        out.e[w] = static_cast<int8_t>(eps * f[v]);
    }
    return out;
}

ComplexCovector act_on_covector(const HyperplaneAction& act, int gi, const ComplexCovector& x) {
    ComplexCovector out;
    out.e.assign(x.size(), 0);
    for (size_t v = 0; v < x.size(); ++v) {
        auto [w, eps] = act.table[gi][v];
        out.e[w] = static_cast<int8_t>(eps * x[v]);
    }
    return out;
}

CellAction build_cell_action(const CWData& cw, const HyperplaneAction& act) {
    CellAction ca;
    const size_t ng = act.group.size();
    ca.face_perm.assign(ng, {});
    ca.cell_perm.assign(ng, {});
    for (size_t gi = 0; gi < ng; ++gi) {
        auto& fp = ca.face_perm[gi];
        fp.resize(cw.fl.faces.size());
        for (size_t f = 0; f < cw.fl.faces.size(); ++f) {
            int t = cw.fl.index_of(act_on_covector(act, static_cast<int>(gi), cw.fl.faces[f]));
            if (t < 0)
                throw std::logic_error("build_cell_action: action does not preserve the face lattice");
            if (cw.fl.dims[t] != cw.fl.dims[f])
                throw std::logic_error("build_cell_action: action does not preserve dimensions");
            fp[f] = t;
        }
        auto& cp = ca.cell_perm[gi];
        cp.resize(cw.cells.size());
        for (size_t c = 0; c < cw.cells.size(); ++c) {
            int t = cw.cell_index(fp[cw.cells[c].face], fp[cw.cells[c].chamber]);
            if (t < 0)
                throw std::logic_error("build_cell_action: action does not preserve cells");
            cp[c] = t;
        }
    }
    return ca;
}

int orientation_sign(const CWData& cw, const CellAction& ca, const HyperplaneAction& act,
                     int gi, int cell) {
    (void)act;
    const auto& chain = cw.chains[cell][0];
    std::vector<int> moved(chain.size());
    for (size_t i = 0; i < chain.size(); ++i) moved[i] = ca.cell_perm[gi][chain[i]];
    int target = ca.cell_perm[gi][cell];
    auto it = cw.chain_index[target].find(moved);
    if (it == cw.chain_index[target].end())
        throw std::logic_error("orientation_sign: transported chain missing");
    return cw.chain_eps[target][it->second] * cw.chain_eps[cell][0];
}

OrbitData cell_orbits(const CWData& cw, const HyperplaneAction& act, const CellAction& ca) {
    OrbitData od;
    const int ncells = static_cast<int>(cw.cells.size());
    od.orbit_of.assign(ncells, -1);
    for (int c = 0; c < ncells; ++c) {
        if (od.orbit_of[c] >= 0) continue;
        int orbit = static_cast<int>(od.rep.size());
        std::vector<int> members;
        for (size_t gi = 0; gi < act.group.size(); ++gi) {
            int t = ca.cell_perm[gi][c];
            if (od.orbit_of[t] < 0) {
                od.orbit_of[t] = orbit;
                members.push_back(t);
            }
        }
        std::sort(members.begin(), members.end());
        // representative: lexicographically minimal serialized covector
        int best = members[0];
        for (int m : members)
            if (covector_string_less(cw.cells[m].cov, cw.cells[best].cov)) best = m;
        od.rep.push_back(best);
        od.members.push_back(std::move(members));
    }

    od.transporter.assign(ncells, -1);
    od.stabilizer.resize(od.rep.size());
    for (int c = 0; c < ncells; ++c) {
        int r = od.rep[od.orbit_of[c]];
        for (size_t gi = 0; gi < act.group.size(); ++gi) {
            if (ca.cell_perm[gi][c] == r) {
                od.transporter[c] = static_cast<int>(gi);
                break;
            }
        }
        if (od.transporter[c] < 0) throw std::logic_error("cell_orbits: no transporter found");
    }
    for (size_t o = 0; o < od.rep.size(); ++o)
        for (size_t gi = 0; gi < act.group.size(); ++gi)
            if (ca.cell_perm[gi][od.rep[o]] == od.rep[o])
                od.stabilizer[o].push_back(static_cast<int>(gi));
    return od;
}

TwistedQuotientComplex twisted_quotient(const CWData& cw, const HyperplaneAction& act,
                                        const CellAction& ca, const OrbitData& orbits,
                                        int p, Twist twist) {
    if (!is_prime(p)) throw std::invalid_argument("twisted_quotient: p must be prime");
    TwistedQuotientComplex q;
    q.p = p;
    q.twist = twist;
    q.top_dim = cw.top_dim;

    auto transport_sign = [&](int gi, int cell) {
        int s = orientation_sign(cw, ca, act, gi, cell);
        if (twist == Twist::sign) s *= act.group[gi].sgn();
        return s;
    };

    // An orbit dies iff some stabilizer element reverses the representative,
    // x = -x forcing x = 0 for p odd.
    const int norb = static_cast<int>(orbits.rep.size());
    q.alive.assign(norb, 1);
    if (p != 2) {
        for (int o = 0; o < norb; ++o)
            for (int gi : orbits.stabilizer[o])
                if (transport_sign(gi, orbits.rep[o]) < 0) {
                    q.alive[o] = 0;
                    break;
                }
    }

    q.gens.assign(cw.top_dim + 1, {});
    q.labels.assign(cw.top_dim + 1, {});
    q.gen_index_of_orbit.assign(norb, -1);
    for (int d = 0; d <= cw.top_dim; ++d) {
        std::vector<int> orbs;
        for (int o = 0; o < norb; ++o)
            if (q.alive[o] && cw.cells[orbits.rep[o]].dim == d) orbs.push_back(o);
        std::sort(orbs.begin(), orbs.end(), [&](int a, int b) {
            return covector_string_less(cw.cells[orbits.rep[a]].cov, cw.cells[orbits.rep[b]].cov);
        });
        for (size_t i = 0; i < orbs.size(); ++i) {
            q.gen_index_of_orbit[orbs[i]] = static_cast<int>(i);
            q.labels[d].push_back(to_string(cw.cells[orbits.rep[orbs[i]]].cov,
                                            cw.fl.arr.separator_index()));
        }
        q.gens[d] = std::move(orbs);
    }

    q.boundary_z.resize(cw.top_dim + 1);
    q.boundary.assign(cw.top_dim + 1, MatrixFp(p, 0, 0));
    for (int d = 1; d <= cw.top_dim; ++d) {
        IntMatrix m(static_cast<int>(q.gens[d - 1].size()), static_cast<int>(q.gens[d].size()));
        for (size_t j = 0; j < q.gens[d].size(); ++j) {
            int r = orbits.rep[q.gens[d][j]];
            for (const auto& [f, inc] : cw.boundary[r]) {
                int o = orbits.orbit_of[f];
                if (!q.alive[o]) continue;
                int row = q.gen_index_of_orbit[o];
                m.at(row, static_cast<int>(j)) += inc * transport_sign(orbits.transporter[f], f);
            }
        }
        MatrixFp fp(p, m.rows, m.cols);
        for (int r = 0; r < m.rows; ++r)
            for (int c = 0; c < m.cols; ++c)
                fp.set_from_int(r, c, m.at(r, c));
        q.boundary_z[d] = std::move(m);
        q.boundary[d] = std::move(fp);
    }

    // d o d = 0 over F_p
    for (int d = 2; d <= cw.top_dim; ++d)
        if (!fp_mul(q.boundary[d - 1], q.boundary[d]).is_zero())
            throw std::logic_error("twisted_quotient: d o d != 0 mod p");
    return q;
}

SalvettiPipeline build_pipeline(const Arrangement& arr) {
    SalvettiPipeline pl;
    pl.arr = arr;
    pl.fl = enumerate_faces(arr);
    pl.cw = build_salvetti(pl.fl);
    pl.act = build_hyperplane_action(arr);
    pl.ca = build_cell_action(pl.cw, pl.act);
    pl.orbits = cell_orbits(pl.cw, pl.act, pl.ca);
    return pl;
}

} // namespace salkit
