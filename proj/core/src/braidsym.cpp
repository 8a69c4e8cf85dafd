#include "salkit/braidsym.hpp"

#include <algorithm>
#include <stdexcept>

namespace salkit {

std::vector<int> OrderedPartition::shape() const {
    std::vector<int> s;
    s.reserve(blocks.size());
    for (const auto& b : blocks) s.push_back(static_cast<int>(b.size()));
    return s;
}

std::string OrderedPartition::str() const {
    std::string s;
    for (size_t b = 0; b < blocks.size(); ++b) {
        if (b) s.push_back('|');
        for (int x : blocks[b]) s += std::to_string(x + 1);
    }
    return s;
}

std::string PartitionSymbol::str() const {
    std::vector<int> pos(sigma.degree());
    for (int k = 0; k < sigma.degree(); ++k) pos[sigma(k)] = k;
    std::string s;
    for (size_t b = 0; b < lambda.blocks.size(); ++b) {
        if (b) s.push_back('|');
        std::vector<int> elems = lambda.blocks[b];
        std::sort(elems.begin(), elems.end(), [&](int x, int y) { return pos[x] < pos[y]; });
        for (int x : elems) s += std::to_string(x + 1);
    }
    return s;
}

std::string PartitionSymbol::box_art() const {
    std::vector<int> pos(sigma.degree());
    for (int k = 0; k < sigma.degree(); ++k) pos[sigma(k)] = k;
    size_t height = 0;
    for (const auto& b : lambda.blocks) height = std::max(height, b.size());
    std::string art;
    for (size_t level = height; level >= 1; --level) {
        std::string row;
        for (const auto& b : lambda.blocks) {
            if (b.size() >= level) {
                std::vector<int> elems = b;
                std::sort(elems.begin(), elems.end(),
                          [&](int x, int y) { return pos[x] < pos[y]; });
                row += std::to_string(elems[level - 1] + 1);
            } else {
                row.push_back(' ');
            }
        }
        while (!row.empty() && row.back() == ' ') row.pop_back();
        art += row;
        art.push_back('\n');
    }
    return art;
}

int perm_length(const Permutation& sigma) {
    int inv = 0;
    for (int i = 0; i < sigma.degree(); ++i)
        for (int j = i + 1; j < sigma.degree(); ++j)
            if (sigma(i) > sigma(j)) ++inv;
    return inv;
}

namespace {

// hyperplane index -> coordinate pair (i, j), i < j, for a braid-type normal
std::vector<std::pair<int, int>> braid_pairs(const Arrangement& arr) {
    std::vector<std::pair<int, int>> pairs;
    for (const auto& h : arr.hyperplanes) {
        int i = -1, j = -1;
        bool ok = true;
        for (size_t k = 0; k < h.normal.size(); ++k) {
            if (h.normal[k] == 1 && i < 0) i = static_cast<int>(k);
            else if (h.normal[k] == -1 && j < 0) j = static_cast<int>(k);
            else if (h.normal[k] != 0) ok = false;
        }
        if (!ok || i < 0 || j < 0 || i > j)
            throw std::invalid_argument("braidsym: arrangement is not a braid arrangement");
        pairs.emplace_back(i, j);
    }
    return pairs;
}

// total coordinate order of a chamber: elements listed ascending by value
std::vector<int> chamber_order(const SignVector& c, const std::vector<std::pair<int, int>>& pairs, int n) {
    std::vector<std::vector<int8_t>> cmp(n, std::vector<int8_t>(n, 0));
    for (size_t v = 0; v < pairs.size(); ++v) {
        auto [i, j] = pairs[v];
        cmp[i][j] = c[v];
        cmp[j][i] = static_cast<int8_t>(-c[v]);
    }
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int x, int y) { return cmp[x][y] < 0; });
    return order;
}

SignVector face_from_partition(const OrderedPartition& lam,
                               const std::vector<std::pair<int, int>>& pairs) {
    std::vector<int> block_of(lam.n, -1);
    for (size_t b = 0; b < lam.blocks.size(); ++b)
        for (int x : lam.blocks[b]) block_of[x] = static_cast<int>(b);
    SignVector f;
    f.e.reserve(pairs.size());
    for (auto [i, j] : pairs) {
        int d = block_of[i] - block_of[j];
        f.e.push_back(static_cast<int8_t>(d == 0 ? 0 : (d < 0 ? -1 : 1)));
    }
    return f;
}

SignVector chamber_from_order(const std::vector<int>& order,
                              const std::vector<std::pair<int, int>>& pairs) {
    int n = static_cast<int>(order.size());
    std::vector<int> pos(n);
    for (int k = 0; k < n; ++k) pos[order[k]] = k;
    SignVector c;
    c.e.reserve(pairs.size());
    for (auto [i, j] : pairs)
        c.e.push_back(static_cast<int8_t>(pos[i] < pos[j] ? -1 : 1));
    return c;
}

} // namespace

PartitionSymbol cell_to_symbol(const SalCell& cell, const FaceLattice& braid_fl) {
    if (braid_fl.arr.family != Family::braid)
        throw std::invalid_argument("cell_to_symbol: not a braid arrangement");
    const int n = braid_fl.arr.dim;
    auto pairs = braid_pairs(braid_fl.arr);
    const SignVector& f = braid_fl.faces[cell.face];
    const SignVector& c = braid_fl.faces[cell.chamber];

    std::vector<int> order = chamber_order(c, pairs, n);

    // blocks: union of tied coordinates, in chamber order so each block is a
    // contiguous run of the ordering
    std::vector<std::vector<int8_t>> tie(n, std::vector<int8_t>(n, 0));
    for (size_t v = 0; v < pairs.size(); ++v)
        if (f[v] == 0) {
            auto [i, j] = pairs[v];
            tie[i][j] = tie[j][i] = 1;
        }
    PartitionSymbol sym;
    sym.lambda.n = n;
    std::vector<int> cur;
    for (int k = 0; k < n; ++k) {
        if (!cur.empty() && !tie[cur.back()][order[k]]) {
            std::sort(cur.begin(), cur.end());
            sym.lambda.blocks.push_back(cur);
            cur.clear();
        }
        cur.push_back(order[k]);
    }
    std::sort(cur.begin(), cur.end());
    sym.lambda.blocks.push_back(cur);
    sym.sigma.img = order;
    return sym;
}

SalCell symbol_to_cell(const PartitionSymbol& sym, const FaceLattice& braid_fl) {
    if (braid_fl.arr.family != Family::braid)
        throw std::invalid_argument("symbol_to_cell: not a braid arrangement");
    auto pairs = braid_pairs(braid_fl.arr);
    SignVector f = face_from_partition(sym.lambda, pairs);
    SignVector c = chamber_from_order(sym.sigma.img, pairs);
    SalCell cell;
    cell.face = braid_fl.index_of(f);
    cell.chamber = braid_fl.index_of(c);
    if (cell.face < 0 || cell.chamber < 0)
        throw std::invalid_argument("symbol_to_cell: symbol not realized");
    if (!face_leq(f, c))
        throw std::invalid_argument("symbol_to_cell: sigma does not refine lambda");
    cell.dim = braid_fl.arr.dim - braid_fl.dims[cell.face];
    cell.cov = matroid_product_complex(complexify_real(f), complexify_imaginary(c));
    return cell;
}

OrderedPartition standard_partition(const std::vector<int>& shape) {
    OrderedPartition lam;
    for (int s : shape) {
        std::vector<int> block;
        for (int i = 0; i < s; ++i) block.push_back(lam.n + i);
        lam.n += s;
        lam.blocks.push_back(std::move(block));
    }
    return lam;
}

std::map<std::vector<int>, long long> reference_boundary(const OrderedPartition& lambda,
                                                         const SalvettiPipeline& braid_pl) {
    const int n = lambda.n;
    if (n != braid_pl.arr.dim)
        throw std::invalid_argument("reference_boundary: partition size mismatch");
    // D(lambda, (1|...|n)) exists only for interval partitions
    int next = 0;
    for (const auto& b : lambda.blocks)
        for (int x : b) {
            if (x != next)
                throw std::invalid_argument("reference_boundary: blocks must be consecutive intervals");
            ++next;
        }

    auto pairs = braid_pairs(braid_pl.arr);
    PartitionSymbol std_sym{lambda, Permutation::identity(n)};
    SalCell std_cell = symbol_to_cell(std_sym, braid_pl.fl);
    int cid = braid_pl.cw.cell_index(std_cell.face, std_cell.chamber);
    if (cid < 0) throw std::logic_error("reference_boundary: standard cell missing");

    std::map<std::vector<int>, long long> out;
    for (size_t bi = 0; bi < lambda.blocks.size(); ++bi) {
        const auto& block = lambda.blocks[bi];
        const int bs = static_cast<int>(block.size());
        if (bs < 2) continue;
        for (unsigned mask = 1; mask + 1 < (1u << bs); ++mask) {
            std::vector<int> low, high;
            for (int t = 0; t < bs; ++t)
                ((mask >> t) & 1u ? low : high).push_back(block[t]);

            OrderedPartition split;
            split.n = n;
            for (size_t b2 = 0; b2 < lambda.blocks.size(); ++b2) {
                if (b2 == bi) {
                    split.blocks.push_back(low);
                    split.blocks.push_back(high);
                } else {
                    split.blocks.push_back(lambda.blocks[b2]);
                }
            }

            // chamber G o C_0: blocks in order, elements ascending inside
            std::vector<int> order;
            for (const auto& b2 : split.blocks)
                for (int x : b2) order.push_back(x);
            SignVector face_g = face_from_partition(split, pairs);
            SignVector chamber_g = chamber_from_order(order, pairs);
            int fid = braid_pl.cw.cell_index(braid_pl.fl.index_of(face_g),
                                             braid_pl.fl.index_of(chamber_g));
            if (fid < 0) throw std::logic_error("reference_boundary: facet cell missing");

            int incidence = 0;
            for (const auto& [f, inc] : braid_pl.cw.boundary[cid])
                if (f == fid) { incidence = inc; break; }
            if (incidence == 0) throw std::logic_error("reference_boundary: split is not a facet");

            // transporter: g(order[k]) = k sends the facet chamber to C_0
            Permutation g;
            g.img.resize(n);
            for (int k = 0; k < n; ++k) g.img[order[k]] = k;

            out[split.shape()] += static_cast<long long>(incidence) * g.sgn();
        }
    }
    return out;
}

} // namespace salkit
