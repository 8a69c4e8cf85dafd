#pragma once

#include <map>
#include <string>
#include <vector>

#include "salkit/action.hpp"

namespace salkit {

// A set partition of {1..n} with linearly ordered blocks.
struct OrderedPartition {
    int n = 0;
    std::vector<std::vector<int>> blocks; // 0-based elements, each block sorted

    int rank() const { return n - static_cast<int>(blocks.size()); }
    std::vector<int> shape() const; // block sizes
    bool operator==(const OrderedPartition& o) const { return n == o.n && blocks == o.blocks; }
    bool operator<(const OrderedPartition& o) const { return blocks < o.blocks; }
    std::string str() const; // pipe-separated blocks, 1-based
};

// An ordered partition together with a compatible total order: sigma lists
// the coordinates ascending, each block contiguous.
struct PartitionSymbol {
    OrderedPartition lambda;
    Permutation sigma;

    std::string str() const;     // blocks in sigma's element order
    std::string box_art() const; // the column-stack picture, one text row per level
};

// Coxeter length of a permutation of {1..n}: the inversion count.
int perm_length(const Permutation& sigma);

// Bijection between braid Salvetti cells and symbols: the face determines the
// ordered partition (coordinates equal within blocks, blocks ordered by
// value), the chamber determines sigma.
PartitionSymbol cell_to_symbol(const SalCell& cell, const FaceLattice& braid_fl);

// Inverse direction, for tests and lookups.
SalCell symbol_to_cell(const PartitionSymbol& sym, const FaceLattice& braid_fl);

// Standard ordered partition of the given shape on consecutive elements.
OrderedPartition standard_partition(const std::vector<int>& shape);

// Signed boundary of the standard cell D(lambda, identity chamber) in the
// twisted quotient, computed from the symbol calculus: facets enumerated as
// block splits, each transported to its standard representative with the
// permutation sign of the transporter; incidence signs are read from the
// generic CW computation. Keys are shapes of one rank lower.
std::map<std::vector<int>, long long> reference_boundary(const OrderedPartition& lambda,
                                                         const SalvettiPipeline& braid_pl);

} // namespace salkit
