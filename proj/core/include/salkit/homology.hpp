#pragma once

#include <optional>
#include <string>
#include <vector>

#include "salkit/action.hpp"

namespace salkit {

// F_p chain complex: boundary[k] maps degree k to degree k-1, k = 1..top.
struct ChainComplexFp {
    int p = 2;
    std::vector<int> dims;
    std::vector<MatrixFp> boundary;
    std::vector<std::vector<std::string>> labels;

    int top_dim() const { return static_cast<int>(dims.size()) - 1; }
    long long euler_characteristic() const;
    void validate() const; // shapes and d o d = 0
};

ChainComplexFp complex_from_quotient(const TwistedQuotientComplex& q);
ChainComplexFp complex_from_cw(const CWData& cw, int p); // unquotiented cellular chains

struct HomologySummary {
    std::vector<int> betti;
    // per degree: representative cycles (coordinate vectors) for a homology basis
    std::vector<std::vector<std::vector<int>>> representatives;
};

HomologySummary homology_fp(const ChainComplexFp& c);

struct ChainMapFp {
    ChainComplexFp source;
    ChainComplexFp target;
    std::vector<MatrixFp> f; // per degree

    void validate() const; // commutes with boundaries
    bool surjective_in_degree(int k) const;
};

// Cellular image of each cell of the finer complex inside the coarser one:
// (sub cell id, +-1) when the restricted face keeps its codimension, absent
// otherwise. Computed simplicially through the barycentric chains.
struct CellularRestriction {
    std::vector<std::optional<std::pair<int, int>>> image; // per sup cell
};

CellularRestriction cellular_restriction(const SalvettiPipeline& sup,
                                         const SalvettiPipeline& sub,
                                         const std::vector<int>& idxmap);

// Chain map between twisted quotients induced by a subarrangement inclusion.
ChainMapFp inclusion_chain_map(const SalvettiPipeline& sup, const TwistedQuotientComplex& sup_q,
                               const SalvettiPipeline& sub, const TwistedQuotientComplex& sub_q,
                               const std::vector<int>& idxmap);

// Degreewise kernel with induced boundaries; optionally exposes the nullspace
// bases in source coordinates.
ChainComplexFp kernel_complex(const ChainMapFp& f,
                              std::vector<std::vector<std::vector<int>>>* basis_out = nullptr);

// Matrices of H_k(f) with respect to the computed homology bases.
std::vector<MatrixFp> induced_map_on_homology(const ChainMapFp& f, const HomologySummary& src,
                                              const HomologySummary& tgt);

} // namespace salkit
