#pragma once

// Subspace rank vectors over prime fields, their entropy embedding, the
// annihilator duality and the stabilizer-to-subspace construction that
// carries balanced linear rank inequalities over to prime-dimension
// stabilizer entropies.

#include <vector>

#include "entrocone/distributions.hpp"
#include "entrocone/entropy_vector.hpp"
#include "entrocone/phase_space.hpp"
#include "entrocone/subsets.hpp"

namespace entrocone {

using FpMat = std::vector<std::vector<long>>;  // rows over F_p

// reduced row echelon form over F_p (canonical basis of the row span)
FpMat rref_mod_p(FpMat rows, long p);
int rank_mod_p(const FpMat& rows, long p);
FpMat nullspace_mod_p(const FpMat& rows, long p, int cols);  // basis of {x : rows * x = 0}

struct SubspaceFamily {
    long p = 2;      // prime
    int ambient = 0; // dimension m
    std::vector<FpMat> subspaces;  // RREF basis per subspace

    int n_subspaces() const { return static_cast<int>(subspaces.size()); }
    void validate() const;  // prime p, ranks <= ambient, canonical bases
};

// r_I = dim span of the union of the U_i, i in I; monotone and submodular
std::vector<int> rank_vector(const SubspaceFamily& fam);

// h = log2(p) * r; the witness distribution (X uniform on the dual space,
// X_i the restriction to U_i) is emitted when the joint alphabet is small.
EntropyVector rank_to_entropy(const SubspaceFamily& fam);
JointDistribution rank_witness_distribution(const SubspaceFamily& fam, std::size_t table_cap = 1u << 20);

// V_i = W_i^o; checks dim sum_{i in I} V_i == m - dim intersection W_i for all I
SubspaceFamily annihilator_convert(const SubspaceFamily& W);

// U_i = (ker(pi_i) cap M^w)^o inside (M^w)*; for prime d the identity
// S(rho_I) + |I| log2 d = log2(d) * r(U)_I holds exactly.
SubspaceFamily stabilizer_rank_family(const Submodule& M);

}  // namespace entrocone
