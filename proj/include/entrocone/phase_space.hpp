#pragma once

// Finite symplectic phase spaces Z_d^{2n}. Submodules are kept in Howell
// canonical form, which is unique per row span over Z_d and supports
// membership and cardinality queries directly (Smith form does not).
// Coordinates are ordered (p_1..p_n, q_1..q_n).

#include <cstdint>
#include <vector>

#include "entrocone/entropy_vector.hpp"
#include "entrocone/rational.hpp"
#include "entrocone/subsets.hpp"

namespace entrocone {

using ZVec = std::vector<long>;
using ZMat = std::vector<ZVec>;

struct PhaseSpace {
    int n = 0;  // parties
    int d = 0;  // local dimension >= 2

    int coords() const { return 2 * n; }
    bool operator==(const PhaseSpace& o) const { return n == o.n && d == o.d; }
};

long symplectic_form(const ZVec& v, const ZVec& w, const PhaseSpace& space);

// Howell normal form of the row span (entries silently reduced mod d).
ZMat howell_form(ZMat rows, int d, int cols);

struct Submodule {
    PhaseSpace space;
    ZMat generators;  // Howell form rows; empty for the zero module

    bool operator==(const Submodule& o) const { return space == o.space && generators == o.generators; }
    bool operator<(const Submodule& o) const { return generators < o.generators; }
};

Submodule canonicalize(const ZMat& generators, const PhaseSpace& space);

bool submodule_contains(const Submodule& M, ZVec v);

Int cardinality(const Submodule& M);

// Every element, in a deterministic order (coefficient sweep over the
// Howell rows). Sizes here are desk scale by construction.
std::vector<ZVec> elements(const Submodule& M);

bool is_isotropic(const Submodule& M);

Submodule symplectic_complement(const Submodule& M);

// M cap V_I: elements supported on the parties in I.
Submodule restrict_to(const Submodule& M, Mask I);

// S(rho_I) = |I| log2 d - log2 |M_I|, exact.
ExactEntropyVector stabilizer_entropy_exact(const Submodule& M);
EntropyVector stabilizer_entropy_vector(const Submodule& M);

// Entropy vector of the uniform distribution on the symplectic complement,
// H(X_I) = log2( |M^w| / |ker(pi_I) cap M^w| ). Exceeds the stabilizer
// vector by exactly |I| log2 d.
ExactEntropyVector classical_model_exact(const Submodule& M);
EntropyVector classical_model_vector(const Submodule& M);

// Components over the prime factors of a square-free d; rejects square
// dimensions rather than guessing.
std::vector<Submodule> crt_decompose(const Submodule& M);
// Inverse of crt_decompose via the CRT idempotents; used to verify the
// direct-sum reconstruction.
Submodule crt_recombine(const std::vector<Submodule>& parts, const PhaseSpace& space);

std::vector<long> prime_factors_squarefree(long d);  // throws if not square-free

struct EnumerationResult {
    std::vector<Submodule> modules;
    bool truncated = false;
};

// Deterministic enumeration of isotropic submodules: exhaustive (BFS over
// one-generator extensions, lexicographic canonical order) when d^{2n} is
// small, seeded pseudo-random chains otherwise. Never emits duplicates.
EnumerationResult enumerate_isotropic(const PhaseSpace& space, std::size_t budget, std::uint64_t seed = 0);

}  // namespace entrocone
