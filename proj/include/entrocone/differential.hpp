#pragma once

// Local geometry of extremal rays: flat-spectrum tests, Schmidt data, the
// analytic differential of the entropy function on pure states, its
// classical counterpart on the probability simplex, and the trichotomy
// classifiers for states that can populate isolated extremal rays.

#include <string>
#include <vector>

#include "entrocone/distributions.hpp"
#include "entrocone/quantum.hpp"

namespace entrocone {

struct FlatnessResult {
    bool flat = false;
    int levels = 0;  // nonzero eigenvalues / support size
};

// flat: all values above tol (relative to the largest) are mutually equal
FlatnessResult is_flat(const std::vector<double>& spectrum, double tol = 1e-8);

struct SchmidtData {
    Mask subset = 0;
    std::vector<double> coefficients;  // p_alpha, descending, sum 1
    CMat left;                         // columns on H_I
    CMat right;                        // columns on H_{I^c}
};

SchmidtData schmidt_decompose(const PureState& psi, Mask I);

enum class RayVerdict {
    Splits,                // some nontrivial entropy vanishes
    ExceptionalRay,        // v = r * sum over nonempty subsets of e^(I)
    AllFlat,               // every spectrum flat
    NotExtremalCandidate,  // fails every necessary condition
};

std::string verdict_name(RayVerdict v);

struct Classification {
    RayVerdict verdict = RayVerdict::NotExtremalCandidate;
    Mask witness_subset = 0;  // vanishing subset or the non-flat subset
    double ratio = 0.0;       // r for the exceptional ray
};

Classification classify_quantum(const DensityMatrix& rho, double tol = 1e-8);
Classification classify_classical(const JointDistribution& p, double tol = 1e-8);

struct DifferentialReport {
    int n = 0;
    std::vector<Mask> subsets;               // proper nonempty, ascending mask order
    std::vector<std::vector<double>> rows;   // d s_I over the shared tangent basis (bits)
    std::vector<bool> flat;                  // per subset
    std::vector<int> levels;                 // support sizes per subset
    std::vector<CVec> tangent_basis;         // complex directions; each yields phi and i*phi columns
    int rank = 0;                            // numerical rank of the row matrix
    bool degenerate = false;                 // some spectrum neither flat nor nondegenerate
    Mask degenerate_subset = 0;
    RayVerdict verdict = RayVerdict::NotExtremalCandidate;
};

// Analytic d s_I over a deterministic tangent basis of projective space at
// psi. Subsets with a partially degenerate, non-flat spectrum make the
// first-order formula invalid; the report then says so instead of emitting
// numbers.
DifferentialReport entropy_differential(const PureState& psi, double tol = 1e-8);

// entropy of subset I of the (normalized) state, for finite-difference checks
double subset_entropy(const PureState& psi, Mask I);

struct SupportingSpace {
    std::vector<std::size_t> support;  // table indices with positive mass
    int dimension = 0;                 // support size - 1
};

SupportingSpace supporting_space(const JointDistribution& p);

// rows of (d h_I)_p over the basis {e_{x_j} - e_{x_0}} of the supporting
// space, entries log2( p_I(x0_I) / p_I(xj_I) )
DifferentialReport classical_differential(const JointDistribution& p, double tol = 1e-8);

}  // namespace entrocone
