#pragma once

// Dense quantum oracle: density matrices, partial trace, von Neumann entropy
// vectors, purification, Weyl operators. Everything here is desk scale
// (total dimension capped at a few hundred) and exists to certify the exact
// combinatorial machinery against honest linear algebra.

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "entrocone/distributions.hpp"
#include "entrocone/entropy_vector.hpp"
#include "entrocone/subsets.hpp"

namespace entrocone {

using Cplx = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

struct DensityMatrix {
    std::vector<int> local_dims;
    CMat mat;

    Eigen::Index dim() const { return mat.rows(); }
    int n_parties() const { return static_cast<int>(local_dims.size()); }
    void validate() const;  // hermitian 1e-10, trace 1 within 1e-10, eigenvalues >= -1e-10
};

struct PureState {
    std::vector<int> local_dims;
    CVec amplitudes;

    int n_parties() const { return static_cast<int>(local_dims.size()); }
    void validate() const;  // squared norm 1 within 1e-12
    DensityMatrix to_density() const;
};

std::size_t product_dim(const std::vector<int>& dims);

// Eigenvalues sorted descending, values below -1e-10 rejected, small
// negatives clamped to zero.
std::vector<double> spectrum(const DensityMatrix& rho);

DensityMatrix partial_trace(const DensityMatrix& rho, Mask I);

double von_neumann_entropy(const DensityMatrix& rho);

EntropyVector entropy_vector_quantum(const DensityMatrix& rho);
EntropyVector entropy_vector_quantum(const PureState& psi);

// Canonical purification on D x D: eigenvectors ordered by descending
// eigenvalue, ties broken lexicographically after fixing each vector's
// phase (first significant component real positive).
PureState purify(const DensityMatrix& rho);

PureState ghz_state(int n, int d);

// Diagonal embedding of a classical joint distribution.
DensityMatrix density_from_distribution(const JointDistribution& p);

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

// Weyl operator w(v) = tensor of single-site W(P_i, Q_i) for the phase-space
// point v = (p_1..p_n, q_1..q_n) over Z_d. Canonical representatives in
// {0..d-1} fix the sign for even d.
CMat weyl_operator(int d, const std::vector<long>& v);

}  // namespace entrocone
