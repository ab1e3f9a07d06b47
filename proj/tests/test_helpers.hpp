#pragma once

#include <random>

#include "entrocone/quantum.hpp"

namespace entrocone::testing {

// seeded Haar-ish random pure state (Gaussian amplitudes, normalized)
inline PureState random_pure_state(std::vector<int> dims, std::mt19937_64& rng) {
    PureState psi;
    psi.local_dims = std::move(dims);
    const Eigen::Index D = static_cast<Eigen::Index>(product_dim(psi.local_dims));
    psi.amplitudes = CVec::Zero(D);
    std::normal_distribution<double> g(0.0, 1.0);
    for (Eigen::Index i = 0; i < D; ++i) psi.amplitudes(i) = Cplx(g(rng), g(rng));
    psi.amplitudes /= psi.amplitudes.norm();
    return psi;
}

inline DensityMatrix random_density(std::vector<int> dims, std::mt19937_64& rng) {
    const Eigen::Index D = static_cast<Eigen::Index>(product_dim(dims));
    std::normal_distribution<double> g(0.0, 1.0);
    CMat A(D, D);
    for (Eigen::Index i = 0; i < D; ++i)
        for (Eigen::Index j = 0; j < D; ++j) A(i, j) = Cplx(g(rng), g(rng));
    CMat m = A * A.adjoint();
    m /= m.trace().real();
    DensityMatrix rho;
    rho.local_dims = std::move(dims);
    rho.mat = std::move(m);
    return rho;
}

}  // namespace entrocone::testing
