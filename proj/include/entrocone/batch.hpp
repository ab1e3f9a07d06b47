#pragma once

// Data-parallel sweeps used by the CLI and the acceptance suite: evaluating
// a catalog of functionals over many entropy vectors, and computing entropy
// vectors for many stabilizer modules. Each kernel has a serial reference
// implementation and an OpenMP one writing to preallocated slots, so the
// outputs are bit-identical and the pair can be benchmarked against each
// other.

#include <vector>

#include "entrocone/entropy_vector.hpp"
#include "entrocone/inequalities.hpp"
#include "entrocone/phase_space.hpp"

namespace entrocone {

struct Violation {
    std::size_t vector_index = 0;
    std::size_t functional_index = 0;
    double value = 0.0;
};

// minimum catalog value per vector
std::vector<double> catalog_margins_serial(const std::vector<EntropyVector>& vectors,
                                           const std::vector<NamedInequality>& catalog);
std::vector<double> catalog_margins_parallel(const std::vector<EntropyVector>& vectors,
                                             const std::vector<NamedInequality>& catalog);

std::vector<Violation> catalog_violations(const std::vector<EntropyVector>& vectors,
                                          const std::vector<NamedInequality>& catalog, double tol);

// stabilizer entropy vectors for a batch of modules
std::vector<EntropyVector> stabilizer_sweep_serial(const std::vector<Submodule>& modules);
std::vector<EntropyVector> stabilizer_sweep_parallel(const std::vector<Submodule>& modules);

}  // namespace entrocone
