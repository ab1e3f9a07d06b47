#pragma once

// Desk-scale dense construction of stabilizer states from isotropic
// submodules, rho = d^{-n} sum_{g in G} g. Exists purely to certify the
// combinatorial entropy formulas against honest matrices.

#include "entrocone/phase_space.hpp"
#include "entrocone/quantum.hpp"

namespace entrocone {

struct StabilizerDenseOptions {
    std::size_t dim_cap = 256;  // largest d^n the oracle will touch
};

// For odd d the Weyl lift of an isotropic submodule is a genuine
// representation and all phases are 1. For even d the generator phases are
// searched over 4th roots of unity until the sum is a valid normalized
// projector; an exhausted search throws rather than returning junk.
DensityMatrix stabilizer_state_dense(const Submodule& M, const StabilizerDenseOptions& opt = {});

}  // namespace entrocone
