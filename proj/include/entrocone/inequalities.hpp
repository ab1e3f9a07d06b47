#pragma once

// Named information inequalities as exact functionals: strong subadditivity
// Delta[I,J], weak monotonicity E[I,J], the elemental Shannon generators,
// Pippenger's essential sets, Zhang-Yeung and Ingleton.
//
// Weak monotonicity is built with -S(J\I); the +S(J\I) variant that also
// circulates is not equivalent to strong subadditivity under purification
// and is not what the facet results use.

#include <string>
#include <vector>

#include "entrocone/morphisms.hpp"
#include "entrocone/subsets.hpp"

namespace entrocone {

enum class InequalityFamily { ShannonElemental, SSA, WeakMonotonicity, NonShannon, LinearRank };

struct NamedInequality {
    std::string name;
    Functional functional;
    InequalityFamily family;
};

// Delta[I,J] = S(I) + S(J) - S(I u J) - S(I n J)
Functional ssa(Mask I, Mask J, int n);

// E[I,J] = S(I) + S(J) - S(I \ J) - S(J \ I)
Functional weak_monotonicity(Mask I, Mask J, int n);

// I(A:B|C) = S(AC) + S(BC) - S(ABC) - S(C)
Functional conditional_mutual_information(Mask A, Mask B, Mask C, int n);

// H(X_i | X_{i^c}) >= 0 for each i, I(X_i : X_j | X_K) >= 0 for i<j and
// K subset of the rest; count n + C(n,2) 2^{n-2}.
std::vector<NamedInequality> elemental_shannon(int n);

struct PippengerSets {
    std::vector<NamedInequality> e_delta;  // n(n-1) 2^{n-3}
    std::vector<NamedInequality> e_e;      // n 2^{n-2}
};
PippengerSets pippenger_sets(int n);

// every distinct nonzero Delta[I,J] and E[I,J] instance: the halfspaces of
// the von Neumann cone Xi_n
std::vector<NamedInequality> xi_catalog(int n);

NamedInequality zhang_yeung();  // n = 4
NamedInequality ingleton();     // n = 4, family linear-rank

std::string functional_pretty(const Functional& f);

}  // namespace entrocone
