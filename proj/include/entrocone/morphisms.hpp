#pragma once

// Linear structure of entropy space: exact-rational functionals (information
// inequality candidates), the sur/inj/pur/blocking morphisms, the extended
// S_{n+1} symmetry and its adjoint, residual weights, Chan's balancing
// projection and the Matus linear map.

#include <string>
#include <vector>

#include "entrocone/entropy_vector.hpp"
#include "entrocone/rational.hpp"
#include "entrocone/subsets.hpp"

namespace entrocone {

struct Functional {
    int n = 0;
    RatVec coeffs;  // size 2^n, coeffs[0] fixed to 0

    Functional() = default;
    explicit Functional(int n_) : n(n_), coeffs(std::size_t(1) << n_, Rat(0)) {}

    Rat& operator[](Mask I) { return coeffs[I]; }
    const Rat& operator[](Mask I) const { return coeffs[I]; }

    Functional& operator+=(const Functional& o);
    Functional& operator-=(const Functional& o);
    Functional& operator*=(const Rat& s);
    friend Functional operator+(Functional a, const Functional& b) { return a += b; }
    friend Functional operator-(Functional a, const Functional& b) { return a -= b; }
    friend Functional operator*(const Rat& s, Functional f) { return f *= s; }

    bool is_zero() const { return is_zero_vec(coeffs); }
    void drop_empty_coeff() { coeffs[0] = 0; }
};

double evaluate(const Functional& f, const EntropyVector& v);
Rat evaluate(const Functional& f, const RatVec& v);
LogValue evaluate(const Functional& f, const ExactEntropyVector& v);

// --- morphisms between entropy spaces ---

EntropyVector surject(const EntropyVector& v, int n);           // keep subsets of [n]
EntropyVector inject(const EntropyVector& v, int m);            // w_J = v_{J & [n]}
EntropyVector purify_map(const EntropyVector& v);               // n -> n+1 via purification
EntropyVector block(const EntropyVector& v, const std::vector<int>& parts);

// S_{n+1} acting on V_n (perm is a permutation of [n+1], 1-based images).
// Left action: composing actions matches composing permutations.
EntropyVector symmetry_action(const std::vector<int>& perm, const EntropyVector& v);
RatVec symmetry_action(const std::vector<int>& perm, const RatVec& v, int n);

// Adjoint action on functionals: evaluate(adjoint(pi,f), v) == evaluate(f, action(pi^-1, v)).
Functional adjoint_action(const std::vector<int>& perm, const Functional& f);

RatVec residual_weights(const Functional& f);  // r_i = sum_{I ni i} f_I

// Chan's balancing projection Pi_b: idempotent, image the balanced
// functionals, kernel containing every m(i, i^c).
Functional balance(const Functional& f);

Functional monotonicity_functional(int i, int n);  // m(i, i^c)

// w_I = sum_{K subset I} (-1)^{|I\K|} (v_[n] - v_{[n]\K}); maps the
// correlated-bit vector v^(I) to the basis vector e^(I).
RatVec matus_transform(const RatVec& v, int n);
EntropyVector matus_transform(const EntropyVector& v);

// exact rational basis of the balanced subspace {f : residuals vanish, f_empty = 0}
RatMat balanced_subspace_basis(int n);

RatVec to_rational_vector(const EntropyVector& v, long denom_limit = 1 << 20);

}  // namespace entrocone
