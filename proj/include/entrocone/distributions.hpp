#pragma once

// Classical side of the entropy map: joint distributions over product
// alphabets, marginalization, Shannon entropy vectors.

#include <vector>

#include "entrocone/entropy_vector.hpp"
#include "entrocone/rational.hpp"
#include "entrocone/subsets.hpp"

namespace entrocone {

// Dense table over the product alphabet, row-major with the LAST party
// fastest. Entries are exact rationals or floats; `rational` records which.
// In rational mode the float view mirrors the exact one.
struct JointDistribution {
    int n_parties = 0;
    std::vector<int> alphabet_sizes;
    bool rational = false;
    std::vector<Rat> probs_q;     // empty unless rational
    std::vector<double> probs_f;  // always populated

    std::size_t table_size() const;
    std::size_t index_of(const std::vector<int>& letters) const;
    std::vector<int> letters_of(std::size_t index) const;

    void validate() const;  // throws on bad normalization / negative entries

    static JointDistribution from_floats(std::vector<int> dims, std::vector<double> p);
    static JointDistribution from_rationals(std::vector<int> dims, std::vector<Rat> p);

    // Common denominator of all entries (rational mode only).
    Int denominator() const;
};

double shannon_entropy(const std::vector<double>& p);

JointDistribution marginalize(const JointDistribution& joint, Mask I);

EntropyVector entropy_vector_classical(const JointDistribution& joint);

// Correlated-bit family: parties in I share one fair coin, the rest are
// deterministic. Entropy vector is v^(I) with v^(I)_J = min(1, |I & J|).
JointDistribution correlated_bits(int n, Mask I);

// Uniform distribution on an explicit support (indices into the table).
JointDistribution uniform_on_support(std::vector<int> dims, const std::vector<std::size_t>& support);

}  // namespace entrocone
