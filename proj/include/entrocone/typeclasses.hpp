#pragma once

// Type classes, the group-less entropy construction, Kostka numbers,
// contingency-table Kronecker coefficients, multiplicity shapes and the
// restriction of unitary-group irreducibles to the symmetric group. Exact
// big-integer inside, logs only at the API boundary.

#include <map>
#include <vector>

#include "entrocone/distributions.hpp"
#include "entrocone/entropy_vector.hpp"
#include "entrocone/rational.hpp"

namespace entrocone {

struct Partition {
    std::vector<long> parts;  // weakly decreasing, positive

    Partition() = default;
    explicit Partition(std::vector<long> p);

    long size() const;  // sum of parts
    int length() const { return static_cast<int>(parts.size()); }
    bool operator==(const Partition& o) const { return parts == o.parts; }
    bool operator<(const Partition& o) const { return parts < o.parts; }

    static Partition shape_of(std::vector<long> counts);  // sort desc, drop zeros
};

struct FrequencyVector {
    std::vector<long> counts;  // nonnegative, over an ordered alphabet

    long total() const;
    Partition shape() const { return Partition::shape_of(counts); }
};

// n! / prod f_a!
Int type_class_size(const FrequencyVector& f);

// Frequency vector over a product alphabet (same layout as
// JointDistribution tables); marginal sums over discarded coordinates.
struct ProductFrequency {
    std::vector<int> alphabet_sizes;
    std::vector<long> counts;  // row-major, last coordinate fastest

    long total() const;
};
FrequencyVector marginal_frequency(const ProductFrequency& f, Mask I);

// h_I = log2 |T_{kq p_I}| for a rational p with denominator q.
EntropyVector chan_yeung_vector(const JointDistribution& p, long k);

// total mass of types within L1 distance eps of p
double aep_mass(const std::vector<double>& p, long n, double eps);

// number of semistandard tableaux of shape `shape` and content `content`
Int kostka(const Partition& shape, const std::vector<long>& content);

// multiplicity of M^lambda in M^mu (x) M^nu: contingency tables with row
// sums mu, column sums nu and nonzero-entry multiset lambda
Int classical_kronecker(const Partition& lambda, const Partition& mu, const Partition& nu);

bool marginal_compatible(const Partition& lambda, const Partition& mu, const Partition& nu);

// a partition always dominates its refinements; used as a tested pruning claim
bool dominates(const Partition& coarser, const Partition& finer);

// multiplicities of the part values of lambda padded with zeros to length d
Partition multiplicity_shape(const Partition& lambda, int d);

Int dim_permutation_module(const Partition& lambda);  // n!/prod parts!
Int dim_specht(const Partition& lambda);              // hook length formula
Int dim_weyl(const Partition& mu, int d);             // SSYT with entries <= d

std::vector<Partition> partitions_of(long n, int max_parts = -1);

// eta_{nu mu} = sum over lambda |- (|mu|, d) of K_{mu lambda} K_{nu lambda+}
std::map<Partition, Int> restriction_multiplicities(const Partition& mu, int d);

// sum_lambda dim M^lambda * dim M^{lambda+}_{S_d} == d^n, checked exactly
bool schur_weyl_dimension_check(int d, long n);

}  // namespace entrocone
