#pragma once

// The point of entropy space V_n: 2^n reals in bits indexed by subset mask.

#include <cmath>
#include <stdexcept>
#include <vector>

#include "entrocone/logvalue.hpp"
#include "entrocone/subsets.hpp"

namespace entrocone {

struct EntropyVector {
    int n = 0;
    std::vector<double> entries;  // size 2^n, entries[0] == 0

    EntropyVector() = default;
    explicit EntropyVector(int n_) : n(n_), entries(std::size_t(1) << n_, 0.0) {
        if (n_ < 0 || n_ > 20) throw std::invalid_argument("EntropyVector: bad party count");
    }

    double& operator[](Mask I) { return entries[I]; }
    double operator[](Mask I) const { return entries[I]; }
    std::size_t size() const { return entries.size(); }

    EntropyVector& operator+=(const EntropyVector& o) {
        if (o.n != n) throw std::invalid_argument("entropy vector size mismatch");
        for (std::size_t i = 0; i < entries.size(); ++i) entries[i] += o.entries[i];
        return *this;
    }
    friend EntropyVector operator+(EntropyVector a, const EntropyVector& b) { return a += b; }
};

// Exact variant for stabilizer / type-class vectors whose entries are
// integer combinations of logs of small primes.
struct ExactEntropyVector {
    int n = 0;
    std::vector<LogValue> entries;

    ExactEntropyVector() = default;
    explicit ExactEntropyVector(int n_) : n(n_), entries(std::size_t(1) << n_) {}

    LogValue& operator[](Mask I) { return entries[I]; }
    const LogValue& operator[](Mask I) const { return entries[I]; }

    EntropyVector to_double() const {
        EntropyVector v(n);
        for (std::size_t i = 0; i < entries.size(); ++i) v.entries[i] = entries[i].to_double();
        return v;
    }
};

inline double max_abs_diff(const EntropyVector& a, const EntropyVector& b) {
    if (a.n != b.n) throw std::invalid_argument("entropy vector size mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a.entries.size(); ++i) m = std::max(m, std::fabs(a.entries[i] - b.entries[i]));
    return m;
}

}  // namespace entrocone
