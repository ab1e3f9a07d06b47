#pragma once

// Exact representation of entropies of the form sum_p c_p * log2(p) with p
// running over a few primes and c_p rational. Stabilizer and type-class
// entropies are of this shape, so identities like "classical model minus
// stabilizer equals |I| log2 d" can be checked exactly instead of within a
// float tolerance.

#include <cmath>
#include <map>

#include "entrocone/rational.hpp"

namespace entrocone {

class LogValue {
  public:
    LogValue() = default;

    static LogValue log2_of_int(const Int& m) {
        if (m <= 0) throw std::domain_error("log2 of non-positive integer");
        LogValue v;
        Int rest = m;
        for (Int p = 2; p * p <= rest; ++p) {
            unsigned long e = 0;
            while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
                rest /= p;
                ++e;
            }
            if (e > 0) v.coeff_[p.get_ui()] += Rat(static_cast<unsigned long>(e));
        }
        if (rest > 1) {
            if (!rest.fits_ulong_p()) throw std::domain_error("prime factor too large for LogValue");
            v.coeff_[rest.get_ui()] += 1;
        }
        v.prune();
        return v;
    }

    static LogValue rational(const Rat& r) {
        // r in bits, i.e. r * log2(2)
        LogValue v;
        v.coeff_[2] = r;
        v.prune();
        return v;
    }

    LogValue& operator+=(const LogValue& o) {
        for (const auto& [p, c] : o.coeff_) coeff_[p] += c;
        prune();
        return *this;
    }
    LogValue& operator-=(const LogValue& o) {
        for (const auto& [p, c] : o.coeff_) coeff_[p] -= c;
        prune();
        return *this;
    }
    LogValue& operator*=(const Rat& s) {
        for (auto& [p, c] : coeff_) c *= s;
        prune();
        return *this;
    }

    friend LogValue operator+(LogValue a, const LogValue& b) { return a += b; }
    friend LogValue operator-(LogValue a, const LogValue& b) { return a -= b; }
    friend LogValue operator*(const Rat& s, LogValue a) { return a *= s; }

    // log2 2, log2 3, ... are linearly independent over Q, so exact zero
    // means every coefficient vanishes.
    bool is_zero() const { return coeff_.empty(); }
    friend bool operator==(const LogValue& a, const LogValue& b) { return (a - b).is_zero(); }

    double to_double() const {
        double s = 0.0;
        for (const auto& [p, c] : coeff_) s += c.get_d() * std::log2(static_cast<double>(p));
        return s;
    }

    const std::map<unsigned long, Rat>& coefficients() const { return coeff_; }

  private:
    void prune() {
        for (auto it = coeff_.begin(); it != coeff_.end();) {
            if (it->second == 0)
                it = coeff_.erase(it);
            else
                ++it;
        }
    }

    std::map<unsigned long, Rat> coeff_;
};

}  // namespace entrocone
