#pragma once

// Exact arithmetic used throughout the cone and combinatorics code.
// GMP-backed: Int is an arbitrary-precision integer, Rat an exact rational.
// Floats never enter the double-description engine.

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace entrocone {

using Int = mpz_class;
using Rat = mpq_class;

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

inline Rat rat_from_string(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) {
        throw std::invalid_argument("not a rational: '" + s + "'");
    }
    q.canonicalize();
    return q;
}

inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

// Scale a nonzero vector by the positive rational that makes it an integer
// vector with content gcd 1. The sign pattern is preserved: scaling a ray by
// a negative factor would change the cone it generates.
inline RatVec primitive_scaled(const RatVec& v) {
    Int lcm_den = 1;
    for (const Rat& x : v) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den_mpz_t());
    Int g = 0;
    RatVec w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        w[i] = v[i] * Rat(lcm_den);
        w[i].canonicalize();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), w[i].get_num_mpz_t());
    }
    if (g == 0) return w;  // zero vector stays zero
    for (Rat& x : w) {
        x /= Rat(g);
        x.canonicalize();
    }
    return w;
}

inline bool is_zero_vec(const RatVec& v) {
    for (const Rat& x : v) {
        if (x != 0) return false;
    }
    return true;
}

inline Rat dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// In-place Gaussian elimination; returns the rank. The input rows are
// destroyed. Exact, so rank decisions are never tolerance-dependent.
inline int rank_destructive(RatMat& rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows[0].size();
    int rank = 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            Rat f = rows[i][c] / rows[r][c];
            for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
        }
        ++r;
        ++rank;
    }
    return rank;
}

inline int rank_of(RatMat rows) { return rank_destructive(rows); }

// Reduced row echelon form, canonical for the row span.
inline RatMat rref(RatMat rows) {
    if (rows.empty()) return rows;
    const std::size_t cols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        Rat lead = rows[r][c];
        for (std::size_t j = c; j < cols; ++j) rows[r][j] /= lead;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            Rat f = rows[i][c];
            for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
        }
        ++r;
    }
    while (!rows.empty() && is_zero_vec(rows.back())) rows.pop_back();
    return rows;
}

// Is v in the row span of basis? (basis need not be reduced)
inline bool in_span(const RatVec& v, const RatMat& basis) {
    RatMat m = basis;
    int r0 = rank_destructive(m);
    m = basis;
    m.push_back(v);
    return rank_destructive(m) == r0;
}

inline bool is_prime_u64(unsigned long p) {
    mpz_class z(static_cast<unsigned long>(p));
    return mpz_probab_prime_p(z.get_mpz_t(), 32) != 0;
}

// log2 of a positive big integer, accurate to ~1e-15 relative.
inline double log2_mpz(const Int& z) {
    if (z <= 0) throw std::domain_error("log2 of non-positive integer");
    long exp2 = 0;
    double mant = mpz_get_d_2exp(&exp2, z.get_mpz_t());
    return std::log2(mant) + static_cast<double>(exp2);
}

inline Int factorial(unsigned long n) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

}  // namespace entrocone
