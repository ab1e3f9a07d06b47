#include "entrocone/typeclasses.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "entrocone/subsets.hpp"

namespace entrocone {

Partition::Partition(std::vector<long> p) : parts(std::move(p)) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

long Partition::size() const {
    long s = 0;
    for (long p : parts) s += p;
    return s;
}

Partition Partition::shape_of(std::vector<long> counts) {
    counts.erase(std::remove(counts.begin(), counts.end(), 0L), counts.end());
    std::sort(counts.begin(), counts.end(), std::greater<long>());
    return Partition(std::move(counts));
}

long FrequencyVector::total() const {
    long s = 0;
    for (long c : counts) {
        if (c < 0) throw std::invalid_argument("frequency counts must be nonnegative");
        s += c;
    }
    return s;
}

Int type_class_size(const FrequencyVector& f) {
    Int size = factorial(static_cast<unsigned long>(f.total()));
    for (long c : f.counts) size /= factorial(static_cast<unsigned long>(c));
    return size;
}

long ProductFrequency::total() const {
    long s = 0;
    for (long c : counts) s += c;
    return s;
}

FrequencyVector marginal_frequency(const ProductFrequency& f, Mask I) {
    const int n = static_cast<int>(f.alphabet_sizes.size());
    if (I & ~full_mask(n)) throw std::invalid_argument("marginal_frequency: subset out of range");
    std::vector<int> kept = parties_of(I);
    std::size_t osize = 1;
    for (int p : kept) osize *= static_cast<std::size_t>(f.alphabet_sizes[p - 1]);
    FrequencyVector out;
    out.counts.assign(std::max<std::size_t>(osize, 1), 0);
    for (std::size_t idx = 0; idx < f.counts.size(); ++idx) {
        std::size_t rest = idx, oidx = 0;
        std::vector<long> letters(static_cast<std::size_t>(n));
        for (int i = n - 1; i >= 0; --i) {
            letters[static_cast<std::size_t>(i)] = static_cast<long>(rest % static_cast<std::size_t>(f.alphabet_sizes[i]));
            rest /= static_cast<std::size_t>(f.alphabet_sizes[i]);
        }
        for (int p : kept)
            oidx = oidx * static_cast<std::size_t>(f.alphabet_sizes[p - 1]) +
                   static_cast<std::size_t>(letters[static_cast<std::size_t>(p - 1)]);
        out.counts[oidx] += f.counts[idx];
    }
    return out;
}

EntropyVector chan_yeung_vector(const JointDistribution& p, long k) {
    if (!p.rational) throw std::invalid_argument("chan_yeung_vector: distribution must be rational");
    if (k < 1) throw std::invalid_argument("chan_yeung_vector: k must be positive");
    p.validate();
    Int q = p.denominator();
    if (!q.fits_slong_p()) throw std::invalid_argument("chan_yeung_vector: denominator too large");
    const long kq = k * q.get_si();

    EntropyVector v(p.n_parties);
    for (Mask I = 1; I <= full_mask(p.n_parties); ++I) {
        JointDistribution m = marginalize(p, I);
        FrequencyVector f;
        f.counts.reserve(m.probs_q.size());
        for (const Rat& x : m.probs_q) {
            Rat scaled = x * Rat(kq);
            scaled.canonicalize();
            if (scaled.get_den() != 1) throw std::logic_error("chan_yeung_vector: non-integer scaled frequency");
            f.counts.push_back(scaled.get_num().get_si());
        }
        v[I] = log2_mpz(type_class_size(f));
    }
    return v;
}

double aep_mass(const std::vector<double>& p, long n, double eps) {
    if (n < 1) throw std::invalid_argument("aep_mass: n must be positive");
    const std::size_t m = p.size();
    if (m == 0) throw std::invalid_argument("aep_mass: empty distribution");
    if (binomial(static_cast<unsigned long>(n + m - 1), static_cast<unsigned long>(m - 1)) > 5000000)
        throw std::runtime_error("aep_mass: too many types to enumerate for this alphabet and length");
    double mass = 0.0;
    std::vector<long> f(m, 0);
    // enumerate compositions of n into m parts
    std::function<void(std::size_t, long)> rec = [&](std::size_t pos, long left) {
        if (pos + 1 == m) {
            f[pos] = left;
            double l1 = 0.0;
            for (std::size_t a = 0; a < m; ++a) l1 += std::fabs(static_cast<double>(f[a]) / n - p[a]);
            if (l1 <= eps) {
                FrequencyVector fv;
                fv.counts = f;
                double logprob = log2_mpz(type_class_size(fv));
                for (std::size_t a = 0; a < m; ++a) {
                    if (f[a] == 0) continue;
                    if (p[a] <= 0.0) return;  // type outside the support has zero mass
                    logprob += static_cast<double>(f[a]) * std::log2(p[a]);
                }
                mass += std::exp2(logprob);
            }
            return;
        }
        for (long c = 0; c <= left; ++c) {
            f[pos] = c;
            rec(pos + 1, left - c);
        }
    };
    rec(0, n);
    return mass;
}

Int kostka(const Partition& shape, const std::vector<long>& content) {
    long total = 0;
    for (long c : content) {
        if (c < 0) throw std::invalid_argument("kostka: negative content entry");
        total += c;
    }
    if (total != shape.size()) return 0;
    const int rows = shape.length();
    const int letters = static_cast<int>(content.size());

    // fill row by row, left to right; rows weakly increase, columns strictly
    std::vector<std::vector<int>> t(static_cast<std::size_t>(rows));
    for (int r = 0; r < rows; ++r) t[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(shape.parts[static_cast<std::size_t>(r)]), -1);
    std::vector<long> used(static_cast<std::size_t>(letters), 0);

    Int count = 0;
    std::function<void(int, int)> rec = [&](int r, int c) {
        if (r == rows) {
            ++count;
            return;
        }
        int nr = r, nc = c + 1;
        if (nc == static_cast<int>(t[static_cast<std::size_t>(r)].size())) {
            ++nr;
            nc = 0;
        }
        int lo = 0;
        if (c > 0) lo = t[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)];  // row weakly increasing
        if (r > 0) lo = std::max(lo, t[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1);  // column strict
        for (int x = lo; x < letters; ++x) {
            if (used[static_cast<std::size_t>(x)] == content[static_cast<std::size_t>(x)]) continue;
            t[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = x;
            ++used[static_cast<std::size_t>(x)];
            rec(nr, nc);
            --used[static_cast<std::size_t>(x)];
            t[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = -1;
        }
    };
    if (rows == 0) return (total == 0) ? 1 : 0;
    rec(0, 0);
    return count;
}

Int classical_kronecker(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (mu.size() != nu.size() || lambda.size() != mu.size()) return 0;
    const int R = mu.length(), C = nu.length();
    std::vector<long> colleft(nu.parts.begin(), nu.parts.end());
    std::vector<std::vector<long>> table(static_cast<std::size_t>(R), std::vector<long>(static_cast<std::size_t>(C), 0));
    Int count = 0;

    std::vector<long> target = lambda.parts;  // sorted descending already

    std::function<void(int)> recrow = [&](int r) {
        if (r == R) {
            std::vector<long> entries;
            for (const auto& row : table)
                for (long x : row)
                    if (x > 0) entries.push_back(x);
            std::sort(entries.begin(), entries.end(), std::greater<long>());
            if (entries == target) ++count;
            return;
        }
        // fill row r with a composition of mu[r] bounded by the column budgets
        std::function<void(int, long)> reccell = [&](int c, long left) {
            if (c + 1 == C) {
                if (left > colleft[static_cast<std::size_t>(c)]) return;
                table[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = left;
                colleft[static_cast<std::size_t>(c)] -= left;
                recrow(r + 1);
                colleft[static_cast<std::size_t>(c)] += left;
                table[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = 0;
                return;
            }
            long hi = std::min(left, colleft[static_cast<std::size_t>(c)]);
            for (long x = 0; x <= hi; ++x) {
                table[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = x;
                colleft[static_cast<std::size_t>(c)] -= x;
                reccell(c + 1, left - x);
                colleft[static_cast<std::size_t>(c)] += x;
                table[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = 0;
            }
        };
        reccell(0, mu.parts[static_cast<std::size_t>(r)]);
    };
    recrow(0);
    return count;
}

bool marginal_compatible(const Partition& lambda, const Partition& mu, const Partition& nu) {
    return classical_kronecker(lambda, mu, nu) != 0;
}

bool dominates(const Partition& coarser, const Partition& finer) {
    if (coarser.size() != finer.size()) return false;
    long ca = 0, fa = 0;
    const int len = std::max(coarser.length(), finer.length());
    for (int i = 0; i < len; ++i) {
        ca += (i < coarser.length()) ? coarser.parts[static_cast<std::size_t>(i)] : 0;
        fa += (i < finer.length()) ? finer.parts[static_cast<std::size_t>(i)] : 0;
        if (ca < fa) return false;
    }
    return true;
}

Partition multiplicity_shape(const Partition& lambda, int d) {
    if (lambda.length() > d) throw std::invalid_argument("multiplicity_shape: partition has more than d parts");
    std::vector<long> padded(lambda.parts.begin(), lambda.parts.end());
    padded.resize(static_cast<std::size_t>(d), 0);
    std::map<long, long> mult;
    for (long v : padded) ++mult[v];
    std::vector<long> shape;
    for (const auto& [value, count] : mult) shape.push_back(count);
    return Partition::shape_of(std::move(shape));
}

Int dim_permutation_module(const Partition& lambda) {
    FrequencyVector f;
    f.counts = lambda.parts;
    return type_class_size(f);
}

Int dim_specht(const Partition& lambda) {
    const long n = lambda.size();
    Int numer = factorial(static_cast<unsigned long>(n));
    Int hooks = 1;
    for (int r = 0; r < lambda.length(); ++r)
        for (long c = 0; c < lambda.parts[static_cast<std::size_t>(r)]; ++c) {
            long arm = lambda.parts[static_cast<std::size_t>(r)] - c - 1;
            long leg = 0;
            for (int rr = r + 1; rr < lambda.length(); ++rr)
                if (lambda.parts[static_cast<std::size_t>(rr)] > c) ++leg;
            hooks *= (arm + leg + 1);
        }
    return numer / hooks;
}

Int dim_weyl(const Partition& mu, int d) {
    if (mu.length() > d) return 0;
    // SSYT of shape mu with entries in 1..d, no content constraint
    const int rows = mu.length();
    std::vector<std::vector<int>> t(static_cast<std::size_t>(rows));
    for (int r = 0; r < rows; ++r) t[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(mu.parts[static_cast<std::size_t>(r)]), -1);
    Int count = 0;
    std::function<void(int, int)> rec = [&](int r, int c) {
        if (r == rows) {
            ++count;
            return;
        }
        int nr = r, nc = c + 1;
        if (nc == static_cast<int>(t[static_cast<std::size_t>(r)].size())) {
            ++nr;
            nc = 0;
        }
        int lo = 0;
        if (c > 0) lo = t[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)];
        if (r > 0) lo = std::max(lo, t[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1);
        for (int x = lo; x < d; ++x) {
            t[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = x;
            rec(nr, nc);
            t[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = -1;
        }
    };
    if (rows == 0) return 1;
    rec(0, 0);
    return count;
}

std::vector<Partition> partitions_of(long n, int max_parts) {
    std::vector<Partition> out;
    std::vector<long> cur;
    std::function<void(long, long)> rec = [&](long left, long maxpart) {
        if (left == 0) {
            out.emplace_back(cur);
            return;
        }
        if (max_parts >= 0 && static_cast<int>(cur.size()) == max_parts) return;
        for (long p = std::min(left, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    if (n == 0) {
        out.emplace_back(std::vector<long>{});
        return out;
    }
    rec(n, n);
    return out;
}

std::map<Partition, Int> restriction_multiplicities(const Partition& mu, int d) {
    if (mu.length() > d) throw std::invalid_argument("restriction_multiplicities: mu has more than d rows");
    std::map<Partition, Int> eta;
    for (const Partition& nu : partitions_of(d)) eta[nu] = 0;
    for (const Partition& lambda : partitions_of(mu.size(), d)) {
        Int k1 = kostka(mu, lambda.parts);
        if (k1 == 0) continue;
        Partition lplus = multiplicity_shape(lambda, d);
        for (auto& [nu, total] : eta) {
            Int k2 = kostka(nu, lplus.parts);
            if (k2 != 0) total += k1 * k2;
        }
    }
    return eta;
}

bool schur_weyl_dimension_check(int d, long n) {
    Int lhs = 0;
    for (const Partition& lambda : partitions_of(n, d)) {
        Partition lplus = multiplicity_shape(lambda, d);
        lhs += dim_permutation_module(lambda) * dim_permutation_module(lplus);
    }
    Int rhs;
    mpz_ui_pow_ui(rhs.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(n));
    return lhs == rhs;
}

}  // namespace entrocone
