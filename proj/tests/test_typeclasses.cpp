#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "entrocone/inequalities.hpp"
#include "entrocone/typeclasses.hpp"

using namespace entrocone;

TEST_CASE("type class sizes") {
    CHECK(type_class_size({{2, 1}}) == 3);
    CHECK(type_class_size({{1, 1, 1}}) == 6);
    CHECK(type_class_size({{32, 32}}) == Int("1832624140942590534"));
}

TEST_CASE("marginal frequencies") {
    ProductFrequency f;
    f.alphabet_sizes = {2, 2};
    f.counts = {3, 0, 0, 3};  // diag(3,3) on the 2x2 alphabet
    FrequencyVector m1 = marginal_frequency(f, mask_of({1}));
    CHECK(m1.counts == std::vector<long>({3, 3}));
    FrequencyVector all = marginal_frequency(f, mask_of({1, 2}));
    CHECK(all.counts == f.counts);
    FrequencyVector none = marginal_frequency(f, 0);
    CHECK(none.counts == std::vector<long>({6}));
}

TEST_CASE("marginal type identity against string enumeration") {
    // |T_{f_I}| computed by the multinomial equals the brute-force count of
    // strings over the marginal alphabet with that frequency
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2;
        ProductFrequency f;
        f.alphabet_sizes = {2, 2};
        f.counts.assign(4, 0);
        int len = 4 + static_cast<int>(rng() % 4);  // strings of length 4..7
        for (int i = 0; i < len; ++i) ++f.counts[rng() % 4];
        for (Mask I = 1; I <= full_mask(n); ++I) {
            FrequencyVector mf = marginal_frequency(f, I);
            // brute force: enumerate all strings over the marginal alphabet
            std::size_t alpha = mf.counts.size();
            std::size_t total = 1;
            for (int i = 0; i < len; ++i) total *= alpha;
            Int count = 0;
            for (std::size_t code = 0; code < total; ++code) {
                std::vector<long> freq(alpha, 0);
                std::size_t rest = code;
                for (int i = 0; i < len; ++i) {
                    ++freq[rest % alpha];
                    rest /= alpha;
                }
                if (freq == mf.counts) ++count;
            }
            CHECK(type_class_size(mf) == count);
        }
    }
}

TEST_CASE("chan yeung vectors") {
    // correlated fair bits, q = 2: h = log2 C(2k, k) * (1,1,1)
    JointDistribution corr = correlated_bits(2, mask_of({1, 2}));
    for (long k : {1L, 2L, 4L}) {
        EntropyVector h = chan_yeung_vector(corr, k);
        double expect = log2_mpz(binomial(2 * static_cast<unsigned long>(k), static_cast<unsigned long>(k)));
        for (Mask I = 1; I <= 3; ++I) CHECK(h[I] == doctest::Approx(expect).epsilon(1e-12));
    }
    // k = 1 gives exactly 1 bit everywhere
    EntropyVector h1 = chan_yeung_vector(corr, 1);
    for (Mask I = 1; I <= 3; ++I) CHECK(h1[I] == doctest::Approx(1.0).epsilon(1e-12));

    // deterministic distribution: zero vector
    JointDistribution det = JointDistribution::from_rationals({2, 2}, {Rat(1), Rat(0), Rat(0), Rat(0)});
    EntropyVector hd = chan_yeung_vector(det, 3);
    for (Mask I = 1; I <= 3; ++I) CHECK(hd[I] == doctest::Approx(0.0));

    // uniform on the 2x2 alphabet, q = 4, k = 1
    JointDistribution uni =
        JointDistribution::from_rationals({2, 2}, {Rat(1, 4), Rat(1, 4), Rat(1, 4), Rat(1, 4)});
    EntropyVector hu = chan_yeung_vector(uni, 1);
    CHECK(hu[mask_of({1, 2})] == doctest::Approx(std::log2(24.0)).epsilon(1e-12));
    CHECK(hu[mask_of({1})] == doctest::Approx(std::log2(6.0)).epsilon(1e-12));

    CHECK_THROWS_AS(chan_yeung_vector(JointDistribution::from_floats({2}, {0.5, 0.5}), 1),
                    std::invalid_argument);

    // rate convergence to the Shannon vector
    EntropyVector target = entropy_vector_classical(corr);
    for (long k : {1L, 2L, 4L, 8L, 16L}) {
        EntropyVector h = chan_yeung_vector(corr, k);
        double q = 2.0;
        double bound = 2.0 * std::log2(q * k + 1.0) / (q * k);
        for (Mask I = 1; I <= 3; ++I) CHECK(std::fabs(h[I] / (q * k) - target[I]) <= bound);
    }
}

TEST_CASE("shannon inequalities hold exactly in the factorial domain") {
    // (k lambda)! (k beta)! / ((k mu)! (k nu)!) >= 1 for refinement triples
    // drawn from random 3-variable tables
    std::mt19937_64 rng(67);
    auto fact_of = [](const std::vector<long>& parts, long k) {
        Int f = 1;
        for (long p : parts) f *= factorial(static_cast<unsigned long>(k * p));
        return f;
    };
    for (int trial = 0; trial < 30; ++trial) {
        // random 2x2x2 integer table = joint type of (X, Y, Z)
        std::vector<long> t(8);
        for (auto& x : t) x = static_cast<long>(rng() % 4);
        ProductFrequency f;
        f.alphabet_sizes = {2, 2, 2};
        f.counts = t;
        if (f.total() == 0) continue;
        std::vector<long> lambda = f.counts;                                  // type of XYZ
        std::vector<long> mu = marginal_frequency(f, mask_of({1, 2})).counts;  // XY
        std::vector<long> nu = marginal_frequency(f, mask_of({2, 3})).counts;  // YZ
        std::vector<long> beta = marginal_frequency(f, mask_of({2})).counts;   // Y
        for (long k = 1; k <= 4; ++k) {
            Int numer = fact_of(lambda, k) * fact_of(beta, k);
            Int denom = fact_of(mu, k) * fact_of(nu, k);
            CHECK(numer >= denom);
        }
    }
}

TEST_CASE("aep mass") {
    CHECK(aep_mass({0.5, 0.5}, 10, 2.0) == doctest::Approx(1.0).epsilon(1e-12));
    // irrational p and eps = 0: no type matches exactly
    CHECK(aep_mass({1.0 / std::sqrt(2.0), 1.0 - 1.0 / std::sqrt(2.0)}, 16, 0.0) == doctest::Approx(0.0));
    CHECK(aep_mass({0.5, 0.5}, 64, 0.25) >= 0.95);

    // independent oracle for the fair coin: exact binomial tail summation,
    // L1 distance of the type (k, n-k) from (1/2, 1/2) is 2|k/n - 1/2|
    {
        const long n = 64;
        const double eps = 0.25;
        Rat mass(0);
        Int pow2;
        mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(n));
        for (long k = 0; k <= n; ++k) {
            if (2.0 * std::fabs(static_cast<double>(k) / n - 0.5) <= eps) {
                Rat term(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k)), pow2);
                term.canonicalize();
                mass += term;
            }
        }
        CHECK(aep_mass({0.5, 0.5}, n, eps) == doctest::Approx(mass.get_d()).epsilon(1e-12));
    }
    // monotone toward 1 for fixed eps
    double m16 = aep_mass({0.7, 0.3}, 16, 0.2);
    double m64 = aep_mass({0.7, 0.3}, 64, 0.2);
    double m256 = aep_mass({0.7, 0.3}, 256, 0.2);
    CHECK(m16 < m64);
    CHECK(m64 < m256);
    CHECK(m256 > 0.99);
}

TEST_CASE("kostka numbers") {
    CHECK(kostka(Partition({2, 1}), {1, 1, 1}) == 2);
    CHECK(kostka(Partition({3}), {2, 1}) == 1);
    CHECK(kostka(Partition({2, 2}), {2, 2}) == 1);
    CHECK(kostka(Partition({1, 1, 1}), {2, 1}) == 0);
    // K_{lambda lambda} = 1
    for (const Partition& lam : partitions_of(6)) CHECK(kostka(lam, lam.parts) == 1);

    // Young's rule dimension check: sum_mu K_{mu lambda} dim[mu] = dim M^lambda
    for (long n = 1; n <= 8; ++n) {
        for (const Partition& lam : partitions_of(n)) {
            Int lhs = 0;
            for (const Partition& mu : partitions_of(n)) lhs += kostka(mu, lam.parts) * dim_specht(mu);
            CHECK(lhs == dim_permutation_module(lam));
        }
    }
}

TEST_CASE("specht and weyl dimensions") {
    CHECK(dim_specht(Partition({3})) == 1);
    CHECK(dim_specht(Partition({2, 1})) == 2);
    CHECK(dim_specht(Partition({2, 2})) == 2);
    CHECK(dim_specht(Partition({1, 1, 1})) == 1);

    CHECK(dim_permutation_module(Partition({4})) == 1);
    CHECK(dim_permutation_module(Partition({1, 1, 1, 1})) == 24);
    CHECK(dim_permutation_module(Partition({2, 1})) == 3);

    CHECK(dim_weyl(Partition({1}), 5) == 5);
    CHECK(dim_weyl(Partition({2}), 2) == 3);
    CHECK(dim_weyl(Partition({1, 1}), 2) == 1);
    CHECK(dim_weyl(Partition({2, 1}), 2) == 2);
    CHECK(dim_weyl(Partition({1, 1, 1}), 2) == 0);
}

TEST_CASE("classical kronecker coefficients") {
    CHECK(classical_kronecker(Partition({1, 1, 1, 1}), Partition({2, 2}), Partition({2, 2})) == 1);
    CHECK(classical_kronecker(Partition({2, 2}), Partition({2, 2}), Partition({2, 2})) == 2);
    CHECK(classical_kronecker(Partition({4}), Partition({4}), Partition({4})) == 1);
    CHECK(classical_kronecker(Partition({4}), Partition({2, 2}), Partition({2, 2})) == 0);

    // symmetry under transposing the table
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 40; ++trial) {
        long n = 4 + static_cast<long>(rng() % 5);
        std::vector<Partition> ps = partitions_of(n, 3);
        const Partition& mu = ps[rng() % ps.size()];
        const Partition& nu = ps[rng() % ps.size()];
        const Partition& lam = ps[rng() % ps.size()];
        CHECK(classical_kronecker(lam, mu, nu) == classical_kronecker(lam, nu, mu));
    }

    // vanishing unless the joint type is dominated by both marginal types
    for (long n = 3; n <= 6; ++n)
        for (const Partition& lam : partitions_of(n, 3))
            for (const Partition& mu : partitions_of(n, 3))
                for (const Partition& nu : partitions_of(n, 3))
                    if (classical_kronecker(lam, mu, nu) != 0) {
                        CHECK(dominates(mu, lam));
                        CHECK(dominates(nu, lam));
                    }
}

TEST_CASE("marginal compatibility matches brute force") {
    CHECK(marginal_compatible(Partition({1, 1, 1, 1}), Partition({2, 2}), Partition({2, 2})));
    CHECK_FALSE(marginal_compatible(Partition({4}), Partition({2, 2}), Partition({4})));
    for (const Partition& lam : partitions_of(5, 3))
        CHECK(marginal_compatible(lam, lam, Partition({5})));

    // independent oracle: enumerate all row-composition tables, collect the
    // achievable joint types
    for (long n = 2; n <= 7; ++n) {
        std::vector<Partition> ps = partitions_of(n, 3);
        for (const Partition& mu : ps)
            for (const Partition& nu : ps) {
                std::set<std::vector<long>> achievable;
                const int R = mu.length(), C = nu.length();
                std::vector<std::vector<long>> table(R, std::vector<long>(C, 0));
                std::function<void(int)> rec = [&](int r) {
                    if (r == R) {
                        std::vector<long> colsum(C, 0), entries;
                        for (const auto& row : table)
                            for (int c = 0; c < C; ++c) colsum[c] += row[c];
                        bool ok = true;
                        for (int c = 0; c < C; ++c) ok &= (colsum[c] == nu.parts[c]);
                        if (!ok) return;
                        for (const auto& row : table)
                            for (long x : row)
                                if (x > 0) entries.push_back(x);
                        std::sort(entries.begin(), entries.end(), std::greater<long>());
                        achievable.insert(entries);
                        return;
                    }
                    std::function<void(int, long)> cell = [&](int c, long left) {
                        if (c + 1 == C) {
                            table[r][c] = left;
                            rec(r + 1);
                            table[r][c] = 0;
                            return;
                        }
                        for (long x = 0; x <= left; ++x) {
                            table[r][c] = x;
                            cell(c + 1, left - x);
                            table[r][c] = 0;
                        }
                    };
                    cell(0, mu.parts[r]);
                };
                rec(0);
                for (const Partition& lam : ps)
                    CHECK(marginal_compatible(lam, mu, nu) == (achievable.count(lam.parts) > 0));
            }
    }
}

TEST_CASE("multiplicity shapes") {
    CHECK(multiplicity_shape(Partition({5, 3, 2, 2, 1, 1, 1}), 7) == Partition({3, 2, 1, 1}));
    CHECK(multiplicity_shape(Partition({3}), 2) == Partition({1, 1}));
    CHECK(multiplicity_shape(Partition({4, 4, 4}), 3) == Partition({3}));
    CHECK_THROWS_AS(multiplicity_shape(Partition({1, 1, 1}), 2), std::invalid_argument);
}

TEST_CASE("restriction multiplicities") {
    // defining representation of U(2) restricts to trivial + sign of S_2
    std::map<Partition, Int> eta = restriction_multiplicities(Partition({1}), 2);
    CHECK(eta[Partition({2})] == 1);
    CHECK(eta[Partition({1, 1})] == 1);

    // single row, d = 1
    std::map<Partition, Int> triv = restriction_multiplicities(Partition({5}), 1);
    CHECK(triv[Partition({1})] == 1);

    CHECK_THROWS_AS(restriction_multiplicities(Partition({1, 1, 1}), 2), std::invalid_argument);

    // dimension identity: sum_nu eta dim[nu] == dim_weyl(mu, d)
    for (int d = 1; d <= 4; ++d)
        for (long n = 1; n <= 6; ++n)
            for (const Partition& mu : partitions_of(n, d)) {
                std::map<Partition, Int> e = restriction_multiplicities(mu, d);
                Int lhs = 0;
                for (const auto& [nu, mult] : e) lhs += mult * dim_specht(nu);
                CHECK(lhs == dim_weyl(mu, d));
            }
}

TEST_CASE("classical schur-weyl dimension identity") {
    CHECK(schur_weyl_dimension_check(2, 3));
    CHECK(schur_weyl_dimension_check(1, 5));
    CHECK(schur_weyl_dimension_check(3, 4));
    for (int d = 1; d <= 3; ++d)
        for (long n = 1; n <= 6; ++n) CHECK(schur_weyl_dimension_check(d, n));
}
