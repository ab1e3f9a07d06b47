#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "entrocone/cone.hpp"
#include "entrocone/distributions.hpp"
#include "entrocone/inequalities.hpp"
#include "entrocone/rank_vectors.hpp"

using namespace entrocone;

TEST_CASE("ssa builder") {
    Functional d = ssa(mask_of({1, 2}), mask_of({2, 3}), 3);
    CHECK(d[mask_of({1, 2})] == 1);
    CHECK(d[mask_of({2, 3})] == 1);
    CHECK(d[mask_of({1, 2, 3})] == -1);
    CHECK(d[mask_of({2})] == -1);

    CHECK(ssa(mask_of({1}), mask_of({1}), 2).is_zero());

    // disjoint arguments give subadditivity (the empty coefficient drops)
    Functional sub = ssa(mask_of({1}), mask_of({2}), 2);
    CHECK(sub[mask_of({1})] == 1);
    CHECK(sub[mask_of({2})] == 1);
    CHECK(sub[mask_of({1, 2})] == -1);
    CHECK(sub.coeffs[0] == 0);
}

TEST_CASE("weak monotonicity builder") {
    Functional e = weak_monotonicity(mask_of({1, 2}), mask_of({2, 3}), 3);
    CHECK(e[mask_of({1, 2})] == 1);
    CHECK(e[mask_of({2, 3})] == 1);
    CHECK(e[mask_of({1})] == -1);
    CHECK(e[mask_of({3})] == -1);

    Functional same = weak_monotonicity(mask_of({1, 2}), mask_of({1, 2}), 2);
    CHECK(same[mask_of({1, 2})] == 2);

    Functional e2 = weak_monotonicity(mask_of({1, 2}), complement_in(mask_of({1}), 3), 3);
    CHECK(e2[mask_of({1, 2})] == 1);
    CHECK(e2[mask_of({2, 3})] == 1);
    CHECK(e2[mask_of({1})] == -1);
    CHECK(e2[mask_of({3})] == -1);
}

TEST_CASE("conditional mutual information builder") {
    Functional mi = conditional_mutual_information(mask_of({1}), mask_of({2}), 0, 2);
    CHECK(mi[mask_of({1})] == 1);
    CHECK(mi[mask_of({2})] == 1);
    CHECK(mi[mask_of({1, 2})] == -1);

    // I(1:1|2) collapses to monotonicity H(12) - H(2)
    Functional mono = conditional_mutual_information(mask_of({1}), mask_of({1}), mask_of({2}), 2);
    CHECK(mono[mask_of({1, 2})] == 1);
    CHECK(mono[mask_of({2})] == -1);
    CHECK(mono[mask_of({1})] == 0);

    // I(1:2|3) equals Delta[{13},{23}]
    Functional c = conditional_mutual_information(mask_of({1}), mask_of({2}), mask_of({3}), 3);
    CHECK(c.coeffs == ssa(mask_of({1, 3}), mask_of({2, 3}), 3).coeffs);
}

TEST_CASE("elemental shannon counts") {
    CHECK(elemental_shannon(1).size() == 1);
    CHECK(elemental_shannon(2).size() == 3);
    CHECK(elemental_shannon(3).size() == 9);
    CHECK(elemental_shannon(4).size() == 4 + 6 * 4);

    // positivity on classical entropy vectors
    JointDistribution tri = uniform_on_support({2, 2, 2}, {0, 3, 5, 6});
    EntropyVector v = entropy_vector_classical(tri);
    for (const NamedInequality& q : elemental_shannon(3)) CHECK(evaluate(q.functional, v) > -1e-8);
}

TEST_CASE("pippenger sets") {
    PippengerSets s2 = pippenger_sets(2);
    CHECK(s2.e_delta.size() == 1);
    CHECK(s2.e_e.size() == 2);

    PippengerSets s3 = pippenger_sets(3);
    CHECK(s3.e_delta.size() == 6);
    CHECK(s3.e_e.size() == 6);

    PippengerSets s4 = pippenger_sets(4);
    CHECK(s4.e_delta.size() == 24);
    CHECK(s4.e_e.size() == 16);
}

TEST_CASE("zhang yeung coefficients") {
    Functional z = zhang_yeung().functional;
    CHECK(z[mask_of({1})] == -1);
    CHECK(z[mask_of({2})] == 0);
    CHECK(z[mask_of({3})] == -2);
    CHECK(z[mask_of({4})] == -2);
    CHECK(z[mask_of({1, 2})] == -1);
    CHECK(z[mask_of({3, 4})] == 3);
    CHECK(z[mask_of({1, 3})] == 3);
    CHECK(z[mask_of({1, 4})] == 3);
    CHECK(z[mask_of({2, 3})] == 1);
    CHECK(z[mask_of({2, 4})] == 1);
    CHECK(z[mask_of({1, 3, 4})] == -4);
    CHECK(z[mask_of({2, 3, 4})] == -1);
    CHECK(z[mask_of({1, 2, 3})] == 0);
    CHECK(z[mask_of({1, 2, 4})] == 0);
    CHECK(z[mask_of({1, 2, 3, 4})] == 0);

    // nonnegative on product distributions and the correlated-bit family
    std::mt19937_64 rng(53);
    for (int t = 0; t < 200; ++t) {
        std::vector<Rat> parts;
        std::vector<double> probs;
        std::vector<int> dims = {2, 2, 2, 2};
        std::vector<std::vector<double>> fs;
        for (int i = 0; i < 4; ++i) {
            double a = 0.05 + 0.9 * (static_cast<double>(rng() % 1000) / 1000.0);
            fs.push_back({a, 1.0 - a});
        }
        std::vector<double> table(16);
        for (int x = 0; x < 16; ++x)
            table[static_cast<std::size_t>(x)] =
                fs[0][(x >> 3) & 1] * fs[1][(x >> 2) & 1] * fs[2][(x >> 1) & 1] * fs[3][x & 1];
        EntropyVector v = entropy_vector_classical(JointDistribution::from_floats(dims, table));
        CHECK(evaluate(z, v) > -1e-8);
    }
    for (Mask I = 1; I <= 15; ++I) {
        EntropyVector v = entropy_vector_classical(correlated_bits(4, I));
        CHECK(evaluate(z, v) > -1e-9);
    }

    // 10^4 random rational 4-party distributions, alphabets up to 3
    int worst_failures = 0;
    for (int t = 0; t < 10000; ++t) {
        std::vector<int> dims(4);
        std::size_t size = 1;
        for (auto& d : dims) {
            d = 2 + static_cast<int>(rng() % 2);
            size *= static_cast<std::size_t>(d);
        }
        std::vector<long> raw(size);
        long total = 0;
        for (auto& x : raw) {
            x = static_cast<long>(rng() % 5);
            total += x;
        }
        if (total == 0) continue;
        std::vector<Rat> q(size);
        for (std::size_t i = 0; i < size; ++i) {
            q[i] = Rat(raw[i], total);
            q[i].canonicalize();
        }
        EntropyVector v = entropy_vector_classical(JointDistribution::from_rationals(dims, q));
        if (!(evaluate(z, v) > -1e-8)) ++worst_failures;
    }
    CHECK(worst_failures == 0);
}

TEST_CASE("ingleton") {
    NamedInequality ing = ingleton();
    CHECK(ing.family == InequalityFamily::LinearRank);
    // balanced
    for (const Rat& r : residual_weights(ing.functional)) CHECK(r == 0);
    // zero on the zero vector
    CHECK(evaluate(ing.functional, EntropyVector(4)) == doctest::Approx(0.0));

    // nonnegative (exactly) on sampled rank vectors over F_2
    std::mt19937_64 rng(59);
    const int m = 4;
    for (int t = 0; t < 300; ++t) {
        SubspaceFamily fam;
        fam.p = 2;
        fam.ambient = m;
        for (int i = 0; i < 4; ++i) {
            FpMat rows;
            int k = static_cast<int>(rng() % 3);
            for (int r = 0; r < k; ++r) {
                std::vector<long> row(m);
                for (auto& x : row) x = static_cast<long>(rng() % 2);
                rows.push_back(std::move(row));
            }
            fam.subspaces.push_back(rref_mod_p(rows, 2));
        }
        std::vector<int> rv = rank_vector(fam);
        RatVec exact(rv.size());
        for (std::size_t i = 0; i < rv.size(); ++i) exact[i] = rv[i];
        CHECK(evaluate(ing.functional, exact) >= 0);
    }
}

TEST_CASE("xi catalog and the orbit property") {
    std::vector<NamedInequality> cat = xi_catalog(3);
    // catalog contains every Pippenger element
    std::set<RatVec> catset;
    for (const NamedInequality& q : cat) catset.insert(primitive_scaled(q.functional.coeffs));
    PippengerSets s3 = pippenger_sets(3);
    std::set<RatVec> pip;
    for (const NamedInequality& q : s3.e_delta) pip.insert(primitive_scaled(q.functional.coeffs));
    for (const NamedInequality& q : s3.e_e) pip.insert(primitive_scaled(q.functional.coeffs));
    CHECK(pip.size() == 12);
    for (const RatVec& f : pip) CHECK(catset.count(f) == 1);

    // the adjoint S_{n+1} action permutes the Pippenger set (n = 3)
    std::vector<int> perm = {1, 2, 3, 4};
    std::sort(perm.begin(), perm.end());
    do {
        for (const RatVec& f : pip) {
            Functional g(3);
            g.coeffs = f;
            Functional img = adjoint_action(perm, g);
            CHECK(pip.count(primitive_scaled(img.coeffs)) == 1);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("pippenger rays are the extremal rays of the dual von Neumann cone") {
    std::vector<NamedInequality> cat = xi_catalog(3);
    PolyCone xi3 = PolyCone::from_functionals(3, [&] {
        std::vector<Functional> fs;
        for (const NamedInequality& q : cat) fs.push_back(q.functional);
        return fs;
    }());
    PolyCone dual = dual_cone(xi3);
    REQUIRE(dual.generators.has_value());
    CHECK(dual.generators->size() == 12);

    std::set<RatVec> expect;
    PippengerSets s3 = pippenger_sets(3);
    for (const NamedInequality& q : s3.e_delta) expect.insert(primitive_scaled(q.functional.coeffs));
    for (const NamedInequality& q : s3.e_e) expect.insert(primitive_scaled(q.functional.coeffs));
    std::set<RatVec> got(dual.generators->begin(), dual.generators->end());
    CHECK(got == expect);

    // redundancy certificate: every catalog instance lies in the cone of
    // the 12 essential rays, and dropping any ray loses a generator
    PolyCone essential = PolyCone::from_generators(8, *dual.generators);
    for (const NamedInequality& q : cat) CHECK(membership(q.functional.coeffs, essential));
    RatMat rays(expect.begin(), expect.end());
    for (std::size_t drop = 0; drop < rays.size(); ++drop) {
        RatMat rest;
        for (std::size_t i = 0; i < rays.size(); ++i)
            if (i != drop) rest.push_back(rays[i]);
        CHECK_FALSE(membership(rays[drop], PolyCone::from_generators(8, rest)));
    }
}
