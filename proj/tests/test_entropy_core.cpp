#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "entrocone/batch.hpp"
#include "entrocone/distributions.hpp"
#include "entrocone/inequalities.hpp"
#include "entrocone/quantum.hpp"
#include "entrocone/stabilizer_dense.hpp"
#include "test_helpers.hpp"

using namespace entrocone;
using entrocone::testing::random_density;
using entrocone::testing::random_pure_state;

TEST_CASE("shannon entropy basics") {
    CHECK(shannon_entropy({0.5, 0.5}) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(shannon_entropy({1.0, 0.0}) == doctest::Approx(0.0));
    CHECK(shannon_entropy({0.25, 0.25, 0.25, 0.25}) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK_THROWS_AS(shannon_entropy({0.7, 0.7}), std::invalid_argument);
    CHECK_THROWS_AS(shannon_entropy({1.5, -0.5}), std::invalid_argument);
}

TEST_CASE("marginalize") {
    JointDistribution corr = correlated_bits(2, mask_of({1, 2}));
    JointDistribution m1 = marginalize(corr, mask_of({1}));
    CHECK(m1.probs_q[0] == Rat(1, 2));
    CHECK(m1.probs_q[1] == Rat(1, 2));

    // product p (x) q restricted to the first factor returns p
    JointDistribution prod = JointDistribution::from_rationals(
        {2, 3}, {Rat(1, 8), Rat(1, 8), Rat(1, 4), Rat(1, 8), Rat(1, 8), Rat(1, 4)});
    JointDistribution p1 = marginalize(prod, mask_of({1}));
    CHECK(p1.probs_q[0] == Rat(1, 2));
    CHECK(p1.probs_q[1] == Rat(1, 2));

    // uniform on {00,01,10}: second marginal is (2/3, 1/3)
    JointDistribution tri = uniform_on_support({2, 2}, {0, 1, 2});
    JointDistribution m2 = marginalize(tri, mask_of({2}));
    CHECK(m2.probs_q[0] == Rat(2, 3));
    CHECK(m2.probs_q[1] == Rat(1, 3));

    CHECK_THROWS_AS(marginalize(tri, mask_of({3})), std::out_of_range);
}

TEST_CASE("classical entropy vectors") {
    // correlated fair bits: v_1 = v_2 = v_12 = 1
    EntropyVector v = entropy_vector_classical(correlated_bits(2, mask_of({1, 2})));
    CHECK(v[mask_of({1})] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(v[mask_of({2})] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(v[mask_of({1, 2})] == doctest::Approx(1.0).epsilon(1e-12));

    // product of two fair coins
    JointDistribution prod =
        JointDistribution::from_rationals({2, 2}, {Rat(1, 4), Rat(1, 4), Rat(1, 4), Rat(1, 4)});
    EntropyVector w = entropy_vector_classical(prod);
    CHECK(w[1] == doctest::Approx(1.0));
    CHECK(w[2] == doctest::Approx(1.0));
    CHECK(w[3] == doctest::Approx(2.0));

    // uniform on {00,01,10}
    EntropyVector u = entropy_vector_classical(uniform_on_support({2, 2}, {0, 1, 2}));
    CHECK(u[1] == doctest::Approx(0.9182958340544896).epsilon(1e-3));
    CHECK(u[2] == doctest::Approx(0.9182958340544896).epsilon(1e-3));
    CHECK(u[3] == doctest::Approx(1.584962500721156).epsilon(1e-3));
}

TEST_CASE("partial trace") {
    std::mt19937_64 rng(7);
    DensityMatrix sigma = random_density({2}, rng);
    DensityMatrix tau = random_density({3}, rng);
    DensityMatrix prod = tensor(sigma, tau);

    DensityMatrix red = partial_trace(prod, mask_of({1}));
    CHECK((red.mat - sigma.mat).cwiseAbs().maxCoeff() < 1e-12);

    // Bell state reduces to the maximally mixed qubit
    PureState bell;
    bell.local_dims = {2, 2};
    bell.amplitudes = CVec::Zero(4);
    bell.amplitudes(0) = bell.amplitudes(3) = 1.0 / std::sqrt(2.0);
    DensityMatrix half = partial_trace(bell.to_density(), mask_of({1}));
    CHECK((half.mat - CMat::Identity(2, 2) / 2.0).cwiseAbs().maxCoeff() < 1e-12);

    // full subset leaves the state unchanged
    DensityMatrix same = partial_trace(prod, mask_of({1, 2}));
    CHECK((same.mat - prod.mat).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("von Neumann entropy") {
    DensityMatrix mixed;
    mixed.local_dims = {2};
    mixed.mat = CMat::Identity(2, 2) / 2.0;
    CHECK(von_neumann_entropy(mixed) == doctest::Approx(1.0).epsilon(1e-12));

    std::mt19937_64 rng(3);
    PureState psi = random_pure_state({4}, rng);
    CHECK(von_neumann_entropy(psi.to_density()) == doctest::Approx(0.0).epsilon(1e-9));

    DensityMatrix dyadic;
    dyadic.local_dims = {3};
    dyadic.mat = CMat::Zero(3, 3);
    dyadic.mat(0, 0) = 0.5;
    dyadic.mat(1, 1) = 0.25;
    dyadic.mat(2, 2) = 0.25;
    CHECK(von_neumann_entropy(dyadic) == doctest::Approx(1.5).epsilon(1e-12));

    DensityMatrix bad;
    bad.local_dims = {2};
    bad.mat = CMat::Zero(2, 2);
    bad.mat(0, 1) = 1.0;  // not Hermitian
    CHECK_THROWS(von_neumann_entropy(bad));
}

TEST_CASE("quantum entropy vectors") {
    PureState ghz = ghz_state(3, 2);
    EntropyVector v = entropy_vector_quantum(ghz);
    for (Mask I = 1; I < 7; ++I) CHECK(v[I] == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(v[7] == doctest::Approx(0.0).epsilon(1e-9));

    std::mt19937_64 rng(11);
    PureState a = random_pure_state({2}, rng), b = random_pure_state({2}, rng);
    DensityMatrix prod = tensor(a.to_density(), b.to_density());
    EntropyVector w = entropy_vector_quantum(prod);
    for (Mask I = 1; I <= 3; ++I) CHECK(w[I] == doctest::Approx(0.0).epsilon(1e-9));

    // classical embedding agrees with the Shannon vector
    JointDistribution tri = uniform_on_support({2, 2}, {0, 1, 2});
    EntropyVector qc = entropy_vector_quantum(density_from_distribution(tri));
    EntropyVector cc = entropy_vector_classical(tri);
    CHECK(max_abs_diff(qc, cc) < 1e-9);
}

TEST_CASE("purify") {
    // pure state purifies to itself tensor |0>
    std::mt19937_64 rng(5);
    PureState phi = random_pure_state({3}, rng);
    PureState pur = purify(phi.to_density());
    DensityMatrix red = partial_trace(pur.to_density(), mask_of({1}));
    CHECK((red.mat - phi.to_density().mat).cwiseAbs().maxCoeff() < 1e-9);

    // maximally mixed qubit purifies to a Bell state
    DensityMatrix mixed;
    mixed.local_dims = {2};
    mixed.mat = CMat::Identity(2, 2) / 2.0;
    PureState bell = purify(mixed);
    EntropyVector v = entropy_vector_quantum(bell);
    CHECK(v[1] == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(v[3] == doctest::Approx(0.0).epsilon(1e-9));

    // diag(2/3, 1/3) -> sqrt(2/3)|00> + sqrt(1/3)|11>
    DensityMatrix diag;
    diag.local_dims = {2};
    diag.mat = CMat::Zero(2, 2);
    diag.mat(0, 0) = 2.0 / 3.0;
    diag.mat(1, 1) = 1.0 / 3.0;
    PureState p = purify(diag);
    CHECK(std::abs(p.amplitudes(0) - Cplx(std::sqrt(2.0 / 3.0), 0)) < 1e-9);
    CHECK(std::abs(p.amplitudes(3) - Cplx(std::sqrt(1.0 / 3.0), 0)) < 1e-9);
    CHECK(std::abs(p.amplitudes(1)) < 1e-9);
    CHECK(std::abs(p.amplitudes(2)) < 1e-9);

    // purification identity on random mixed states
    for (int t = 0; t < 5; ++t) {
        DensityMatrix rho = random_density({2, 2}, rng);
        PureState psi = purify(rho);
        DensityMatrix r1 = partial_trace(psi.to_density(), mask_of({1}));
        CHECK(std::fabs(von_neumann_entropy(r1) - von_neumann_entropy(rho)) < 1e-9);
        // the two halves of a pure bipartite state have equal entropy
        DensityMatrix r2 = partial_trace(psi.to_density(), mask_of({2}));
        CHECK(std::fabs(von_neumann_entropy(r1) - von_neumann_entropy(r2)) < 1e-9);
    }
}

TEST_CASE("ghz states") {
    PureState g1 = ghz_state(1, 2);
    CHECK(entropy_vector_quantum(g1)[1] == doctest::Approx(0.0).epsilon(1e-9));

    PureState g23 = ghz_state(2, 3);
    EntropyVector v = entropy_vector_quantum(g23);
    CHECK(v[1] == doctest::Approx(std::log2(3.0)).epsilon(1e-9));
    CHECK(v[2] == doctest::Approx(std::log2(3.0)).epsilon(1e-9));
    CHECK(v[3] == doctest::Approx(0.0).epsilon(1e-9));

    CHECK_THROWS_AS(ghz_state(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(ghz_state(2, 1), std::invalid_argument);
}

TEST_CASE("weyl operators") {
    // single-site shift and phase at d=2
    CMat X = weyl_operator(2, {0, 1});
    CHECK(std::abs(X(0, 1) - Cplx(1, 0)) < 1e-12);
    CHECK(std::abs(X(1, 0) - Cplx(1, 0)) < 1e-12);
    CHECK(std::abs(X(0, 0)) < 1e-12);

    CMat Z = weyl_operator(2, {1, 0});
    CHECK(std::abs(Z(0, 0) - Cplx(1, 0)) < 1e-12);
    CHECK(std::abs(Z(1, 1) - Cplx(-1, 0)) < 1e-12);

    CMat I2 = weyl_operator(2, {0, 0});
    CHECK((I2 - CMat::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-12);

    CHECK_THROWS_AS(weyl_operator(1, {0, 0}), std::invalid_argument);

    // unitarity and the commutation phase chi_d(omega(v,w)) for d in {2,3,5}
    std::mt19937_64 rng(17);
    for (int d : {2, 3, 5}) {
        const int n = 2;
        PhaseSpace sp{n, d};
        std::uniform_int_distribution<long> pick(0, d - 1);
        for (int t = 0; t < 8; ++t) {
            ZVec v(2 * n), w(2 * n);
            for (auto& x : v) x = pick(rng);
            for (auto& x : w) x = pick(rng);
            CMat wv = weyl_operator(d, v), ww = weyl_operator(d, w);
            CHECK((wv * wv.adjoint() - CMat::Identity(wv.rows(), wv.cols())).cwiseAbs().maxCoeff() < 1e-10);
            long om = symplectic_form(v, w, sp);
            Cplx chi = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(om) / d);
            CHECK((wv * ww - chi * ww * wv).cwiseAbs().maxCoeff() < 1e-9);
        }
    }
}

TEST_CASE("weyl lifts restricted to odd d are genuine representations") {
    std::mt19937_64 rng(19);
    for (int d : {3, 5}) {
        std::uniform_int_distribution<long> pick(0, d - 1);
        for (int t = 0; t < 6; ++t) {
            ZVec v(4);
            for (auto& x : v) x = pick(rng);
            CMat w = weyl_operator(d, v);
            CMat acc = CMat::Identity(w.rows(), w.cols());
            for (int k = 0; k < d; ++k) acc = acc * w;
            CHECK((acc - CMat::Identity(w.rows(), w.cols())).cwiseAbs().maxCoeff() < 1e-9);
            // w(v)^k agrees with w(k v) up to nothing at all for odd d
            CMat w2 = weyl_operator(d, {(2 * v[0]) % d, (2 * v[1]) % d, (2 * v[2]) % d, (2 * v[3]) % d});
            CHECK((w * w - w2).cwiseAbs().maxCoeff() < 1e-9);
        }
    }
    // at d=2 squares are only projectively trivial: w(v)^2 = +/- identity
    for (long p = 0; p < 2; ++p)
        for (long q = 0; q < 2; ++q) {
            CMat w = weyl_operator(2, {p, q});
            CMat sq = w * w;
            double plus = (sq - CMat::Identity(2, 2)).cwiseAbs().maxCoeff();
            double minus = (sq + CMat::Identity(2, 2)).cwiseAbs().maxCoeff();
            CHECK(std::min(plus, minus) < 1e-12);
        }
}

TEST_CASE("classical embedding fuzz") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 10; ++t) {
        std::vector<Rat> q(8);
        long total = 0;
        std::vector<long> raw(8);
        for (auto& x : raw) {
            x = static_cast<long>(rng() % 4);
            total += x;
        }
        if (total == 0) continue;
        for (int i = 0; i < 8; ++i) {
            q[static_cast<std::size_t>(i)] = Rat(raw[static_cast<std::size_t>(i)], total);
            q[static_cast<std::size_t>(i)].canonicalize();
        }
        JointDistribution p = JointDistribution::from_rationals({2, 2, 2}, q);
        CHECK(max_abs_diff(entropy_vector_quantum(density_from_distribution(p)),
                           entropy_vector_classical(p)) < 1e-9);
    }
}

TEST_CASE("additivity of quantum entropy vectors") {
    std::mt19937_64 rng(23);
    DensityMatrix rho = random_density({2, 2}, rng);
    DensityMatrix sig = random_density({2, 2}, rng);
    // party-wise pairing: party i of the product state carries factor i of
    // both inputs; realized by swapping the middle factors
    DensityMatrix prod = tensor(rho, sig);  // parties (1,2,3,4) = (r1,r2,s1,s2)
    EntropyVector vr = entropy_vector_quantum(rho), vs = entropy_vector_quantum(sig);
    EntropyVector vp = entropy_vector_quantum(prod);
    // subset {i} of the paired state corresponds to {i, i+2} of prod
    for (Mask I = 1; I <= 3; ++I) {
        Mask J = 0;
        if (I & 1) J |= mask_of({1, 3});
        if (I & 2) J |= mask_of({2, 4});
        CHECK(vp[J] == doctest::Approx(vr[I] + vs[I]).epsilon(1e-9));
    }
}

TEST_CASE("produced vectors satisfy the von Neumann catalog") {
    std::mt19937_64 rng(29);
    std::vector<NamedInequality> xi3 = xi_catalog(3);
    for (int t = 0; t < 10; ++t) {
        DensityMatrix rho = random_density({2, 2, 2}, rng);
        EntropyVector v = entropy_vector_quantum(rho);
        for (const NamedInequality& q : xi3) CHECK(evaluate(q.functional, v) > -1e-8);
    }
}
