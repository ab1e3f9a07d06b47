#include "entrocone/stabilizer_dense.hpp"

#include <cmath>
#include <stdexcept>

namespace entrocone {

namespace {

// sum over all coefficient words of the generator lifts; a consistent lift
// makes every group element appear d^k / |M| times
CMat lifted_sum(const std::vector<CMat>& gens, int d, Eigen::Index dim) {
    std::vector<std::vector<CMat>> pow(gens.size());
    for (std::size_t j = 0; j < gens.size(); ++j) {
        pow[j].push_back(CMat::Identity(dim, dim));
        for (int t = 1; t < d; ++t) pow[j].push_back(pow[j].back() * gens[j]);
    }
    std::vector<int> word(gens.size(), 0);
    CMat acc = CMat::Zero(dim, dim);
    while (true) {
        CMat term = CMat::Identity(dim, dim);
        for (std::size_t j = 0; j < gens.size(); ++j)
            if (word[j] > 0) term = term * pow[j][static_cast<std::size_t>(word[j])];
        acc += term;
        std::size_t i = 0;
        for (; i < word.size(); ++i) {
            if (++word[i] < d) break;
            word[i] = 0;
        }
        if (i == word.size()) break;
    }
    return acc;
}

bool valid_state(const CMat& rho, double rank) {
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-9) return false;
    if (std::fabs(rho.trace().real() - 1.0) > 1e-9 || std::fabs(rho.trace().imag()) > 1e-9) return false;
    // rho = P / rank for a projector P, so rho^2 = rho / rank
    if ((rho * rho - rho / rank).cwiseAbs().maxCoeff() > 1e-9) return false;
    Eigen::SelfAdjointEigenSolver<CMat> es((rho + rho.adjoint()) / 2.0);
    return es.eigenvalues().minCoeff() > -1e-9;
}

}  // namespace

DensityMatrix stabilizer_state_dense(const Submodule& M, const StabilizerDenseOptions& opt) {
    if (!is_isotropic(M)) throw std::invalid_argument("stabilizer_state_dense: submodule is not isotropic");
    const int d = M.space.d, n = M.space.n;
    double dimf = std::pow(static_cast<double>(d), n);
    if (dimf > static_cast<double>(opt.dim_cap))
        throw std::runtime_error("stabilizer_state_dense: d^n exceeds the dense oracle cap");
    Eigen::Index dim = static_cast<Eigen::Index>(std::llround(dimf));

    std::vector<CMat> base;
    for (const ZVec& g : M.generators) base.push_back(weyl_operator(d, g));
    const std::size_t k = base.size();

    Int words = 1;
    for (std::size_t j = 0; j < k; ++j) words *= d;
    const double dup = words.get_d() / cardinality(M).get_d();  // repetitions per group element
    const double rank = dimf / cardinality(M).get_d();

    auto assemble = [&](const std::vector<CMat>& gens) {
        CMat rho = lifted_sum(gens, d, dim) / (dimf * dup);
        return rho;
    };

    if (d % 2 == 1) {
        CMat rho = assemble(base);
        if (!valid_state(rho, rank)) throw std::runtime_error("stabilizer_state_dense: odd-d construction failed");
        DensityMatrix out;
        out.local_dims.assign(static_cast<std::size_t>(n), d);
        out.mat = std::move(rho);
        return out;
    }

    // even d: search generator phases over {1, i, -1, -i}, lexicographic
    const Cplx roots[4] = {Cplx(1, 0), Cplx(0, 1), Cplx(-1, 0), Cplx(0, -1)};
    std::vector<int> choice(k, 0);
    while (true) {
        std::vector<CMat> gens = base;
        for (std::size_t j = 0; j < k; ++j) gens[j] *= roots[choice[j]];
        CMat rho = assemble(gens);
        if (valid_state(rho, rank)) {
            DensityMatrix out;
            out.local_dims.assign(static_cast<std::size_t>(n), d);
            out.mat = std::move(rho);
            return out;
        }
        std::size_t i = 0;
        for (; i < k; ++i) {
            if (++choice[i] < 4) break;
            choice[i] = 0;
        }
        if (i == k) break;
    }
    throw std::runtime_error("stabilizer_state_dense: phase search exhausted (no consistent lift found)");
}

}  // namespace entrocone
