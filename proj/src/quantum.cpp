#include "entrocone/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace entrocone {

namespace {

constexpr double kHermTol = 1e-10;

void check_hermitian(const CMat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("density matrix not square");
    double dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (dev > kHermTol) throw std::invalid_argument("matrix not Hermitian within tolerance");
}

Eigen::SelfAdjointEigenSolver<CMat> eig(const CMat& m) {
    check_hermitian(m);
    // symmetrize to kill the last <=1e-10 of asymmetry before solving
    CMat h = (m + m.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<CMat> es(h);
    if (es.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");
    return es;
}

}  // namespace

std::size_t product_dim(const std::vector<int>& dims) {
    std::size_t d = 1;
    for (int x : dims) {
        if (x < 1) throw std::invalid_argument("local dimension < 1");
        d *= static_cast<std::size_t>(x);
    }
    return d;
}

void DensityMatrix::validate() const {
    if (static_cast<std::size_t>(mat.rows()) != product_dim(local_dims))
        throw std::invalid_argument("density matrix: dimension mismatch");
    check_hermitian(mat);
    if (std::fabs(mat.trace().real() - 1.0) > 1e-10 || std::fabs(mat.trace().imag()) > 1e-10)
        throw std::invalid_argument("density matrix: trace not 1");
    Eigen::SelfAdjointEigenSolver<CMat> es = eig(mat);
    if (es.eigenvalues().minCoeff() < -1e-10) throw std::invalid_argument("density matrix: negative eigenvalue");
}

void PureState::validate() const {
    if (static_cast<std::size_t>(amplitudes.size()) != product_dim(local_dims))
        throw std::invalid_argument("pure state: dimension mismatch");
    if (std::fabs(amplitudes.squaredNorm() - 1.0) > 1e-12)
        throw std::invalid_argument("pure state: not normalized");
}

DensityMatrix PureState::to_density() const {
    DensityMatrix rho;
    rho.local_dims = local_dims;
    rho.mat = amplitudes * amplitudes.adjoint();
    return rho;
}

std::vector<double> spectrum(const DensityMatrix& rho) {
    Eigen::SelfAdjointEigenSolver<CMat> es = eig(rho.mat);
    std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
    for (double& x : ev) {
        if (x < -1e-10) throw std::invalid_argument("spectrum: negative eigenvalue beyond tolerance");
        if (x < 0.0) x = 0.0;
    }
    std::sort(ev.begin(), ev.end(), std::greater<double>());
    return ev;
}

DensityMatrix partial_trace(const DensityMatrix& rho, Mask I) {
    const int n = rho.n_parties();
    if (I & ~full_mask(n)) throw std::invalid_argument("partial_trace: subset out of range");
    if (static_cast<std::size_t>(rho.mat.rows()) != product_dim(rho.local_dims))
        throw std::invalid_argument("partial_trace: dimension mismatch");

    std::vector<int> kept = parties_of(I);
    std::vector<int> traced = parties_of(complement_in(I, n));

    // global strides, last party fastest
    std::vector<std::size_t> stride(static_cast<std::size_t>(n), 1);
    for (int i = n - 2; i >= 0; --i)
        stride[i] = stride[i + 1] * static_cast<std::size_t>(rho.local_dims[i + 1]);

    auto offsets = [&](const std::vector<int>& parties) {
        std::size_t count = 1;
        for (int p : parties) count *= static_cast<std::size_t>(rho.local_dims[p - 1]);
        std::vector<std::size_t> off(count, 0);
        for (std::size_t idx = 0; idx < count; ++idx) {
            std::size_t rest = idx;
            for (auto it = parties.rbegin(); it != parties.rend(); ++it) {
                std::size_t d = static_cast<std::size_t>(rho.local_dims[*it - 1]);
                off[idx] += (rest % d) * stride[*it - 1];
                rest /= d;
            }
        }
        return off;
    };

    std::vector<std::size_t> koff = offsets(kept);
    std::vector<std::size_t> toff = offsets(traced);

    DensityMatrix out;
    for (int p : kept) out.local_dims.push_back(rho.local_dims[p - 1]);
    if (out.local_dims.empty()) out.local_dims = {1};
    out.mat = CMat::Zero(static_cast<Eigen::Index>(koff.size()), static_cast<Eigen::Index>(koff.size()));
    for (std::size_t a = 0; a < koff.size(); ++a)
        for (std::size_t b = 0; b < koff.size(); ++b) {
            Cplx s = 0.0;
            for (std::size_t t : toff)
                s += rho.mat(static_cast<Eigen::Index>(koff[a] + t), static_cast<Eigen::Index>(koff[b] + t));
            out.mat(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = s;
        }
    return out;
}

double von_neumann_entropy(const DensityMatrix& rho) {
    std::vector<double> ev = spectrum(rho);
    double h = 0.0;
    for (double p : ev) {
        if (p > 0.0) h -= p * std::log2(p);
    }
    return h < 0.0 ? 0.0 : h;
}

EntropyVector entropy_vector_quantum(const DensityMatrix& rho) {
    EntropyVector v(rho.n_parties());
    const Mask full = full_mask(rho.n_parties());
    for (Mask I = 1; I <= full; ++I) v[I] = von_neumann_entropy(partial_trace(rho, I));
    return v;
}

EntropyVector entropy_vector_quantum(const PureState& psi) {
    psi.validate();
    return entropy_vector_quantum(psi.to_density());
}

PureState purify(const DensityMatrix& rho) {
    rho.validate();
    Eigen::SelfAdjointEigenSolver<CMat> es = eig(rho.mat);
    const Eigen::Index D = rho.mat.rows();

    struct Pair {
        double value;
        CVec vec;
    };
    std::vector<Pair> pairs;
    pairs.reserve(static_cast<std::size_t>(D));
    for (Eigen::Index i = 0; i < D; ++i) {
        CVec v = es.eigenvectors().col(i);
        // phase convention: first component with magnitude above 1e-12 made real positive
        for (Eigen::Index j = 0; j < D; ++j) {
            if (std::abs(v(j)) > 1e-12) {
                v *= std::conj(v(j)) / std::abs(v(j));
                break;
            }
        }
        pairs.push_back({std::max(es.eigenvalues()(i), 0.0), std::move(v)});
    }
    std::sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
        if (a.value != b.value) return a.value > b.value;
        for (Eigen::Index j = 0; j < a.vec.size(); ++j) {
            if (a.vec(j).real() != b.vec(j).real()) return a.vec(j).real() < b.vec(j).real();
            if (a.vec(j).imag() != b.vec(j).imag()) return a.vec(j).imag() < b.vec(j).imag();
        }
        return false;
    });

    PureState psi;
    psi.local_dims = {static_cast<int>(D), static_cast<int>(D)};
    psi.amplitudes = CVec::Zero(D * D);
    for (Eigen::Index k = 0; k < D; ++k) {
        double p = pairs[static_cast<std::size_t>(k)].value;
        if (p <= 0.0) continue;
        double a = std::sqrt(p);
        const CVec& v = pairs[static_cast<std::size_t>(k)].vec;
        for (Eigen::Index j = 0; j < D; ++j) psi.amplitudes(j * D + k) += a * v(j);
    }
    psi.amplitudes /= psi.amplitudes.norm();
    return psi;
}

PureState ghz_state(int n, int d) {
    if (n < 1 || d < 2) throw std::invalid_argument("ghz_state: need n >= 1, d >= 2");
    PureState psi;
    psi.local_dims.assign(static_cast<std::size_t>(n), d);
    std::size_t D = product_dim(psi.local_dims);
    psi.amplitudes = CVec::Zero(static_cast<Eigen::Index>(D));
    std::size_t ones = 0;  // index of |j...j>: j * (d^{n-1} + ... + 1)
    for (int i = 0; i < n; ++i) ones = ones * static_cast<std::size_t>(d) + 1;
    const double a = 1.0 / std::sqrt(static_cast<double>(d));
    for (int j = 0; j < d; ++j) psi.amplitudes(static_cast<Eigen::Index>(ones * static_cast<std::size_t>(j))) = a;
    return psi;
}

DensityMatrix density_from_distribution(const JointDistribution& p) {
    p.validate();
    DensityMatrix rho;
    rho.local_dims = p.alphabet_sizes;
    const Eigen::Index D = static_cast<Eigen::Index>(p.table_size());
    rho.mat = CMat::Zero(D, D);
    for (Eigen::Index i = 0; i < D; ++i) rho.mat(i, i) = p.probs_f[static_cast<std::size_t>(i)];
    return rho;
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
    DensityMatrix out;
    out.local_dims = a.local_dims;
    out.local_dims.insert(out.local_dims.end(), b.local_dims.begin(), b.local_dims.end());
    const Eigen::Index ra = a.mat.rows(), rb = b.mat.rows();
    out.mat = CMat::Zero(ra * rb, ra * rb);
    for (Eigen::Index i = 0; i < ra; ++i)
        for (Eigen::Index j = 0; j < ra; ++j)
            out.mat.block(i * rb, j * rb, rb, rb) = a.mat(i, j) * b.mat;
    return out;
}

CMat weyl_operator(int d, const std::vector<long>& v) {
    if (d < 2) throw std::invalid_argument("weyl_operator: d must be >= 2");
    if (v.size() % 2 != 0) throw std::invalid_argument("weyl_operator: phase-space point must have even length");
    const int n = static_cast<int>(v.size() / 2);

    auto site = [&](long P, long Q) {
        P = ((P % d) + d) % d;
        Q = ((Q % d) + d) % d;
        CMat w = CMat::Zero(d, d);
        // tau_{2d}(y) = chi_{2d}((d^2+1) y); global phase tau_{2d}(-PQ)
        const double twopi = 2.0 * std::numbers::pi;
        long y = -(P * Q) % (2L * d);
        double tau_arg = twopi * static_cast<double>(((static_cast<long>(d) * d + 1) % (2L * d)) * y) /
                         static_cast<double>(2L * d);
        Cplx tau = std::polar(1.0, tau_arg);
        for (long x = 0; x < d; ++x) {
            long xm = ((x - Q) % d + d) % d;
            Cplx chi = std::polar(1.0, twopi * static_cast<double>((P * x) % d) / static_cast<double>(d));
            w(x, xm) = tau * chi;
        }
        return w;
    };

    CMat out = CMat::Identity(1, 1);
    for (int i = 0; i < n; ++i) {
        CMat wi = site(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(i + n)]);
        CMat next(out.rows() * d, out.cols() * d);
        for (Eigen::Index a = 0; a < out.rows(); ++a)
            for (Eigen::Index b = 0; b < out.cols(); ++b) next.block(a * d, b * d, d, d) = out(a, b) * wi;
        out = std::move(next);
    }
    return out;
}

}  // namespace entrocone
