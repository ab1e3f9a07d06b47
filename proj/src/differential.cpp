#include "entrocone/differential.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace entrocone {

namespace {

// reshape |psi> into the d_I x d_{I^c} matrix of the I | I^c split
CMat reshape_bipartite(const CVec& amp, const std::vector<int>& dims, Mask I) {
    const int n = static_cast<int>(dims.size());
    std::vector<int> kept = parties_of(I);
    std::vector<int> rest = parties_of(complement_in(I, n));
    std::vector<std::size_t> stride(static_cast<std::size_t>(n), 1);
    for (int i = n - 2; i >= 0; --i) stride[static_cast<std::size_t>(i)] = stride[static_cast<std::size_t>(i + 1)] * static_cast<std::size_t>(dims[static_cast<std::size_t>(i + 1)]);

    auto offsets = [&](const std::vector<int>& parties) {
        std::size_t count = 1;
        for (int p : parties) count *= static_cast<std::size_t>(dims[static_cast<std::size_t>(p - 1)]);
        std::vector<std::size_t> off(count, 0);
        for (std::size_t idx = 0; idx < count; ++idx) {
            std::size_t r = idx;
            for (auto it = parties.rbegin(); it != parties.rend(); ++it) {
                std::size_t d = static_cast<std::size_t>(dims[static_cast<std::size_t>(*it - 1)]);
                off[idx] += (r % d) * stride[static_cast<std::size_t>(*it - 1)];
                r /= d;
            }
        }
        return off;
    };
    std::vector<std::size_t> rowoff = offsets(kept), coloff = offsets(rest);
    CMat m(static_cast<Eigen::Index>(rowoff.size()), static_cast<Eigen::Index>(coloff.size()));
    for (std::size_t a = 0; a < rowoff.size(); ++a)
        for (std::size_t b = 0; b < coloff.size(); ++b)
            m(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) =
                amp(static_cast<Eigen::Index>(rowoff[a] + coloff[b]));
    return m;
}

bool spectrum_flat(const std::vector<double>& spec, double tol) { return is_flat(spec, tol).flat; }

}  // namespace

FlatnessResult is_flat(const std::vector<double>& spectrum, double tol) {
    FlatnessResult res;
    double top = 0.0;
    for (double x : spectrum) top = std::max(top, std::fabs(x));
    if (top == 0.0) {
        res.flat = true;
        res.levels = 0;
        return res;
    }
    const double cut = tol * top;
    double lo = top;
    for (double x : spectrum) {
        if (x > cut) {
            ++res.levels;
            lo = std::min(lo, x);
        }
    }
    res.flat = (top - lo) <= cut;
    return res;
}

SchmidtData schmidt_decompose(const PureState& psi, Mask I) {
    psi.validate();
    if (I & ~full_mask(psi.n_parties())) throw std::invalid_argument("schmidt_decompose: subset out of range");
    CMat m = reshape_bipartite(psi.amplitudes, psi.local_dims, I);
    Eigen::JacobiSVD<CMat> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);

    SchmidtData out;
    out.subset = I;
    const Eigen::Index k = svd.singularValues().size();
    out.coefficients.resize(static_cast<std::size_t>(k));
    out.left = svd.matrixU();
    out.right = svd.matrixV().conjugate();
    for (Eigen::Index a = 0; a < k; ++a) {
        double s = svd.singularValues()(a);
        out.coefficients[static_cast<std::size_t>(a)] = s * s;
        // phase convention: leading significant component of each left
        // vector real positive
        for (Eigen::Index j = 0; j < out.left.rows(); ++j) {
            Cplx z = out.left(j, a);
            if (std::abs(z) > 1e-9) {
                Cplx ph = std::conj(z) / std::abs(z);
                out.left.col(a) *= ph;
                out.right.col(a) *= std::conj(ph);
                break;
            }
        }
    }
    return out;
}

std::string verdict_name(RayVerdict v) {
    switch (v) {
        case RayVerdict::Splits: return "splits";
        case RayVerdict::ExceptionalRay: return "exceptional-ray";
        case RayVerdict::AllFlat: return "all-flat";
        case RayVerdict::NotExtremalCandidate: return "not-extremal-candidate";
    }
    return "?";
}

Classification classify_quantum(const DensityMatrix& rho, double tol) {
    const int n = rho.n_parties();
    const Mask full = full_mask(n);
    EntropyVector v(n);
    std::vector<bool> flat(std::size_t(1) << n, true);
    for (Mask I = 1; I <= full; ++I) {
        std::vector<double> spec = spectrum(partial_trace(rho, I));
        double h = 0.0;
        for (double p : spec)
            if (p > 0.0) h -= p * std::log2(p);
        v[I] = h;
        flat[I] = spectrum_flat(spec, tol);
    }
    const bool pure = v[full] <= tol;

    Classification c;
    // 1: a vanishing nontrivial entropy means the state splits
    for (Mask I = 1; I <= full; ++I) {
        if (I == full && pure) continue;  // total spectrum of a pure state is trivial
        if (v[I] <= tol) {
            c.verdict = RayVerdict::Splits;
            c.witness_subset = I;
            return c;
        }
    }
    // 3: all spectra flat
    bool allflat = true;
    Mask nonflat = 0;
    for (Mask I = 1; I <= full; ++I) {
        if (!flat[I]) {
            allflat = false;
            nonflat = I;
            break;
        }
    }
    if (allflat) {
        c.verdict = RayVerdict::AllFlat;
        return c;
    }
    // 2: the exceptional ray r * sum e^(I)
    double r = v[1];
    bool exceptional = r > tol;
    for (Mask I = 1; I <= full && exceptional; ++I) {
        if (I == full && pure) continue;
        if (std::fabs(v[I] - r) > tol * std::max(1.0, r)) exceptional = false;
    }
    if (exceptional) {
        c.verdict = RayVerdict::ExceptionalRay;
        c.ratio = r;
        return c;
    }
    c.verdict = RayVerdict::NotExtremalCandidate;
    c.witness_subset = nonflat;
    return c;
}

Classification classify_classical(const JointDistribution& p, double tol) {
    p.validate();
    const int n = p.n_parties;
    const Mask full = full_mask(n);
    EntropyVector v(n);
    std::vector<bool> flat(std::size_t(1) << n, true);
    for (Mask I = 1; I <= full; ++I) {
        JointDistribution m = marginalize(p, I);
        v[I] = shannon_entropy(m.probs_f);
        flat[I] = spectrum_flat(m.probs_f, tol);
    }
    Classification c;
    for (Mask I = 1; I <= full; ++I) {
        if (v[I] <= tol) {
            c.verdict = RayVerdict::Splits;
            c.witness_subset = I;
            return c;
        }
    }
    bool allflat = true;
    Mask nonflat = 0;
    for (Mask I = 1; I <= full; ++I) {
        if (!flat[I]) {
            allflat = false;
            nonflat = I;
            break;
        }
    }
    if (allflat) {
        c.verdict = RayVerdict::AllFlat;
        return c;
    }
    double r = v[1];
    bool exceptional = r > tol;
    for (Mask I = 1; I <= full && exceptional; ++I)
        if (std::fabs(v[I] - r) > tol * std::max(1.0, r)) exceptional = false;
    if (exceptional) {
        c.verdict = RayVerdict::ExceptionalRay;
        c.ratio = r;
        return c;
    }
    c.verdict = RayVerdict::NotExtremalCandidate;
    c.witness_subset = nonflat;
    return c;
}

double subset_entropy(const PureState& psi, Mask I) {
    CVec amp = psi.amplitudes / psi.amplitudes.norm();
    CMat m = reshape_bipartite(amp, psi.local_dims, I);
    Eigen::JacobiSVD<CMat> svd(m);
    double h = 0.0;
    for (Eigen::Index a = 0; a < svd.singularValues().size(); ++a) {
        double p = svd.singularValues()(a);
        p *= p;
        if (p > 0.0) h -= p * std::log2(p);
    }
    return h;
}

DifferentialReport entropy_differential(const PureState& psi, double tol) {
    psi.validate();
    const int n = psi.n_parties();
    const Eigen::Index D = psi.amplitudes.size();
    DifferentialReport rep;
    rep.n = n;

    // deterministic orthonormal basis of psi-perp: Gram-Schmidt of the
    // standard basis against psi
    std::vector<CVec> basis;
    for (Eigen::Index j = 0; j < D && static_cast<Eigen::Index>(basis.size()) < D - 1; ++j) {
        CVec cand = CVec::Zero(D);
        cand(j) = 1.0;
        cand -= (psi.amplitudes.dot(cand)) * psi.amplitudes;
        for (const CVec& b : basis) cand -= (b.dot(cand)) * b;
        double nrm = cand.norm();
        if (nrm > 1e-9) basis.push_back(cand / nrm);
    }
    rep.tangent_basis = basis;

    const Mask full = full_mask(n);
    for (Mask I = 1; I < full; ++I) rep.subsets.push_back(I);

    // spectra, flatness, degeneracy screen
    struct Eig {
        std::vector<double> p;
        CMat vecs;
        CMat mpsi;
        bool flat = false;
        bool usable = false;
    };
    std::vector<Eig> eigs(rep.subsets.size());
    for (std::size_t s = 0; s < rep.subsets.size(); ++s) {
        Mask I = rep.subsets[s];
        CMat m = reshape_bipartite(psi.amplitudes, psi.local_dims, I);
        CMat rhoI = m * m.adjoint();
        Eigen::SelfAdjointEigenSolver<CMat> es((rhoI + rhoI.adjoint()) / 2.0);
        Eig e;
        e.mpsi = m;
        e.vecs = es.eigenvectors();
        e.p.assign(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
        for (double& x : e.p) x = std::max(x, 0.0);
        std::vector<double> sorted = e.p;
        std::sort(sorted.begin(), sorted.end(), std::greater<double>());
        FlatnessResult fr = is_flat(sorted, tol);
        e.flat = fr.flat;
        rep.flat.push_back(fr.flat);
        rep.levels.push_back(fr.levels);
        if (!fr.flat) {
            // need pairwise distinct support eigenvalues for the first-order formula
            double top = sorted.empty() ? 0.0 : sorted[0];
            bool distinct = true;
            for (std::size_t a = 0; a + 1 < sorted.size(); ++a) {
                if (sorted[a] > tol * top && sorted[a + 1] > tol * top &&
                    (sorted[a] - sorted[a + 1]) <= tol * top)
                    distinct = false;
            }
            if (!distinct) {
                rep.degenerate = true;
                if (rep.degenerate_subset == 0) rep.degenerate_subset = I;
            }
            e.usable = distinct;
        } else {
            e.usable = true;
        }
        eigs[s] = std::move(e);
    }

    if (!rep.degenerate) {
        const std::size_t cols = 2 * basis.size();
        for (std::size_t s = 0; s < rep.subsets.size(); ++s) {
            Mask I = rep.subsets[s];
            const Eig& e = eigs[s];
            std::vector<double> row(cols, 0.0);
            if (!e.flat) {  // flat spectra are critical: the row is identically zero
                double top = *std::max_element(e.p.begin(), e.p.end());
                for (std::size_t b = 0; b < basis.size(); ++b) {
                    for (int part = 0; part < 2; ++part) {
                        CVec phi = (part == 0) ? basis[b] : CVec(Cplx(0, 1) * basis[b]);
                        CMat mphi = reshape_bipartite(phi, psi.local_dims, I);
                        CMat A = e.mpsi * mphi.adjoint();
                        double val = 0.0;
                        for (Eigen::Index a = 0; a < static_cast<Eigen::Index>(e.p.size()); ++a) {
                            double pa = e.p[static_cast<std::size_t>(a)];
                            if (pa <= tol * top) continue;  // outside the Schmidt support: dp = 0
                            Cplx diag = e.vecs.col(a).dot(A * e.vecs.col(a));
                            val += -2.0 * std::log2(pa) * diag.real();
                        }
                        row[2 * b + static_cast<std::size_t>(part)] = val;
                    }
                }
            }
            rep.rows.push_back(std::move(row));
        }
        // numerical rank of the stacked rows
        if (!rep.rows.empty() && !rep.rows[0].empty()) {
            Eigen::MatrixXd M(static_cast<Eigen::Index>(rep.rows.size()),
                              static_cast<Eigen::Index>(rep.rows[0].size()));
            for (std::size_t i = 0; i < rep.rows.size(); ++i)
                for (std::size_t j = 0; j < rep.rows[i].size(); ++j)
                    M(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rep.rows[i][j];
            Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
            double top = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
            for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
                if (svd.singularValues()(i) > 1e-8 * std::max(1.0, top)) ++rep.rank;
        }
    }

    rep.verdict = classify_quantum(psi.to_density(), tol).verdict;
    return rep;
}

SupportingSpace supporting_space(const JointDistribution& p) {
    p.validate();
    SupportingSpace s;
    for (std::size_t i = 0; i < p.probs_f.size(); ++i)
        if (p.probs_f[i] > 0.0) s.support.push_back(i);
    s.dimension = static_cast<int>(s.support.size()) - 1;
    return s;
}

DifferentialReport classical_differential(const JointDistribution& p, double tol) {
    p.validate();
    const int n = p.n_parties;
    DifferentialReport rep;
    rep.n = n;
    SupportingSpace T = supporting_space(p);

    const Mask full = full_mask(n);
    std::vector<JointDistribution> marg(std::size_t(1) << n);
    for (Mask I = 1; I <= full; ++I) {
        rep.subsets.push_back(I);
        marg[I] = marginalize(p, I);
        FlatnessResult fr = is_flat(marg[I].probs_f, tol);
        rep.flat.push_back(fr.flat);
        rep.levels.push_back(fr.levels);
    }

    // basis e_{x_j} - e_{x_0} of the supporting space
    for (std::size_t s = 0; s < rep.subsets.size(); ++s) {
        Mask I = rep.subsets[s];
        std::vector<double> row;
        std::vector<int> kept = parties_of(I);
        auto marginal_prob = [&](std::size_t idx) {
            std::vector<int> letters = p.letters_of(idx);
            std::size_t mi = 0;
            for (std::size_t k = 0; k < kept.size(); ++k)
                mi = mi * static_cast<std::size_t>(p.alphabet_sizes[static_cast<std::size_t>(kept[k] - 1)]) +
                     static_cast<std::size_t>(letters[static_cast<std::size_t>(kept[k] - 1)]);
            return marg[I].probs_f[mi];
        };
        for (std::size_t j = 1; j < T.support.size(); ++j) {
            double px = marginal_prob(T.support[j]);
            double py = marginal_prob(T.support[0]);
            row.push_back(std::log2(py) - std::log2(px));
        }
        rep.rows.push_back(std::move(row));
    }
    if (!rep.rows.empty() && !rep.rows[0].empty()) {
        Eigen::MatrixXd M(static_cast<Eigen::Index>(rep.rows.size()), static_cast<Eigen::Index>(rep.rows[0].size()));
        for (std::size_t i = 0; i < rep.rows.size(); ++i)
            for (std::size_t j = 0; j < rep.rows[i].size(); ++j)
                M(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rep.rows[i][j];
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
        double top = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
        for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
            if (svd.singularValues()(i) > 1e-8 * std::max(1.0, top)) ++rep.rank;
    }
    rep.verdict = classify_classical(p, tol).verdict;
    return rep;
}

}  // namespace entrocone
