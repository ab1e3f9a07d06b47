#include "entrocone/rank_vectors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace entrocone {

namespace {

long inv_mod(long a, long p) {
    a = ((a % p) + p) % p;
    for (long x = 1; x < p; ++x)
        if ((a * x) % p == 1) return x;
    throw std::invalid_argument("inv_mod: not invertible (p not prime?)");
}

}  // namespace

FpMat rref_mod_p(FpMat rows, long p) {
    if (rows.empty()) return rows;
    const std::size_t cols = rows[0].size();
    for (auto& r : rows)
        for (long& x : r) x = ((x % p) + p) % p;
    std::size_t rr = 0;
    for (std::size_t c = 0; c < cols && rr < rows.size(); ++c) {
        std::size_t piv = rr;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rr], rows[piv]);
        long inv = inv_mod(rows[rr][c], p);
        for (std::size_t j = 0; j < cols; ++j) rows[rr][j] = (rows[rr][j] * inv) % p;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rr || rows[i][c] == 0) continue;
            long f = rows[i][c];
            for (std::size_t j = 0; j < cols; ++j) rows[i][j] = ((rows[i][j] - f * rows[rr][j]) % p + p) % p;
        }
        ++rr;
    }
    while (!rows.empty() && std::all_of(rows.back().begin(), rows.back().end(), [](long x) { return x == 0; }))
        rows.pop_back();
    return rows;
}

int rank_mod_p(const FpMat& rows, long p) { return static_cast<int>(rref_mod_p(rows, p).size()); }

FpMat nullspace_mod_p(const FpMat& rows, long p, int cols) {
    FpMat R = rref_mod_p(rows, p);
    std::vector<int> pivot_col;
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (const auto& r : R) {
        int c = 0;
        while (r[static_cast<std::size_t>(c)] == 0) ++c;
        pivot_col.push_back(c);
        is_pivot[static_cast<std::size_t>(c)] = true;
    }
    FpMat basis;
    for (int fc = 0; fc < cols; ++fc) {
        if (is_pivot[static_cast<std::size_t>(fc)]) continue;
        std::vector<long> v(static_cast<std::size_t>(cols), 0);
        v[static_cast<std::size_t>(fc)] = 1;
        for (std::size_t i = 0; i < R.size(); ++i)
            v[static_cast<std::size_t>(pivot_col[i])] = ((-R[i][static_cast<std::size_t>(fc)]) % p + p) % p;
        basis.push_back(std::move(v));
    }
    return rref_mod_p(std::move(basis), p);
}

void SubspaceFamily::validate() const {
    if (!is_prime_u64(static_cast<unsigned long>(p))) throw std::invalid_argument("subspace family: p must be prime");
    for (const FpMat& U : subspaces) {
        for (const auto& row : U)
            if (static_cast<int>(row.size()) != ambient)
                throw std::invalid_argument("subspace family: basis row length mismatch");
        if (static_cast<int>(U.size()) > ambient) throw std::invalid_argument("subspace family: rank exceeds ambient");
    }
}

std::vector<int> rank_vector(const SubspaceFamily& fam) {
    fam.validate();
    const int n = fam.n_subspaces();
    std::vector<int> r(std::size_t(1) << n, 0);
    for (Mask I = 1; I <= full_mask(n); ++I) {
        FpMat stacked;
        for (int i : parties_of(I))
            for (const auto& row : fam.subspaces[static_cast<std::size_t>(i - 1)]) stacked.push_back(row);
        r[I] = rank_mod_p(stacked, fam.p);
    }
    return r;
}

EntropyVector rank_to_entropy(const SubspaceFamily& fam) {
    std::vector<int> r = rank_vector(fam);
    EntropyVector v(fam.n_subspaces());
    const double logp = std::log2(static_cast<double>(fam.p));
    for (std::size_t i = 0; i < r.size(); ++i) v.entries[i] = logp * r[i];
    return v;
}

JointDistribution rank_witness_distribution(const SubspaceFamily& fam, std::size_t table_cap) {
    fam.validate();
    const int n = fam.n_subspaces();
    std::vector<int> dims;
    std::size_t table = 1;
    for (const FpMat& U : fam.subspaces) {
        std::size_t a = 1;
        for (std::size_t k = 0; k < U.size(); ++k) a *= static_cast<std::size_t>(fam.p);
        dims.push_back(static_cast<int>(a));
        table *= a;
        if (table > table_cap) throw std::runtime_error("rank witness: joint alphabet too large");
    }
    std::size_t points = 1;
    for (int i = 0; i < fam.ambient; ++i) {
        points *= static_cast<std::size_t>(fam.p);
        if (points > (1u << 26)) throw std::runtime_error("rank witness: dual space too large");
    }

    JointDistribution proto;
    proto.n_parties = n;
    proto.alphabet_sizes = dims;
    std::vector<Rat> probs(table, Rat(0));
    const Rat w(1, static_cast<unsigned long>(points));

    std::vector<long> x(static_cast<std::size_t>(fam.ambient), 0);
    for (std::size_t idx = 0; idx < points; ++idx) {
        std::size_t rest = idx;
        for (int i = fam.ambient - 1; i >= 0; --i) {
            x[static_cast<std::size_t>(i)] = static_cast<long>(rest % static_cast<std::size_t>(fam.p));
            rest /= static_cast<std::size_t>(fam.p);
        }
        std::vector<int> letters;
        for (const FpMat& U : fam.subspaces) {
            std::size_t code = 0;
            for (const auto& b : U) {
                long val = 0;
                for (int j = 0; j < fam.ambient; ++j)
                    val = (val + x[static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(j)]) % fam.p;
                code = code * static_cast<std::size_t>(fam.p) + static_cast<std::size_t>(val);
            }
            letters.push_back(static_cast<int>(code));
        }
        probs[proto.index_of(letters)] += w;
    }
    return JointDistribution::from_rationals(std::move(dims), std::move(probs));
}

SubspaceFamily annihilator_convert(const SubspaceFamily& W) {
    W.validate();
    SubspaceFamily V;
    V.p = W.p;
    V.ambient = W.ambient;
    for (const FpMat& Wi : W.subspaces) V.subspaces.push_back(nullspace_mod_p(Wi, W.p, W.ambient));

    // cross-check the two value families when the ambient space is small
    std::size_t points = 1;
    bool small = true;
    for (int i = 0; i < W.ambient; ++i) {
        points *= static_cast<std::size_t>(W.p);
        if (points > 4096) {
            small = false;
            break;
        }
    }
    if (small) {
        const int n = W.n_subspaces();
        for (Mask I = 1; I <= full_mask(n); ++I) {
            FpMat stacked;
            for (int i : parties_of(I))
                for (const auto& row : V.subspaces[static_cast<std::size_t>(i - 1)]) stacked.push_back(row);
            int dim_sum = rank_mod_p(stacked, W.p);
            // brute-force |intersection of the W_i|
            std::size_t members = 0;
            std::vector<long> x(static_cast<std::size_t>(W.ambient), 0);
            for (std::size_t idx = 0; idx < points; ++idx) {
                std::size_t rest = idx;
                for (int i = W.ambient - 1; i >= 0; --i) {
                    x[static_cast<std::size_t>(i)] = static_cast<long>(rest % static_cast<std::size_t>(W.p));
                    rest /= static_cast<std::size_t>(W.p);
                }
                bool in_all = true;
                for (int i : parties_of(I)) {
                    const FpMat& Wi = W.subspaces[static_cast<std::size_t>(i - 1)];
                    FpMat test = Wi;
                    test.push_back(x);
                    if (rank_mod_p(test, W.p) != static_cast<int>(Wi.size())) {
                        in_all = false;
                        break;
                    }
                }
                if (in_all) ++members;
            }
            int dim_cap = 0;
            for (std::size_t m = members; m > 1; m /= static_cast<std::size_t>(W.p)) ++dim_cap;
            if (dim_sum != W.ambient - dim_cap)
                throw std::logic_error("annihilator_convert: duality identity failed");
        }
    }
    return V;
}

SubspaceFamily stabilizer_rank_family(const Submodule& M) {
    const long d = M.space.d;
    if (!is_prime_u64(static_cast<unsigned long>(d)))
        throw std::invalid_argument("stabilizer_rank_family: local dimension must be prime");
    Submodule W = symplectic_complement(M);
    const FpMat& basis = W.generators;  // prime d: Howell form is an RREF basis
    const int w = static_cast<int>(basis.size());

    // pivot columns of the (prime-field) RREF rows give coordinates in W
    std::vector<int> pivots;
    for (const auto& row : basis) {
        int c = 0;
        while (row[static_cast<std::size_t>(c)] == 0) ++c;
        pivots.push_back(c);
    }
    auto coords = [&](const ZVec& v) {
        std::vector<long> c(static_cast<std::size_t>(w));
        for (int j = 0; j < w; ++j) c[static_cast<std::size_t>(j)] = v[static_cast<std::size_t>(pivots[static_cast<std::size_t>(j)])];
        return c;
    };

    SubspaceFamily fam;
    fam.p = d;
    fam.ambient = w;
    for (int i = 1; i <= M.space.n; ++i) {
        Submodule Ki = restrict_to(W, complement_in(Mask(1) << (i - 1), M.space.n));
        FpMat kc;
        for (const ZVec& g : Ki.generators) kc.push_back(coords(g));
        fam.subspaces.push_back(nullspace_mod_p(kc, d, w));
    }
    return fam;
}

}  // namespace entrocone
