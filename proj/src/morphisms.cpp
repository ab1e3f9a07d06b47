#include "entrocone/morphisms.hpp"

#include <cmath>
#include <stdexcept>

namespace entrocone {

Functional& Functional::operator+=(const Functional& o) {
    if (o.n != n) throw std::invalid_argument("functional size mismatch");
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
    drop_empty_coeff();
    return *this;
}

Functional& Functional::operator-=(const Functional& o) {
    if (o.n != n) throw std::invalid_argument("functional size mismatch");
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] -= o.coeffs[i];
    drop_empty_coeff();
    return *this;
}

Functional& Functional::operator*=(const Rat& s) {
    for (Rat& c : coeffs) c *= s;
    return *this;
}

double evaluate(const Functional& f, const EntropyVector& v) {
    if (f.n != v.n) throw std::invalid_argument("evaluate: size mismatch");
    double s = 0.0;
    for (std::size_t i = 1; i < f.coeffs.size(); ++i) {
        if (f.coeffs[i] != 0) s += f.coeffs[i].get_d() * v.entries[i];
    }
    return s;
}

Rat evaluate(const Functional& f, const RatVec& v) {
    if (v.size() != f.coeffs.size()) throw std::invalid_argument("evaluate: size mismatch");
    Rat s = 0;
    for (std::size_t i = 1; i < f.coeffs.size(); ++i) s += f.coeffs[i] * v[i];
    return s;
}

LogValue evaluate(const Functional& f, const ExactEntropyVector& v) {
    if (f.n != v.n) throw std::invalid_argument("evaluate: size mismatch");
    LogValue s;
    for (std::size_t i = 1; i < f.coeffs.size(); ++i) {
        if (f.coeffs[i] != 0) s += f.coeffs[i] * v.entries[i];
    }
    return s;
}

EntropyVector surject(const EntropyVector& v, int n) {
    if (n > v.n) throw std::invalid_argument("surject: target party count exceeds source");
    EntropyVector w(n);
    for (Mask J = 0; J <= full_mask(n); ++J) w[J] = v[J];
    return w;
}

EntropyVector inject(const EntropyVector& v, int m) {
    if (m < v.n) throw std::invalid_argument("inject: target party count below source");
    EntropyVector w(m);
    const Mask keep = full_mask(v.n);
    for (Mask J = 0; J <= full_mask(m); ++J) w[J] = v[J & keep];
    return w;
}

EntropyVector purify_map(const EntropyVector& v) {
    const int n = v.n;
    EntropyVector w(n + 1);
    const Mask newbit = Mask(1) << n;
    for (Mask J = 0; J <= full_mask(n + 1); ++J) {
        if (J & newbit)
            w[J] = v[complement_in(J, n + 1)];  // complement misses party n+1
        else
            w[J] = v[J];
    }
    return w;
}

EntropyVector block(const EntropyVector& v, const std::vector<int>& parts) {
    int m = 0;
    for (int p : parts) {
        if (p < 1) throw std::invalid_argument("block: composition parts must be positive");
        m += p;
    }
    if (m != v.n) throw std::invalid_argument("block: composition does not sum to the party count");
    const int n = static_cast<int>(parts.size());
    std::vector<Mask> blockmask(parts.size(), 0);
    int at = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (int k = 0; k < parts[i]; ++k) blockmask[i] |= Mask(1) << (at + k);
        at += parts[i];
    }
    EntropyVector w(n);
    for (Mask J = 0; J <= full_mask(n); ++J) {
        Mask K = 0;
        for (int i = 0; i < n; ++i)
            if (J & (Mask(1) << i)) K |= blockmask[static_cast<std::size_t>(i)];
        w[J] = v[K];
    }
    return w;
}

namespace {

// I subset [n] -> image subset of [n] under the "permute then flip to the
// representative avoiding n+1" rule.
Mask normalized_image(const std::vector<int>& perm, Mask I, int n) {
    Mask img = apply_perm(perm, I);
    if (img & (Mask(1) << n)) img = complement_in(img, n + 1);
    return img;
}

void check_perm(const std::vector<int>& perm, int n) {
    if (static_cast<int>(perm.size()) != n + 1 || !is_perm(perm))
        throw std::invalid_argument("symmetry_action: malformed permutation of [n+1]");
}

}  // namespace

RatVec symmetry_action(const std::vector<int>& perm, const RatVec& v, int n) {
    check_perm(perm, n);
    if (v.size() != (std::size_t(1) << n)) throw std::invalid_argument("symmetry_action: vector size");
    std::vector<int> inv = inverse_perm(perm);
    RatVec w(v.size());
    for (Mask I = 0; I <= full_mask(n); ++I) w[I] = v[normalized_image(inv, I, n)];
    return w;
}

EntropyVector symmetry_action(const std::vector<int>& perm, const EntropyVector& v) {
    check_perm(perm, v.n);
    std::vector<int> inv = inverse_perm(perm);
    EntropyVector w(v.n);
    for (Mask I = 0; I <= full_mask(v.n); ++I) w[I] = v[normalized_image(inv, I, v.n)];
    return w;
}

Functional adjoint_action(const std::vector<int>& perm, const Functional& f) {
    check_perm(perm, f.n);
    Functional g(f.n);
    for (Mask K = 0; K <= full_mask(f.n); ++K) g[normalized_image(perm, K, f.n)] += f[K];
    g.drop_empty_coeff();
    return g;
}

RatVec residual_weights(const Functional& f) {
    RatVec r(static_cast<std::size_t>(f.n), Rat(0));
    for (Mask I = 1; I <= full_mask(f.n); ++I) {
        if (f[I] == 0) continue;
        for (int i : parties_of(I)) r[static_cast<std::size_t>(i - 1)] += f[I];
    }
    return r;
}

Functional balance(const Functional& f) {
    RatVec r = residual_weights(f);
    Functional g = f;
    Rat total = 0;
    for (const Rat& x : r) total += x;
    g[full_mask(f.n)] -= total;
    for (int i = 1; i <= f.n; ++i) g[complement_in(Mask(1) << (i - 1), f.n)] += r[static_cast<std::size_t>(i - 1)];
    g.drop_empty_coeff();
    return g;
}

Functional monotonicity_functional(int i, int n) {
    Functional m(n);
    m[full_mask(n)] += 1;
    m[complement_in(Mask(1) << (i - 1), n)] -= 1;
    return m;
}

RatVec matus_transform(const RatVec& v, int n) {
    if (v.size() != (std::size_t(1) << n)) throw std::invalid_argument("matus_transform: vector size");
    const Mask full = full_mask(n);
    RatVec w(v.size(), Rat(0));
    for (Mask I = 0; I <= full; ++I) {
        Rat s = 0;
        // iterate K over subsets of I
        Mask K = I;
        while (true) {
            Rat term = v[full] - v[full & ~K];
            if (popcount(I & ~K) % 2 == 0)
                s += term;
            else
                s -= term;
            if (K == 0) break;
            K = (K - 1) & I;
        }
        w[I] = s;
    }
    return w;
}

EntropyVector matus_transform(const EntropyVector& v) {
    const Mask full = full_mask(v.n);
    EntropyVector w(v.n);
    for (Mask I = 0; I <= full; ++I) {
        double s = 0.0;
        Mask K = I;
        while (true) {
            double term = v[full] - v[full & ~K];
            s += (popcount(I & ~K) % 2 == 0) ? term : -term;
            if (K == 0) break;
            K = (K - 1) & I;
        }
        w[I] = s;
    }
    return w;
}

RatMat balanced_subspace_basis(int n) {
    // solve the n residual constraints over the coordinates I != empty
    const std::size_t dim = (std::size_t(1) << n);
    RatMat constraints;
    for (int i = 1; i <= n; ++i) {
        RatVec row(dim, Rat(0));
        for (Mask I = 1; I < dim; ++I)
            if (contains(I, i)) row[I] = 1;
        constraints.push_back(std::move(row));
    }
    RatMat R = rref(std::move(constraints));
    // pivot columns of the constraint system
    std::vector<bool> is_pivot(dim, false);
    for (const RatVec& row : R) {
        std::size_t c = 0;
        while (c < dim && row[c] == 0) ++c;
        if (c < dim) is_pivot[c] = true;
    }
    RatMat basis;
    for (std::size_t freecol = 1; freecol < dim; ++freecol) {
        if (is_pivot[freecol]) continue;
        RatVec b(dim, Rat(0));
        b[freecol] = 1;
        for (const RatVec& row : R) {
            std::size_t c = 0;
            while (c < dim && row[c] == 0) ++c;
            if (c < dim && row[freecol] != 0) b[c] = -row[freecol] / row[c];
        }
        basis.push_back(std::move(b));
    }
    return basis;
}

RatVec to_rational_vector(const EntropyVector& v, long denom_limit) {
    RatVec out(v.entries.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        double x = v.entries[i];
        double r = std::round(x * static_cast<double>(denom_limit));
        if (std::fabs(r - x * static_cast<double>(denom_limit)) > 1e-6)
            throw std::invalid_argument("to_rational_vector: entry is not close to a small rational");
        Rat q(static_cast<long>(r), denom_limit);
        q.canonicalize();
        out[i] = q;
    }
    return out;
}

}  // namespace entrocone
