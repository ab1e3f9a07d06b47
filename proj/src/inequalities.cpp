#include "entrocone/inequalities.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace entrocone {

namespace {

void check_subset(Mask I, int n, const char* what) {
    if (I & ~full_mask(n)) throw std::invalid_argument(std::string(what) + ": subset out of range");
}

}  // namespace

Functional ssa(Mask I, Mask J, int n) {
    check_subset(I, n, "ssa");
    check_subset(J, n, "ssa");
    Functional f(n);
    f[I] += 1;
    f[J] += 1;
    f[I | J] -= 1;
    f[I & J] -= 1;
    f.drop_empty_coeff();
    return f;
}

Functional weak_monotonicity(Mask I, Mask J, int n) {
    check_subset(I, n, "weak_monotonicity");
    check_subset(J, n, "weak_monotonicity");
    Functional f(n);
    f[I] += 1;
    f[J] += 1;
    f[I & ~J] -= 1;
    f[J & ~I] -= 1;
    f.drop_empty_coeff();
    return f;
}

Functional conditional_mutual_information(Mask A, Mask B, Mask C, int n) {
    check_subset(A | B | C, n, "conditional_mutual_information");
    Functional f(n);
    f[A | C] += 1;
    f[B | C] += 1;
    f[A | B | C] -= 1;
    f[C] -= 1;
    f.drop_empty_coeff();
    return f;
}

std::vector<NamedInequality> elemental_shannon(int n) {
    std::vector<NamedInequality> out;
    for (int i = 1; i <= n; ++i) {
        Mask mi = Mask(1) << (i - 1);
        NamedInequality q;
        q.name = "H(" + std::to_string(i) + "|" + subset_name(complement_in(mi, n)) + ")";
        q.functional = conditional_mutual_information(mi, mi, complement_in(mi, n), n);
        q.family = InequalityFamily::ShannonElemental;
        out.push_back(std::move(q));
    }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            Mask mi = Mask(1) << (i - 1), mj = Mask(1) << (j - 1);
            Mask rest = full_mask(n) & ~(mi | mj);
            // iterate K over subsets of rest
            Mask K = rest;
            while (true) {
                NamedInequality q;
                q.name = "I(" + std::to_string(i) + ":" + std::to_string(j) + "|" + subset_name(K) + ")";
                q.functional = conditional_mutual_information(mi, mj, K, n);
                q.family = InequalityFamily::ShannonElemental;
                out.push_back(std::move(q));
                if (K == 0) break;
                K = (K - 1) & rest;
            }
        }
    return out;
}

PippengerSets pippenger_sets(int n) {
    PippengerSets sets;
    // E_Delta: I\J = {i}, J\I = {j}, i < j, shared part K free
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            Mask mi = Mask(1) << (i - 1), mj = Mask(1) << (j - 1);
            Mask rest = full_mask(n) & ~(mi | mj);
            Mask K = rest;
            while (true) {
                NamedInequality q;
                q.name = "Delta[" + subset_name(K | mi) + ";" + subset_name(K | mj) + "]";
                q.functional = ssa(K | mi, K | mj, n);
                q.family = InequalityFamily::SSA;
                sets.e_delta.push_back(std::move(q));
                if (K == 0) break;
                K = (K - 1) & rest;
            }
        }
    // E_E: I cap J = {k}, I cup J = [n], k+1 in I cyclically
    for (int k = 1; k <= n; ++k) {
        Mask mk = Mask(1) << (k - 1);
        int succ = (k % n) + 1;
        Mask msucc = Mask(1) << (succ - 1);
        Mask rest = full_mask(n) & ~mk;
        // split rest between I and J; S = part that joins I
        Mask S = rest;
        while (true) {
            Mask I = mk | S, J = mk | (rest & ~S);
            if (n == 1 || (I & msucc)) {
                NamedInequality q;
                q.name = "E[" + subset_name(I) + ";" + subset_name(J) + "]";
                q.functional = weak_monotonicity(I, J, n);
                q.family = InequalityFamily::WeakMonotonicity;
                sets.e_e.push_back(std::move(q));
            }
            if (S == 0) break;
            S = (S - 1) & rest;
        }
    }
    return sets;
}

std::vector<NamedInequality> xi_catalog(int n) {
    std::vector<NamedInequality> out;
    std::map<RatVec, bool> seen;
    const Mask full = full_mask(n);
    for (Mask I = 0; I <= full; ++I)
        for (Mask J = 0; J <= full; ++J) {
            Functional d = ssa(I, J, n);
            if (!d.is_zero() && !seen.count(d.coeffs)) {
                seen[d.coeffs] = true;
                out.push_back({"Delta[" + subset_name(I) + ";" + subset_name(J) + "]", d, InequalityFamily::SSA});
            }
            Functional e = weak_monotonicity(I, J, n);
            if (!e.is_zero() && !seen.count(e.coeffs)) {
                seen[e.coeffs] = true;
                out.push_back(
                    {"E[" + subset_name(I) + ";" + subset_name(J) + "]", e, InequalityFamily::WeakMonotonicity});
            }
        }
    return out;
}

NamedInequality zhang_yeung() {
    const int n = 4;
    const Mask m1 = 1, m2 = 2, m3 = 4, m4 = 8;
    Functional f = conditional_mutual_information(m1, m2, 0, n);
    f += conditional_mutual_information(m1, m3 | m4, 0, n);
    f += Rat(3) * conditional_mutual_information(m3, m4, m1, n);
    f += conditional_mutual_information(m3, m4, m2, n);
    f -= Rat(2) * conditional_mutual_information(m3, m4, 0, n);
    return {"ZhangYeung", f, InequalityFamily::NonShannon};
}

NamedInequality ingleton() {
    const int n = 4;
    const Mask m1 = 1, m2 = 2, m3 = 4, m4 = 8;
    Functional f = conditional_mutual_information(m1, m2, m3, n);
    f += conditional_mutual_information(m1, m2, m4, n);
    f += conditional_mutual_information(m3, m4, 0, n);
    f -= conditional_mutual_information(m1, m2, 0, n);
    return {"Ingleton", f, InequalityFamily::LinearRank};
}

std::string functional_pretty(const Functional& f) {
    std::ostringstream os;
    bool first = true;
    for (Mask I = 1; I <= full_mask(f.n); ++I) {
        if (f[I] == 0) continue;
        Rat c = f[I];
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0)
            os << "-";
        Rat a = abs(c);
        if (a != 1) os << a.get_str() << " ";
        os << "S(" << subset_name(I) << ")";
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace entrocone
