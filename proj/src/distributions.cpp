#include "entrocone/distributions.hpp"

#include <cmath>
#include <stdexcept>

namespace entrocone {

std::size_t JointDistribution::table_size() const {
    std::size_t s = 1;
    for (int d : alphabet_sizes) s *= static_cast<std::size_t>(d);
    return s;
}

std::size_t JointDistribution::index_of(const std::vector<int>& letters) const {
    std::size_t idx = 0;
    for (int i = 0; i < n_parties; ++i) {
        if (letters[i] < 0 || letters[i] >= alphabet_sizes[i]) throw std::out_of_range("letter out of range");
        idx = idx * static_cast<std::size_t>(alphabet_sizes[i]) + static_cast<std::size_t>(letters[i]);
    }
    return idx;
}

std::vector<int> JointDistribution::letters_of(std::size_t index) const {
    std::vector<int> letters(n_parties);
    for (int i = n_parties - 1; i >= 0; --i) {
        letters[i] = static_cast<int>(index % static_cast<std::size_t>(alphabet_sizes[i]));
        index /= static_cast<std::size_t>(alphabet_sizes[i]);
    }
    return letters;
}

void JointDistribution::validate() const {
    if (n_parties < 1) throw std::invalid_argument("invalid distribution: need at least one party");
    if (static_cast<int>(alphabet_sizes.size()) != n_parties)
        throw std::invalid_argument("invalid distribution: alphabet list size");
    for (int d : alphabet_sizes) {
        if (d < 1) throw std::invalid_argument("invalid distribution: alphabet size < 1");
    }
    if (probs_f.size() != table_size()) throw std::invalid_argument("invalid distribution: table length");
    if (rational) {
        if (probs_q.size() != table_size()) throw std::invalid_argument("invalid distribution: rational table length");
        Rat sum = 0;
        for (const Rat& p : probs_q) {
            if (p < 0) throw std::invalid_argument("invalid distribution: negative entry");
            sum += p;
        }
        if (sum != 1) throw std::invalid_argument("invalid distribution: sum != 1");
    } else {
        double sum = 0.0;
        for (double p : probs_f) {
            if (p < 0.0) throw std::invalid_argument("invalid distribution: negative entry");
            sum += p;
        }
        if (std::fabs(sum - 1.0) > 1e-12) throw std::invalid_argument("invalid distribution: sum not 1 within 1e-12");
    }
}

JointDistribution JointDistribution::from_floats(std::vector<int> dims, std::vector<double> p) {
    JointDistribution j;
    j.n_parties = static_cast<int>(dims.size());
    j.alphabet_sizes = std::move(dims);
    j.rational = false;
    j.probs_f = std::move(p);
    j.validate();
    return j;
}

JointDistribution JointDistribution::from_rationals(std::vector<int> dims, std::vector<Rat> p) {
    JointDistribution j;
    j.n_parties = static_cast<int>(dims.size());
    j.alphabet_sizes = std::move(dims);
    j.rational = true;
    j.probs_q = std::move(p);
    j.probs_f.resize(j.probs_q.size());
    for (std::size_t i = 0; i < j.probs_q.size(); ++i) j.probs_f[i] = j.probs_q[i].get_d();
    j.validate();
    return j;
}

Int JointDistribution::denominator() const {
    if (!rational) throw std::invalid_argument("denominator: distribution is not rational");
    Int l = 1;
    for (const Rat& p : probs_q) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), p.get_den_mpz_t());
    return l;
}

double shannon_entropy(const std::vector<double>& p) {
    double sum = 0.0;
    for (double x : p) {
        if (x < -1e-12) throw std::invalid_argument("invalid distribution: negative entry");
        sum += x;
    }
    if (std::fabs(sum - 1.0) > 1e-9) throw std::invalid_argument("invalid distribution: sum not 1");
    double h = 0.0;
    for (double x : p) {
        if (x > 0.0) h -= x * std::log2(x);  // 0 log 0 := 0
    }
    return h < 0.0 ? 0.0 : h;
}

JointDistribution marginalize(const JointDistribution& joint, Mask I) {
    if (I & ~full_mask(joint.n_parties)) throw std::out_of_range("marginalize: subset out of range");
    std::vector<int> kept = parties_of(I);

    JointDistribution out;
    out.n_parties = static_cast<int>(kept.size());
    if (out.n_parties == 0) {
        // marginal over the empty set: one outcome carrying all mass
        out.n_parties = 1;
        out.alphabet_sizes = {1};
        out.rational = joint.rational;
        if (joint.rational) out.probs_q = {Rat(1)};
        out.probs_f = {1.0};
        return out;
    }
    for (int p : kept) out.alphabet_sizes.push_back(joint.alphabet_sizes[p - 1]);
    out.rational = joint.rational;
    const std::size_t osize = out.table_size();
    if (out.rational) out.probs_q.assign(osize, Rat(0));
    out.probs_f.assign(osize, 0.0);

    const std::size_t jsize = joint.table_size();
    for (std::size_t idx = 0; idx < jsize; ++idx) {
        std::vector<int> letters = joint.letters_of(idx);
        std::size_t oidx = 0;
        for (std::size_t k = 0; k < kept.size(); ++k)
            oidx = oidx * static_cast<std::size_t>(out.alphabet_sizes[k]) +
                   static_cast<std::size_t>(letters[kept[k] - 1]);
        if (joint.rational) out.probs_q[oidx] += joint.probs_q[idx];
        out.probs_f[oidx] += joint.probs_f[idx];
    }
    if (out.rational) {
        for (std::size_t i = 0; i < osize; ++i) out.probs_f[i] = out.probs_q[i].get_d();
    }
    return out;
}

EntropyVector entropy_vector_classical(const JointDistribution& joint) {
    joint.validate();
    EntropyVector v(joint.n_parties);
    const Mask full = full_mask(joint.n_parties);
    for (Mask I = 1; I <= full; ++I) {
        JointDistribution m = marginalize(joint, I);
        v[I] = shannon_entropy(m.probs_f);
    }
    return v;
}

JointDistribution correlated_bits(int n, Mask I) {
    std::vector<int> dims(static_cast<std::size_t>(n), 2);
    std::vector<Rat> p(std::size_t(1) << n, Rat(0));
    JointDistribution proto;
    proto.n_parties = n;
    proto.alphabet_sizes = dims;
    for (int b = 0; b < 2; ++b) {
        std::vector<int> letters(static_cast<std::size_t>(n), 0);
        for (int i : parties_of(I)) letters[i - 1] = b;
        p[proto.index_of(letters)] += Rat(1, 2);
    }
    return JointDistribution::from_rationals(dims, std::move(p));
}

JointDistribution uniform_on_support(std::vector<int> dims, const std::vector<std::size_t>& support) {
    if (support.empty()) throw std::invalid_argument("uniform_on_support: empty support");
    JointDistribution proto;
    proto.n_parties = static_cast<int>(dims.size());
    proto.alphabet_sizes = dims;
    std::vector<Rat> p(proto.table_size(), Rat(0));
    Rat w(1, static_cast<unsigned long>(support.size()));
    for (std::size_t s : support) p.at(s) += w;
    return JointDistribution::from_rationals(std::move(dims), std::move(p));
}

}  // namespace entrocone
