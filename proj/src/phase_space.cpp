#include "entrocone/phase_space.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace entrocone {

namespace {

long mod(long x, long d) { return ((x % d) + d) % d; }

// extended gcd over Z: returns g, sets s,t with s*a + t*b = g
long extgcd(long a, long b, long& s, long& t) {
    if (b == 0) {
        s = (a >= 0) ? 1 : -1;
        t = 0;
        return std::labs(a);
    }
    long s1, t1;
    long g = extgcd(b, a % b, s1, t1);
    s = t1;
    t = s1 - (a / b) * t1;
    return g;
}

// unit u mod N with u*a == gcd(a,N) (mod N); N is small here
long stabilizing_unit(long a, long N) {
    long g = std::gcd(a, N);
    for (long u = 1; u < N; ++u) {
        if (std::gcd(u, N) == 1 && mod(u * a, N) == g) return u;
    }
    if (g == mod(a, N)) return 1;
    throw std::logic_error("no stabilizing unit found");
}

void reduce_row(ZVec& r, long d) {
    for (long& x : r) x = mod(x, d);
}

bool row_is_zero(const ZVec& r) {
    return std::all_of(r.begin(), r.end(), [](long x) { return x == 0; });
}

std::size_t checked_space_size(const PhaseSpace& space) {
    double size = std::pow(static_cast<double>(space.d), 2.0 * space.n);
    if (size > double(1u << 24)) throw std::runtime_error("phase space too large for dense submodule arithmetic");
    std::size_t s = 1;
    for (int i = 0; i < 2 * space.n; ++i) s *= static_cast<std::size_t>(space.d);
    return s;
}

ZVec vector_at(std::size_t index, const PhaseSpace& space) {
    ZVec v(static_cast<std::size_t>(2 * space.n));
    for (int i = 2 * space.n - 1; i >= 0; --i) {
        v[static_cast<std::size_t>(i)] = static_cast<long>(index % static_cast<std::size_t>(space.d));
        index /= static_cast<std::size_t>(space.d);
    }
    return v;
}

}  // namespace

long symplectic_form(const ZVec& v, const ZVec& w, const PhaseSpace& space) {
    if (static_cast<int>(v.size()) != space.coords() || static_cast<int>(w.size()) != space.coords())
        throw std::invalid_argument("symplectic_form: coordinate count mismatch");
    long s = 0;
    for (int i = 0; i < space.n; ++i) {
        s = mod(s + v[static_cast<std::size_t>(i)] * w[static_cast<std::size_t>(i + space.n)] -
                    v[static_cast<std::size_t>(i + space.n)] * w[static_cast<std::size_t>(i)],
                space.d);
    }
    return s;
}

ZMat howell_form(ZMat rows, int d, int cols) {
    const long N = d;
    for (ZVec& r : rows) {
        if (static_cast<int>(r.size()) != cols) throw std::invalid_argument("howell_form: ragged rows");
        reduce_row(r, N);
    }
    rows.erase(std::remove_if(rows.begin(), rows.end(), row_is_zero), rows.end());

    ZMat out;
    ZMat work = std::move(rows);
    for (int c = 0; c < cols; ++c) {
        // invariant: every row in work is zero left of column c
        std::vector<std::size_t> hit;
        for (std::size_t i = 0; i < work.size(); ++i) {
            if (work[i][static_cast<std::size_t>(c)] != 0) hit.push_back(i);
        }
        if (hit.empty()) continue;
        // fold all rows with support at c into the first via unimodular 2x2 transforms
        std::size_t a = hit[0];
        for (std::size_t k = 1; k < hit.size(); ++k) {
            std::size_t b = hit[k];
            long ac = work[a][static_cast<std::size_t>(c)];
            long bc = work[b][static_cast<std::size_t>(c)];
            long s, t;
            long g = extgcd(ac, bc, s, t);
            ZVec na(work[a].size()), nb(work[b].size());
            for (std::size_t j = 0; j < na.size(); ++j) {
                na[j] = mod(s * work[a][j] + t * work[b][j], N);
                nb[j] = mod((bc / g) * work[a][j] - (ac / g) * work[b][j], N);
            }
            work[a] = std::move(na);
            work[b] = std::move(nb);
        }
        // normalize the pivot's leading entry to gcd(entry, N) via a unit
        long lead = work[a][static_cast<std::size_t>(c)];
        long u = stabilizing_unit(lead, N);
        for (long& x : work[a]) x = mod(u * x, N);
        long g = work[a][static_cast<std::size_t>(c)];
        // annihilator multiple keeps span elements with zero prefix reachable
        ZVec ann(work[a].size());
        for (std::size_t j = 0; j < ann.size(); ++j) ann[j] = mod((N / g) * work[a][j], N);
        out.push_back(work[a]);
        work.erase(work.begin() + static_cast<long>(a));
        if (!row_is_zero(ann)) work.push_back(std::move(ann));
        work.erase(std::remove_if(work.begin(), work.end(), row_is_zero), work.end());
    }
    // reduce entries above each pivot modulo the pivot value
    for (std::size_t i = 0; i < out.size(); ++i) {
        int c = 0;
        while (out[i][static_cast<std::size_t>(c)] == 0) ++c;
        long g = out[i][static_cast<std::size_t>(c)];
        for (std::size_t j = 0; j < i; ++j) {
            long q = out[j][static_cast<std::size_t>(c)] / g;
            if (q == 0) continue;
            for (std::size_t t = 0; t < out[j].size(); ++t) out[j][t] = mod(out[j][t] - q * out[i][t], N);
        }
    }
    return out;
}

Submodule canonicalize(const ZMat& generators, const PhaseSpace& space) {
    if (space.d < 2 || space.n < 1) throw std::invalid_argument("canonicalize: bad phase space");
    Submodule M;
    M.space = space;
    M.generators = howell_form(generators, space.d, space.coords());
    return M;
}

bool submodule_contains(const Submodule& M, ZVec v) {
    const long N = M.space.d;
    reduce_row(v, N);
    for (const ZVec& row : M.generators) {
        std::size_t c = 0;
        while (row[c] == 0) ++c;
        long g = row[c];
        if (v[c] % g != 0) continue;  // cannot cancel with this pivot; fall through
        long q = v[c] / g;
        for (std::size_t j = 0; j < v.size(); ++j) v[j] = mod(v[j] - q * row[j], N);
    }
    return row_is_zero(v);
}

Int cardinality(const Submodule& M) {
    Int card = 1;
    for (const ZVec& row : M.generators) {
        std::size_t c = 0;
        while (row[c] == 0) ++c;
        card *= static_cast<long>(M.space.d) / row[c];
    }
    return card;
}

std::vector<ZVec> elements(const Submodule& M) {
    const long N = M.space.d;
    std::vector<long> orders;
    for (const ZVec& row : M.generators) {
        std::size_t c = 0;
        while (row[c] == 0) ++c;
        orders.push_back(N / row[c]);
    }
    std::vector<ZVec> out;
    Int total = cardinality(M);
    if (!total.fits_ulong_p()) throw std::runtime_error("submodule too large to enumerate");
    out.reserve(total.get_ui());
    std::vector<long> coeff(orders.size(), 0);
    ZVec zero(static_cast<std::size_t>(M.space.coords()), 0);
    while (true) {
        ZVec m = zero;
        for (std::size_t i = 0; i < coeff.size(); ++i) {
            if (coeff[i] == 0) continue;
            for (std::size_t j = 0; j < m.size(); ++j) m[j] = mod(m[j] + coeff[i] * M.generators[i][j], N);
        }
        out.push_back(std::move(m));
        std::size_t i = 0;
        for (; i < coeff.size(); ++i) {
            if (++coeff[i] < orders[i]) break;
            coeff[i] = 0;
        }
        if (i == coeff.size()) break;
    }
    return out;
}

bool is_isotropic(const Submodule& M) {
    for (std::size_t i = 0; i < M.generators.size(); ++i)
        for (std::size_t j = i; j < M.generators.size(); ++j)
            if (symplectic_form(M.generators[i], M.generators[j], M.space) != 0) return false;
    return true;
}

Submodule symplectic_complement(const Submodule& M) {
    const std::size_t vol = checked_space_size(M.space);
    Int target = Int(vol) / cardinality(M);  // |M||M^w| = |V|
    Submodule C = canonicalize({}, M.space);
    for (std::size_t idx = 0; idx < vol && cardinality(C) < target; ++idx) {
        ZVec v = vector_at(idx, M.space);
        bool ok = true;
        for (const ZVec& g : M.generators) {
            if (symplectic_form(g, v, M.space) != 0) {
                ok = false;
                break;
            }
        }
        if (!ok || submodule_contains(C, v)) continue;
        ZMat gens = C.generators;
        gens.push_back(std::move(v));
        C = canonicalize(gens, M.space);
    }
    return C;
}

Submodule restrict_to(const Submodule& M, Mask I) {
    if (I & ~full_mask(M.space.n)) throw std::invalid_argument("restrict_to: subset out of range");
    ZMat kept;
    for (const ZVec& m : elements(M)) {
        bool supported = true;
        for (int i = 1; i <= M.space.n && supported; ++i) {
            if (contains(I, i)) continue;
            if (m[static_cast<std::size_t>(i - 1)] != 0 || m[static_cast<std::size_t>(i - 1 + M.space.n)] != 0)
                supported = false;
        }
        if (supported) kept.push_back(m);
    }
    return canonicalize(kept, M.space);
}

ExactEntropyVector stabilizer_entropy_exact(const Submodule& M) {
    if (!is_isotropic(M)) throw std::invalid_argument("stabilizer entropy: submodule is not isotropic");
    ExactEntropyVector v(M.space.n);
    const LogValue logd = LogValue::log2_of_int(M.space.d);
    for (Mask I = 1; I <= full_mask(M.space.n); ++I) {
        LogValue s = Rat(popcount(I)) * logd;
        s -= LogValue::log2_of_int(cardinality(restrict_to(M, I)));
        v[I] = s;
    }
    return v;
}

EntropyVector stabilizer_entropy_vector(const Submodule& M) { return stabilizer_entropy_exact(M).to_double(); }

ExactEntropyVector classical_model_exact(const Submodule& M) {
    if (!is_isotropic(M)) throw std::invalid_argument("classical model: submodule is not isotropic");
    Submodule W = symplectic_complement(M);
    const LogValue logW = LogValue::log2_of_int(cardinality(W));
    ExactEntropyVector v(M.space.n);
    for (Mask I = 1; I <= full_mask(M.space.n); ++I) {
        Submodule K = restrict_to(W, complement_in(I, M.space.n));  // ker(pi_I) cap M^w
        v[I] = logW - LogValue::log2_of_int(cardinality(K));
    }
    return v;
}

EntropyVector classical_model_vector(const Submodule& M) { return classical_model_exact(M).to_double(); }

std::vector<long> prime_factors_squarefree(long d) {
    if (d < 2) throw std::invalid_argument("dimension must be >= 2");
    std::vector<long> primes;
    long rest = d;
    for (long p = 2; p * p <= rest; ++p) {
        if (rest % p != 0) continue;
        rest /= p;
        if (rest % p == 0) throw std::invalid_argument("unsupported dimension: " + std::to_string(d) + " is not square-free");
        primes.push_back(p);
    }
    if (rest > 1) primes.push_back(rest);
    return primes;
}

std::vector<Submodule> crt_decompose(const Submodule& M) {
    const long d = M.space.d;
    std::vector<long> primes = prime_factors_squarefree(d);
    std::vector<Submodule> parts;
    for (long p : primes) {
        const long r = d / p;
        ZMat rows;
        for (const ZVec& g : M.generators) {
            ZVec row(g.size());
            for (std::size_t j = 0; j < g.size(); ++j) row[j] = mod(mod(r * g[j], d), p);
            rows.push_back(std::move(row));
        }
        PhaseSpace sp{M.space.n, static_cast<int>(p)};
        parts.push_back(canonicalize(rows, sp));
    }
    return parts;
}

Submodule crt_recombine(const std::vector<Submodule>& parts, const PhaseSpace& space) {
    const long d = space.d;
    ZMat rows;
    for (const Submodule& part : parts) {
        const long p = part.space.d;
        const long r = d / p;
        // CRT idempotent: e == 1 mod p, 0 mod d/p
        long rinv = 0;
        for (long u = 1; u < p; ++u) {
            if (mod(r * u, p) == 1) {
                rinv = u;
                break;
            }
        }
        const long e = mod(r * rinv, d);
        for (const ZVec& g : part.generators) {
            ZVec row(g.size());
            for (std::size_t j = 0; j < g.size(); ++j) row[j] = mod(e * g[j], d);
            rows.push_back(std::move(row));
        }
    }
    return canonicalize(rows, space);
}

EnumerationResult enumerate_isotropic(const PhaseSpace& space, std::size_t budget, std::uint64_t seed) {
    EnumerationResult res;
    if (budget == 0) return res;
    const std::size_t vol = checked_space_size(space);

    std::set<ZMat> seen;
    std::vector<Submodule> all;
    auto visit = [&](const Submodule& M) {
        if (seen.insert(M.generators).second) all.push_back(M);
    };

    if (vol <= 4096) {
        // exhaustive: grow one isotropic-compatible generator at a time
        visit(canonicalize({}, space));
        for (std::size_t head = 0; head < all.size(); ++head) {
            Submodule M = all[head];  // copy: all may reallocate
            for (std::size_t idx = 1; idx < vol; ++idx) {
                ZVec v = vector_at(idx, space);
                bool compat = true;
                for (const ZVec& g : M.generators) {
                    if (symplectic_form(g, v, space) != 0) {
                        compat = false;
                        break;
                    }
                }
                if (!compat || submodule_contains(M, v)) continue;
                ZMat gens = M.generators;
                gens.push_back(std::move(v));
                visit(canonicalize(gens, space));
            }
        }
        std::sort(all.begin(), all.end());
        if (all.size() > budget) {
            all.resize(budget);
            res.truncated = true;
        }
        res.modules = std::move(all);
        return res;
    }

    // large space: seeded random isotropic chains, deduplicated
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, vol - 1);
    std::size_t stale = 0;
    visit(canonicalize({}, space));
    while (all.size() < budget && stale < 50000) {
        Submodule M = all.empty() ? canonicalize({}, space) : all[pick(rng) % all.size()];
        ZVec v = vector_at(pick(rng), space);
        bool compat = true;
        for (const ZVec& g : M.generators) {
            if (symplectic_form(g, v, space) != 0) {
                compat = false;
                break;
            }
        }
        if (!compat || submodule_contains(M, v)) {
            ++stale;
            continue;
        }
        ZMat gens = M.generators;
        gens.push_back(std::move(v));
        std::size_t before = all.size();
        visit(canonicalize(gens, space));
        stale = (all.size() == before) ? stale + 1 : 0;
    }
    res.truncated = all.size() >= budget;
    std::sort(all.begin(), all.end());
    if (all.size() > budget) all.resize(budget);
    res.modules = std::move(all);
    return res;
}

}  // namespace entrocone
