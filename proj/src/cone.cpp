#include "entrocone/cone.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>

#include "entrocone/parallel.hpp"

namespace entrocone {

namespace {

constexpr int kMaxEnumerationDim = 16;

using Bits = std::vector<std::uint64_t>;

void bits_set(Bits& b, std::size_t i) { b[i >> 6] |= (std::uint64_t(1) << (i & 63)); }

Bits bits_and(const Bits& a, const Bits& b) {
    Bits out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] & b[i];
    return out;
}

bool bits_superset(const Bits& big, const Bits& small) {
    for (std::size_t i = 0; i < big.size(); ++i)
        if ((big[i] & small[i]) != small[i]) return false;
    return true;
}

struct Ray {
    RatVec vec;
    Bits tight;  // processed halfspaces this ray is tight on
};

RatMat sorted_canonical(RatMat rows) {
    for (RatVec& r : rows) r = primitive_scaled(r);
    rows.erase(std::remove_if(rows.begin(), rows.end(), [](const RatVec& r) { return is_zero_vec(r); }), rows.end());
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    return rows;
}

}  // namespace

PolyCone PolyCone::from_generators(int dim, RatMat gens) {
    for (const RatVec& g : gens) {
        if (static_cast<int>(g.size()) != dim) throw std::invalid_argument("cone: generator dimension mismatch");
        if (is_zero_vec(g)) throw std::invalid_argument("cone: zero generator");
    }
    PolyCone c;
    c.n_ambient = dim;
    c.generators = sorted_canonical(std::move(gens));
    return c;
}

PolyCone PolyCone::from_halfspaces(int dim, RatMat hs) {
    for (const RatVec& h : hs)
        if (static_cast<int>(h.size()) != dim) throw std::invalid_argument("cone: halfspace dimension mismatch");
    PolyCone c;
    c.n_ambient = dim;
    c.halfspaces = sorted_canonical(std::move(hs));
    return c;
}

PolyCone PolyCone::from_functionals(int n, const std::vector<Functional>& fns) {
    RatMat rows;
    for (const Functional& f : fns) {
        if (f.n != n) throw std::invalid_argument("cone: functional party count mismatch");
        rows.push_back(f.coeffs);
    }
    return from_halfspaces(1 << n, std::move(rows));
}

VDescription double_description(const RatMat& halfspaces_in, int dim, bool parallel) {
    if (dim > kMaxEnumerationDim)
        throw std::runtime_error("double description: ambient dimension " + std::to_string(dim) +
                                 " exceeds the enumeration bound " + std::to_string(kMaxEnumerationDim));
    RatMat halfspaces = sorted_canonical(halfspaces_in);

    // start from the whole space
    RatMat lineality;
    for (int i = 0; i < dim; ++i) {
        RatVec e(static_cast<std::size_t>(dim), Rat(0));
        e[static_cast<std::size_t>(i)] = 1;
        lineality.push_back(std::move(e));
    }
    std::vector<Ray> rays;
    const std::size_t words = (halfspaces.size() + 64) / 64;

    for (std::size_t hidx = 0; hidx < halfspaces.size(); ++hidx) {
        const RatVec& h = halfspaces[hidx];

        // try to retire one lineality direction against h
        std::size_t l0 = lineality.size();
        for (std::size_t i = 0; i < lineality.size(); ++i) {
            if (dot(h, lineality[i]) != 0) {
                l0 = i;
                break;
            }
        }
        if (l0 < lineality.size()) {
            RatVec dir = lineality[l0];
            Rat hd = dot(h, dir);
            if (hd < 0) {
                for (Rat& x : dir) x = -x;
                hd = -hd;
            }
            RatMat newlin;
            for (std::size_t i = 0; i < lineality.size(); ++i) {
                if (i == l0) continue;
                Rat f = dot(h, lineality[i]) / hd;
                RatVec l = lineality[i];
                for (std::size_t j = 0; j < l.size(); ++j) l[j] -= f * dir[j];
                newlin.push_back(primitive_scaled(l));
            }
            lineality = std::move(newlin);
            for (Ray& r : rays) {
                Rat f = dot(h, r.vec) / hd;
                if (f != 0) {
                    for (std::size_t j = 0; j < r.vec.size(); ++j) r.vec[j] -= f * dir[j];
                    r.vec = primitive_scaled(r.vec);
                }
                bits_set(r.tight, hidx);
            }
            Ray nr;
            nr.vec = primitive_scaled(dir);
            nr.tight.assign(words, 0);
            for (std::size_t j = 0; j < hidx; ++j) bits_set(nr.tight, j);  // lineality was orthogonal to all previous
            rays.push_back(std::move(nr));
            continue;
        }

        // split rays by the sign of h
        std::vector<std::size_t> pos, neg, zero;
        std::vector<Rat> val(rays.size());
        for (std::size_t i = 0; i < rays.size(); ++i) {
            val[i] = dot(h, rays[i].vec);
            if (val[i] > 0)
                pos.push_back(i);
            else if (val[i] < 0)
                neg.push_back(i);
            else
                zero.push_back(i);
        }
        if (neg.empty()) {
            for (std::size_t i : zero) bits_set(rays[i].tight, hidx);
            continue;  // halfspace redundant at this point
        }

        const int lin_rank = static_cast<int>(lineality.size());
        auto adjacent = [&](std::size_t p, std::size_t q) {
            Bits T = bits_and(rays[p].tight, rays[q].tight);
            RatMat span = lineality;
            for (const Ray& r : rays) {
                if (bits_superset(r.tight, T)) span.push_back(r.vec);
            }
            return rank_destructive(span) == lin_rank + 2;
        };

        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        pairs.reserve(pos.size() * neg.size());
        for (std::size_t p : pos)
            for (std::size_t q : neg) pairs.emplace_back(p, q);

        std::vector<char> keep(pairs.size(), 0);
        if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(thread_budget())
#endif
            for (long k = 0; k < static_cast<long>(pairs.size()); ++k)
                keep[static_cast<std::size_t>(k)] =
                    adjacent(pairs[static_cast<std::size_t>(k)].first, pairs[static_cast<std::size_t>(k)].second) ? 1 : 0;
        } else {
            for (std::size_t k = 0; k < pairs.size(); ++k) keep[k] = adjacent(pairs[k].first, pairs[k].second) ? 1 : 0;
        }

        std::vector<Ray> combos;
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            if (!keep[k]) continue;
            const auto [p, q] = pairs[k];
            Ray w;
            w.vec.resize(static_cast<std::size_t>(dim));
            for (std::size_t j = 0; j < w.vec.size(); ++j) w.vec[j] = val[p] * rays[q].vec[j] - val[q] * rays[p].vec[j];
            w.vec = primitive_scaled(w.vec);
            // recompute the tight set exactly: a combination can land on
            // more hyperplanes than the pair's common ones
            w.tight.assign(words, 0);
            for (std::size_t j = 0; j <= hidx; ++j)
                if (dot(halfspaces[j], w.vec) == 0) bits_set(w.tight, j);
            combos.push_back(std::move(w));
        }
        std::vector<Ray> next;
        for (std::size_t i : pos) next.push_back(std::move(rays[i]));
        for (std::size_t i : zero) {
            bits_set(rays[i].tight, hidx);
            next.push_back(std::move(rays[i]));
        }
        for (Ray& w : combos) next.push_back(std::move(w));
        rays = std::move(next);
    }

    VDescription out;
    for (Ray& r : rays) out.rays.push_back(std::move(r.vec));
    out.rays = sorted_canonical(std::move(out.rays));
    out.lineality = rref(std::move(lineality));
    return out;
}

VDescription polar_of_generators(const RatMat& generators, int dim, bool parallel) {
    return double_description(generators, dim, parallel);
}

namespace {

bool member_of_generated(const RatVec& v, const RatMat& gens, int dim) {
    if (is_zero_vec(v)) return true;
    VDescription polar = polar_of_generators(gens, dim);
    for (const RatVec& r : polar.rays)
        if (dot(r, v) < 0) return false;
    for (const RatVec& l : polar.lineality)
        if (dot(l, v) != 0) return false;
    return true;
}

}  // namespace

bool membership(const RatVec& v, const PolyCone& c) {
    if (static_cast<int>(v.size()) != c.n_ambient) throw std::invalid_argument("membership: dimension mismatch");
    if (c.halfspaces) {
        for (const RatVec& h : *c.halfspaces)
            if (dot(h, v) < 0) return false;
        return true;
    }
    if (c.generators) return member_of_generated(v, *c.generators, c.n_ambient);
    throw std::invalid_argument("membership: cone has no representation");
}

RatMat extremal_rays(const PolyCone& c) {
    if (c.generators) {
        RatMat gens = *c.generators;  // already canonical + deduplicated
        RatMat keep;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            RatMat others;
            others.reserve(gens.size() - 1);
            for (std::size_t j = 0; j < gens.size(); ++j)
                if (j != i) others.push_back(gens[j]);
            if (others.empty() || !member_of_generated(gens[i], others, c.n_ambient)) keep.push_back(gens[i]);
        }
        return keep;
    }
    if (c.halfspaces) {
        VDescription vd = double_description(*c.halfspaces, c.n_ambient);
        RatMat out = vd.rays;
        for (const RatVec& l : vd.lineality) {
            out.push_back(l);
            RatVec neg = l;
            for (Rat& x : neg) x = -x;
            out.push_back(primitive_scaled(neg));
        }
        return sorted_canonical(std::move(out));
    }
    throw std::invalid_argument("extremal_rays: cone has no representation");
}

PolyCone dual_cone(const PolyCone& c) {
    PolyCone d;
    d.n_ambient = c.n_ambient;
    if (c.generators) d.halfspaces = *c.generators;
    if (c.halfspaces) {
        PolyCone spanned = PolyCone::from_generators(c.n_ambient, *c.halfspaces);
        d.generators = extremal_rays(spanned);
    } else if (c.generators) {
        VDescription vd = double_description(*c.generators, c.n_ambient);
        RatMat gens = vd.rays;
        for (const RatVec& l : vd.lineality) {
            gens.push_back(l);
            RatVec neg = l;
            for (Rat& x : neg) x = -x;
            gens.push_back(primitive_scaled(neg));
        }
        d.generators = sorted_canonical(std::move(gens));
    }
    if (!d.generators && !d.halfspaces) throw std::invalid_argument("dual_cone: cone has no representation");
    return d;
}

FacetReport is_facet(const Functional& f, const RatMat& points) {
    RatMat all, tight;
    for (const RatVec& p : points) {
        Rat v = evaluate(f, p);
        if (v < 0) {
            std::ostringstream os;
            os << "is_facet: point violates the functional (value " << v.get_str() << ", point";
            for (const Rat& x : p) os << ' ' << x.get_str();
            os << ")";
            throw std::invalid_argument(os.str());
        }
        all.push_back(p);
        if (v == 0) tight.push_back(p);
    }
    FacetReport rep;
    rep.cone_dimension = rank_of(all);
    rep.face_dimension = rank_of(tight);
    rep.facet = (rep.face_dimension == rep.cone_dimension - 1);
    return rep;
}

bool direct_sum_obstruction(const std::vector<Functional>& ext, const RatMat& B) {
    RatMat outside;
    for (const Functional& f : ext) {
        if (!in_span(f.coeffs, B)) outside.push_back(f.coeffs);
    }
    if (outside.empty()) return false;
    RatMat joint = outside;
    for (const RatVec& b : B) joint.push_back(b);
    // span(outside) meets span(B) nontrivially iff ranks fail to add
    return rank_of(joint) < rank_of(outside) + rank_of(B);
}

bool representations_consistent(const PolyCone& c) {
    if (!c.generators || !c.halfspaces) return true;
    PolyCone v = PolyCone::from_generators(c.n_ambient, *c.generators);
    PolyCone h = PolyCone::from_halfspaces(c.n_ambient, *c.halfspaces);
    return cones_equal(v, h);
}

bool cones_equal(const PolyCone& a, const PolyCone& b) {
    auto gens_of = [](const PolyCone& c) {
        if (c.generators) return *c.generators;
        return extremal_rays(c);
    };
    RatMat ga = gens_of(a), gb = gens_of(b);
    for (const RatVec& g : ga)
        if (!membership(g, b)) return false;
    for (const RatVec& g : gb)
        if (!membership(g, a)) return false;
    return true;
}

}  // namespace entrocone
