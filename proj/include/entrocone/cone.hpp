#pragma once

// Exact rational polyhedral cones: double description between generator and
// halfspace representations, dualization, extremal rays, membership, facet
// certification and the direct-sum obstruction test. All arithmetic is GMP
// rational; a ray is stored primitive-integer scaled (positive scaling only,
// so the sign pattern of a generator is never altered).

#include <optional>
#include <vector>

#include "entrocone/morphisms.hpp"
#include "entrocone/rational.hpp"

namespace entrocone {

struct PolyCone {
    int n_ambient = 0;
    std::optional<RatMat> generators;  // V-rep rays (primitive scaled)
    std::optional<RatMat> halfspaces;  // H-rep normals: cone = {x : h.x >= 0}

    static PolyCone from_generators(int dim, RatMat gens);
    static PolyCone from_halfspaces(int dim, RatMat hs);
    static PolyCone from_functionals(int n, const std::vector<Functional>& fns);  // ambient 2^n
};

// Minimal V-description of {x : h.x >= 0 for all h}: extremal rays plus a
// basis of the lineality space.
struct VDescription {
    RatMat rays;
    RatMat lineality;
};

// Double description, lexicographic insertion order, rank-based adjacency
// test. Deterministic and independent of the input row order. The adjacency
// pair loop runs in parallel when enabled; results are merged by index so
// the output is identical either way.
VDescription double_description(const RatMat& halfspaces, int dim, bool parallel = true);

// polar cone {y : y.g >= 0 for all generators g} described by rays + lineality
VDescription polar_of_generators(const RatMat& generators, int dim, bool parallel = true);

bool membership(const RatVec& v, const PolyCone& c);

// minimal generating set (every returned ray is extremal)
RatMat extremal_rays(const PolyCone& c);

PolyCone dual_cone(const PolyCone& c);

struct FacetReport {
    bool facet = false;
    int face_dimension = 0;
    int cone_dimension = 0;
};

// Points must satisfy f >= 0 (violations throw, carrying the witness); the
// face is a facet iff the tight points span one dimension less than all
// points together.
FacetReport is_facet(const Functional& f, const RatMat& points);

// True iff some extremal rays outside span(B) still have a span meeting
// span(B) nontrivially -- the obstruction to K* = (K* cap B) + C splitting.
bool direct_sum_obstruction(const std::vector<Functional>& ext, const RatMat& B);

bool cones_equal(const PolyCone& a, const PolyCone& b);  // mutual containment

// when both representations are present, check on demand that they
// describe the same cone
bool representations_consistent(const PolyCone& c);

}  // namespace entrocone
