#pragma once

// Subset-of-parties bookkeeping. Party i of [n] lives on bit i-1, the empty
// set is mask 0. Every file format and API in the project shares this
// convention.

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace entrocone {

using Mask = std::uint32_t;

inline Mask full_mask(int n) { return (n >= 32) ? ~Mask(0) : ((Mask(1) << n) - 1); }

inline int popcount(Mask m) { return __builtin_popcount(m); }

inline bool contains(Mask m, int party) { return (m >> (party - 1)) & 1u; }

inline Mask complement_in(Mask m, int n) { return full_mask(n) & ~m; }

inline Mask mask_of(std::initializer_list<int> parties) {
    Mask m = 0;
    for (int p : parties) m |= Mask(1) << (p - 1);
    return m;
}

inline std::vector<int> parties_of(Mask m) {
    std::vector<int> out;
    for (int i = 1; m; ++i, m >>= 1) {
        if (m & 1u) out.push_back(i);
    }
    return out;
}

// "1,3,4" for {1,3,4}; "" for the empty set. Used by all JSON surfaces.
inline std::string subset_name(Mask m) {
    std::ostringstream os;
    bool first = true;
    for (int p : parties_of(m)) {
        if (!first) os << ',';
        os << p;
        first = false;
    }
    return os.str();
}

inline Mask subset_from_name(const std::string& name, int n) {
    if (name.empty()) return 0;
    Mask m = 0;
    std::istringstream is(name);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        int p = std::stoi(tok);
        if (p < 1 || p > n) throw std::invalid_argument("party out of range in subset '" + name + "'");
        m |= Mask(1) << (p - 1);
    }
    return m;
}

// Image of a subset of [n] under a permutation of [m] (m >= n), given as
// perm[i] = image of party i+1, 1-based values.
inline Mask apply_perm(const std::vector<int>& perm, Mask I) {
    Mask out = 0;
    for (int p : parties_of(I)) out |= Mask(1) << (perm[p - 1] - 1);
    return out;
}

inline std::vector<int> inverse_perm(const std::vector<int>& perm) {
    std::vector<int> inv(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i] - 1] = static_cast<int>(i) + 1;
    return inv;
}

inline bool is_perm(const std::vector<int>& perm) {
    std::vector<bool> seen(perm.size(), false);
    for (int v : perm) {
        if (v < 1 || v > static_cast<int>(perm.size()) || seen[v - 1]) return false;
        seen[v - 1] = true;
    }
    return true;
}

}  // namespace entrocone
