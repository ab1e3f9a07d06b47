// Benchmark comparing the serial reference kernels against their OpenMP
// counterparts: catalog sweeps over enumerated stabilizer vectors, the
// stabilizer entropy sweep itself, and the double-description pair loop.

#include <chrono>
#include <cstdio>

#include "entrocone/batch.hpp"
#include "entrocone/cone.hpp"
#include "entrocone/morphisms.hpp"
#include "entrocone/parallel.hpp"

using namespace entrocone;

namespace {

template <typename F>
double time_ms(F&& f, int reps = 3) {
    double best = 1e100;
    for (int r = 0; r < reps; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        f();
        auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

}  // namespace

int main() {
    std::printf("threads: %d\n", thread_budget());

    // stabilizer sweep over every isotropic submodule of Z_6^4
    EnumerationResult en = enumerate_isotropic(PhaseSpace{2, 6}, 1u << 20);
    std::printf("modules: %zu (d=6, n=2, exhaustive)\n", en.modules.size());
    std::vector<EntropyVector> serial_vecs, parallel_vecs;
    double t_ser = time_ms([&] { serial_vecs = stabilizer_sweep_serial(en.modules); });
    double t_par = time_ms([&] { parallel_vecs = stabilizer_sweep_parallel(en.modules); });
    bool same = serial_vecs.size() == parallel_vecs.size();
    for (std::size_t i = 0; same && i < serial_vecs.size(); ++i)
        same = serial_vecs[i].entries == parallel_vecs[i].entries;
    std::printf("stabilizer sweep   serial %8.2f ms   parallel %8.2f ms   speedup %.2fx   identical %s\n", t_ser,
                t_par, t_ser / t_par, same ? "yes" : "NO");

    // catalog margins over the symmetry orbits of the d=2, n=3 stabilizer set
    EnumerationResult en3 = enumerate_isotropic(PhaseSpace{3, 2}, 1u << 20);
    std::vector<EntropyVector> orbit;
    for (const Submodule& M : en3.modules) {
        EntropyVector v = stabilizer_entropy_vector(M);
        std::vector<int> perm = {1, 2, 3, 4};
        do {
            orbit.push_back(symmetry_action(perm, v));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    std::printf("orbit vectors: %zu (d=2, n=3, full S_4 orbits)\n", orbit.size());
    std::vector<NamedInequality> cat = xi_catalog(3);
    std::vector<double> m_ser, m_par;
    double c_ser = time_ms([&] { m_ser = catalog_margins_serial(orbit, cat); });
    double c_par = time_ms([&] { m_par = catalog_margins_parallel(orbit, cat); });
    std::printf("catalog margins    serial %8.2f ms   parallel %8.2f ms   speedup %.2fx   identical %s\n", c_ser,
                c_par, c_ser / c_par, (m_ser == m_par) ? "yes" : "NO");

    // double description of the n=3 von Neumann cone halfspaces
    std::vector<NamedInequality> xi3 = xi_catalog(3);
    RatMat rows;
    for (const NamedInequality& q : xi3) rows.push_back(q.functional.coeffs);
    VDescription dd_ser, dd_par;
    double d_ser = time_ms([&] { dd_ser = double_description(rows, 8, false); });
    double d_par = time_ms([&] { dd_par = double_description(rows, 8, true); });
    std::printf("double description serial %8.2f ms   parallel %8.2f ms   speedup %.2fx   identical %s\n", d_ser,
                d_par, d_ser / d_par,
                (dd_ser.rays == dd_par.rays && dd_ser.lineality == dd_par.lineality) ? "yes" : "NO");
    std::printf("dd rays: %zu\n", dd_ser.rays.size());
    return 0;
}
