#include "entrocone/batch.hpp"

#include <limits>

#include "entrocone/parallel.hpp"

namespace entrocone {

namespace {

double margin_of(const EntropyVector& v, const std::vector<NamedInequality>& catalog) {
    double m = std::numeric_limits<double>::infinity();
    for (const NamedInequality& q : catalog) {
        double val = evaluate(q.functional, v);
        if (val < m) m = val;
    }
    return m;
}

}  // namespace

std::vector<double> catalog_margins_serial(const std::vector<EntropyVector>& vectors,
                                           const std::vector<NamedInequality>& catalog) {
    std::vector<double> out(vectors.size());
    for (std::size_t i = 0; i < vectors.size(); ++i) out[i] = margin_of(vectors[i], catalog);
    return out;
}

std::vector<double> catalog_margins_parallel(const std::vector<EntropyVector>& vectors,
                                             const std::vector<NamedInequality>& catalog) {
    std::vector<double> out(vectors.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(thread_budget())
#endif
    for (long i = 0; i < static_cast<long>(vectors.size()); ++i)
        out[static_cast<std::size_t>(i)] = margin_of(vectors[static_cast<std::size_t>(i)], catalog);
    return out;
}

std::vector<Violation> catalog_violations(const std::vector<EntropyVector>& vectors,
                                          const std::vector<NamedInequality>& catalog, double tol) {
    std::vector<Violation> out;
    for (std::size_t i = 0; i < vectors.size(); ++i)
        for (std::size_t j = 0; j < catalog.size(); ++j) {
            double val = evaluate(catalog[j].functional, vectors[i]);
            if (val < -tol) out.push_back({i, j, val});
        }
    return out;
}

std::vector<EntropyVector> stabilizer_sweep_serial(const std::vector<Submodule>& modules) {
    std::vector<EntropyVector> out(modules.size());
    for (std::size_t i = 0; i < modules.size(); ++i) out[i] = stabilizer_entropy_vector(modules[i]);
    return out;
}

std::vector<EntropyVector> stabilizer_sweep_parallel(const std::vector<Submodule>& modules) {
    std::vector<EntropyVector> out(modules.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(thread_budget())
#endif
    for (long i = 0; i < static_cast<long>(modules.size()); ++i)
        out[static_cast<std::size_t>(i)] = stabilizer_entropy_vector(modules[static_cast<std::size_t>(i)]);
    return out;
}

}  // namespace entrocone
