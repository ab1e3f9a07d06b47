#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "entrocone/batch.hpp"

using namespace entrocone;

TEST_CASE("parallel kernels match the serial reference bit for bit") {
    EnumerationResult en = enumerate_isotropic(PhaseSpace{2, 3}, 1u << 20);
    REQUIRE_FALSE(en.truncated);
    REQUIRE(en.modules.size() > 10);

    std::vector<EntropyVector> serial = stabilizer_sweep_serial(en.modules);
    std::vector<EntropyVector> parallel = stabilizer_sweep_parallel(en.modules);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) CHECK(serial[i].entries == parallel[i].entries);

    std::vector<NamedInequality> cat = xi_catalog(2);
    std::vector<double> ms = catalog_margins_serial(serial, cat);
    std::vector<double> mp = catalog_margins_parallel(serial, cat);
    CHECK(ms == mp);

    // stabilizer vectors satisfy the whole catalog
    for (double m : ms) CHECK(m > -1e-8);

    std::vector<Violation> none = catalog_violations(serial, cat, 1e-8);
    CHECK(none.empty());

    // a fabricated violator is reported with its indices
    EntropyVector bad(2);
    bad[1] = 0.0;
    bad[2] = 0.0;
    bad[3] = 1.0;  // violates subadditivity
    std::vector<Violation> hits = catalog_violations({bad}, cat, 1e-8);
    CHECK_FALSE(hits.empty());
    CHECK(hits[0].vector_index == 0);
}
