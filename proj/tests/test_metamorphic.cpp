#include "doctest.h"
#include "fsing/random_fixtures.hpp"
#include "fsing/report.hpp"

using namespace fsing;

TEST_CASE("metamorphic deformation suite") {
    auto t = metamorphic_suite(session_seed(), 20, 400);
    for (const auto& v : t.violations) MESSAGE(v);
    CHECK(t.violations.empty());
    CHECK(t.with_premises >= 20);
    MESSAGE("instances: " << t.instances << ", with verified deformation premises: " << t.with_premises);
}
