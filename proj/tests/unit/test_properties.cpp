#include <doctest.h>

#include "properties.hpp"

TEST_CASE("property suites") {
  std::size_t total = 0;
  for (const auto& r : wcolab::testing::run_all_properties()) {
    INFO(r.name, " ", r.first_failure);
    CHECK(r.failures == 0);
    total += r.cases;
  }
  CHECK(total >= 1000);
}
