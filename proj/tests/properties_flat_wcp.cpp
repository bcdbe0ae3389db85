#include "doctest.h"
#include "support/suite_check.hpp"

TEST_CASE("flat frameworks under weak contraposition behave classically") {
  require_clean(props::flat_wcp_suite);
}
