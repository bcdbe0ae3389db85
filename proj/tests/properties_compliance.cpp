#include "doctest.h"
#include "support/suite_check.hpp"

TEST_CASE("closure and consistency postulates never fail") {
  require_clean(props::postulates_always_hold);
}

TEST_CASE("the consistency and negation axioms imply classical consistency") {
  require_clean(props::negation_axioms_imply_classical_consistency);
}

TEST_CASE("contraposition implies weak contraposition") {
  require_clean(props::contraposition_implies_wcp);
}

TEST_CASE("violated verdicts carry witnesses that re-check") {
  require_clean(props::witnesses_revalidate);
}
