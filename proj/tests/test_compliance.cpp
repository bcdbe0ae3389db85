#include "aba/compliance.hpp"
#include "doctest.h"
#include "support/fixtures.hpp"
#include "support/util.hpp"

using namespace aba;
using testutil::mask_of;

TEST_CASE("weak contraposition verdicts") {
  CHECK(check_wcp(fixtures::parse(fixtures::fc_plus)).holds());
  CHECK(check_wcp(fixtures::parse(fixtures::fz)).holds());  // empty preferences
  CHECK(check_wcp(fixtures::parse(fixtures::web)).holds());

  Framework f = fixtures::parse(fixtures::no_complete);
  Verdict v = check_wcp(f);
  REQUIRE(v.status == Verdict::Status::violated);
  REQUIRE(v.witnesses.size() == 1);
  CHECK(v.witnesses[0].sets == std::vector<AssumptionSet>{mask_of(f, {"alpha", "gamma"})});
  CHECK(v.witnesses[0].assumptions ==
        std::vector<int>{f.assumption_index(*f.find("beta"))});
}

TEST_CASE("full contraposition is strictly stronger") {
  Verdict carl = check_contraposition(fixtures::parse(fixtures::fc_plus));
  CHECK(carl.status == Verdict::Status::violated);
  CHECK(check_contraposition(fixtures::parse(fixtures::web)).holds());

  FrameworkBuilder b;  // no rules at all: vacuous
  b.assumption("a");
  CHECK(check_contraposition(b.build()).holds());
}

TEST_CASE("axiom of consistency flags contradictory facts") {
  Framework f = fixtures::parse(fixtures::consistency_pair);
  Complement c = Complement::token_convention(f);
  Verdict v = check_axiom_consistency(f, c);
  REQUIRE(v.status == Verdict::Status::violated);
  CHECK(v.witnesses[0].sentences ==
        std::vector<SentenceId>{*f.find("p"), *f.find("~p")});

  Framework fz = fixtures::parse(fixtures::fz_plus);
  CHECK(check_axiom_consistency(fz, Complement::token_convention(fz)).holds());
}

TEST_CASE("axiom of negation quantifies over every deduction") {
  // Leaf deductions force contrary(a) = ~a, so a foreign contrary violates
  // the axiom even when every rule-level deduction complies.
  FrameworkBuilder b;
  b.assumption("a");
  b.contrary("a", "~q");
  b.rule("q", {"a"});
  Framework f = b.build();
  Complement c = Complement::token_convention(f);
  Verdict v = check_axiom_negation(f, c);
  REQUIRE(v.status == Verdict::Status::violated);
  bool leaf_witness = false;
  for (const auto& w : v.witnesses)
    if (w.sentences == std::vector<SentenceId>{*f.find("a")} &&
        w.sets == std::vector<AssumptionSet>{mask_of(f, {"a"})})
      leaf_witness = true;
  CHECK(leaf_witness);

  Framework fz = fixtures::parse(fixtures::fz_plus);
  Verdict vz = check_axiom_negation(fz, Complement::token_convention(fz));
  REQUIRE(vz.status == Verdict::Status::violated);
  bool leave_witness = false;
  for (const auto& w : vz.witnesses)
    if (w.sentences == std::vector<SentenceId>{*fz.find("leave")} &&
        w.sets == std::vector<AssumptionSet>{mask_of(fz, {"alpha"})})
      leave_witness = true;
  CHECK(leave_witness);
}

TEST_CASE("axiom of negation holds with complement contraries") {
  FrameworkBuilder b;
  b.assumption("a");
  b.contrary("a", "~a");
  b.rule("~a", {});  // empty support: exempt
  Framework f = b.build();
  CHECK(check_axiom_negation(f, Complement::token_convention(f)).holds());

  FrameworkBuilder plain;  // rule-free but default contrary: leaf check fails
  plain.assumption("a");
  Framework g = plain.build();
  CHECK(check_axiom_negation(g, Complement::token_convention(g)).status ==
        Verdict::Status::violated);
}

TEST_CASE("conflict preservation and empty preferences hold on the fixtures") {
  for (auto text : {fixtures::fz_plus, fixtures::fc_plus, fixtures::web, fixtures::three_cycle}) {
    Framework f = fixtures::parse(text);
    for (Semantics sem : {Semantics::preferred, Semantics::stable, Semantics::complete}) {
      CHECK(check_principle(f, PrincipleId::conflict_preservation, sem).holds());
      CHECK(check_principle(f, PrincipleId::empty_preferences, sem).holds());
    }
  }
}

TEST_CASE("maximal elements principle on the no-complete framework") {
  Framework f = fixtures::parse(fixtures::no_complete);
  for (Semantics sem : {Semantics::preferred, Semantics::ideal}) {
    Verdict v = check_principle(f, PrincipleId::maximal_elements, sem);
    REQUIRE(v.status == Verdict::Status::violated);
    // Every witness pairs an extension with the missed maximal set {beta,gamma}.
    for (const auto& w : v.witnesses) {
      REQUIRE(w.sets.size() == 2);
      CHECK(w.sets[1] == mask_of(f, {"beta", "gamma"}));
      CHECK((w.sets[0] & w.sets[1]) != w.sets[1]);
    }
  }
  // Complete semantics has no extensions here, so the principle holds vacuously.
  CHECK(check_principle(f, PrincipleId::maximal_elements, Semantics::complete).holds());
}

TEST_CASE("maximal elements needs a total ordering") {
  Framework f = fixtures::parse(fixtures::fc_plus);  // beta and gamma incomparable
  Verdict v = check_principle(f, PrincipleId::maximal_elements, Semantics::preferred);
  CHECK(v.status == Verdict::Status::not_applicable);
  CHECK(!v.notes.empty());
}

TEST_CASE("classical consistency fails on contradictory facts") {
  Framework f = fixtures::parse(fixtures::consistency_pair);
  for (Semantics sem : {Semantics::complete, Semantics::stable, Semantics::preferred}) {
    Verdict v = check_principle(f, PrincipleId::classical_consistency, sem);
    REQUIRE(v.status == Verdict::Status::violated);
    CHECK(v.witnesses[0].sets == std::vector<AssumptionSet>{0});
    CHECK(v.witnesses[0].sentences ==
          std::vector<SentenceId>{*f.find("p"), *f.find("~p")});
  }
}

TEST_CASE("rationality postulates hold on extensions") {
  for (auto text : {fixtures::fz_plus, fixtures::fc_plus, fixtures::fd_plus, fixtures::web})
    for (Semantics sem : {Semantics::complete, Semantics::preferred, Semantics::stable})
      CHECK(check_postulates(fixtures::parse(text), sem).holds());

  // Vacuously true when the semantics admits no extension.
  Framework none = fixtures::parse(fixtures::no_complete);
  CHECK(check_postulates(none, Semantics::complete).holds());
}

TEST_CASE("consistency predicates on a non-extension set") {
  Framework f = fixtures::parse(fixtures::fz_plus);
  AssumptionSet ab = mask_of(f, {"alpha", "beta"});
  CHECK(directly_consistent(f, ab));  // contraries are not assumptions here
  CHECK_FALSE(indirectly_consistent(f, ab));  // stay and leave both follow
}

TEST_CASE("the token complement is involutive") {
  Framework f = fixtures::parse(fixtures::consistency_pair);
  Complement c = Complement::token_convention(f);
  for (SentenceId s = 0; s < static_cast<SentenceId>(f.sentence_count()); ++s)
    if (auto comp = c.of(s)) CHECK(c.of(*comp) == s);
  CHECK(Complement::complement_token("~p") == "p");
  CHECK(Complement::complement_token("p") == "~p");
}
