#pragma once

#include "aba/deduction.hpp"
#include "aba/framework.hpp"

namespace aba {

struct AttackFlags {
  bool normal = false;
  bool reverse = false;
  bool any() const { return normal || reverse; }
};

/// Plain attack: a deduces the contrary of some member of b.
bool aba_attacks(const Framework& f, AssumptionSet a, AssumptionSet b);

/// Preference-aware attack flags between a and b.
///
/// normal: some member of b has its contrary derivable from the members of a
/// that are not strictly below it; any deduction avoiding lesser assumptions
/// is supported inside that filtered set, so conclusion membership decides it.
///
/// reverse: some member of a has its contrary derivable from b through a
/// deduction that leans on an assumption strictly below that member.
///
/// Both flags may hold at once; neither implies the other.
AttackFlags plus_attacks(const Framework& f, AssumptionSet a, AssumptionSet b);

struct AttackEdge {
  AssumptionSet attacker = 0;
  AssumptionSet target = 0;
  bool plain = false;
  bool normal = false;
  bool reverse = false;
};

AttackEdge attack_edge(const Framework& f, AssumptionSet a, AssumptionSet b);

}  // namespace aba
