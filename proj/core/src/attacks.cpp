#include "aba/attacks.hpp"

namespace aba {

bool aba_attacks(const Framework& f, AssumptionSet a, AssumptionSet b) {
  if (b == 0) return false;
  SentenceSet cn = conclusions(f, a);
  for (int i = 0; i < f.assumption_count(); ++i)
    if ((b >> i & 1u) && cn[f.contrary(i)]) return true;
  return false;
}

AttackFlags plus_attacks(const Framework& f, AssumptionSet a, AssumptionSet b) {
  AttackFlags flags;
  for (int i = 0; i < f.assumption_count() && !flags.normal; ++i) {
    if (!(b >> i & 1u)) continue;
    AssumptionSet filtered = a & ~f.pref().lessers_mask(i);
    if (conclusions(f, filtered)[f.contrary(i)]) flags.normal = true;
  }
  for (int i = 0; i < f.assumption_count() && !flags.reverse; ++i) {
    if (!(a >> i & 1u)) continue;
    AssumptionSet taint = b & f.pref().lessers_mask(i);
    if (taint && tainted_derivable(f, b, taint, f.contrary(i))) flags.reverse = true;
  }
  return flags;
}

AttackEdge attack_edge(const Framework& f, AssumptionSet a, AssumptionSet b) {
  AttackEdge e;
  e.attacker = a;
  e.target = b;
  e.plain = aba_attacks(f, a, b);
  AttackFlags flags = plus_attacks(f, a, b);
  e.normal = flags.normal;
  e.reverse = flags.reverse;
  return e;
}

}  // namespace aba
