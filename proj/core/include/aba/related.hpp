#pragma once

#include <string>
#include <vector>

#include "aba/deduction.hpp"
#include "aba/semantics.hpp"

namespace aba {

/// A preference-based argumentation framework: an attack graph plus a
/// preference relation over the arguments. The strict part is derived from
/// leq, so asymmetric strict relations can be stored as leq directly.
struct Paf {
  std::vector<std::string> args;
  std::vector<std::pair<int, int>> attacks;
  std::vector<char> leq;  // args x args

  int arg_count() const { return static_cast<int>(args.size()); }
  bool leq_at(int a, int b) const { return leq[static_cast<std::size_t>(a) * args.size() + b] != 0; }
  bool less(int a, int b) const { return leq_at(a, b) && !leq_at(b, a); }
  int index_of(std::string_view name) const;
};

/// The repaired framework: an attack from a strictly less preferred argument
/// is reversed, every other attack is kept as a defeat.
AAGraph repair_paf(const Paf& p);

/// Arguments become assumptions with fresh contraries, attacks become rules
/// deriving the target's contrary, preferences carry over. Always flat.
Framework paf_to_abaplus(const Paf& p);

/// One argument per exact support of a conclusion.
struct StructuredArgument {
  AssumptionSet support = 0;
  SentenceId conclusion = 0;
  std::string id;  // canonical, derived from (sorted support, conclusion)
};

struct ArgumentView {
  std::vector<StructuredArgument> args;
  AAGraph graph;  // attack at a premise: conc(A) is the contrary of a member of supp(B)
  std::vector<SentenceId> contraries;  // per assumption index, for premise lookups
};

/// Instantiates the argument-level view of a flat framework: one argument per
/// (support, conclusion) pair of the support family, attacks wherever a
/// conclusion is the contrary of a premise.
ArgumentView build_arguments(const Framework& f, const Limits& limits = {});

enum class ComparisonPrinciple { elitist, democratic, disjoint_elitist };

const char* to_string(ComparisonPrinciple p);

struct OrderFlags {
  bool strictly_less = false;
  bool leq = false;
};

/// Lifts the assumption preference to arguments by comparing supports under
/// the elitist, democratic or disjoint elitist principle.
OrderFlags argument_order(ComparisonPrinciple principle, const StructuredArgument& a,
                          const StructuredArgument& b, const Preorder& pref);

/// A PAF over the argument view, with the argument ordering induced by the
/// comparison principle.
Paf paf_from_arguments(const ArgumentView& view, ComparisonPrinciple principle, const Preorder& pref);

/// Undermining defeats: an attack at premise b survives unless the attacker
/// is strictly below the premise argument of b under the principle.
AAGraph defeat_graph(const ArgumentView& view, ComparisonPrinciple principle, const Preorder& pref);

/// The normal-attack relation over the defeasible-premise encoding: an attack
/// at premise b survives unless the attacker uses a premise strictly below b.
AAGraph dung_normal_graph(const ArgumentView& view, const Preorder& pref);

/// A preorder over the whole language, for extension comparison.
using LPreference = Preorder;

/// The extension preference relation over `family`, reflexively and
/// transitively closed. relation[i][j] != 0 means family[i] is at most as
/// preferable as family[j].
std::vector<std::vector<char>> paba_relation(const Framework& f, const LPreference& lp,
                                             const std::vector<AssumptionSet>& family);

/// Pairwise comparison, closed over the two-element family {e1, e2}.
bool p_aba_prefers(const Framework& f, const LPreference& lp, AssumptionSet e1, AssumptionSet e2);

/// Plain extensions filtered by maximality in the extension preference.
ExtensionReport p_aba_extensions(const Framework& f, const LPreference& lp, Semantics sem,
                                 const Limits& limits = {});

}  // namespace aba
