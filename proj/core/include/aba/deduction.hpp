#pragma once

#include <vector>

#include "aba/framework.hpp"

namespace aba {

/// Membership vector over sentence ids.
using SentenceSet = std::vector<char>;

/// Least set containing `base` and closed under the rules: the conclusions
/// derivable from subsets of `base`.
SentenceSet conclusions(const Framework& f, const std::vector<SentenceId>& base);
SentenceSet conclusions(const Framework& f, AssumptionSet e);
std::vector<SentenceId> conclusion_list(const Framework& f, AssumptionSet e);

/// Assumptions derivable from e: conclusions(e) restricted to assumptions.
AssumptionSet closure(const Framework& f, AssumptionSet e);
bool is_closed(const Framework& f, AssumptionSet e);

/// True iff every assumption set is closed; decided by checking that no
/// assumption is derivable from the other assumptions alone.
bool is_flat(const Framework& f);

/// For each sentence, the exact assumption-leaf sets of its deduction trees.
/// The empty support is present iff the sentence is derivable from no
/// assumptions. Supports are sorted ascending by mask and deduplicated.
class SupportFamily {
 public:
  explicit SupportFamily(int sentence_count) : per_sentence_(sentence_count) {}

  const std::vector<AssumptionSet>& supports(SentenceId s) const { return per_sentence_[s]; }
  bool derivable(SentenceId s) const { return !per_sentence_[s].empty(); }
  bool contains(SentenceId s, AssumptionSet support) const;

 private:
  friend SupportFamily support_families(const Framework&, const Limits&);
  std::vector<std::vector<AssumptionSet>> per_sentence_;
};

/// Least fixed point over (sentence, assumption set) pairs: an assumption
/// supports itself, a rule combines one support per body member, an empty
/// body contributes the empty support. Cycles add nothing because deduction
/// trees are finite.
SupportFamily support_families(const Framework& f, const Limits& limits = {});

/// True iff some deduction tree for phi has every assumption leaf in `base`
/// and at least one in `taint`. Decided by a two-layer fixed point without
/// materializing support families. Requires taint to be a subset of base.
bool tainted_derivable(const Framework& f, AssumptionSet base, AssumptionSet taint, SentenceId phi);

}  // namespace aba
