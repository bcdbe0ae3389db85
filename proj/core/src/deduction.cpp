#include "aba/deduction.hpp"

#include <algorithm>

namespace aba {

namespace {

void chain(const Framework& f, SentenceSet& in) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Rule& r : f.rules()) {
      if (in[r.head]) continue;
      bool all = true;
      for (SentenceId b : r.body)
        if (!in[b]) {
          all = false;
          break;
        }
      if (all) {
        in[r.head] = 1;
        changed = true;
      }
    }
  }
}

}  // namespace

SentenceSet conclusions(const Framework& f, const std::vector<SentenceId>& base) {
  SentenceSet set(f.sentence_count(), 0);
  for (SentenceId s : base) set[s] = 1;
  chain(f, set);
  return set;
}

SentenceSet conclusions(const Framework& f, AssumptionSet e) {
  SentenceSet set(f.sentence_count(), 0);
  for (int i = 0; i < f.assumption_count(); ++i)
    if (e >> i & 1u) set[f.assumption_sentence(i)] = 1;
  chain(f, set);
  return set;
}

std::vector<SentenceId> conclusion_list(const Framework& f, AssumptionSet e) {
  SentenceSet set = conclusions(f, e);
  std::vector<SentenceId> out;
  for (SentenceId s = 0; s < set.size(); ++s)
    if (set[s]) out.push_back(s);
  return out;
}

AssumptionSet closure(const Framework& f, AssumptionSet e) {
  SentenceSet set = conclusions(f, e);
  AssumptionSet out = 0;
  for (int i = 0; i < f.assumption_count(); ++i)
    if (set[f.assumption_sentence(i)]) out |= 1u << i;
  return out;
}

bool is_closed(const Framework& f, AssumptionSet e) { return closure(f, e) == e; }

bool is_flat(const Framework& f) {
  bool assumption_headed = false;
  for (const Rule& r : f.rules())
    if (f.is_assumption(r.head)) assumption_headed = true;
  if (!assumption_headed) return true;
  // An assumption-headed rule may still add nothing (a <- a). Flat iff no
  // assumption is derivable from the other assumptions alone.
  for (int i = 0; i < f.assumption_count(); ++i) {
    AssumptionSet rest = f.all_assumptions() & ~(1u << i);
    if (conclusions(f, rest)[f.assumption_sentence(i)]) return false;
  }
  return true;
}

bool SupportFamily::contains(SentenceId s, AssumptionSet support) const {
  const auto& v = per_sentence_[s];
  return std::binary_search(v.begin(), v.end(), support);
}

SupportFamily support_families(const Framework& f, const Limits& limits) {
  SupportFamily fam(f.sentence_count());
  auto& per = fam.per_sentence_;
  for (int i = 0; i < f.assumption_count(); ++i)
    per[f.assumption_sentence(i)].push_back(1u << i);

  auto insert = [&](SentenceId s, AssumptionSet m) -> bool {
    auto& v = per[s];
    auto it = std::lower_bound(v.begin(), v.end(), m);
    if (it != v.end() && *it == m) return false;
    v.insert(it, m);
    if (static_cast<int>(v.size()) > limits.support_cap)
      throw CapacityError("support family of '" + f.token(s) + "' exceeds cap of " +
                          std::to_string(limits.support_cap));
    return true;
  };

  bool changed = true;
  while (changed) {
    changed = false;
    for (const Rule& r : f.rules()) {
      // Cartesian combination of one support per body member.
      std::vector<AssumptionSet> acc{0};
      bool feasible = true;
      for (SentenceId b : r.body) {
        const auto& choices = per[b];
        if (choices.empty()) {
          feasible = false;
          break;
        }
        std::vector<AssumptionSet> next;
        next.reserve(acc.size() * choices.size());
        for (AssumptionSet left : acc)
          for (AssumptionSet right : choices) next.push_back(left | right);
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        acc = std::move(next);
      }
      if (!feasible) continue;
      for (AssumptionSet m : acc)
        if (insert(r.head, m)) changed = true;
    }
  }
  return fam;
}

bool tainted_derivable(const Framework& f, AssumptionSet base, AssumptionSet taint, SentenceId phi) {
  // Layer one: derivable with every assumption leaf in base.
  // Layer two: additionally at least one leaf in taint.
  taint &= base;
  std::vector<char> der(f.sentence_count(), 0), tnt(f.sentence_count(), 0);
  for (int i = 0; i < f.assumption_count(); ++i) {
    if (base >> i & 1u) der[f.assumption_sentence(i)] = 1;
    if (taint >> i & 1u) tnt[f.assumption_sentence(i)] = 1;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Rule& r : f.rules()) {
      bool all = true, any_taint = false;
      for (SentenceId b : r.body) {
        if (!der[b]) {
          all = false;
          break;
        }
        if (tnt[b]) any_taint = true;
      }
      if (!all) continue;
      if (!der[r.head]) {
        der[r.head] = 1;
        changed = true;
      }
      if (any_taint && !tnt[r.head]) {
        tnt[r.head] = 1;
        changed = true;
      }
    }
  }
  return tnt[phi] != 0;
}

}  // namespace aba
