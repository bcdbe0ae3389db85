#include "aba/compliance.hpp"

#include <algorithm>

#include "aba/deduction.hpp"

namespace aba {

const char* to_string(Verdict::Status s) {
  switch (s) {
    case Verdict::Status::holds: return "holds";
    case Verdict::Status::violated: return "violated";
    case Verdict::Status::not_applicable: return "not_applicable";
  }
  return "?";
}

std::string Complement::complement_token(std::string_view token) {
  if (!token.empty() && token[0] == '~') return std::string(token.substr(1));
  return "~" + std::string(token);
}

Complement Complement::token_convention(const Framework& f) {
  Complement c;
  c.map_.assign(f.sentence_count(), -1);
  for (SentenceId s = 0; s < static_cast<SentenceId>(f.sentence_count()); ++s) {
    auto other = f.find(complement_token(f.token(s)));
    if (other) c.map_[s] = static_cast<int>(*other);
  }
  return c;
}

namespace {

// A deduction of contrary(a) supported inside `allowed` exists.
bool counter_support_within(const SupportFamily& fam, const Framework& f, int a, AssumptionSet allowed) {
  for (AssumptionSet t : fam.supports(f.contrary(a)))
    if ((t & ~allowed) == 0) return true;
  return false;
}

Verdict contraposition_scan(const Framework& f, const Limits& limits, bool weak) {
  Verdict v;
  v.subject = weak ? "axiom_weak_contraposition" : "axiom_contraposition";
  SupportFamily fam = support_families(f, limits);
  for (int b = 0; b < f.assumption_count(); ++b) {
    std::uint32_t lessers = f.pref().lessers_mask(b);
    for (AssumptionSet s : fam.supports(f.contrary(b))) {
      if (weak) {
        AssumptionSet below = s & lessers;
        if (!below) continue;
        // Some <=-minimal member of `below` must be counter-attacked from
        // (s minus it) plus b.
        bool ok = false;
        for (int a = 0; a < f.assumption_count() && !ok; ++a) {
          if (!(below >> a & 1u)) continue;
          if (f.pref().lessers_mask(a) & below) continue;  // not minimal
          if (counter_support_within(fam, f, a, (s & ~(1u << a)) | (1u << b))) ok = true;
        }
        if (!ok) {
          v.status = Verdict::Status::violated;
          Verdict::Witness w;
          w.sets = {s};
          w.assumptions = {b};
          w.note = "no least preferred member of " + f.set_to_string(s) +
                   " is counter-attacked when deducing the contrary of '" +
                   f.token(f.assumption_sentence(b)) + "'";
          v.witnesses.push_back(std::move(w));
        }
      } else {
        for (int a = 0; a < f.assumption_count(); ++a) {
          if (!(s >> a & 1u)) continue;
          if (!counter_support_within(fam, f, a, (s & ~(1u << a)) | (1u << b))) {
            v.status = Verdict::Status::violated;
            Verdict::Witness w;
            w.sets = {s};
            w.assumptions = {b, a};
            w.note = "no deduction of the contrary of '" + f.token(f.assumption_sentence(a)) +
                     "' inside " + f.set_to_string((s & ~(1u << a)) | (1u << b));
            v.witnesses.push_back(std::move(w));
          }
        }
      }
    }
  }
  return v;
}

Framework with_empty_preferences(const Framework& f) {
  FrameworkBuilder b;
  for (int i = 0; i < f.assumption_count(); ++i)
    b.assumption(f.token(f.assumption_sentence(i)));
  for (int i = 0; i < f.assumption_count(); ++i)
    if (f.contrary_declared(i))
      b.contrary(f.token(f.assumption_sentence(i)), f.token(f.contrary(i)));
  for (const Rule& r : f.rules()) {
    std::vector<std::string> body;
    for (SentenceId s : r.body) body.push_back(f.token(s));
    b.rule(f.token(r.head), body);
  }
  return b.build();
}

Verdict check_conflict_preservation(const Framework& f, Semantics sem, const Limits& limits) {
  Verdict v;
  v.subject = "principle_conflict_preservation";
  ExtensionReport report = extensions(f, sem, Mode::preference_aware, limits);
  for (std::size_t k = 0; k < report.extensions.size(); ++k) {
    AssumptionSet e = report.extensions[k];
    for (int i = 0; i < f.assumption_count(); ++i) {
      if (!(e >> i & 1u)) continue;
      for (int j = 0; j < f.assumption_count(); ++j) {
        if (!(e >> j & 1u)) continue;
        if (aba_attacks(f, 1u << i, 1u << j)) {
          v.status = Verdict::Status::violated;
          Verdict::Witness w;
          w.sets = {e};
          w.assumptions = {i, j};
          w.note = "extension keeps a plainly conflicting pair";
          v.witnesses.push_back(std::move(w));
        }
      }
    }
  }
  return v;
}

Verdict check_empty_preferences(const Framework& f, Semantics sem, const Limits& limits) {
  Verdict v;
  v.subject = "principle_empty_preferences";
  Framework stripped = with_empty_preferences(f);
  ExtensionReport with_machinery = extensions(stripped, sem, Mode::preference_aware, limits);
  ExtensionReport plain = extensions(f, sem, Mode::plain, limits);
  if (with_machinery.extensions != plain.extensions || with_machinery.exists != plain.exists) {
    v.status = Verdict::Status::violated;
    for (AssumptionSet e : with_machinery.extensions)
      if (!std::binary_search(plain.extensions.begin(), plain.extensions.end(), e)) {
        Verdict::Witness w;
        w.sets = {e};
        w.note = "extension under empty preferences is not a plain extension";
        v.witnesses.push_back(std::move(w));
      }
    for (AssumptionSet e : plain.extensions)
      if (!std::binary_search(with_machinery.extensions.begin(), with_machinery.extensions.end(), e)) {
        Verdict::Witness w;
        w.sets = {e};
        w.note = "plain extension missing under empty preferences";
        v.witnesses.push_back(std::move(w));
      }
  }
  return v;
}

Verdict check_maximal_elements(const Framework& f, Semantics sem, const Limits& limits) {
  Verdict v;
  v.subject = "principle_maximal_elements";
  if (auto pair = f.pref().incomparable_pair()) {
    v.status = Verdict::Status::not_applicable;
    v.notes = "preference ordering is not total: '" +
              f.token(f.assumption_sentence(pair->first)) + "' and '" +
              f.token(f.assumption_sentence(pair->second)) + "' are incomparable";
    return v;
  }
  AssumptionSet m = 0;
  for (int i = 0; i < f.assumption_count(); ++i) {
    bool maximal = true;
    for (int j = 0; j < f.assumption_count(); ++j)
      if (f.pref().less(i, j)) {
        maximal = false;
        break;
      }
    if (maximal) m |= 1u << i;
  }
  if (!is_closed(f, m)) {
    v.status = Verdict::Status::not_applicable;
    v.notes = "the set of maximal assumptions " + f.set_to_string(m) + " is not closed";
    return v;
  }
  if (!is_conflict_free(f, m, Mode::preference_aware)) {
    v.status = Verdict::Status::not_applicable;
    v.notes = "the set of maximal assumptions " + f.set_to_string(m) + " is not conflict-free";
    return v;
  }
  ExtensionReport report = extensions(f, sem, Mode::preference_aware, limits);
  for (AssumptionSet e : report.extensions)
    if ((m & e) != m) {
      v.status = Verdict::Status::violated;
      Verdict::Witness w;
      w.sets = {e, m};
      w.note = "extension misses the maximal assumptions";
      v.witnesses.push_back(std::move(w));
    }
  return v;
}

Verdict check_classical_consistency(const Framework& f, Semantics sem, const Limits& limits) {
  Verdict v;
  v.subject = "principle_classical_consistency";
  Complement c = Complement::token_convention(f);
  ExtensionReport report = extensions(f, sem, Mode::preference_aware, limits);
  for (AssumptionSet e : report.extensions) {
    SentenceSet cn = conclusions(f, e);
    for (SentenceId s = 0; s < cn.size(); ++s) {
      if (!cn[s]) continue;
      auto comp = c.of(s);
      if (!comp || *comp < s) continue;  // report each pair once
      if (cn[*comp]) {
        v.status = Verdict::Status::violated;
        Verdict::Witness w;
        w.sets = {e};
        w.sentences = {s, *comp};
        w.note = "conclusions contain a sentence and its complement";
        v.witnesses.push_back(std::move(w));
      }
    }
  }
  return v;
}

}  // namespace

Verdict check_wcp(const Framework& f, const Limits& limits) {
  return contraposition_scan(f, limits, /*weak=*/true);
}

Verdict check_contraposition(const Framework& f, const Limits& limits) {
  return contraposition_scan(f, limits, /*weak=*/false);
}

Verdict check_axiom_consistency(const Framework& f, const Complement& c, const Limits& limits) {
  Verdict v;
  v.subject = "axiom_consistency";
  SupportFamily fam = support_families(f, limits);
  for (SentenceId s = 0; s < static_cast<SentenceId>(f.sentence_count()); ++s) {
    auto comp = c.of(s);
    if (!comp || *comp < s) continue;
    if (fam.contains(s, 0) && fam.contains(*comp, 0)) {
      v.status = Verdict::Status::violated;
      Verdict::Witness w;
      w.sentences = {s, *comp};
      w.note = "both '" + f.token(s) + "' and '" + f.token(*comp) + "' are derivable from no assumptions";
      v.witnesses.push_back(std::move(w));
    }
  }
  return v;
}

Verdict check_axiom_negation(const Framework& f, const Complement&, const Limits& limits) {
  Verdict v;
  v.subject = "axiom_negation";
  SupportFamily fam = support_families(f, limits);
  for (SentenceId s = 0; s < static_cast<SentenceId>(f.sentence_count()); ++s) {
    std::string needed = Complement::complement_token(f.token(s));
    for (AssumptionSet support : fam.supports(s)) {
      if (support == 0) continue;
      bool ok = false;
      for (int a = 0; a < f.assumption_count() && !ok; ++a)
        if ((support >> a & 1u) && f.token(f.contrary(a)) == needed) ok = true;
      if (!ok) {
        v.status = Verdict::Status::violated;
        Verdict::Witness w;
        w.sentences = {s};
        w.sets = {support};
        w.note = "deduction of '" + f.token(s) + "' from " + f.set_to_string(support) +
                 " uses no assumption with contrary '" + needed + "'";
        v.witnesses.push_back(std::move(w));
      }
    }
  }
  return v;
}

bool directly_consistent(const Framework& f, AssumptionSet e) {
  for (int i = 0; i < f.assumption_count(); ++i) {
    if (!(e >> i & 1u)) continue;
    if (f.is_assumption(f.contrary(i)) && (e >> f.assumption_index(f.contrary(i)) & 1u)) return false;
  }
  return true;
}

bool indirectly_consistent(const Framework& f, AssumptionSet e) {
  SentenceSet cn = conclusions(f, e);
  for (int i = 0; i < f.assumption_count(); ++i)
    if (cn[f.assumption_sentence(i)] && cn[f.contrary(i)]) return false;
  return true;
}

Verdict check_principle(const Framework& f, PrincipleId which, Semantics sem, const Limits& limits) {
  switch (which) {
    case PrincipleId::conflict_preservation: return check_conflict_preservation(f, sem, limits);
    case PrincipleId::empty_preferences: return check_empty_preferences(f, sem, limits);
    case PrincipleId::maximal_elements: return check_maximal_elements(f, sem, limits);
    case PrincipleId::rationality_postulates: return check_postulates(f, sem, limits);
    case PrincipleId::classical_consistency: return check_classical_consistency(f, sem, limits);
  }
  throw Error("unknown principle");
}

Verdict check_postulates(const Framework& f, Semantics sem, const Limits& limits) {
  Verdict v;
  v.subject = "rationality_postulates";
  ExtensionReport report = extensions(f, sem, Mode::preference_aware, limits);
  for (AssumptionSet e : report.extensions) {
    SentenceSet cn = conclusions(f, e);
    std::vector<SentenceId> cn_list;
    for (SentenceId s = 0; s < cn.size(); ++s)
      if (cn[s]) cn_list.push_back(s);
    SentenceSet cn2 = conclusions(f, cn_list);
    if (cn2 != cn) {
      v.status = Verdict::Status::violated;
      Verdict::Witness w;
      w.sets = {e};
      w.note = "conclusions are not deductively closed";
      v.witnesses.push_back(std::move(w));
    }
    // Direct consistency: no member is the contrary of another member.
    for (int i = 0; i < f.assumption_count(); ++i) {
      if (!(e >> i & 1u)) continue;
      if (f.is_assumption(f.contrary(i))) {
        int j = f.assumption_index(f.contrary(i));
        if (e >> j & 1u) {
          v.status = Verdict::Status::violated;
          Verdict::Witness w;
          w.sets = {e};
          w.assumptions = {i, j};
          w.note = "extension is not directly consistent";
          v.witnesses.push_back(std::move(w));
        }
      }
    }
    // Indirect consistency: conclusions never hold an assumption together
    // with its contrary.
    for (int i = 0; i < f.assumption_count(); ++i) {
      if (cn[f.assumption_sentence(i)] && cn[f.contrary(i)]) {
        v.status = Verdict::Status::violated;
        Verdict::Witness w;
        w.sets = {e};
        w.assumptions = {i};
        w.note = "conclusions are not indirectly consistent";
        v.witnesses.push_back(std::move(w));
      }
    }
  }
  return v;
}

}  // namespace aba
