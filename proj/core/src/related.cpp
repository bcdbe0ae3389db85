#include "aba/related.hpp"

#include <algorithm>

namespace aba {

int Paf::index_of(std::string_view name) const {
  for (int i = 0; i < arg_count(); ++i)
    if (args[i] == name) return i;
  return -1;
}

const char* to_string(ComparisonPrinciple p) {
  switch (p) {
    case ComparisonPrinciple::elitist: return "elitist";
    case ComparisonPrinciple::democratic: return "democratic";
    case ComparisonPrinciple::disjoint_elitist: return "disjoint_elitist";
  }
  return "?";
}

AAGraph repair_paf(const Paf& p) {
  AAGraph g;
  g.nodes = p.args;
  for (auto [a, b] : p.attacks) {
    if (!p.less(a, b)) g.edges.emplace_back(a, b);
    if (p.less(a, b)) g.edges.emplace_back(b, a);
  }
  std::sort(g.edges.begin(), g.edges.end());
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
  return g;
}

Framework paf_to_abaplus(const Paf& p) {
  for (const auto& name : p.args) {
    if (!name.empty() && name[0] == '~')
      throw Error("argument id '" + name + "' clashes with the reserved complement prefix");
    if (name.rfind("_contrary_", 0) == 0)
      throw Error("argument id '" + name + "' clashes with the reserved contrary prefix");
  }
  FrameworkBuilder b;
  for (const auto& name : p.args) b.assumption(name);
  for (auto [a, t] : p.attacks) b.rule("_contrary_" + p.args[t], {p.args[a]});
  for (int i = 0; i < p.arg_count(); ++i)
    for (int j = 0; j < p.arg_count(); ++j)
      if (p.leq_at(i, j)) b.prefer(p.args[i], p.args[j], false);
  return b.build();
}

ArgumentView build_arguments(const Framework& f, const Limits& limits) {
  if (!is_flat(f)) throw PreconditionError("argument view requires a flat framework");
  SupportFamily fam = support_families(f, limits);
  ArgumentView view;
  for (SentenceId s = 0; s < static_cast<SentenceId>(f.sentence_count()); ++s) {
    for (AssumptionSet support : fam.supports(s)) {
      StructuredArgument arg;
      arg.support = support;
      arg.conclusion = s;
      arg.id = f.set_to_string(support) + "|-" + f.token(s);
      view.args.push_back(std::move(arg));
      if (static_cast<int>(view.args.size()) > limits.argument_cap)
        throw CapacityError("argument count exceeds cap of " + std::to_string(limits.argument_cap));
    }
  }
  view.contraries.resize(f.assumption_count());
  for (int k = 0; k < f.assumption_count(); ++k) view.contraries[k] = f.contrary(k);
  view.graph.nodes.reserve(view.args.size());
  for (const auto& a : view.args) view.graph.nodes.push_back(a.id);
  for (int i = 0; i < static_cast<int>(view.args.size()); ++i)
    for (int j = 0; j < static_cast<int>(view.args.size()); ++j) {
      const auto& a = view.args[i];
      const auto& b = view.args[j];
      for (int k = 0; k < f.assumption_count(); ++k)
        if ((b.support >> k & 1u) && a.conclusion == f.contrary(k)) {
          view.graph.edges.emplace_back(i, j);
          break;
        }
    }
  return view;
}

OrderFlags argument_order(ComparisonPrinciple principle, const StructuredArgument& a,
                          const StructuredArgument& b, const Preorder& pref) {
  OrderFlags flags;
  int n = pref.size();
  auto forall_exists_leq = [&](AssumptionSet xs, AssumptionSet ys) {
    for (int x = 0; x < n; ++x) {
      if (!(xs >> x & 1u)) continue;
      bool found = false;
      for (int y = 0; y < n && !found; ++y)
        if ((ys >> y & 1u) && pref.leq(x, y)) found = true;
      if (!found) return false;
    }
    return true;
  };
  auto exists_forall_less = [&](AssumptionSet xs, AssumptionSet ys) {
    for (int x = 0; x < n; ++x) {
      if (!(xs >> x & 1u)) continue;
      bool all = true;
      for (int y = 0; y < n && all; ++y)
        if ((ys >> y & 1u) && !pref.less(x, y)) all = false;
      if (all) return true;
    }
    return false;
  };
  switch (principle) {
    case ComparisonPrinciple::elitist:
      flags.strictly_less = exists_forall_less(a.support, b.support);
      flags.leq = flags.strictly_less;
      break;
    case ComparisonPrinciple::disjoint_elitist:
      flags.strictly_less = exists_forall_less(a.support & ~b.support, b.support & ~a.support);
      flags.leq = flags.strictly_less;
      break;
    case ComparisonPrinciple::democratic:
      flags.leq = forall_exists_leq(a.support, b.support);
      flags.strictly_less = flags.leq && !forall_exists_leq(b.support, a.support);
      break;
  }
  return flags;
}

Paf paf_from_arguments(const ArgumentView& view, ComparisonPrinciple principle, const Preorder& pref) {
  Paf p;
  p.args = view.graph.nodes;
  p.attacks = view.graph.edges;
  int n = p.arg_count();
  p.leq.assign(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      OrderFlags flags = argument_order(principle, view.args[i], view.args[j], pref);
      bool keep = principle == ComparisonPrinciple::democratic ? flags.leq : flags.strictly_less;
      if (keep) p.leq[static_cast<std::size_t>(i) * n + j] = 1;
    }
  return p;
}

AAGraph defeat_graph(const ArgumentView& view, ComparisonPrinciple principle, const Preorder& pref) {
  int n = pref.size();
  AAGraph g;
  g.nodes = view.graph.nodes;
  for (auto [i, j] : view.graph.edges) {
    const auto& a = view.args[i];
    const auto& b = view.args[j];
    // The attack lands on every premise k of b whose contrary a concludes;
    // it survives as a defeat unless a is strictly below that premise
    // argument under the principle.
    bool survives = false;
    for (int k = 0; k < n && !survives; ++k) {
      if (!(b.support >> k & 1u)) continue;
      if (a.conclusion != view.contraries[k]) continue;
      StructuredArgument premise{1u << k, 0, {}};  // ordering only reads the support
      if (!argument_order(principle, a, premise, pref).strictly_less) survives = true;
    }
    if (survives) g.edges.emplace_back(i, j);
  }
  return g;
}

AAGraph dung_normal_graph(const ArgumentView& view, const Preorder& pref) {
  int n = pref.size();
  AAGraph g;
  g.nodes = view.graph.nodes;
  for (auto [i, j] : view.graph.edges) {
    const auto& a = view.args[i];
    const auto& b = view.args[j];
    bool survives = false;
    for (int k = 0; k < n && !survives; ++k) {
      if (!(b.support >> k & 1u)) continue;
      if (a.conclusion != view.contraries[k]) continue;
      bool blocked = false;
      for (int x = 0; x < n && !blocked; ++x)
        if ((a.support >> x & 1u) && pref.less(x, k)) blocked = true;
      if (!blocked) survives = true;
    }
    if (survives) g.edges.emplace_back(i, j);
  }
  return g;
}

namespace {

bool paba_base(const LPreference& lp, const SentenceSet& cn_e, const SentenceSet& cn_e2) {
  // e <= e2 when some conclusion gained by e2 is weakly above some conclusion
  // lost from e and nothing lost from e strictly dominates it.
  for (SentenceId phi = 0; phi < cn_e2.size(); ++phi) {
    if (!cn_e2[phi] || cn_e[phi]) continue;
    bool some_below = false, dominated = false;
    for (SentenceId psi = 0; psi < cn_e.size(); ++psi) {
      if (!cn_e[psi] || cn_e2[psi]) continue;
      if (lp.leq(static_cast<int>(psi), static_cast<int>(phi))) some_below = true;
      if (lp.less(static_cast<int>(phi), static_cast<int>(psi))) dominated = true;
    }
    if (some_below && !dominated) return true;
  }
  return false;
}

}  // namespace

std::vector<std::vector<char>> paba_relation(const Framework& f, const LPreference& lp,
                                             const std::vector<AssumptionSet>& family) {
  int n = static_cast<int>(family.size());
  std::vector<SentenceSet> cn;
  cn.reserve(n);
  for (AssumptionSet e : family) cn.push_back(conclusions(f, e));
  std::vector<std::vector<char>> rel(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i) {
    rel[i][i] = 1;
    for (int j = 0; j < n; ++j)
      if (i != j && paba_base(lp, cn[i], cn[j])) rel[i][j] = 1;
  }
  // Transitive closure over the family.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (rel[i][k])
        for (int j = 0; j < n; ++j)
          if (rel[k][j]) rel[i][j] = 1;
  return rel;
}

bool p_aba_prefers(const Framework& f, const LPreference& lp, AssumptionSet e1, AssumptionSet e2) {
  if (e1 == e2) return true;
  auto rel = paba_relation(f, lp, {e1, e2});
  return rel[0][1] != 0;
}

ExtensionReport p_aba_extensions(const Framework& f, const LPreference& lp, Semantics sem,
                                 const Limits& limits) {
  ExtensionReport plain = extensions(f, sem, Mode::plain, limits);
  auto rel = paba_relation(f, lp, plain.extensions);
  ExtensionReport out;
  out.semantics = sem;
  out.mode = Mode::plain;
  out.grounded_alias = plain.grounded_alias;
  int n = static_cast<int>(plain.extensions.size());
  for (int i = 0; i < n; ++i) {
    bool maximal = true;
    for (int j = 0; j < n && maximal; ++j)
      if (rel[i][j] && !rel[j][i]) maximal = false;
    if (maximal) {
      out.extensions.push_back(plain.extensions[i]);
      out.conclusions.push_back(plain.conclusions[i]);
    }
  }
  out.exists = plain.exists && !out.extensions.empty();
  return out;
}

}  // namespace aba
