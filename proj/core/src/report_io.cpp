#include "aba/report_io.hpp"

#include <algorithm>

#include "aba/attacks.hpp"
#include "aba/deduction.hpp"
#include "json.hpp"

namespace aba {

namespace {

using nlohmann::json;

json tokens_json(const Framework& f, AssumptionSet set) {
  json arr = json::array();
  for (const auto& t : f.set_tokens(set)) arr.push_back(t);
  return arr;
}

json sentences_json(const Framework& f, const std::vector<SentenceId>& sentences) {
  json arr = json::array();
  for (SentenceId s : sentences) arr.push_back(f.token(s));
  return arr;
}

json report_json(const Framework& f, const ExtensionReport& report) {
  json doc;
  doc["semantics"] = display_semantics(report);
  doc["mode"] = report.mode == Mode::plain ? "plain" : "plus";
  doc["exists"] = report.exists;
  doc["extensions"] = json::array();
  for (AssumptionSet e : report.extensions) doc["extensions"].push_back(tokens_json(f, e));
  doc["conclusions"] = json::array();
  for (const auto& c : report.conclusions) doc["conclusions"].push_back(sentences_json(f, c));
  if (report.semantics == Semantics::well_founded && report.exists) {
    doc["closed"] = report.well_founded_closed;
    doc["admissible"] = report.well_founded_admissible;
  }
  return doc;
}

json verdict_json(const Framework& f, const Verdict& v) {
  json doc;
  doc["subject"] = v.subject;
  doc["status"] = to_string(v.status);
  if (!v.notes.empty()) doc["notes"] = v.notes;
  doc["witnesses"] = json::array();
  for (const auto& w : v.witnesses) {
    json wj;
    wj["sets"] = json::array();
    for (AssumptionSet s : w.sets) wj["sets"].push_back(tokens_json(f, s));
    wj["sentences"] = sentences_json(f, w.sentences);
    wj["assumptions"] = json::array();
    for (int a : w.assumptions) wj["assumptions"].push_back(f.token(f.assumption_sentence(a)));
    if (!w.note.empty()) wj["note"] = w.note;
    doc["witnesses"].push_back(wj);
  }
  return doc;
}

}  // namespace

std::string display_semantics(const ExtensionReport& report) {
  if (report.semantics == Semantics::well_founded && report.grounded_alias) return "grounded";
  return to_string(report.semantics);
}

std::string json_extension_report(const Framework& f, const ExtensionReport& report) {
  return report_json(f, report).dump(2) + "\n";
}

std::string json_verdict(const Framework& f, const Verdict& verdict) {
  return verdict_json(f, verdict).dump(2) + "\n";
}

std::string text_extension_report(const Framework& f, const ExtensionReport& report) {
  std::string out = display_semantics(report);
  out += report.mode == Mode::plain ? " (plain)" : " (preference-aware)";
  if (!report.exists) {
    out += ": none exist\n";
    return out;
  }
  out += ": " + std::to_string(report.extensions.size()) + " extension(s)\n";
  for (std::size_t i = 0; i < report.extensions.size(); ++i) {
    out += "  " + f.set_to_string(report.extensions[i]) + "  conclusions: {";
    const auto& c = report.conclusions[i];
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) out += ",";
      out += f.token(c[k]);
    }
    out += "}\n";
  }
  if (report.semantics == Semantics::well_founded && report.exists) {
    if (!report.well_founded_closed) out += "  note: intersection is not closed\n";
    else if (!report.well_founded_admissible) out += "  note: intersection is not admissible\n";
  }
  return out;
}

std::string text_verdict(const Framework& f, const Verdict& v) {
  std::string out = v.subject + ": " + to_string(v.status);
  if (!v.notes.empty()) out += " (" + v.notes + ")";
  out += "\n";
  for (const auto& w : v.witnesses) {
    out += "  witness:";
    for (AssumptionSet s : w.sets) out += " " + f.set_to_string(s);
    for (SentenceId s : w.sentences) out += " '" + f.token(s) + "'";
    for (int a : w.assumptions) out += " " + f.token(f.assumption_sentence(a));
    if (!w.note.empty()) out += " -- " + w.note;
    out += "\n";
  }
  return out;
}

std::string export_dot(const Framework& f, std::string_view scope, const Limits& limits) {
  std::vector<AssumptionSet> nodes;
  AssumptionSet all = f.all_assumptions();
  if (scope == "all") {
    if (f.assumption_count() > limits.assumption_cap)
      throw CapacityError("assumption count exceeds enumeration cap for scope=all");
    for (AssumptionSet m = 1; m < all; ++m) nodes.push_back(m);
  } else if (scope == "supports") {
    SupportFamily fam = support_families(f, limits);
    std::vector<AssumptionSet> seen;
    for (SentenceId s = 0; s < static_cast<SentenceId>(f.sentence_count()); ++s)
      for (AssumptionSet m : fam.supports(s)) seen.push_back(m);
    for (int i = 0; i < f.assumption_count(); ++i) seen.push_back(1u << i);
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    for (AssumptionSet m : seen)
      if (m != 0 && m != all) nodes.push_back(m);
  } else {
    throw Error("unknown dot scope '" + std::string(scope) + "'");
  }

  std::string out = "digraph attacks {\n  rankdir=LR;\n";
  for (AssumptionSet m : nodes) out += "  \"" + f.set_to_string(m) + "\";\n";
  for (AssumptionSet a : nodes)
    for (AssumptionSet b : nodes) {
      AttackFlags flags = plus_attacks(f, a, b);
      if (!flags.any()) continue;
      out += "  \"" + f.set_to_string(a) + "\" -> \"" + f.set_to_string(b) + "\"";
      if (flags.normal && flags.reverse) out += " [style=solid, both=true]";
      else if (flags.reverse) out += " [style=dashed]";
      else out += " [style=solid]";
      out += ";\n";
    }
  out += "}\n";
  return out;
}

}  // namespace aba
