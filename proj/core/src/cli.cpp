#include "aba/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "aba/compliance.hpp"
#include "aba/parser.hpp"
#include "aba/related.hpp"
#include "aba/report_io.hpp"
#include "json.hpp"

namespace aba {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Semantics semantics_arg(const RunConfig& config) {
  auto sem = parse_semantics(config.semantics);
  if (!sem) throw Error("unknown semantics '" + config.semantics + "'");
  return *sem;
}

Mode mode_arg(const RunConfig& config) {
  auto mode = parse_mode(config.mode);
  if (!mode) throw Error("unknown mode '" + config.mode + "'");
  return *mode;
}

void cmd_check(const RunConfig& config, const Framework& f, std::ostream& out) {
  bool flat = is_flat(f);
  int closed_count = -1;
  if (f.assumption_count() <= config.limits.assumption_cap) {
    closed_count = 0;
    std::uint32_t size = std::uint32_t(1) << f.assumption_count();
    for (std::uint32_t m = 0; m < size; ++m)
      if (is_closed(f, m)) ++closed_count;
  }
  int pref_pairs = 0, strict_pairs = 0;
  for (int a = 0; a < f.pref().size(); ++a)
    for (int b = 0; b < f.pref().size(); ++b) {
      if (f.pref().leq(a, b)) ++pref_pairs;
      if (f.pref().less(a, b)) ++strict_pairs;
    }
  if (config.format == "json") {
    json doc;
    doc["sentences"] = f.sentence_count();
    doc["rules"] = static_cast<int>(f.rules().size());
    doc["assumptions"] = f.assumption_count();
    doc["flat"] = flat;
    if (closed_count >= 0) doc["closed_subsets"] = closed_count;
    doc["preference_pairs"] = pref_pairs;
    doc["strict_pairs"] = strict_pairs;
    out << doc.dump(2) << "\n";
  } else {
    out << "sentences:        " << f.sentence_count() << "\n"
        << "rules:            " << f.rules().size() << "\n"
        << "assumptions:      " << f.assumption_count() << "\n"
        << "flat:             " << (flat ? "yes" : "no") << "\n";
    if (closed_count >= 0)
      out << "closed subsets:   " << closed_count << " of " << (1u << f.assumption_count()) << "\n";
    out << "preference pairs: " << pref_pairs << " (strict: " << strict_pairs << ")\n";
  }
}

void cmd_semantics(const RunConfig& config, const Framework& f, std::ostream& out) {
  ExtensionReport report = extensions(f, semantics_arg(config), mode_arg(config), config.limits);
  out << (config.format == "json" ? json_extension_report(f, report)
                                  : text_extension_report(f, report));
}

void cmd_axioms(const RunConfig& config, const Framework& f, std::ostream& out) {
  Complement c = Complement::token_convention(f);
  std::vector<Verdict> verdicts{
      check_wcp(f, config.limits),
      check_contraposition(f, config.limits),
      check_axiom_consistency(f, c, config.limits),
      check_axiom_negation(f, c, config.limits),
  };
  if (config.format == "json") {
    json doc = json::array();
    for (const auto& v : verdicts) doc.push_back(json::parse(json_verdict(f, v)));
    out << doc.dump(2) << "\n";
  } else {
    for (const auto& v : verdicts) out << text_verdict(f, v);
  }
}

void cmd_principles(const RunConfig& config, const Framework& f, std::ostream& out) {
  Semantics sem = semantics_arg(config);
  std::vector<Verdict> verdicts;
  for (PrincipleId p : {PrincipleId::conflict_preservation, PrincipleId::empty_preferences,
                        PrincipleId::maximal_elements, PrincipleId::rationality_postulates,
                        PrincipleId::classical_consistency})
    verdicts.push_back(check_principle(f, p, sem, config.limits));
  if (config.format == "json") {
    json doc = json::array();
    for (const auto& v : verdicts) doc.push_back(json::parse(json_verdict(f, v)));
    out << doc.dump(2) << "\n";
  } else {
    for (const auto& v : verdicts) out << text_verdict(f, v);
  }
}

struct CompareColumn {
  std::string view;
  bool applicable = false;
  std::string reason;
  std::vector<std::vector<std::string>> extensions;
};

std::vector<std::vector<std::string>> masks_to_tokens(const Framework& f,
                                                      const std::vector<AssumptionSet>& exts) {
  std::vector<std::vector<std::string>> out;
  for (AssumptionSet e : exts) out.push_back(f.set_tokens(e));
  return out;
}

std::vector<std::vector<std::string>> nodes_to_labels(const AAGraph& g,
                                                      const std::vector<std::vector<int>>& exts) {
  std::vector<std::vector<std::string>> out;
  for (const auto& ext : exts) {
    std::vector<std::string> labels;
    for (int i : ext) labels.push_back(g.nodes[i]);
    out.push_back(std::move(labels));
  }
  return out;
}

void cmd_compare(const RunConfig& config, const Framework& f, std::ostream& out) {
  Semantics sem = semantics_arg(config);
  std::vector<CompareColumn> columns;

  auto guarded = [&](const std::string& view, auto&& compute) {
    CompareColumn col;
    col.view = view;
    try {
      col.extensions = compute();
      col.applicable = true;
    } catch (const PreconditionError& e) {
      col.reason = e.what();
    } catch (const CapacityError& e) {
      col.reason = e.what();
    }
    columns.push_back(std::move(col));
  };

  guarded("aba", [&] { return masks_to_tokens(f, extensions(f, sem, Mode::plain, config.limits).extensions); });
  guarded("abaplus", [&] {
    return masks_to_tokens(f, extensions(f, sem, Mode::preference_aware, config.limits).extensions);
  });
  auto paf_view = [&](ComparisonPrinciple principle) {
    return [&, principle] {
      ArgumentView view = build_arguments(f, config.limits);
      Paf paf = paf_from_arguments(view, principle, f.pref());
      AAGraph repaired = repair_paf(paf);
      return nodes_to_labels(repaired, aa_extensions(repaired, sem, config.limits));
    };
  };
  guarded("paf-eli", paf_view(ComparisonPrinciple::elitist));
  guarded("paf-dem", paf_view(ComparisonPrinciple::democratic));
  guarded("paf-deli", paf_view(ComparisonPrinciple::disjoint_elitist));
  guarded("dung-normal", [&] {
    ArgumentView view = build_arguments(f, config.limits);
    AAGraph normal = dung_normal_graph(view, f.pref());
    return nodes_to_labels(normal, aa_extensions(normal, sem, config.limits));
  });
  guarded("p-aba", [&] {
    if (!is_flat(f)) throw PreconditionError("extension comparison requires a flat framework");
    return masks_to_tokens(f, p_aba_extensions(f, f.lpref(), sem, config.limits).extensions);
  });

  if (config.format == "json") {
    json doc;
    doc["semantics"] = config.semantics;
    doc["columns"] = json::array();
    for (const auto& col : columns) {
      json cj;
      cj["view"] = col.view;
      cj["applicable"] = col.applicable;
      if (!col.applicable) cj["reason"] = col.reason;
      cj["extensions"] = json::array();
      for (const auto& ext : col.extensions) {
        json ej = json::array();
        for (const auto& t : ext) ej.push_back(t);
        cj["extensions"].push_back(ej);
      }
      doc["columns"].push_back(cj);
    }
    out << doc.dump(2) << "\n";
  } else {
    for (const auto& col : columns) {
      out << col.view << ": ";
      if (!col.applicable) {
        out << "not applicable (" << col.reason << ")\n";
        continue;
      }
      for (std::size_t i = 0; i < col.extensions.size(); ++i) {
        if (i) out << " ";
        out << "{";
        for (std::size_t k = 0; k < col.extensions[i].size(); ++k) {
          if (k) out << ",";
          out << col.extensions[i][k];
        }
        out << "}";
      }
      out << "\n";
    }
  }
}

int dispatch(const RunConfig& config, std::ostream& out) {
  if (config.subcommand == "translate-paf") {
    Paf paf = parse_paf(read_file(config.input));
    out << render_framework(paf_to_abaplus(paf));
    return exit_ok;
  }
  Framework f = parse_framework(read_file(config.input));
  if (config.subcommand == "check") cmd_check(config, f, out);
  else if (config.subcommand == "semantics") cmd_semantics(config, f, out);
  else if (config.subcommand == "axioms") cmd_axioms(config, f, out);
  else if (config.subcommand == "principles") cmd_principles(config, f, out);
  else if (config.subcommand == "compare") cmd_compare(config, f, out);
  else if (config.subcommand == "dot") out << export_dot(f, config.scope, config.limits);
  else throw Error("unknown subcommand '" + config.subcommand + "'");
  return exit_ok;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.limits.assumption_cap <= 0 || config.limits.support_cap <= 0 ||
        config.limits.argument_cap <= 0)
      throw Error("caps must be positive");
    if (!config.output.empty()) {
      std::ofstream file(config.output, std::ios::binary);
      if (!file) throw Error("cannot write output file '" + config.output + "'");
      return dispatch(config, file);
    }
    return dispatch(config, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return exit_parse;
  } catch (const CapacityError& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return exit_capacity;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
}

}  // namespace aba
