#include "aba/parser.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace aba {

namespace {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line;
    line.number = number;
    std::istringstream in{std::string(raw)};
    std::string tok;
    while (in >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

void expect_arity(const Line& line, std::size_t count) {
  if (line.tokens.size() != count)
    throw ParseError(line.number, "'" + line.tokens[0] + "' expects " +
                                      std::to_string(count - 1) + " argument(s)");
}

bool strict_op(const Line& line, const std::string& op) {
  if (op == "<") return true;
  if (op == "<=") return false;
  throw ParseError(line.number, "expected '<=' or '<', got '" + op + "'");
}

}  // namespace

Framework parse_framework(std::string_view text) {
  std::vector<Line> lines = tokenize(text);
  FrameworkBuilder b;
  // Assumption declarations first, so the other directives may come in any order.
  for (const Line& line : lines)
    if (line.tokens[0] == "assumption") {
      expect_arity(line, 2);
      b.assumption(line.tokens[1], line.number);
    }
  for (const Line& line : lines) {
    const auto& t = line.tokens;
    try {
      if (t[0] == "assumption") {
        continue;
      } else if (t[0] == "contrary") {
        expect_arity(line, 3);
        b.contrary(t[1], t[2], line.number);
      } else if (t[0] == "rule") {
        if (t.size() < 3 || t[2] != "<-")
          throw ParseError(line.number, "rule syntax is 'rule <head> <- [<body>...]'");
        b.rule(t[1], std::vector<std::string>(t.begin() + 3, t.end()));
      } else if (t[0] == "pref") {
        expect_arity(line, 4);
        b.prefer(t[1], t[3], strict_op(line, t[2]), line.number);
      } else if (t[0] == "lpref") {
        expect_arity(line, 4);
        b.lprefer(t[1], t[3], strict_op(line, t[2]), line.number);
      } else {
        throw ParseError(line.number, "unknown directive '" + t[0] + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(line.number, e.what());
    }
  }
  try {
    return b.build();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(0, e.what());
  }
}

std::string render_framework(const Framework& f) {
  std::string out;
  for (int i = 0; i < f.assumption_count(); ++i)
    out += "assumption " + f.token(f.assumption_sentence(i)) + "\n";
  for (int i = 0; i < f.assumption_count(); ++i)
    out += "contrary " + f.token(f.assumption_sentence(i)) + " " + f.token(f.contrary(i)) + "\n";
  for (const Rule& r : f.rules()) {
    out += "rule " + f.token(r.head) + " <-";
    for (SentenceId s : r.body) out += " " + f.token(s);
    out += "\n";
  }
  for (int a = 0; a < f.pref().size(); ++a)
    for (int b = 0; b < f.pref().size(); ++b)
      if (f.pref().leq(a, b))
        out += "pref " + f.token(f.assumption_sentence(a)) + " <= " +
               f.token(f.assumption_sentence(b)) + "\n";
  // Sentence interning order is not canonical, so language-preference pairs
  // sort by token text.
  std::vector<std::pair<std::string, std::string>> lpairs;
  for (int s = 0; s < f.lpref().size(); ++s)
    for (int t = 0; t < f.lpref().size(); ++t)
      if (f.lpref().leq(s, t))
        lpairs.emplace_back(f.token(static_cast<SentenceId>(s)), f.token(static_cast<SentenceId>(t)));
  std::sort(lpairs.begin(), lpairs.end());
  for (const auto& [s, t] : lpairs) out += "lpref " + s + " <= " + t + "\n";
  return out;
}

Paf parse_paf(std::string_view text) {
  std::vector<Line> lines = tokenize(text);
  Paf p;
  for (const Line& line : lines)
    if (line.tokens[0] == "arg") {
      expect_arity(line, 2);
      if (p.index_of(line.tokens[1]) >= 0)
        throw ParseError(line.number, "duplicate argument '" + line.tokens[1] + "'");
      p.args.push_back(line.tokens[1]);
    }
  int n = p.arg_count();
  if (n > kMaxAssumptions) throw CapacityError("more than " + std::to_string(kMaxAssumptions) + " arguments");
  p.leq.assign(static_cast<std::size_t>(n) * n, 0);
  std::vector<std::tuple<int, int, int>> strict_decls;  // (a, b, line)
  auto arg_at = [&](const Line& line, const std::string& name) {
    int i = p.index_of(name);
    if (i < 0) throw ParseError(line.number, "undeclared argument '" + name + "'");
    return i;
  };
  for (const Line& line : lines) {
    const auto& t = line.tokens;
    if (t[0] == "arg") {
      continue;
    } else if (t[0] == "att") {
      expect_arity(line, 3);
      auto edge = std::make_pair(arg_at(line, t[1]), arg_at(line, t[2]));
      if (std::find(p.attacks.begin(), p.attacks.end(), edge) == p.attacks.end())
        p.attacks.push_back(edge);
    } else if (t[0] == "pref") {
      expect_arity(line, 4);
      int a = arg_at(line, t[1]);
      int c = arg_at(line, t[3]);
      p.leq[static_cast<std::size_t>(a) * n + c] = 1;
      if (strict_op(line, t[2])) strict_decls.emplace_back(a, c, line.number);
    } else {
      throw ParseError(line.number, "unknown directive '" + t[0] + "'");
    }
  }
  // Transitive closure, then validate the strict declarations.
  for (int k = 0; k < n; ++k)
    for (int a = 0; a < n; ++a)
      if (p.leq[static_cast<std::size_t>(a) * n + k])
        for (int c = 0; c < n; ++c)
          if (p.leq[static_cast<std::size_t>(k) * n + c]) p.leq[static_cast<std::size_t>(a) * n + c] = 1;
  for (auto [a, c, line] : strict_decls)
    if (p.leq_at(c, a))
      throw ParseError(line, "strict preference '" + p.args[a] + " < " + p.args[c] +
                                 "' became symmetric after transitive closure");
  return p;
}

}  // namespace aba
