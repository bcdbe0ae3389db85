#include "aba/framework.hpp"

#include <algorithm>

namespace aba {

bool Preorder::has_pairs() const {
  return std::any_of(leq_.begin(), leq_.end(), [](char c) { return c != 0; });
}

void Preorder::close() {
  for (int k = 0; k < n_; ++k)
    for (int a = 0; a < n_; ++a) {
      if (!leq_[idx(a, k)]) continue;
      for (int b = 0; b < n_; ++b)
        if (leq_[idx(k, b)]) leq_[idx(a, b)] = 1;
    }
}

bool Preorder::total() const { return !incomparable_pair().has_value(); }

std::optional<std::pair<int, int>> Preorder::incomparable_pair() const {
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (!leq(a, b) && !leq(b, a)) return std::make_pair(a, b);
  return std::nullopt;
}

std::uint32_t Preorder::lessers_mask(int b) const {
  std::uint32_t mask = 0;
  for (int a = 0; a < n_; ++a)
    if (less(a, b)) mask |= 1u << a;
  return mask;
}

std::optional<SentenceId> Framework::find(std::string_view token) const {
  auto it = index_.find(std::string(token));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string Framework::set_to_string(AssumptionSet set) const {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < assumption_count(); ++i) {
    if (!(set >> i & 1u)) continue;
    if (!first) out += ",";
    out += token(assumptions_[i]);
    first = false;
  }
  out += "}";
  return out;
}

std::vector<std::string> Framework::set_tokens(AssumptionSet set) const {
  std::vector<std::string> out;
  for (int i = 0; i < assumption_count(); ++i)
    if (set >> i & 1u) out.push_back(token(assumptions_[i]));
  return out;
}

void FrameworkBuilder::validate_token(std::string_view token, int line) {
  auto fail = [&](const std::string& msg) -> void {
    if (line >= 0) throw ParseError(line, msg);
    throw Error(msg);
  };
  if (token.empty()) fail("empty sentence token");
  if (token == "<-") fail("'<-' is reserved for rules");
  if (token.find_first_of(" \t\r\n") != std::string_view::npos) fail("whitespace in token");
  if (token.size() >= 2 && token[0] == '~' && token[1] == '~')
    fail("token '" + std::string(token) + "' starts with '~~'; complements do not nest");
  if (token == "~") fail("bare '~' is not a sentence");
}

SentenceId FrameworkBuilder::sentence(std::string_view token) {
  validate_token(token, -1);
  auto it = index_.find(std::string(token));
  if (it != index_.end()) return it->second;
  SentenceId id = static_cast<SentenceId>(tokens_.size());
  tokens_.emplace_back(token);
  index_.emplace(tokens_.back(), id);
  return id;
}

SentenceId FrameworkBuilder::assumption(std::string_view token, int line) {
  validate_token(token, line);
  if (token[0] == '~') {
    if (line >= 0) throw ParseError(line, "assumption name may not start with '~'");
    throw Error("assumption name may not start with '~'");
  }
  if (std::find(assumptions_.begin(), assumptions_.end(), token) != assumptions_.end()) {
    if (line >= 0) throw ParseError(line, "duplicate assumption '" + std::string(token) + "'");
    throw Error("duplicate assumption '" + std::string(token) + "'");
  }
  assumptions_.emplace_back(token);
  assumption_lines_.emplace_back(std::string(token), line);
  return sentence(token);
}

bool FrameworkBuilder::is_assumption(std::string_view token) const {
  return std::find(assumptions_.begin(), assumptions_.end(), token) != assumptions_.end();
}

void FrameworkBuilder::contrary(std::string_view assumption, std::string_view value, int line) {
  if (!is_assumption(assumption)) {
    std::string msg = "contrary declared for undeclared assumption '" + std::string(assumption) + "'";
    if (line >= 0) throw ParseError(line, msg);
    throw Error(msg);
  }
  sentence(value);
  contraries_[std::string(assumption)] = std::string(value);
}

void FrameworkBuilder::rule(std::string_view head, const std::vector<std::string>& body) {
  Rule r;
  r.head = sentence(head);
  for (const auto& b : body) r.body.push_back(sentence(b));
  if (std::find(rules_.begin(), rules_.end(), r) == rules_.end()) rules_.push_back(std::move(r));
}

void FrameworkBuilder::prefer(std::string_view a, std::string_view b, bool strict, int line) {
  for (auto t : {a, b})
    if (!is_assumption(t)) {
      std::string msg = "preference over undeclared assumption '" + std::string(t) + "'";
      if (line >= 0) throw ParseError(line, msg);
      throw Error(msg);
    }
  prefs_.push_back({std::string(a), std::string(b), strict, line});
}

void FrameworkBuilder::lprefer(std::string_view s, std::string_view t, bool strict, int line) {
  sentence(s);
  sentence(t);
  lprefs_.push_back({std::string(s), std::string(t), strict, line});
}

Framework FrameworkBuilder::build() {
  if (assumptions_.empty()) throw Error("a framework needs at least one assumption");
  if (static_cast<int>(assumptions_.size()) > kMaxAssumptions)
    throw CapacityError("more than " + std::to_string(kMaxAssumptions) + " assumptions");

  // Auto-fill missing contraries with fresh sentences.
  for (const auto& a : assumptions_)
    if (!contraries_.count(a)) sentence("_contrary_" + a);

  // Tilde tokens are complements; their base must occur in the framework.
  for (const auto& tok : tokens_) {
    if (tok[0] != '~') continue;
    if (!index_.count(tok.substr(1)))
      throw Error("reserved token '" + tok + "' has no declared base sentence '" + tok.substr(1) + "'");
  }

  Framework f;
  f.tokens_ = tokens_;
  f.index_ = index_;
  f.assumption_index_.assign(f.tokens_.size(), -1);
  for (int i = 0; i < static_cast<int>(assumptions_.size()); ++i) {
    SentenceId s = f.index_.at(assumptions_[i]);
    f.assumption_index_[s] = i;
    f.assumptions_.push_back(s);
    auto it = contraries_.find(assumptions_[i]);
    if (it != contraries_.end()) {
      f.contraries_.push_back(f.index_.at(it->second));
      f.contrary_declared_.push_back(1);
    } else {
      f.contraries_.push_back(f.index_.at("_contrary_" + assumptions_[i]));
      f.contrary_declared_.push_back(0);
    }
  }
  f.rules_ = rules_;

  f.pref_ = Preorder(static_cast<int>(assumptions_.size()));
  auto aidx = [&](const std::string& t) {
    return static_cast<int>(std::find(assumptions_.begin(), assumptions_.end(), t) - assumptions_.begin());
  };
  for (const auto& p : prefs_) f.pref_.add(aidx(p.a), aidx(p.b));
  f.pref_.close();
  for (const auto& p : prefs_) {
    if (!p.strict) continue;
    if (f.pref_.leq(aidx(p.b), aidx(p.a))) {
      std::string msg = "strict preference '" + p.a + " < " + p.b + "' became symmetric after transitive closure";
      if (p.line >= 0) throw ParseError(p.line, msg);
      throw Error(msg);
    }
  }

  f.lpref_ = Preorder(f.sentence_count());
  for (const auto& p : lprefs_) f.lpref_.add(static_cast<int>(f.index_.at(p.a)), static_cast<int>(f.index_.at(p.b)));
  f.lpref_.close();
  for (const auto& p : lprefs_) {
    if (!p.strict) continue;
    if (f.lpref_.leq(static_cast<int>(f.index_.at(p.b)), static_cast<int>(f.index_.at(p.a)))) {
      std::string msg = "strict preference '" + p.a + " < " + p.b + "' became symmetric after transitive closure";
      if (p.line >= 0) throw ParseError(p.line, msg);
      throw Error(msg);
    }
  }

  return f;
}

}  // namespace aba
