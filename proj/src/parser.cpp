#include "actcond/parser.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <set>
#include <sstream>

#include "actcond/errors.hpp"

namespace actcond {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class FormulaParser {
 public:
  FormulaParser(std::string_view text, const std::optional<Signature>& signature,
                std::vector<std::string>* mentions)
      : text_(text), signature_(signature), mentions_(mentions) {}

  Formula formula() { return implication(); }

  Conditional conditional(std::string id) {
    skip_space();
    const std::size_t open = pos_;
    if (!consume('(')) fail("expected '(' to start a conditional");
    Formula consequent = guarded(open, [this] { return formula(); });
    skip_space();
    if (at_end()) fail("unbalanced '('", open);
    if (!bar_ahead()) fail("missing '|' separator between consequent and antecedent");
    ++pos_;
    Formula antecedent = guarded(open, [this] { return formula(); });
    skip_space();
    if (at_end()) fail("unbalanced '('", open);
    if (bar_ahead()) fail("nested '|' in conditional");
    if (!consume(')')) fail("expected ')' to close the conditional");
    return Conditional(std::move(id), std::move(consequent), std::move(antecedent));
  }

  void expect_end() {
    skip_space();
    if (!at_end()) fail(bar_ahead() ? "'|' is not allowed inside formulas" : "unexpected trailing input");
  }

 private:
  Formula implication() {
    Formula lhs = disjunction();
    skip_space();
    if (match("=>")) return Formula::implication(std::move(lhs), implication());
    return lhs;
  }

  Formula disjunction() {
    Formula lhs = conjunction();
    for (;;) {
      skip_space();
      if (!match("||")) return lhs;
      lhs = Formula::disjunction(std::move(lhs), conjunction());
    }
  }

  Formula conjunction() {
    Formula lhs = unary();
    for (;;) {
      skip_space();
      if (!match("&&")) return lhs;
      lhs = Formula::conjunction(std::move(lhs), unary());
    }
  }

  Formula unary() {
    skip_space();
    if (consume('!')) return Formula::negation(unary());
    return primary();
  }

  Formula primary() {
    skip_space();
    if (at_end()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      const std::size_t open = pos_++;
      Formula inner = guarded(open, [this] { return formula(); });
      skip_space();
      if (at_end()) fail("unbalanced '('", open);
      if (bar_ahead()) fail("nested '|' inside parentheses");
      if (!consume(')')) fail("expected ')'");
      return inner;
    }
    if (is_ident_start(c)) {
      const std::size_t start = pos_;
      while (!at_end() && is_ident_char(text_[pos_])) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (name == "true") return Formula::truth();
      if (name == "false") return Formula::falsity();
      if (signature_ && !signature_->contains(name))
        throw SignatureMismatch("unknown atom '" + name + "' at offset " + std::to_string(start));
      if (mentions_ && std::find(mentions_->begin(), mentions_->end(), name) == mentions_->end())
        mentions_->push_back(name);
      return Formula::atom(std::move(name));
    }
    if (c == '|') fail("'|' is not allowed inside formulas");
    fail(std::string("unexpected character '") + c + "'");
  }

  // End-of-input failures inside a parenthesised group are reported at the
  // opening parenthesis.
  template <typename F>
  Formula guarded(std::size_t open, F&& parse) {
    try {
      return parse();
    } catch (const SyntaxError& e) {
      if (e.offset() >= text_.size()) fail("unbalanced '('", open);
      throw;
    }
  }

  [[noreturn]] void fail(const std::string& what) { fail(what, pos_); }
  [[noreturn]] void fail(const std::string& what, std::size_t offset) {
    throw SyntaxError(what + " at offset " + std::to_string(offset), offset);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool consume(char c) {
    if (at_end() || text_[pos_] != c) return false;
    ++pos_;
    return true;
  }
  bool match(std::string_view token) {
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }
  bool bar_ahead() const { return !at_end() && text_[pos_] == '|' && text_.substr(pos_, 2) != "||"; }

  std::string_view text_;
  std::size_t pos_ = 0;
  const std::optional<Signature>& signature_;
  std::vector<std::string>* mentions_;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) {
      if (start < text.size()) lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

[[noreturn]] void line_error(std::size_t line, const std::string& what, std::size_t offset = 0) {
  throw SyntaxError("line " + std::to_string(line) + ": " + what, offset, line);
}

}  // namespace

Formula parse_formula(std::string_view text, const std::optional<Signature>& signature) {
  if (trim(text).empty()) throw SyntaxError("empty formula", 0);
  FormulaParser parser(text, signature, nullptr);
  Formula f = parser.formula();
  parser.expect_end();
  return f;
}

Conditional parse_conditional(std::string_view text, std::string id, const std::optional<Signature>& signature) {
  FormulaParser parser(text, signature, nullptr);
  Conditional r = parser.conditional(std::move(id));
  parser.expect_end();
  return r;
}

BeliefBaseDocument parse_belief_base(std::string_view text) {
  std::optional<Signature> declared;
  std::vector<std::string> mentions;
  std::vector<Conditional> conditionals;
  std::set<std::string> seen_ids;

  const auto lines = split_lines(text);
  for (std::size_t n = 0; n < lines.size(); ++n) {
    const std::size_t line_no = n + 1;
    std::string_view line = lines[n];
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const std::string_view body = trim(line);
    if (body.empty()) continue;
    const std::size_t indent = static_cast<std::size_t>(body.data() - lines[n].data());

    std::string id;
    std::string_view rest = body;
    if (is_ident_start(body.front())) {
      std::size_t k = 0;
      while (k < body.size() && is_ident_char(body[k])) ++k;
      std::size_t colon = k;
      while (colon < body.size() && std::isspace(static_cast<unsigned char>(body[colon]))) ++colon;
      if (colon < body.size() && body[colon] == ':') {
        id = std::string(body.substr(0, k));
        rest = body.substr(colon + 1);
      }
    }

    if (id == "sig") {
      if (declared) line_error(line_no, "signature declared twice");
      if (!conditionals.empty()) line_error(line_no, "signature must precede all conditionals");
      std::vector<std::string> atoms;
      std::istringstream words{std::string(rest)};
      for (std::string w; words >> w;) atoms.push_back(w);
      try {
        declared = Signature(std::move(atoms));
      } catch (const Error& e) {
        line_error(line_no, e.what());
      }
      continue;
    }

    if (id.empty()) id = "r" + std::to_string(conditionals.size() + 1);
    if (!seen_ids.insert(id).second) throw IdError("line " + std::to_string(line_no) + ": duplicate id '" + id + "'");

    const std::size_t rest_offset = indent + static_cast<std::size_t>(rest.data() - body.data());
    try {
      FormulaParser parser(rest, declared, &mentions);
      Conditional r = parser.conditional(id);
      parser.expect_end();
      conditionals.push_back(std::move(r));
    } catch (const SyntaxError& e) {
      line_error(line_no, e.what(), rest_offset + e.offset());
    } catch (const SignatureMismatch& e) {
      throw SignatureMismatch("line " + std::to_string(line_no) + ": " + e.what());
    }
  }

  BeliefBaseDocument doc;
  doc.signature_declared = declared.has_value();
  doc.base = BeliefBase(declared ? *declared : Signature(mentions), std::move(conditionals));
  return doc;
}

std::string format_belief_base(const BeliefBaseDocument& doc) {
  std::string out;
  if (doc.signature_declared) {
    out += "sig:";
    for (const auto& a : doc.base.signature().atoms()) out += " " + a;
    out += "\n";
  }
  for (const auto& r : doc.base.conditionals()) out += r.id() + ": " + r.to_string() + "\n";
  return out;
}

std::string fingerprint(const BeliefBase& base) {
  std::string canonical;
  for (const auto& a : base.signature().atoms()) canonical += a + " ";
  canonical += "\n";
  for (const auto& r : base.conditionals()) canonical += r.id() + ": " + r.to_string() + "\n";

  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

std::string serialize_session(const ActivationState& state, const SessionMeta& meta) {
  std::string out = "#session queries=" + std::to_string(state.query_count);
  if (!meta.base_fingerprint.empty()) out += " base=" + meta.base_fingerprint;
  if (meta.resets) out += " resets=" + std::to_string(meta.resets);
  out += "\n";
  for (const auto& [id, level] : state.base_levels) out += id + "\t" + to_fraction_string(level) + "\n";
  return out;
}

namespace {

std::uint64_t parse_count(std::string_view value, std::size_t line_no) {
  if (value.empty() || !std::all_of(value.begin(), value.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    line_error(line_no, "malformed counter '" + std::string(value) + "'");
  return std::stoull(std::string(value));
}

}  // namespace

SessionDocument parse_session_document(std::string_view text) {
  SessionDocument doc;
  const auto lines = split_lines(text);
  for (std::size_t n = 0; n < lines.size(); ++n) {
    const std::size_t line_no = n + 1;
    std::string_view line = lines[n];
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (trim(line).empty()) continue;

    if (line.rfind("#session", 0) == 0) {
      if (n != 0) line_error(line_no, "session header must be the first line");
      std::istringstream fields{std::string(line.substr(8))};
      for (std::string field; fields >> field;) {
        auto eq = field.find('=');
        if (eq == std::string::npos) line_error(line_no, "malformed header field '" + field + "'");
        auto key = field.substr(0, eq);
        auto value = std::string_view(field).substr(eq + 1);
        if (key == "queries")
          doc.state.query_count = parse_count(value, line_no);
        else if (key == "resets")
          doc.meta.resets = parse_count(value, line_no);
        else if (key == "base")
          doc.meta.base_fingerprint = std::string(value);
        else
          line_error(line_no, "unknown header field '" + key + "'");
      }
      continue;
    }

    auto tab = line.find('\t');
    if (tab == std::string_view::npos) line_error(line_no, "expected '<id>\\t<p>/<q>'");
    std::string id(line.substr(0, tab));
    std::string_view value = line.substr(tab + 1);
    if (id.empty()) line_error(line_no, "empty conditional id");
    if (value.find('/') == std::string_view::npos) line_error(line_no, "malformed rational '" + std::string(value) + "'");
    Rational level;
    try {
      level = parse_rational(value);
    } catch (const RangeError&) {
      line_error(line_no, "malformed rational '" + std::string(value) + "'");
    }
    if (level <= 0) line_error(line_no, "base level must be positive");
    if (!doc.state.base_levels.emplace(id, level).second)
      throw IdError("line " + std::to_string(line_no) + ": duplicate id '" + id + "'");
  }
  return doc;
}

ActivationState parse_session(std::string_view text) { return parse_session_document(text).state; }

void check_session_ids(const ActivationState& state, const BeliefBase& base) {
  for (const auto& [id, level] : state.base_levels)
    if (!base.contains(id)) throw IdError("session names unknown conditional '" + id + "'");
  for (const auto& r : base.conditionals())
    if (!state.base_levels.count(r.id())) throw IdError("session lacks conditional '" + r.id() + "'");
}

}  // namespace actcond
