// Line-oriented presentation DSL:
//
//   algebra <name> over (Q | GF <p>)
//   vertices <id> [<id> ...]
//   arrow <name> : <src> -> <tgt>
//   relation [coef] path (+|-) [coef] path ...
//
// Paths are arrows joined by '*', applied right to left.
#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <tuple>

#include "koszul/errors.hpp"
#include "koszul/presentation.hpp"

namespace koszul {

namespace {

enum class Tok { Ident, Number, Colon, Arrow, Star, Plus, Minus, End };

struct Token {
  Tok kind;
  std::string text;
  int column;
};

bool ident_start(unsigned char c) { return std::isalpha(c) || c == '_' || c >= 0x80; }
bool ident_char(unsigned char c) {
  return std::isalnum(c) || c == '_' || c == '^' || c == '(' || c == ')' || c == '\'' || c == '{' ||
         c == '}' || c == '.' || c == '!' || c >= 0x80;
}

std::vector<Token> tokenize(const std::string& line, int lineno) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    unsigned char c = static_cast<unsigned char>(line[i]);
    int col = static_cast<int>(i) + 1;
    if (std::isspace(c)) {
      ++i;
    } else if (c == '#') {
      break;
    } else if (ident_start(c)) {
      std::size_t j = i;
      while (j < line.size() && ident_char(static_cast<unsigned char>(line[j]))) ++j;
      out.push_back({Tok::Ident, line.substr(i, j - i), col});
      i = j;
    } else if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
      if (j < line.size() && line[j] == '/') {
        ++j;
        std::size_t k = j;
        while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
        if (j == k) throw ParseError("malformed fraction", lineno, col);
      }
      out.push_back({Tok::Number, line.substr(i, j - i), col});
      i = j;
    } else if (c == ':') {
      out.push_back({Tok::Colon, ":", col});
      ++i;
    } else if (c == '-' && i + 1 < line.size() && line[i + 1] == '>') {
      out.push_back({Tok::Arrow, "->", col});
      i += 2;
    } else if (c == '*') {
      out.push_back({Tok::Star, "*", col});
      ++i;
    } else if (c == '+') {
      out.push_back({Tok::Plus, "+", col});
      ++i;
    } else if (c == '-') {
      out.push_back({Tok::Minus, "-", col});
      ++i;
    } else {
      throw ParseError(std::string("unexpected character '") + line[i] + "'", lineno, col);
    }
  }
  out.push_back({Tok::End, "", static_cast<int>(line.size()) + 1});
  return out;
}

struct Term {
  Scalar coef;
  PathWord path;
  std::string text;
  int column;
};

class LineParser {
 public:
  LineParser(std::vector<Token> toks, int lineno) : toks_(std::move(toks)), line_(lineno) {}

  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  bool at_end() const { return toks_[pos_].kind == Tok::End; }

  const Token& expect(Tok k, const char* what) {
    if (peek().kind != k) fail(std::string("expected ") + what);
    return next();
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, peek().column); }
  int line() const { return line_; }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int line_;
};

FieldSpec parse_field(LineParser& lp) {
  const Token& t = lp.expect(Tok::Ident, "field (Q or GF <p>)");
  if (t.text == "Q") return FieldSpec::rationals();
  std::string digits;
  if (t.text == "GF") {
    digits = lp.expect(Tok::Number, "prime after GF").text;
  } else if (t.text.rfind("GF(", 0) == 0 && t.text.back() == ')') {
    digits = t.text.substr(3, t.text.size() - 4);
  } else {
    throw ParseError("unknown field '" + t.text + "'", lp.line(), t.column);
  }
  try {
    return FieldSpec::prime(std::stoll(digits));
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(e.what(), lp.line(), t.column);
  }
}

std::vector<Term> parse_lincomb(LineParser& lp, const Quiver& q, const FieldSpec& f) {
  std::vector<Term> terms;
  bool first = true;
  while (!lp.at_end()) {
    Scalar sign = f.one();
    if (lp.peek().kind == Tok::Plus || lp.peek().kind == Tok::Minus) {
      if (lp.next().kind == Tok::Minus) sign = -sign;
    } else if (!first) {
      lp.fail("expected '+' or '-' between terms");
    }
    first = false;
    Scalar coef = sign;
    if (lp.peek().kind == Tok::Number) {
      const Token& n = lp.next();
      try {
        coef = sign * f.parse(n.text);
      } catch (const std::exception& e) {
        throw ParseError(e.what(), lp.line(), n.column);
      }
      if (lp.peek().kind == Tok::Star) lp.next();
    }
    int col = lp.peek().column;
    std::vector<int> word;
    std::string text;
    while (true) {
      const Token& a = lp.expect(Tok::Ident, "arrow name");
      auto idx = q.find_arrow(a.text);
      if (!idx) throw ParseError("unknown arrow '" + a.text + "'", lp.line(), a.column);
      if (!word.empty() && q.arrow(word.back()).source != q.arrow(*idx).target)
        throw ParseError("arrows '" + q.arrow(word.back()).name + "' and '" + a.text + "' do not compose",
                         lp.line(), a.column);
      word.push_back(*idx);
      text += (text.empty() ? "" : "*") + a.text;
      if (lp.peek().kind != Tok::Star) break;
      lp.next();
    }
    PathWord p{q.arrow(word.back()).source, q.arrow(word.front()).target, word};
    terms.push_back({coef, p, text, col});
  }
  if (terms.empty()) lp.fail("empty relation");
  return terms;
}

}  // namespace

RawPresentation parse_raw_presentation(const std::string& text) {
  RawPresentation raw;
  raw.name = "A";
  bool have_header = false;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    LineParser lp(tokenize(line, lineno), lineno);
    if (lp.at_end()) continue;
    const Token& kw = lp.expect(Tok::Ident, "keyword");
    if (kw.text == "algebra") {
      if (have_header) throw ParseError("duplicate algebra line", lineno, kw.column);
      if (raw.quiver.vertex_count() > 0) throw ParseError("algebra line must come first", lineno, kw.column);
      raw.name = lp.expect(Tok::Ident, "algebra name").text;
      const Token& over = lp.expect(Tok::Ident, "'over'");
      if (over.text != "over") throw ParseError("expected 'over'", lineno, over.column);
      raw.field = parse_field(lp);
      have_header = true;
    } else if (kw.text == "vertices") {
      if (lp.at_end()) lp.fail("expected vertex names");
      while (!lp.at_end()) {
        const Token& t = lp.peek();
        if (t.kind != Tok::Ident && t.kind != Tok::Number) lp.fail("expected vertex name");
        if (raw.quiver.find_vertex(t.text)) throw ParseError("duplicate vertex '" + t.text + "'", lineno, t.column);
        raw.quiver.add_vertex(t.text);
        lp.next();
      }
    } else if (kw.text == "arrow") {
      const Token& name = lp.expect(Tok::Ident, "arrow name");
      if (raw.quiver.find_arrow(name.text))
        throw ParseError("duplicate arrow '" + name.text + "'", lineno, name.column);
      lp.expect(Tok::Colon, "':'");
      auto vertex = [&]() {
        const Token& t = lp.peek();
        if (t.kind != Tok::Ident && t.kind != Tok::Number) lp.fail("expected vertex name");
        auto v = raw.quiver.find_vertex(t.text);
        if (!v) throw ParseError("unknown vertex '" + t.text + "'", lineno, t.column);
        lp.next();
        return *v;
      };
      int s = vertex();
      lp.expect(Tok::Arrow, "'->'");
      int t = vertex();
      raw.quiver.add_arrow(name.text, s, t);
    } else if (kw.text == "relation") {
      auto terms = parse_lincomb(lp, raw.quiver, raw.field);
      std::size_t len = terms.front().path.length();
      for (const auto& t : terms)
        if (t.path.length() != len)
          throw ParseError("inhomogeneous relation: '" + t.text + "' has length " +
                               std::to_string(t.path.length()) + ", expected " + std::to_string(len),
                           lineno, t.column);
      std::map<std::pair<int, int>, RawRelation> groups;
      for (const auto& t : terms) {
        auto key = std::make_pair(t.path.source, t.path.target);
        auto [it, fresh] = groups.try_emplace(key);
        RawRelation& r = it->second;
        if (fresh) {
          r.length = static_cast<int>(len);
          r.source = key.first;
          r.target = key.second;
          r.line = lineno;
          r.column = t.column;
        }
        auto pos = std::find(r.paths.begin(), r.paths.end(), t.path);
        if (pos == r.paths.end()) {
          r.paths.push_back(t.path);
          r.coefficients.push_back(t.coef);
          r.term_text.push_back(t.text);
        } else {
          r.coefficients[static_cast<std::size_t>(pos - r.paths.begin())] += t.coef;
        }
      }
      if (groups.size() > 1)
        raw.warnings.push_back("line " + std::to_string(lineno) + ": relation mixes " +
                               std::to_string(groups.size()) + " vertex blocks; split into blocks");
      for (auto& [key, r] : groups) {
        bool nonzero = std::any_of(r.coefficients.begin(), r.coefficients.end(),
                                   [](const Scalar& c) { return !c.is_zero(); });
        if (!nonzero) {
          raw.warnings.push_back("line " + std::to_string(lineno) + ": relation block cancels to zero");
          continue;
        }
        raw.relations.push_back(std::move(r));
      }
    } else {
      throw ParseError("unknown keyword '" + kw.text + "'", lineno, kw.column);
    }
    if (!lp.at_end()) lp.fail("unexpected trailing input");
  }
  if (raw.quiver.vertex_count() == 0) throw ParseError("presentation declares no vertices");
  return raw;
}

QuadraticPresentation parse_presentation(const std::string& text, std::vector<std::string>* warnings) {
  RawPresentation raw = parse_raw_presentation(text);
  if (warnings) *warnings = raw.warnings;
  return to_quadratic(raw);
}

}  // namespace koszul
