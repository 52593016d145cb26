#include "homotower/fpres.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>

#include "homotower/errors.hpp"

namespace homotower {

namespace {

bool valid_name(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0]))))
    return false;
  return std::all_of(s.begin() + 1, s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

// Character-level cursor that tracks line/column for error reporting.
class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }

  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  bool consume(char c) {
    skip_ws();
    if (eof() || peek() != c) return false;
    advance();
    return true;
  }

  void expect(char c, const std::string& what) {
    if (!consume(c)) fail("expected '" + std::string(1, c) + "' " + what);
  }

  std::string ident() {
    skip_ws();
    tok_line_ = line_;
    tok_col_ = col_;
    if (eof() || !std::isalpha(static_cast<unsigned char>(peek()))) return {};
    std::string out;
    while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
      out.push_back(peek());
      advance();
    }
    return out;
  }

  // Integer with optional sign, optionally wrapped in braces.
  long exponent() {
    skip_ws();
    bool braced = false;
    if (!eof() && peek() == '{') {
      braced = true;
      advance();
      skip_ws();
    }
    bool neg = false;
    if (!eof() && (peek() == '-' || peek() == '+')) {
      neg = peek() == '-';
      advance();
    }
    if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
      fail("malformed exponent");
    long mag = 0;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
      mag = mag * 10 + (peek() - '0');
      if (mag > kMaxExponentMagnitude) fail("exponent magnitude exceeds cap");
      advance();
    }
    if (braced) {
      skip_ws();
      if (eof() || peek() != '}') fail("unbalanced '{' in exponent");
      advance();
    }
    return neg ? -mag : mag;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line_, col_);
  }

  /// Reports at the start of the token last read by ident(), so that
  /// name errors point at the name, not past it.
  [[noreturn]] void fail_at_token(const std::string& msg) const {
    throw ParseError(msg, tok_line_, tok_col_);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  int tok_line_ = 1;
  int tok_col_ = 1;
};

}  // namespace

Presentation make_presentation(std::vector<std::string> names,
                               std::vector<Word> relators) {
  std::map<std::string, int> seen;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!valid_name(names[i]))
      throw std::invalid_argument("bad generator name '" + names[i] + "'");
    if (!seen.emplace(names[i], static_cast<int>(i)).second)
      throw std::invalid_argument("duplicate generator name '" + names[i] + "'");
  }
  const int n = static_cast<int>(names.size());
  Presentation p;
  p.names = std::move(names);
  for (Word& w : relators) {
    if (w.max_letter() > n)
      throw std::invalid_argument("relator letter outside alphabet");
    if (!w.empty()) p.relators.push_back(std::move(w));
  }
  return p;
}

Presentation parse_presentation(std::string_view text) {
  Cursor cur(text);

  // Optional "Name := Group" prefix.
  cur.skip_ws();
  std::string head = cur.ident();
  if (!head.empty()) {
    if (cur.consume(':')) {
      cur.expect('=', "after ':'");
      std::string kw = cur.ident();
      if (kw != "Group") cur.fail_at_token("expected 'Group' after ':='");
    } else if (head != "Group") {
      cur.fail_at_token("unexpected token '" + head + "' before '<'");
    }
  }
  cur.expect('<', "to open the presentation");

  std::vector<std::string> names;
  std::map<std::string, int> index;
  cur.skip_ws();
  if (!cur.eof() && cur.peek() != '|') {
    while (true) {
      std::string nm = cur.ident();
      if (nm.empty()) cur.fail_at_token("expected generator name");
      if (!index.emplace(nm, static_cast<int>(names.size()) + 1).second)
        cur.fail_at_token("duplicate generator name '" + nm + "'");
      names.push_back(nm);
      if (!cur.consume(',')) break;
    }
  }
  cur.expect('|', "between generators and relators");

  std::vector<Word> relators;
  cur.skip_ws();
  if (!cur.eof() && cur.peek() != '>') {
    while (true) {
      std::vector<Letter> letters;
      while (true) {
        std::string nm = cur.ident();
        if (nm.empty()) cur.fail_at_token("expected generator name in relator");
        auto it = index.find(nm);
        if (it == index.end()) cur.fail_at_token("unknown generator '" + nm + "'");
        long e = 1;
        if (cur.consume('^')) e = cur.exponent();
        Letter l = static_cast<Letter>(e >= 0 ? it->second : -it->second);
        for (long k = 0; k < std::labs(e); ++k) letters.push_back(l);
        if (!cur.consume('*')) break;
      }
      relators.emplace_back(std::move(letters));
      if (!cur.consume(',')) break;
    }
  }
  cur.expect('>', "to close the presentation");
  cur.skip_ws();
  if (!cur.eof()) cur.fail("trailing input after '>'");

  return make_presentation(std::move(names), std::move(relators));
}

std::string print_presentation(const Presentation& p) {
  std::ostringstream out;
  out << "< ";
  for (std::size_t i = 0; i < p.names.size(); ++i) {
    if (i) out << ", ";
    out << p.names[i];
  }
  out << " |";
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    out << (r ? ", " : " ");
    const auto& ls = p.relators[r].letters();
    std::size_t i = 0;
    bool first = true;
    while (i < ls.size()) {
      std::size_t j = i;
      while (j < ls.size() && ls[j] == ls[i]) ++j;
      long run = static_cast<long>(j - i);
      long e = ls[i] > 0 ? run : -run;
      if (!first) out << "*";
      out << p.names[static_cast<std::size_t>(std::abs(ls[i])) - 1];
      if (e != 1) out << "^" << e;
      first = false;
      i = j;
    }
  }
  out << " >";
  return out.str();
}

}  // namespace homotower
