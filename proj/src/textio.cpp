#include "fourcalc/textio.hpp"

#include <cctype>

namespace fourcalc {

namespace {

struct WordLexer {
  const std::string& s;
  size_t i = 0;

  explicit WordLexer(const std::string& text) : s(text) {}

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++i;
      return true;
    }
    return false;
  }
  std::string ident() {
    skip_ws();
    size_t start = i;
    while (i < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_' || s[i] == '\''))
      ++i;
    if (start == i) throw TextParseError("expected generator name at position " +
                                         std::to_string(start) + " in '" + s + "'");
    return s.substr(start, i - start);
  }
  i64 integer() {
    skip_ws();
    size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i || (i - start == 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
      throw TextParseError("expected integer at position " + std::to_string(start) + " in '" +
                           s + "'");
    return std::stoll(s.substr(start, i - start));
  }
};

// factor := (IDENT | '[' word ',' word ']') ('^' INT)?
Word parse_factor(WordLexer& lx, const Presentation& p);

Word parse_word_until(WordLexer& lx, const Presentation& p, char stop1, char stop2) {
  Word w;
  while (!lx.done()) {
    char c = lx.peek();
    if (c == stop1 || c == stop2) break;
    w = concat(w, parse_factor(lx, p));
  }
  return w;
}

Word parse_factor(WordLexer& lx, const Presentation& p) {
  Word base;
  if (lx.accept('[')) {
    Word x = parse_word_until(lx, p, ',', '\0');
    if (!lx.accept(',')) throw TextParseError("expected ',' in commutator in '" + lx.s + "'");
    Word y = parse_word_until(lx, p, ']', '\0');
    if (!lx.accept(']')) throw TextParseError("expected ']' in commutator in '" + lx.s + "'");
    base = commutator(x, y);
  } else {
    std::string name = lx.ident();
    if (name == "1") return Word{};  // the identity word
    int g = p.gen_index(name);
    if (g < 0) throw UnknownGenerator("unknown generator '" + name + "'");
    base = gen_word(g);
  }
  if (lx.accept('^')) return word_power(base, lx.integer());
  return base;
}

}  // namespace

Word parse_word(const Presentation& p, const std::string& text) {
  WordLexer lx(text);
  Word w = parse_word_until(lx, p, '\0', '\0');
  if (!lx.done())
    throw TextParseError("unexpected character '" + std::string(1, lx.peek()) + "' in '" + text +
                         "'");
  return free_reduce(w);
}

Presentation parse_presentation(const std::string& raw) {
  // a ';' between the sections is accepted as whitespace
  std::string text = raw;
  for (char& c : text)
    if (c == ';') c = ' ';
  // locate "gens:" and "rels:" sections
  auto find_key = [&](const std::string& key) {
    size_t pos = text.find(key);
    if (pos == std::string::npos) throw TextParseError("missing '" + key + "' section");
    return pos;
  };
  size_t gpos = find_key("gens:");
  size_t rpos = text.find("rels:");
  std::string gens_part =
      text.substr(gpos + 5, (rpos == std::string::npos ? text.size() : rpos) - gpos - 5);
  Presentation p;
  {
    WordLexer lx(gens_part);
    while (!lx.done()) p.add_generator(lx.ident());
  }
  if (rpos != std::string::npos) {
    std::string rels_part = text.substr(rpos + 5);
    size_t start = 0;
    int depth = 0;
    auto flush = [&](size_t end) {
      std::string piece = rels_part.substr(start, end - start);
      bool blank = true;
      for (char c : piece)
        if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
      if (!blank) p.add_relator(parse_word(p, piece));
      start = end + 1;
    };
    for (size_t i = 0; i < rels_part.size(); ++i) {
      if (rels_part[i] == '[') ++depth;
      if (rels_part[i] == ']') --depth;
      if (rels_part[i] == ',' && depth == 0) flush(i);
    }
    flush(rels_part.size());
  }
  return p;
}

std::string word_to_string(const Presentation& p, const Word& w) {
  if (w.letters.empty()) return "1";
  std::string out;
  for (const Letter& l : w.letters) {
    if (!out.empty()) out += " ";
    out += p.generators[static_cast<size_t>(l.gen)];
    if (l.exp != 1) out += "^" + std::to_string(l.exp);
  }
  return out;
}

std::string presentation_to_string(const Presentation& p) {
  std::string out = "gens:";
  for (const std::string& g : p.generators) out += " " + g;
  out += "\nrels:";
  for (size_t i = 0; i < p.relators.size(); ++i)
    out += (i ? "," : "") + std::string(" ") + word_to_string(p, p.relators[i]);
  out += "\n";
  return out;
}

}  // namespace fourcalc
