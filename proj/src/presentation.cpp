#include "crossmod/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace crossmod {

Word free_reduce(Word w) {
  Word out;
  out.reserve(w.size());
  for (Letter l : w) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (Letter& l : out) l = -l;
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return free_reduce(std::move(out));
}

int Presentation::generator_index(std::string_view name) const {
  for (int i = 0; i < num_generators(); ++i)
    if (generators[i] == name) return i;
  throw Error(ErrorKind::UndeclaredSymbol, "undeclared generator '" + std::string(name) + "'");
}

void Presentation::add_relator(Word w) {
  for (Letter l : w)
    if (l == 0 || std::abs(l) > num_generators())
      throw Error(ErrorKind::UndeclaredSymbol, "letter " + std::to_string(l) + " out of range");
  w = free_reduce(std::move(w));
  if (!w.empty()) relators.push_back(std::move(w));
}

Presentation make_presentation(std::vector<std::string> generators,
                               const std::vector<std::string>& relators) {
  Presentation p;
  std::set<std::string> seen;
  for (const auto& g : generators)
    if (!seen.insert(g).second) throw Error(ErrorKind::ParseError, "duplicate generator '" + g + "'");
  p.generators = std::move(generators);
  for (const auto& r : relators) p.add_relator(parse_word(p, r));
  return p;
}

Presentation free_product(const Presentation& p1, const Presentation& p2) {
  Presentation out = p1;
  std::set<std::string> names(p1.generators.begin(), p1.generators.end());
  const int offset = p1.num_generators();
  for (std::size_t i = 0; i < p2.generators.size(); ++i) {
    std::string name = p2.generators[i];
    while (names.count(name)) name += "_2";
    names.insert(name);
    out.generators.push_back(name);
  }
  if (!p1.legend.empty() || !p2.legend.empty()) {
    out.legend = p1.legend;
    out.legend.resize(p1.generators.size());
    for (std::size_t i = 0; i < p2.generators.size(); ++i)
      out.legend.push_back(i < p2.legend.size() ? p2.legend[i] : std::string());
  }
  for (const Word& r : p2.relators) {
    Word w = r;
    for (Letter& l : w) l = l > 0 ? l + offset : l - offset;
    out.relators.push_back(std::move(w));
  }
  return out;
}

Presentation quotient_by(const Presentation& p, const std::vector<Word>& extra) {
  Presentation out = p;
  for (const Word& w : extra) out.add_relator(w);
  return out;
}

namespace {

class WordParser {
 public:
  WordParser(const Presentation& p, std::string_view text) : p_(p), s_(text) {}

  Word parse() {
    Word w = sequence();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return free_reduce(std::move(w));
  }

 private:
  void skip() {
    while (pos_ < s_.size() && (std::isspace(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '*')) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::ParseError, "word '" + std::string(s_) + "': " + msg);
  }

  Word sequence() {
    Word w;
    while (true) {
      skip();
      if (pos_ >= s_.size() || s_[pos_] == ')') return w;
      Word f = factor();
      w.insert(w.end(), f.begin(), f.end());
    }
  }

  Word factor() {
    Word base;
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      base = sequence();
      if (pos_ >= s_.size() || s_[pos_] != ')') fail("missing ')'");
      ++pos_;
    } else if (c == '1' && (pos_ + 1 == s_.size() || !std::isalnum(static_cast<unsigned char>(s_[pos_ + 1])))) {
      ++pos_;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      base.push_back(p_.generator_index(s_.substr(start, pos_ - start)) + 1);
    } else {
      fail("unexpected '" + std::string(1, c) + "'");
    }
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      const std::size_t start = pos_;
      if (pos_ < s_.size() && s_[pos_] == '-') ++pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ == start || (pos_ == start + 1 && s_[start] == '-')) fail("missing exponent");
      const int k = std::stoi(std::string(s_.substr(start, pos_ - start)));
      Word unit = k < 0 ? inverse(base) : base;
      Word out;
      for (int i = 0; i < std::abs(k); ++i) out.insert(out.end(), unit.begin(), unit.end());
      return out;
    }
    return base;
  }

  const Presentation& p_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(const Presentation& p, std::string_view text) { return WordParser(p, text).parse(); }

std::string format_word(const Presentation& p, const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    const int run = static_cast<int>(j - i);
    const int exp = w[i] > 0 ? run : -run;
    if (!out.empty()) out += ' ';
    out += p.generators[std::abs(w[i]) - 1];
    if (exp != 1) out += "^" + std::to_string(exp);
    i = j;
  }
  return out;
}

}  // namespace crossmod
