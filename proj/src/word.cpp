#include "gasket/word.hpp"

#include <cmath>

namespace gasket {

const char* to_string(Geometry g) {
  return g == Geometry::euclidean ? "euclidean" : "harmonic";
}

const char* to_string(Side s) {
  switch (s) {
    case Side::l:
      return "l";
    case Side::r:
      return "r";
    default:
      return "b";
  }
}

bool geometry_from_string(const std::string& text, Geometry& out) {
  if (text == "euclidean") {
    out = Geometry::euclidean;
    return true;
  }
  if (text == "harmonic") {
    out = Geometry::harmonic;
    return true;
  }
  return false;
}

bool side_from_string(const std::string& text, Side& out) {
  if (text == "l") {
    out = Side::l;
    return true;
  }
  if (text == "r") {
    out = Side::r;
    return true;
  }
  if (text == "b") {
    out = Side::b;
    return true;
  }
  return false;
}

Word::Word(std::vector<std::uint8_t> letters) : letters_(std::move(letters)) {
  for (std::uint8_t c : letters_) {
    if (c < 1 || c > 3) throw config_error("word letter outside {1,2,3}");
  }
  if (length() > kMaxWordLetters) throw config_error("word longer than 64 letters");
}

Word Word::parse(const std::string& text) {
  if (text.empty() || text == "0") return Word{};
  std::vector<std::uint8_t> letters;
  letters.reserve(text.size());
  for (char c : text) {
    if (c < '1' || c > '3')
      throw config_error("word '" + text + "' has letters outside {1,2,3}");
    letters.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return Word{std::move(letters)};
}

void Word::push_back(std::uint8_t letter) {
  if (letter < 1 || letter > 3) throw config_error("word letter outside {1,2,3}");
  if (length() >= kMaxWordLetters) throw config_error("word longer than 64 letters");
  letters_.push_back(letter);
}

Word Word::appended(std::uint8_t letter) const {
  Word w = *this;
  w.push_back(letter);
  return w;
}

Word Word::prefix(int len) const {
  if (len >= length()) return *this;
  Word w;
  w.letters_.assign(letters_.begin(), letters_.begin() + len);
  return w;
}

std::string Word::str() const {
  if (empty()) return "0";
  std::string s;
  s.reserve(letters_.size());
  for (std::uint8_t c : letters_) s.push_back(static_cast<char>('0' + c));
  return s;
}

std::vector<Word> words_of_length(int m) {
  if (m < 0) throw config_error("word length must be nonnegative");
  if (m > 13) throw budget_error("too many words to materialize");
  std::vector<Word> out;
  out.reserve(static_cast<std::size_t>(std::pow(3.0, m)));
  for_each_word(m, [&](const Word& w) { out.push_back(w); });
  return out;
}

void for_each_word(int m, const std::function<void(const Word&)>& fn) {
  if (m < 0) throw config_error("word length must be nonnegative");
  Word w;
  auto recurse = [&](auto&& self, int depth) -> void {
    if (depth == m) {
      fn(w);
      return;
    }
    for (std::uint8_t letter = 1; letter <= 3; ++letter) {
      w.push_back(letter);
      self(self, depth + 1);
      w.pop_back();
    }
  };
  recurse(recurse, 0);
}

}  // namespace gasket
