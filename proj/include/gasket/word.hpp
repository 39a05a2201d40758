#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "gasket/types.hpp"

namespace gasket {

/// Finite address over the alphabet {1,2,3}. The empty word names the root
/// cell; appending a letter descends into the corresponding child cell.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<std::uint8_t> letters);

  // Accepts "" or "0" for the empty word, otherwise digits from {1,2,3}.
  static Word parse(const std::string& text);

  int length() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }
  std::uint8_t at(int i) const { return letters_[static_cast<std::size_t>(i)]; }
  std::uint8_t back() const { return letters_.back(); }
  const std::vector<std::uint8_t>& letters() const { return letters_; }

  void push_back(std::uint8_t letter);
  void pop_back() { letters_.pop_back(); }

  Word appended(std::uint8_t letter) const;
  Word prefix(int len) const;

  std::string str() const;  // "0" for the empty word

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) {
    return a.letters_ <=> b.letters_;
  }

 private:
  std::vector<std::uint8_t> letters_;
};

// All words of length m in lexicographic order. Guarded: 3^m entries.
std::vector<Word> words_of_length(int m);

// Depth-first enumeration of W_m in lexicographic order without materializing.
void for_each_word(int m, const std::function<void(const Word&)>& fn);

}  // namespace gasket
