#pragma once

#include <string>
#include <vector>

namespace artin {

// One letter of a group word: a generator index into the ambient graph's
// vertex order, plus a sign. Coxeter-side operations ignore signs.
struct Letter {
  int gen = 0;
  int sign = +1;  // +1 or -1

  friend bool operator==(const Letter&, const Letter&) = default;
};

struct GroupWord {
  std::vector<Letter> letters;

  GroupWord() = default;
  explicit GroupWord(std::vector<Letter> ls) : letters(std::move(ls)) {}

  bool empty() const { return letters.empty(); }
  std::size_t size() const { return letters.size(); }

  GroupWord inverse() const;
  GroupWord operator*(const GroupWord& rhs) const;

  friend bool operator==(const GroupWord&, const GroupWord&) = default;
};

// Letters are ordered by generator index, positive sign first, so that
// shortlex over words is well-defined.
bool letter_less(const Letter& a, const Letter& b);
bool shortlex_less(const GroupWord& a, const GroupWord& b);

// Wire format: whitespace-separated letters, each `name` or `name^-1`.
// Names are resolved against the given vertex-name list.
GroupWord parse_word(const std::string& text, const std::vector<std::string>& names);
std::string word_to_string(const GroupWord& w, const std::vector<std::string>& names);

}  // namespace artin
