#include "artin/words.hpp"

#include <algorithm>
#include <sstream>

#include "artin/errors.hpp"

namespace artin {

GroupWord GroupWord::inverse() const {
  GroupWord out;
  out.letters.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    out.letters.push_back({it->gen, -it->sign});
  return out;
}

GroupWord GroupWord::operator*(const GroupWord& rhs) const {
  GroupWord out = *this;
  out.letters.insert(out.letters.end(), rhs.letters.begin(), rhs.letters.end());
  return out;
}

bool letter_less(const Letter& a, const Letter& b) {
  if (a.gen != b.gen) return a.gen < b.gen;
  return a.sign > b.sign;  // positive before negative
}

bool shortlex_less(const GroupWord& a, const GroupWord& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.letters[i] == b.letters[i]) continue;
    return letter_less(a.letters[i], b.letters[i]);
  }
  return false;
}

GroupWord parse_word(const std::string& text, const std::vector<std::string>& names) {
  GroupWord w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    int sign = +1;
    if (tok.size() > 3 && tok.substr(tok.size() - 3) == "^-1") {
      sign = -1;
      tok = tok.substr(0, tok.size() - 3);
    }
    auto it = std::find(names.begin(), names.end(), tok);
    if (it == names.end()) throw parse_error("unknown generator '" + tok + "' in word");
    w.letters.push_back({static_cast<int>(it - names.begin()), sign});
  }
  return w;
}

std::string word_to_string(const GroupWord& w, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out += ' ';
    out += names.at(w.letters[i].gen);
    if (w.letters[i].sign < 0) out += "^-1";
  }
  return out;
}

}  // namespace artin
