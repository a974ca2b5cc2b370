#include "strans/alphabet.hpp"

#include <cctype>

#include "strans/errors.hpp"

namespace strans {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  for (Symbol i = 0; i < names_.size(); ++i) {
    if (!index_.emplace(names_[i], i).second)
      throw MalformedMachine("duplicate symbol '" + names_[i] + "'");
  }
}

std::optional<Symbol> Alphabet::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Symbol Alphabet::at(std::string_view name) const {
  if (auto s = find(name)) return *s;
  throw MalformedMachine("unknown symbol '" + std::string(name) + "'");
}

bool Alphabet::single_code_points() const {
  for (const auto& n : names_)
    if (split_code_points(n).size() != 1) return false;
  return true;
}

std::vector<std::string> split_code_points(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    auto lead = static_cast<unsigned char>(text[i]);
    std::size_t len = 1;
    if (lead >= 0xF0)
      len = 4;
    else if (lead >= 0xE0)
      len = 3;
    else if (lead >= 0xC0)
      len = 2;
    len = std::min(len, text.size() - i);
    out.emplace_back(text.substr(i, len));
    i += len;
  }
  return out;
}

std::string format_word(const Alphabet& alphabet, const Word& word) {
  const bool compact = alphabet.single_code_points();
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (!compact && i > 0) out += ' ';
    out += alphabet.name(word[i]);
  }
  return out;
}

Word parse_word(const Alphabet& alphabet, std::string_view text) {
  Word word;
  bool has_space = false;
  for (char c : text)
    if (std::isspace(static_cast<unsigned char>(c))) has_space = true;
  if (has_space || !alphabet.single_code_points()) {
    std::size_t i = 0;
    while (i < text.size()) {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
      std::size_t j = i;
      while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
      if (j > i) word.push_back(alphabet.at(text.substr(i, j - i)));
      i = j;
    }
    return word;
  }
  for (const auto& cp : split_code_points(text)) word.push_back(alphabet.at(cp));
  return word;
}

std::vector<Word> all_words(std::size_t alphabet_size, std::size_t max_len) {
  std::vector<Word> out{Word{}};
  if (alphabet_size == 0) return out;
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (Symbol s = 0; s < alphabet_size; ++s) {
        Word w = out[i];
        w.push_back(s);
        out.push_back(std::move(w));
      }
    }
    begin = end;
  }
  return out;
}

}  // namespace strans
