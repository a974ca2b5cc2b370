#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace strans {

using Symbol = std::uint32_t;
using StateId = std::uint32_t;
using VarId = std::uint32_t;
using Word = std::vector<Symbol>;

/// Tape letters of a two-way machine: ordinary symbols plus the two endmarkers.
using Letter = std::uint32_t;
inline constexpr Letter kBeginMarker = 0xFFFFFFFEu;
inline constexpr Letter kEndMarker = 0xFFFFFFFFu;

/// Serialized names of the endmarkers; never valid alphabet symbols.
inline constexpr std::string_view kBeginName = "BEGIN";
inline constexpr std::string_view kEndName = "END";

inline bool is_reserved_name(std::string_view s) {
  return s == kBeginName || s == kEndName;
}

/// Ordered set of opaque symbol names. Symbol ids are positions in the order.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }
  const std::string& name(Symbol s) const { return names_.at(s); }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<Symbol> find(std::string_view name) const;
  /// Throws MalformedMachine on unknown names.
  Symbol at(std::string_view name) const;

  /// True when every symbol name is exactly one UTF-8 code point.
  bool single_code_points() const;

  bool operator==(const Alphabet& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, Symbol> index_;
};

/// Splits a UTF-8 string into its code points.
std::vector<std::string> split_code_points(std::string_view text);

/// Renders a word: concatenated when all names are single code points,
/// space separated otherwise.
std::string format_word(const Alphabet& alphabet, const Word& word);

/// Inverse of format_word. Whitespace separated tokens are accepted for any
/// alphabet; unseparated text is split into code points.
Word parse_word(const Alphabet& alphabet, std::string_view text);

/// Every word over an alphabet of the given size with length 0..max_len, in
/// length-lexicographic order.
std::vector<Word> all_words(std::size_t alphabet_size, std::size_t max_len);

}  // namespace strans
