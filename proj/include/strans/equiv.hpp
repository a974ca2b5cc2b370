#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "strans/machine.hpp"

namespace strans {

using Output = std::optional<Word>;  // nullopt is Reject
using Transduction = std::function<Output(const Word&)>;

struct EquivVerdict {
  bool equal = true;
  Word witness;
  Output left, right;
  std::size_t words_checked = 0;
};

/// Calls visit on every word of length 0..max_len in length-lexicographic
/// order; stops early when visit returns false.
void for_each_word(std::size_t alphabet_size, std::size_t max_len,
                   const std::function<bool(const Word&)>& visit);

EquivVerdict check_equiv(const Transduction& f, const Transduction& g,
                         std::size_t alphabet_size, std::size_t max_len);

/// Throws AlphabetMismatch when input alphabets differ.
EquivVerdict check_equiv(const Machine& m1, const Machine& m2, std::size_t max_len);

inline constexpr std::uint64_t kDefaultSeed = 20140718;

/// Random words with lengths uniform in [min_len, max_len].
EquivVerdict check_equiv_sampled(const Machine& m1, const Machine& m2, std::size_t samples,
                                 std::size_t min_len, std::size_t max_len,
                                 std::uint64_t seed = kDefaultSeed);

}  // namespace strans
