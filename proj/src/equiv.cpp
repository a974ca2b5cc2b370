#include "strans/equiv.hpp"

#include <random>

#include "strans/errors.hpp"

namespace strans {

void for_each_word(std::size_t alphabet_size, std::size_t max_len,
                   const std::function<bool(const Word&)>& visit) {
  Word w;
  if (!visit(w)) return;
  if (alphabet_size == 0) return;
  for (std::size_t len = 1; len <= max_len; ++len) {
    w.assign(len, 0);
    while (true) {
      if (!visit(w)) return;
      std::size_t i = len;
      while (i > 0 && w[i - 1] + 1 == alphabet_size) w[--i] = 0;
      if (i == 0) break;
      ++w[i - 1];
    }
  }
}

EquivVerdict check_equiv(const Transduction& f, const Transduction& g,
                         std::size_t alphabet_size, std::size_t max_len) {
  EquivVerdict v;
  for_each_word(alphabet_size, max_len, [&](const Word& w) {
    ++v.words_checked;
    Output a = f(w), b = g(w);
    if (a == b) return true;
    v = {false, w, std::move(a), std::move(b), v.words_checked};
    return false;
  });
  return v;
}

namespace {

void require_same_input(const Machine& m1, const Machine& m2) {
  if (!(input_alphabet(m1) == input_alphabet(m2)))
    throw AlphabetMismatch("machines have different input alphabets");
}

}  // namespace

EquivVerdict check_equiv(const Machine& m1, const Machine& m2, std::size_t max_len) {
  require_same_input(m1, m2);
  return check_equiv([&](const Word& w) { return evaluate(m1, w); },
                     [&](const Word& w) { return evaluate(m2, w); },
                     input_alphabet(m1).size(), max_len);
}

EquivVerdict check_equiv_sampled(const Machine& m1, const Machine& m2, std::size_t samples,
                                 std::size_t min_len, std::size_t max_len, std::uint64_t seed) {
  require_same_input(m1, m2);
  std::mt19937_64 rng(seed);
  const std::size_t size = input_alphabet(m1).size();
  std::uniform_int_distribution<std::size_t> length(min_len, max_len);
  std::uniform_int_distribution<Symbol> letter(0, static_cast<Symbol>(size - 1));
  EquivVerdict v;
  for (std::size_t s = 0; s < samples; ++s) {
    Word w(length(rng));
    for (Symbol& a : w) a = letter(rng);
    ++v.words_checked;
    Output a = evaluate(m1, w), b = evaluate(m2, w);
    if (a != b) return {false, w, std::move(a), std::move(b), v.words_checked};
  }
  return v;
}

}  // namespace strans
