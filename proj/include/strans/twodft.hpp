#pragma once

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "strans/alphabet.hpp"

namespace strans {

enum class Move : int { Left = -1, Stay = 0, Right = 1 };
enum class StartSide { Left, Right };

struct TwoWayTransition {
  Word output;
  StateId target = 0;
  Move move = Move::Right;

  auto operator<=>(const TwoWayTransition&) const = default;
};

/// Deterministic two-way transducer over ⊢w⊣ with a partial transition table.
///
/// The table is dense: one optional cell per (state, letter), where letters
/// are the input symbols followed by the two endmarkers.
struct TwoDFT {
  Alphabet input_alphabet;
  Alphabet output_alphabet;
  std::vector<std::string> states;
  StateId initial = 0;
  std::set<StateId> finals;
  StartSide start_side = StartSide::Left;
  std::vector<std::optional<TwoWayTransition>> delta;

  TwoDFT() = default;
  TwoDFT(Alphabet input, Alphabet output, std::vector<std::string> state_names,
         StateId initial_state, std::set<StateId> final_states,
         StartSide side = StartSide::Left);

  std::size_t num_states() const { return states.size(); }
  std::size_t columns() const { return input_alphabet.size() + 2; }
  std::size_t column(Letter letter) const;
  bool is_final(StateId q) const { return finals.contains(q); }

  const std::optional<TwoWayTransition>& transition(StateId q, Letter letter) const {
    return delta[q * columns() + column(letter)];
  }
  void set_transition(StateId q, Letter letter, TwoWayTransition t) {
    delta[q * columns() + column(letter)] = std::move(t);
  }

  StateId state_id(std::string_view name) const;
  /// Resolves a letter name, accepting the endmarker names.
  Letter letter_id(std::string_view name) const;

  /// Name-based convenience used by fixtures: output is a formatted word.
  void add(std::string_view from, std::string_view read, std::string_view output,
           std::string_view to, int move);

  bool operator==(const TwoDFT&) const = default;
};

/// Runs the machine; nullopt means the word is rejected. Loops are detected
/// by the configuration-count bound |Q|·(|w|+2). Throws MalformedMachine if
/// an endmarker transition would leave the tape.
std::optional<Word> eval_2dft(const TwoDFT& machine, const Word& word);

}  // namespace strans
