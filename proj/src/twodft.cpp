#include "strans/twodft.hpp"

#include <algorithm>

#include "strans/errors.hpp"

namespace strans {

TwoDFT::TwoDFT(Alphabet input, Alphabet output, std::vector<std::string> state_names,
               StateId initial_state, std::set<StateId> final_states, StartSide side)
    : input_alphabet(std::move(input)),
      output_alphabet(std::move(output)),
      states(std::move(state_names)),
      initial(initial_state),
      finals(std::move(final_states)),
      start_side(side),
      delta(states.size() * (input_alphabet.size() + 2)) {}

std::size_t TwoDFT::column(Letter letter) const {
  if (letter == kBeginMarker) return input_alphabet.size();
  if (letter == kEndMarker) return input_alphabet.size() + 1;
  return letter;
}

StateId TwoDFT::state_id(std::string_view name) const {
  auto it = std::find(states.begin(), states.end(), name);
  if (it == states.end()) throw MalformedMachine("unknown state '" + std::string(name) + "'");
  return static_cast<StateId>(it - states.begin());
}

Letter TwoDFT::letter_id(std::string_view name) const {
  if (name == kBeginName) return kBeginMarker;
  if (name == kEndName) return kEndMarker;
  return input_alphabet.at(name);
}

void TwoDFT::add(std::string_view from, std::string_view read, std::string_view output,
                 std::string_view to, int move) {
  set_transition(state_id(from), letter_id(read),
                 TwoWayTransition{parse_word(output_alphabet, output), state_id(to),
                                  static_cast<Move>(move)});
}

std::optional<Word> eval_2dft(const TwoDFT& machine, const Word& word) {
  const std::size_t n = word.size();
  const std::size_t end_pos = n + 1;
  const std::size_t bound = machine.num_states() * (n + 2);
  std::size_t pos = machine.start_side == StartSide::Left ? 0 : end_pos;
  StateId q = machine.initial;
  Word out;
  for (std::size_t step = 0; step <= bound; ++step) {
    if (pos == end_pos && machine.is_final(q)) return out;
    const Letter letter = pos == 0 ? kBeginMarker : pos == end_pos ? kEndMarker : word[pos - 1];
    const auto& t = machine.transition(q, letter);
    if (!t) return std::nullopt;
    if ((letter == kBeginMarker && t->move == Move::Left) ||
        (letter == kEndMarker && t->move == Move::Right))
      throw MalformedMachine("endmarker move: transition leaves the tape");
    out.insert(out.end(), t->output.begin(), t->output.end());
    q = t->target;
    pos = static_cast<std::size_t>(static_cast<long long>(pos) + static_cast<int>(t->move));
  }
  return std::nullopt;
}

}  // namespace strans
