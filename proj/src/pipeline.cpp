#include "strans/pipeline.hpp"

#include "strans/errors.hpp"

namespace strans {

const Alphabet& stage_input(const Stage& stage) {
  return std::visit([](const auto& m) -> const Alphabet& { return m.input_alphabet; }, stage);
}

const Alphabet& stage_output(const Stage& stage) {
  return std::visit([](const auto& m) -> const Alphabet& { return m.output_alphabet; }, stage);
}

std::optional<Word> eval_stage(const Stage& stage, const Word& word) {
  if (const auto* seq = std::get_if<SequentialTransducer>(&stage))
    return eval_sequential(*seq, word);
  return eval_2dft(std::get<TwoDFT>(stage), word);
}

Pipeline::Pipeline(std::vector<Stage> stages, std::optional<std::string> end_token)
    : stages_(std::move(stages)), end_token_(std::move(end_token)) {
  if (stages_.empty()) throw AlphabetMismatch("pipeline has no stages");
  for (std::size_t i = 0; i + 1 < stages_.size(); ++i) {
    if (!(stage_output(stages_[i]) == stage_input(stages_[i + 1])))
      throw AlphabetMismatch("stage " + std::to_string(i) + " output alphabet differs from stage " +
                             std::to_string(i + 1) + " input alphabet");
  }
  auto names = stage_input(stages_.front()).names();
  if (end_token_) {
    if (names.empty() || names.back() != *end_token_)
      throw AlphabetMismatch("end token '" + *end_token_ +
                             "' is not the last input symbol of the first stage");
    names.pop_back();
  }
  input_ = Alphabet(std::move(names));
}

std::optional<Word> eval_pipeline(const Pipeline& pipeline, const Word& word) {
  std::optional<Word> current = word;
  if (pipeline.end_token())
    current->push_back(static_cast<Symbol>(pipeline.input_alphabet().size()));
  for (const Stage& stage : pipeline.stages()) {
    current = eval_stage(stage, *current);
    if (!current) return std::nullopt;
  }
  return current;
}

}  // namespace strans
