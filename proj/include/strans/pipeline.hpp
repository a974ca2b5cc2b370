#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "strans/sequential.hpp"
#include "strans/twodft.hpp"

namespace strans {

using Stage = std::variant<SequentialTransducer, TwoDFT>;

const Alphabet& stage_input(const Stage& stage);
const Alphabet& stage_output(const Stage& stage);
std::optional<Word> eval_stage(const Stage& stage, const Word& word);

/// Composition of stages. When `end_token` is set, it names the last symbol
/// of the first stage's input alphabet and is appended to every input word;
/// the pipeline's own input alphabet is the first stage's minus that token.
class Pipeline {
 public:
  Pipeline() = default;
  /// Throws AlphabetMismatch when consecutive stages do not chain.
  Pipeline(std::vector<Stage> stages, std::optional<std::string> end_token = std::nullopt);

  const std::vector<Stage>& stages() const { return stages_; }
  const std::optional<std::string>& end_token() const { return end_token_; }
  const Alphabet& input_alphabet() const { return input_; }
  const Alphabet& output_alphabet() const { return stage_output(stages_.back()); }

  bool operator==(const Pipeline&) const = default;

 private:
  std::vector<Stage> stages_;
  std::optional<std::string> end_token_;
  Alphabet input_;
};

std::optional<Word> eval_pipeline(const Pipeline& pipeline, const Word& word);

}  // namespace strans
