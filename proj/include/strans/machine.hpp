#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "strans/pipeline.hpp"
#include "strans/sequential.hpp"
#include "strans/sst.hpp"
#include "strans/twodft.hpp"

namespace strans {

using Machine = std::variant<TwoDFT, SST, SequentialTransducer, Pipeline>;

const Alphabet& input_alphabet(const Machine& m);
const Alphabet& output_alphabet(const Machine& m);
std::optional<Word> evaluate(const Machine& m, const Word& word);
std::string kind_name(const Machine& m);

/// Every invariant violation found, each prefixed by a short category tag
/// (e.g. "endmarker move", "update domain"). Empty means well formed.
std::vector<std::string> validate_machine(const Machine& m);

}  // namespace strans
