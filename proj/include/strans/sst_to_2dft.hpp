#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "strans/pipeline.hpp"
#include "strans/sst.hpp"

namespace strans {

/// Name of the virtual right-endmarker token fed to the enricher stages.
inline constexpr std::string_view kEndToken = "⊣";

/// Decoded letter of an enriched alphabet: (a, q) or (a, q, S), where a is
/// nullopt for the end token and S is a bit set over variables.
struct EnrichedSymbol {
  std::optional<Symbol> base;
  StateId prev = 0;
  std::optional<std::uint64_t> useful;

  auto operator<=>(const EnrichedSymbol&) const = default;
};

std::string enriched_name(const SST& machine, const EnrichedSymbol& e);

/// A′: left-to-right, tags each letter with the state before it.
SequentialTransducer build_prev_enricher(const SST& machine);

/// A″: right-to-left, tags each (a, q) with the variables still useful
/// after the step.
SequentialTransducer build_useful_vars_enricher(const SST& machine);

/// B over the alphabet of A″. Throws NotOneBounded unless the machine is
/// 1-bounded and never copies a variable value into its output twice.
TwoDFT build_output_follower(const SST& machine);

/// B over the alphabet of A′, valid for copyless machines.
TwoDFT build_output_follower_copyless(const SST& machine);

/// [A′, A″, B], or [A′, B] with skip_useful_vars (NotCopyless unless the
/// machine is copyless).
Pipeline sst_to_2dft(const SST& machine, bool skip_useful_vars = false);

/// The labeled graph of in/out nodes along a run, restricted to the path
/// spelling the output.
struct OutputStructure {
  enum class Tag { In, Out, Start, End };
  struct Node {
    VarId var = 0;
    std::size_t pos = 0;
    Tag tag = Tag::In;
    auto operator<=>(const Node&) const = default;
  };
  struct Edge {
    Node from;
    Word label;
    Node to;
  };
  std::vector<Node> nodes;
  std::vector<Edge> edges;  // in path order
  Word output;
};

/// nullopt when the word is rejected.
std::optional<OutputStructure> build_output_structure(const SST& machine, const Word& w);

}  // namespace strans
