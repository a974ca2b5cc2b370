#pragma once

#include <string>
#include <string_view>

#include "strans/machine.hpp"

namespace strans {

/// A machine plus the free-form metadata carried by its JSON document.
struct MachineDocument {
  Machine machine;
  std::string name;
  std::string notes;
};

/// Throws ParseError (JSON syntax, missing or ill-typed fields, unknown
/// names, duplicate transitions) and ValidationError (invariant violations).
MachineDocument parse_machine(std::string_view text);

/// Pretty JSON with a fixed field order.
std::string serialize_machine(const MachineDocument& doc);
std::string serialize_machine(const Machine& m);

}  // namespace strans
