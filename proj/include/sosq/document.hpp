#ifndef SOSQ_DOCUMENT_HPP
#define SOSQ_DOCUMENT_HPP

#include "sosq/hurwitz.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sosq {

inline constexpr std::string_view kSchemaVersion = "sosq.system/1";

/// Construction trace. Advisory only: nothing checks it on load.
struct Provenance {
  std::string operation;
  std::vector<std::pair<std::string, std::int64_t>> args;
  std::vector<Provenance> inputs;

  friend bool operator==(const Provenance &, const Provenance &) = default;
};

struct SystemDocument {
  std::string schema_version{kSchemaVersion};
  HurwitzSystem system;
  std::optional<Provenance> provenance;

  friend bool operator==(const SystemDocument &,
                         const SystemDocument &) = default;
};

/// JSON text with a fixed key order and one matrix row per line, so equal
/// documents serialize to identical bytes. Ends with a newline.
std::string serialize(const SystemDocument &doc);

/// Strict inverse of serialize: unknown keys, non-integer entries, shape
/// mismatches and unknown schema versions raise SchemaError. Syntax errors
/// carry line and column; structural errors carry a JSON pointer.
SystemDocument parse_document(std::string_view text);

} // namespace sosq

#endif // SOSQ_DOCUMENT_HPP
