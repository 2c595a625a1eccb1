#pragma once

#include <string>
#include <vector>

namespace kidtalk::markers {

struct MarkerFlags {
  bool causal = false;
  bool contrast = false;
  bool initiative = false;

  bool operator==(const MarkerFlags&) const = default;
};

// Lexicons of single- and multi-token phrases, matched case-insensitively on
// token boundaries. "so" counts as causal wherever it appears; no sense
// disambiguation is attempted.
struct MarkerLexicons {
  std::vector<std::vector<std::string>> causal;
  std::vector<std::vector<std::string>> contrast;
  std::vector<std::vector<std::string>> initiative;

  static MarkerLexicons defaults();
  static MarkerLexicons from_json(const std::string& json_text);
};

MarkerFlags detect_markers(const std::vector<std::string>& tokens,
                           const MarkerLexicons& lex = MarkerLexicons::defaults());

}  // namespace kidtalk::markers
