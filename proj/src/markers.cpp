#include "kidtalk/markers.hpp"

#include <json.hpp>

#include "kidtalk/assets_gen.hpp"
#include "kidtalk/textutil.hpp"

namespace kidtalk::markers {

namespace {

std::vector<std::vector<std::string>> parse_phrases(const nlohmann::json& arr) {
  std::vector<std::vector<std::string>> out;
  for (const auto& entry : arr) {
    std::vector<std::string> phrase;
    for (const auto& w : split_ws(to_lower(entry.get<std::string>())))
      phrase.push_back(w);
    if (!phrase.empty()) out.push_back(std::move(phrase));
  }
  return out;
}

bool phrase_at(const std::vector<std::string>& tokens, std::size_t pos,
               const std::vector<std::string>& phrase) {
  if (pos + phrase.size() > tokens.size()) return false;
  for (std::size_t k = 0; k < phrase.size(); ++k)
    if (tokens[pos + k] != phrase[k]) return false;
  return true;
}

bool any_phrase(const std::vector<std::string>& tokens,
                const std::vector<std::vector<std::string>>& phrases) {
  for (std::size_t i = 0; i < tokens.size(); ++i)
    for (const auto& p : phrases)
      if (phrase_at(tokens, i, p)) return true;
  return false;
}

}  // namespace

MarkerLexicons MarkerLexicons::defaults() {
  static const MarkerLexicons lex = from_json(kidtalk::assets::kMarkersJson);
  return lex;
}

MarkerLexicons MarkerLexicons::from_json(const std::string& json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  MarkerLexicons lex;
  lex.causal = parse_phrases(j.at("causal"));
  lex.contrast = parse_phrases(j.at("contrast"));
  lex.initiative = parse_phrases(j.at("initiative"));
  return lex;
}

MarkerFlags detect_markers(const std::vector<std::string>& tokens,
                           const MarkerLexicons& lex) {
  std::vector<std::string> norm;
  norm.reserve(tokens.size());
  for (const auto& t : tokens) norm.push_back(to_lower(strip_edge_punct(t)));

  MarkerFlags flags;
  flags.causal = any_phrase(norm, lex.causal);
  flags.contrast = any_phrase(norm, lex.contrast);
  flags.initiative = any_phrase(norm, lex.initiative);
  return flags;
}

}  // namespace kidtalk::markers
