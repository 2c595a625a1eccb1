#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kidtalk/errors.hpp"

namespace kidtalk::corpus {

enum class SpeakerRole { Adult, Child };

struct Utterance {
  SpeakerRole speaker_role = SpeakerRole::Adult;
  std::string speaker_code;
  std::string raw_text;
  std::vector<std::string> clean_tokens;
  int line_index = -1;
  bool unintelligible_only = false;
};

// Dependent tiers (%xxx) and header lines (@Xxx) kept alongside the
// utterance stream. utterance_index is -1 for session-level entries.
struct MetadataTier {
  std::string code;     // lowercased, without the leading sigil
  std::string content;
  int utterance_index = -1;
  int line_index = -1;
};

struct Session {
  std::string corpus_id;
  std::string child_id;
  double child_age_years = 0.0;
  std::vector<Utterance> utterances;
  std::vector<MetadataTier> metadata;
  std::string filename;
  bool excluded = false;
  std::string exclusion_reason;
};

struct SessionMeta {
  std::string corpus_id;
  std::string child_id;
  std::string raw_age;   // parsed with parse_age; empty -> take from @ID header
  std::string filename;
};

struct DialoguePair {
  std::string session_ref;
  Utterance adult;
  Utterance child;
  int pair_index = 0;
};

// Keyword rules for session/segment exclusion. Keys are exclusion-class
// names; values are lowercase keywords matched as substrings of activity or
// gem metadata (and of the filename for filename_patterns).
struct FilterConfig {
  std::map<std::string, SpeakerRole> speaker_roles;  // e.g. {"CHI", Child}
  std::optional<SpeakerRole> default_role;           // unset -> strict codes
  std::map<std::string, std::vector<std::string>> exclusions;
  std::map<std::string, std::vector<std::string>> filename_patterns;
  std::vector<std::string> metadata_tiers;  // tier codes scanned for keywords
  bool segment_scope = false;  // true: drop matching segments, keep session
  double min_age = 2.0;
  double max_age = 10.0;

  static FilterConfig defaults();
  static FilterConfig from_json(const std::string& json_text);
};

// Splits underscore compounds, strips markup/punctuation-only tokens and
// drops tokens that are nothing but "xxx". Returns the cleaned tokens plus
// whether nothing meaningful remained.
std::pair<std::vector<std::string>, bool> clean_utterance(const std::string& raw);

// Decimal years from "P6Y07M" / "4;7.0" style notations; days are ignored
// and the result is rounded half-up to two decimals.
double parse_age(const std::string& raw);

Session parse_session(const std::string& text, const SessionMeta& meta,
                      const FilterConfig& cfg = FilterConfig::defaults());

// Applies the exclusion rules; drops empty and noise-only utterances. Never
// rewrites utterance text.
Session filter_session(const Session& s, const FilterConfig& cfg);

std::vector<DialoguePair> align_pairs(const Session& s);

// True iff every token is a hesitation filler (um, uh, hm, er, ah).
bool detect_hesitation_only(const Utterance& u);
bool hesitation_only_tokens(const std::vector<std::string>& tokens);

// Convenience: load + parse + filter every *.cha / *.txt file in a
// directory (non-recursive), deriving ids from the filename when the
// transcript headers do not supply them.
std::vector<Session> load_corpus_dir(const std::string& dir, const FilterConfig& cfg);

}  // namespace kidtalk::corpus
