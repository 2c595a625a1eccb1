#include "kidtalk/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "kidtalk/assets_gen.hpp"
#include "kidtalk/textutil.hpp"

namespace fs = std::filesystem;

namespace kidtalk::corpus {

namespace {

bool is_xxx_token(const std::string& t) {
  if (t.empty()) return false;
  for (char c : t)
    if (c != 'x' && c != 'X') return false;
  return t.size() >= 3;
}

// CHAT event/retrace codes that carry no lexical content.
bool is_markup_token(const std::string& t) {
  if (t.empty()) return true;
  if (t[0] == '&' || t[0] == '+' || t[0] == '-') return true;   // &=laughs, +..., +//.
  if (t[0] == '[' || t.back() == ']') return true;              // [//], [?]
  if (t[0] == '(' && t.back() == ')') return true;              // (.) pauses
  if (t[0] == '0') return true;                                 // 0 omission codes
  return false;
}

std::string strip_form_suffix(const std::string& t) {
  // dog@o, word@l style form markers
  auto at = t.find('@');
  return at == std::string::npos ? t : t.substr(0, at);
}

SpeakerRole role_for(const std::string& code, const FilterConfig& cfg) {
  auto it = cfg.speaker_roles.find(code);
  if (it != cfg.speaker_roles.end()) return it->second;
  if (cfg.default_role) return *cfg.default_role;
  throw UnknownSpeakerCode("no role mapping for speaker code: " + code);
}

double round2_half_up(double v) {
  return std::floor(v * 100.0 + 0.5) / 100.0;
}

}  // namespace

std::pair<std::vector<std::string>, bool> clean_utterance(const std::string& raw) {
  std::string s = replace_all(raw, "_", " ");
  std::vector<std::string> tokens;
  for (const std::string& piece : split_ws(s)) {
    if (is_markup_token(piece)) continue;
    std::string t = strip_edge_punct(strip_form_suffix(piece));
    if (t.empty()) continue;
    if (is_xxx_token(t)) continue;
    tokens.push_back(t);
  }
  bool unintelligible_only = tokens.empty();
  return {tokens, unintelligible_only};
}

double parse_age(const std::string& raw) {
  std::string s = trim(raw);
  if (s.empty()) throw UnparseableAge("empty age string");

  long years = -1, months = 0;
  // P#Y#M(#D)
  if (s[0] == 'P' || s[0] == 'p') {
    std::size_t i = 1, start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start || i >= s.size() || (s[i] != 'Y' && s[i] != 'y'))
      throw UnparseableAge("bad period notation: " + raw);
    years = std::stol(s.substr(start, i - start));
    ++i;
    if (i < s.size()) {
      start = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (i > start) {
        if (i >= s.size() || (s[i] != 'M' && s[i] != 'm'))
          throw UnparseableAge("bad period notation: " + raw);
        months = std::stol(s.substr(start, i - start));
      }
    }
  } else {
    // Y;M.D, Y;M or Y;
    auto semi = s.find(';');
    if (semi == std::string::npos) throw UnparseableAge("unsupported age notation: " + raw);
    std::string ystr = trim(s.substr(0, semi));
    std::string rest = trim(s.substr(semi + 1));
    if (ystr.empty() ||
        !std::all_of(ystr.begin(), ystr.end(),
                     [](unsigned char c) { return std::isdigit(c); }))
      throw UnparseableAge("bad year field: " + raw);
    years = std::stol(ystr);
    if (!rest.empty()) {
      auto dot = rest.find('.');
      std::string mstr = dot == std::string::npos ? rest : rest.substr(0, dot);
      mstr = trim(mstr);
      if (!mstr.empty()) {
        if (!std::all_of(mstr.begin(), mstr.end(),
                         [](unsigned char c) { return std::isdigit(c); }))
          throw UnparseableAge("bad month field: " + raw);
        months = std::stol(mstr);
      }
      // day part, if any, is ignored
    }
  }
  if (years < 0) throw UnparseableAge("unsupported age notation: " + raw);
  return round2_half_up(static_cast<double>(years) + static_cast<double>(months) / 12.0);
}

Session parse_session(const std::string& text, const SessionMeta& meta,
                      const FilterConfig& cfg) {
  Session s;
  s.corpus_id = meta.corpus_id;
  s.child_id = meta.child_id;
  s.filename = meta.filename;

  // Logical lines: CHAT continues a tier on lines starting with whitespace.
  std::vector<std::pair<int, std::string>> lines;
  {
    std::istringstream in(text);
    std::string line;
    int ln = 0;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty() && (line[0] == ' ' || line[0] == '\t') && !lines.empty()) {
        lines.back().second += " " + trim(line);
      } else {
        lines.emplace_back(ln, line);
      }
      ++ln;
    }
  }

  std::string header_age;
  for (auto& [ln, line] : lines) {
    if (line.empty()) continue;
    char sigil = line[0];
    if (sigil == '*') {
      auto colon = line.find(':');
      if (colon == std::string::npos) continue;
      Utterance u;
      u.speaker_code = trim(line.substr(1, colon - 1));
      u.raw_text = trim(line.substr(colon + 1));
      u.speaker_role = role_for(u.speaker_code, cfg);
      u.line_index = ln;
      auto [tokens, unint] = clean_utterance(u.raw_text);
      u.clean_tokens = std::move(tokens);
      u.unintelligible_only = unint;
      s.utterances.push_back(std::move(u));
    } else if (sigil == '%' || sigil == '@') {
      auto colon = line.find(':');
      MetadataTier tier;
      tier.code = to_lower(trim(colon == std::string::npos ? line.substr(1)
                                                           : line.substr(1, colon - 1)));
      tier.content = colon == std::string::npos ? "" : trim(line.substr(colon + 1));
      tier.utterance_index =
          sigil == '%' && !s.utterances.empty()
              ? static_cast<int>(s.utterances.size()) - 1
              : -1;
      tier.line_index = ln;
      if (tier.code == "id") {
        // @ID: lang|corpus|code|age|sex|... -- pick up the child's age when
        // the caller did not supply one.
        auto fields = split(tier.content, '|');
        if (fields.size() > 3 && trim(fields[2]) == "CHI" && !trim(fields[3]).empty())
          header_age = trim(fields[3]);
      }
      s.metadata.push_back(std::move(tier));
    }
    // any other line (e.g. UTF-8 byte-order note) is ignored
  }

  if (s.utterances.empty())
    throw MalformedTranscript("no speaker lines in transcript " + meta.filename);

  std::string age_str = !meta.raw_age.empty() ? meta.raw_age : header_age;
  if (!age_str.empty()) s.child_age_years = parse_age(age_str);
  return s;
}

FilterConfig FilterConfig::defaults() {
  static const FilterConfig cfg = from_json(kidtalk::assets::kFilterDefaultJson);
  return cfg;
}

FilterConfig FilterConfig::from_json(const std::string& json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  FilterConfig cfg;
  auto parse_role = [](const std::string& r) {
    std::string v = to_lower(r);
    if (v == "child") return SpeakerRole::Child;
    if (v == "adult") return SpeakerRole::Adult;
    throw ConfigInvalid("unknown speaker role: " + r);
  };
  for (auto& [code, role] : j.value("speaker_roles", nlohmann::json::object()).items())
    cfg.speaker_roles[code] = parse_role(role.get<std::string>());
  if (j.contains("default_role") && !j["default_role"].get<std::string>().empty())
    cfg.default_role = parse_role(j["default_role"].get<std::string>());
  for (auto& [cls, words] : j.value("exclusions", nlohmann::json::object()).items())
    for (auto& w : words) cfg.exclusions[cls].push_back(to_lower(w.get<std::string>()));
  for (auto& [cls, pats] : j.value("filename_patterns", nlohmann::json::object()).items())
    for (auto& p : pats) cfg.filename_patterns[cls].push_back(to_lower(p.get<std::string>()));
  for (auto& t : j.value("metadata_tiers", nlohmann::json::array()))
    cfg.metadata_tiers.push_back(to_lower(t.get<std::string>()));
  cfg.segment_scope = j.value("scope", "session") == std::string("segment");
  if (j.contains("age_range")) {
    cfg.min_age = j["age_range"][0].get<double>();
    cfg.max_age = j["age_range"][1].get<double>();
  }
  return cfg;
}

namespace {

// Returns the matching exclusion class for a metadata string, or empty.
std::string match_exclusion(const std::string& content, const FilterConfig& cfg) {
  std::string low = to_lower(content);
  for (const auto& [cls, words] : cfg.exclusions)
    for (const auto& w : words)
      if (!w.empty() && contains(low, w)) return cls;
  return "";
}

bool tier_is_scanned(const std::string& code, const FilterConfig& cfg) {
  return std::find(cfg.metadata_tiers.begin(), cfg.metadata_tiers.end(), code) !=
         cfg.metadata_tiers.end();
}

}  // namespace

Session filter_session(const Session& s, const FilterConfig& cfg) {
  Session out = s;

  if (out.child_age_years != 0.0 &&
      (out.child_age_years < cfg.min_age || out.child_age_years > cfg.max_age)) {
    out.excluded = true;
    out.exclusion_reason = "AgeOutOfRange";
    return out;
  }

  for (const auto& [cls, pats] : cfg.filename_patterns) {
    std::string fname = to_lower(out.filename);
    for (const auto& p : pats)
      if (!p.empty() && contains(fname, p)) {
        out.excluded = true;
        out.exclusion_reason = cls;
        return out;
      }
  }

  // Segment scope: activity/gem matches drop the utterances they govern.
  // Session scope: any match excludes the whole session.
  std::vector<bool> drop(s.utterances.size(), false);
  std::string session_match;

  // Gem regions: a matching @g / @bg header governs utterances up to the
  // next gem header (or @eg).
  int gem_start = -1;
  bool gem_matches = false;
  auto close_gem = [&](int end_utt) {
    if (gem_start >= 0 && gem_matches)
      for (int i = gem_start; i < end_utt; ++i) drop[static_cast<std::size_t>(i)] = true;
  };
  for (const auto& tier : s.metadata) {
    if (!tier_is_scanned(tier.code, cfg)) continue;
    std::string cls = match_exclusion(tier.content, cfg);
    bool is_gem = tier.code == "g" || tier.code == "bg" || tier.code == "gem" ||
                  tier.code == "eg";
    if (is_gem) {
      // The count of utterances that precede this header in transcript order.
      int boundary = 0;
      while (boundary < static_cast<int>(s.utterances.size()) &&
             s.utterances[static_cast<std::size_t>(boundary)].line_index < tier.line_index)
        ++boundary;
      close_gem(boundary);
      gem_start = tier.code == "eg" ? -1 : boundary;
      gem_matches = !cls.empty();
    }
    if (!cls.empty()) {
      session_match = cls;
      if (cfg.segment_scope && !is_gem && tier.utterance_index >= 0)
        drop[static_cast<std::size_t>(tier.utterance_index)] = true;
    }
  }
  close_gem(static_cast<int>(s.utterances.size()));

  if (!session_match.empty() && !cfg.segment_scope) {
    out.excluded = true;
    out.exclusion_reason = session_match;
    return out;
  }

  out.utterances.clear();
  for (std::size_t i = 0; i < s.utterances.size(); ++i) {
    const Utterance& u = s.utterances[i];
    if (drop[i]) continue;
    if (u.unintelligible_only) continue;  // empty / noise-only lines
    out.utterances.push_back(u);
  }
  return out;
}

std::vector<DialoguePair> align_pairs(const Session& s) {
  std::vector<DialoguePair> pairs;
  if (s.excluded) return pairs;
  for (std::size_t i = 1; i < s.utterances.size(); ++i) {
    if (s.utterances[i].speaker_role == SpeakerRole::Child &&
        s.utterances[i - 1].speaker_role == SpeakerRole::Adult) {
      DialoguePair p;
      p.session_ref = s.corpus_id + "/" + s.child_id + "/" + s.filename;
      p.adult = s.utterances[i - 1];
      p.child = s.utterances[i];
      p.pair_index = static_cast<int>(pairs.size());
      pairs.push_back(std::move(p));
    }
  }
  return pairs;
}

bool hesitation_only_tokens(const std::vector<std::string>& tokens) {
  static const std::set<std::string> kFillers = {"um", "uh", "hm", "er", "ah"};
  if (tokens.empty()) return false;
  for (const auto& t : tokens) {
    std::string w = to_lower(strip_edge_punct(t));
    if (!kFillers.count(w)) return false;
  }
  return true;
}

bool detect_hesitation_only(const Utterance& u) {
  return hesitation_only_tokens(u.clean_tokens);
}

std::vector<Session> load_corpus_dir(const std::string& dir, const FilterConfig& cfg) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    auto ext = entry.path().extension().string();
    if (ext == ".cha" || ext == ".txt") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  std::vector<Session> sessions;
  for (const auto& path : files) {
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    SessionMeta meta;
    meta.filename = path.filename().string();
    meta.child_id = path.stem().string();
    meta.corpus_id = fs::path(dir).filename().string();
    Session s = parse_session(buf.str(), meta, cfg);
    sessions.push_back(filter_session(s, cfg));
  }
  return sessions;
}

}  // namespace kidtalk::corpus
