#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "kidtalk/corpus.hpp"
#include "kidtalk/errors.hpp"

namespace kidtalk::judge {

enum class PTKind { Question, NonQuestion, Ambiguous };

// Order follows the summary table: seven question types, four non-question
// types, then the special case.
enum class PTSubtype {
  YesNo,
  Referential,
  ClarificationRequest,
  Display,
  ConfirmationCheck,
  Choice,
  Elaboration,
  TopicIntroduction,
  ImperativeRequest,
  FeedbackEvaluation,
  SelfTalk,
  AmbiguousUnclear,
};

inline constexpr int kNumPTSubtypes = 12;
inline constexpr int kNumContentPTs = 11;  // all but AmbiguousUnclear

struct PTLabel {
  PTKind kind = PTKind::Ambiguous;
  PTSubtype subtype = PTSubtype::AmbiguousUnclear;

  bool operator==(const PTLabel&) const = default;
};

PTKind kind_of(PTSubtype t);
PTLabel make_pt(PTSubtype t);

// Category string as used in the judge reply ("Yes/No Question").
std::string pt_category(PTSubtype t);
// Short display name used in report tables ("Yes/No").
std::string pt_display_name(PTSubtype t);
std::optional<PTSubtype> pt_from_category(const std::string& text);

struct EIScore {
  int independence = 0;
  int expansion = 0;
  bool hesitation_only = false;

  bool operator==(const EIScore&) const = default;
};

struct Annotation {
  std::string pair_ref;
  PTLabel pt;
  std::optional<EIScore> ei;  // nullopt: reply unusable after retries
  std::string judge_id;
  std::string raw_response_hash;
};

struct JudgeConfig {
  std::string judge_id = "mock";
  int batch_size = 20;
  int max_retries = 3;
  int max_in_flight = 1;
  std::string cache_dir;  // empty: in-memory cache only
};

// A chat-completion style backend: one prompt in, one reply out. complete()
// may be called concurrently.
class JudgeBackend {
 public:
  virtual ~JudgeBackend() = default;
  virtual std::string complete(const std::string& prompt) = 0;
};

struct HttpBackendConfig {
  std::string base_url;                // e.g. http://localhost:8080
  std::string path = "/v1/chat/completions";
  std::string model;
  double temperature = 0.0;
  std::string api_key_env = "KIDTALK_API_KEY";
  std::string content_path = "choices.0.message.content";  // dotted field path
  int max_attempts = 3;
  int backoff_ms = 500;
};

std::unique_ptr<JudgeBackend> make_http_backend(const HttpBackendConfig& cfg);

// Deterministic rule-based judge for offline runs and tests. Counts its
// calls so batching and cache behaviour can be asserted.
class MockBackend : public JudgeBackend {
 public:
  std::string complete(const std::string& prompt) override;
  int calls() const { return calls_; }

 private:
  std::mutex mu_;
  int calls_ = 0;
};

// Test helper: fails the first `failures` calls, then delegates.
class FlakyBackend : public JudgeBackend {
 public:
  FlakyBackend(JudgeBackend& inner, int failures)
      : inner_(inner), remaining_failures_(failures) {}
  std::string complete(const std::string& prompt) override;
  int failures_seen() const { return failures_seen_; }

 private:
  JudgeBackend& inner_;
  std::mutex mu_;
  int remaining_failures_;
  int failures_seen_ = 0;
};

// Prompt rendering: numbered turns substituted into the {DIALOGUE} slot of
// the stored templates.
std::string render_pt_prompt(const std::vector<std::string>& adult_turns,
                             const std::string& dialogue_context = "");
std::string render_ei_prompt(const std::vector<std::string>& child_turns,
                             const std::string& dialogue_context = "");
std::string render_age_prompt(const std::vector<std::string>& child_utterances);

// Canonical reply formatting (the format the prompts demand); parsing is the
// left inverse of these.
std::string format_pt_response(const std::vector<PTLabel>& labels);
std::string format_ei_response(const std::vector<EIScore>& scores);

std::vector<PTLabel> parse_pt_response(const std::string& text, int expected_count);
std::vector<EIScore> parse_ei_response(const std::string& text, int expected_count);

// "X years Y months" -> decimal years.
double parse_age_response(const std::string& text);

// Deterministic heuristic annotation of a single pair; the rules the mock
// backend applies when answering rendered prompts.
std::pair<PTLabel, EIScore> mock_judge(const corpus::DialoguePair& pair);
PTLabel mock_classify_adult(const std::string& adult_text);
EIScore mock_score_child(const std::string& adult_text, const std::string& child_text);

// File-backed verdict cache keyed by (judge id, prompt). Safe for concurrent
// use.
class VerdictCache {
 public:
  explicit VerdictCache(std::string dir) : dir_(std::move(dir)) {}

  std::optional<std::string> get(const std::string& judge_id, const std::string& prompt);
  void put(const std::string& judge_id, const std::string& prompt,
           const std::string& response);
  static std::string key(const std::string& judge_id, const std::string& prompt);

 private:
  std::string dir_;
  std::mutex mu_;
  std::map<std::string, std::string> mem_;
};

struct AnnotateStats {
  int backend_calls = 0;
  int cache_hits = 0;
  int retries = 0;
  int pt_fallbacks = 0;   // batches recorded as Ambiguous/Unclear
  int ei_dropped = 0;     // scores dropped after retries
  int hesitation_short_circuits = 0;
};

// Annotates every pair: two passes (PT over adult turns, E/I over child
// turns), batched, cached, with bounded retries on malformed replies.
// Hesitation-only child turns are scored (0,0) without any backend call.
std::vector<Annotation> annotate(const std::vector<corpus::DialoguePair>& pairs,
                                 JudgeBackend& backend, const JudgeConfig& cfg,
                                 AnnotateStats* stats = nullptr,
                                 std::function<void(const std::string&)> log = {});

}  // namespace kidtalk::judge
