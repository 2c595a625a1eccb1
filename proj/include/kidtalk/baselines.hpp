#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kidtalk/errors.hpp"

namespace kidtalk::baselines {

struct TextStats {
  long n_words = 0;
  long n_sentences = 0;
  long n_syllables = 0;
  long n_complex_words = 0;  // words with >= 3 syllables
};

struct VocdParams {
  int n_min = 35;
  int n_max = 50;
  int subsamples = 100;   // random draws per segment size
  int trials = 3;         // independent fits averaged into the estimate
  int min_tokens = 50;
};

// Mean words per utterance.
double mlu(const std::vector<std::vector<std::string>>& utterances);

// Distinct types / tokens, case-folded.
double ttr(const std::vector<std::string>& tokens);

// Heuristic syllable count: vowel groups with a silent-e adjustment,
// minimum one.
int count_syllables(const std::string& word);

// Aggregates counts over token lists treating each utterance as one
// sentence.
TextStats text_stats(const std::vector<std::vector<std::string>>& utterances);

double fkgl(const TextStats& stats);
double gfi(const TextStats& stats);

// Lexical diversity D: average TTR over random subsamples at sizes
// n_min..n_max, least-squares fit of the TTR(N) curve, averaged over
// independent trials. Deterministic for a given seed.
double vocd_d(const std::vector<std::string>& tokens, std::uint64_t seed,
              const VocdParams& params = VocdParams{});

// Model curve TTR(N; D) shared by the fit and by diagnostics.
double vocd_model_ttr(double d, double n);

}  // namespace kidtalk::baselines
