#include "kidtalk/baselines.hpp"

#include <cmath>
#include <unordered_set>

#include "kidtalk/rng.hpp"
#include "kidtalk/textutil.hpp"

namespace kidtalk::baselines {

double mlu(const std::vector<std::vector<std::string>>& utterances) {
  if (utterances.empty()) throw EmptyInput("mlu: no utterances");
  long words = 0;
  long nonempty = 0;
  for (const auto& u : utterances) {
    words += static_cast<long>(u.size());
    if (!u.empty()) ++nonempty;
  }
  if (nonempty == 0) throw EmptyInput("mlu: all utterances empty");
  return static_cast<double>(words) / static_cast<double>(utterances.size());
}

double ttr(const std::vector<std::string>& tokens) {
  if (tokens.empty()) throw EmptyInput("ttr: no tokens");
  std::unordered_set<std::string> types;
  for (const auto& t : tokens) types.insert(to_lower(t));
  return static_cast<double>(types.size()) / static_cast<double>(tokens.size());
}

int count_syllables(const std::string& word) {
  std::string w = to_lower(strip_edge_punct(word));
  if (w.empty()) return 1;
  auto is_vowel = [](char c) {
    return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' || c == 'y';
  };
  int groups = 0;
  bool in_group = false;
  for (char c : w) {
    if (is_vowel(c)) {
      if (!in_group) ++groups;
      in_group = true;
    } else {
      in_group = false;
    }
  }
  // Silent final e ("make", "stone"), but keep the -le syllable ("apple").
  std::size_t n = w.size();
  if (groups > 1 && n >= 2 && w[n - 1] == 'e' && !is_vowel(w[n - 2]) &&
      !(n >= 3 && w[n - 1] == 'e' && w[n - 2] == 'l' && !is_vowel(w[n - 3])))
    --groups;
  return groups < 1 ? 1 : groups;
}

TextStats text_stats(const std::vector<std::vector<std::string>>& utterances) {
  TextStats st;
  for (const auto& u : utterances) {
    if (u.empty()) continue;
    ++st.n_sentences;
    for (const auto& w : u) {
      ++st.n_words;
      int syl = count_syllables(w);
      st.n_syllables += syl;
      if (syl >= 3) ++st.n_complex_words;
    }
  }
  return st;
}

double fkgl(const TextStats& stats) {
  if (stats.n_words < 1 || stats.n_sentences < 1)
    throw EmptyInput("fkgl: needs at least one word and one sentence");
  double wps = static_cast<double>(stats.n_words) / stats.n_sentences;
  double spw = static_cast<double>(stats.n_syllables) / stats.n_words;
  return 0.39 * wps + 11.8 * spw - 15.59;
}

double gfi(const TextStats& stats) {
  if (stats.n_words < 1 || stats.n_sentences < 1)
    throw EmptyInput("gfi: needs at least one word and one sentence");
  double wps = static_cast<double>(stats.n_words) / stats.n_sentences;
  double complex_pct = 100.0 * stats.n_complex_words / stats.n_words;
  return 0.4 * (wps + complex_pct);
}

double vocd_model_ttr(double d, double n) {
  return d / n * (std::sqrt(1.0 + 2.0 * n / d) - 1.0);
}

namespace {

double subsample_ttr(const std::vector<std::string>& types_interned, Rng& rng,
                     int n, int subsamples) {
  double sum = 0.0;
  std::size_t total = types_interned.size();
  for (int s = 0; s < subsamples; ++s) {
    auto idx = rng.sample_without_replacement(total, static_cast<std::size_t>(n));
    std::unordered_set<std::string> seen;
    for (std::size_t i : idx) seen.insert(types_interned[i]);
    sum += static_cast<double>(seen.size()) / n;
  }
  return sum / subsamples;
}

// Least-squares fit of D to the averaged TTR curve: golden-section search on
// log D, bracketed wide enough for both degenerate and diverse streams.
double fit_d(const std::vector<std::pair<double, double>>& curve) {
  auto loss = [&](double logd) {
    double d = std::exp(logd);
    double ls = 0.0;
    for (auto [n, t] : curve) {
      double diff = t - vocd_model_ttr(d, n);
      ls += diff * diff;
    }
    return ls;
  };
  double lo = std::log(1e-3), hi = std::log(1e5);
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
  double f1 = loss(x1), f2 = loss(x2);
  for (int it = 0; it < 200 && (b - a) > 1e-10; ++it) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - phi * (b - a);
      f1 = loss(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + phi * (b - a);
      f2 = loss(x2);
    }
  }
  return std::exp((a + b) / 2.0);
}

}  // namespace

double vocd_d(const std::vector<std::string>& tokens, std::uint64_t seed,
              const VocdParams& params) {
  if (static_cast<int>(tokens.size()) < params.min_tokens ||
      static_cast<int>(tokens.size()) < params.n_max)
    throw InsufficientTokens("vocd_d: need at least " +
                             std::to_string(std::max(params.min_tokens, params.n_max)) +
                             " tokens, got " + std::to_string(tokens.size()));

  std::vector<std::string> folded;
  folded.reserve(tokens.size());
  for (const auto& t : tokens) folded.push_back(to_lower(t));

  Rng rng(seed);
  double d_sum = 0.0;
  for (int trial = 0; trial < params.trials; ++trial) {
    std::vector<std::pair<double, double>> curve;
    for (int n = params.n_min; n <= params.n_max; ++n)
      curve.emplace_back(n, subsample_ttr(folded, rng, n, params.subsamples));
    d_sum += fit_d(curve);
  }
  return d_sum / params.trials;
}

}  // namespace kidtalk::baselines
