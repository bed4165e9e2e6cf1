// Copyright headshadow contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "hse/analysis.hpp"
#include "hse/chain.hpp"
#include "hse/rng.hpp"
#include "hse/types.hpp"

namespace hse {

/// Picks the template angle whose ILD is closest to the observed ILD.
/// Ties break toward the smaller |angle|, then toward the negative angle.
int ideal_observer_localize(const IldCurve& ild_template, double observed_ild_db);

struct LocalizationConfig {
  std::vector<int> angles = standard_angles();  // the 13-loudspeaker grid
  int trials_per_angle = 9;                     // 3 per run x 3 scored runs
  double rove_db = 10.0;                        // +-10 dB level roving
  double ild_noise_sigma_db = 1.0;              // observer internal noise
  std::uint64_t seed = 1;
};

struct LocalizationRun {
  LocalizationMetrics metrics;
  IldCurve ild_template;
  std::vector<std::pair<double, double>> trials;  // (target, response)
};

/// Runs the localization experiment with an ideal ILD observer: per trial the
/// stimulus is rendered at the target angle, roved in overall level, pushed
/// through the chain; the observer reads the broadband ILD plus Gaussian
/// internal noise and answers with the closest template angle. The template
/// is the chain's own ILD curve, built without roving. Deterministic given
/// the seed.
LocalizationRun run_localization_experiment(const LocalizationConfig& cfg,
                                            const HrtfSet& hrtfs, const Chain& chain,
                                            const SampleBuffer& stimulus);

/// A simulated matrix-test listener: the probability of hearing one word
/// right is logistic in the effective SNR, with 50% at srt50 and the given
/// slope (probability per dB) at the midpoint.
struct SimulatedListener {
  double srt50_db = -6.0;
  double slope_per_db = 0.15;
  int words_per_sentence = 5;
};

/// Word-probability: logistic(4 * slope * (snr - srt50)).
double word_probability(const SimulatedListener& l, double snr_db);

/// Fraction of words repeated correctly: Binomial(words, p) / words, so one of
/// {0, .2, .4, .6, .8, 1} for five-word sentences.
double sentence_score(const SimulatedListener& l, double snr_db, Rng& rng);

struct AdaptiveTrackParams {
  int n_sentences = 20;
  double start_snr_db = 0.0;
  // non-increasing step schedule; the last entry repeats to the end
  std::vector<double> step_schedule_db = {5.0, 5.0, 3.0, 3.0, 2.0, 2.0, 1.0};
};

/// One adaptive run targeting 50% intelligibility:
///   snr_{k+1} = snr_k - step_k * (score_k - 0.5) / 0.25
/// and the SRT estimate is the SNR that would be presented after the final
/// response. condition_offset_db maps the nominal (free-field) SNR to the
/// listener's effective SNR for this condition (see effective_snr).
double run_adaptive_srt(const AdaptiveTrackParams& track, const SimulatedListener& listener,
                        double condition_offset_db, Rng& rng);

struct EffectiveSnr {
  double left_db = 0.0;
  double right_db = 0.0;
  double better_ear_db = 0.0;
};

/// Band-importance weights: a monotone speech-importance-like profile,
/// w ~ center^0.3, normalized to sum 1.
std::vector<double> default_band_weights(const std::vector<double>& centers_hz);

/// Importance-weighted mean band SNR per ear, restricted to the bands each
/// ear can hear: the hearing-aid ear only bands at or below 500 Hz, the CI
/// ear all bands. Weights are renormalized over the audible subset.
/// better_ear is the max of the two.
EffectiveSnr effective_snr(const BandSnrReport& report, Side ci_side,
                           const std::vector<double>& weights);

struct SrtConditionResult {
  std::string condition;
  double mean_srt_natural_db = 0.0;
  double mean_srt_enhanced_db = 0.0;
  double improvement_db = 0.0;  // natural - enhanced
  double offset_natural_db = 0.0;
  double offset_enhanced_db = 0.0;
  std::vector<double> runs_natural_db;
  std::vector<double> runs_enhanced_db;
};

struct SpeechExperimentConfig {
  int runs_per_condition = 200;
  SimulatedListener listener;
  AdaptiveTrackParams track;
  Side ci_side = Side::Left;
  double noise_dur_s = 3.0;
  double speech_dur_s = 3.0;
  std::uint64_t seed = 1;
  int jobs = 1;
};

/// Speech-in-noise experiment across the three spatial conditions and both
/// processing types. Per condition the per-band SNRs fix a better-ear
/// effective-SNR offset; the adaptive tracks then estimate the nominal SRT
/// for a population of seeded simulated listeners.
std::vector<SrtConditionResult> run_speech_experiment(const SpeechExperimentConfig& cfg,
                                                      const HrtfSet& hrtfs,
                                                      const BeamformerParams& bf);

}  // namespace hse
