// Copyright headshadow contributors
// SPDX-License-Identifier: Apache-2.0
#include "hse/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "hse/dsp.hpp"
#include "hse/signal.hpp"

namespace hse {

int ideal_observer_localize(const IldCurve& ild_template, double observed_ild_db) {
  if (ild_template.angles_deg.empty()) {
    throw ParamError("ideal_observer_localize: empty template");
  }
  int best_angle = ild_template.angles_deg.front();
  double best_err = std::abs(ild_template.ild_db.front() - observed_ild_db);
  for (std::size_t i = 1; i < ild_template.angles_deg.size(); ++i) {
    const int angle = ild_template.angles_deg[i];
    const double err = std::abs(ild_template.ild_db[i] - observed_ild_db);
    bool better = err < best_err;
    if (err == best_err) {
      if (std::abs(angle) < std::abs(best_angle)) {
        better = true;
      } else if (std::abs(angle) == std::abs(best_angle) && angle < best_angle) {
        better = true;
      }
    }
    if (better) {
      best_err = err;
      best_angle = angle;
    }
  }
  return best_angle;
}

LocalizationRun run_localization_experiment(const LocalizationConfig& cfg,
                                            const HrtfSet& hrtfs, const Chain& chain,
                                            const SampleBuffer& stimulus) {
  if (cfg.trials_per_angle < 1) throw ParamError("trials_per_angle must be >= 1");
  if (cfg.rove_db < 0.0) throw ParamError("rove range must be non-negative");

  LocalizationRun run;
  run.ild_template = ild_curve(stimulus, hrtfs, chain, cfg.angles);

  Rng rove_rng(Rng::derive(cfg.seed, 0xA));
  Rng observer_rng(Rng::derive(cfg.seed, 0xB));

  for (int angle : cfg.angles) {
    const BinauralBuffer rendered =
        render_scene(single_source_scene(angle, stimulus), hrtfs);
    for (int t = 0; t < cfg.trials_per_angle; ++t) {
      const double rove = rove_rng.uniform(-cfg.rove_db, cfg.rove_db);
      BinauralBuffer roved = rendered;
      const double g = db_to_lin(rove);
      for (double& v : roved.left.samples) v *= g;
      for (double& v : roved.right.samples) v *= g;

      const double ild = broadband_ild(chain.process(roved));
      const double observed = ild + cfg.ild_noise_sigma_db * observer_rng.gaussian();
      const int response = ideal_observer_localize(run.ild_template, observed);
      run.trials.emplace_back(static_cast<double>(angle), static_cast<double>(response));
    }
  }
  run.metrics = localization_metrics(run.trials);
  return run;
}

double word_probability(const SimulatedListener& l, double snr_db) {
  if (!(l.slope_per_db > 0.0)) throw ParamError("listener slope must be positive");
  return 1.0 / (1.0 + std::exp(-4.0 * l.slope_per_db * (snr_db - l.srt50_db)));
}

double sentence_score(const SimulatedListener& l, double snr_db, Rng& rng) {
  const double p = word_probability(l, snr_db);
  int correct = 0;
  for (int w = 0; w < l.words_per_sentence; ++w) {
    if (rng.uniform(0.0, 1.0) < p) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(l.words_per_sentence);
}

double run_adaptive_srt(const AdaptiveTrackParams& track, const SimulatedListener& listener,
                        double condition_offset_db, Rng& rng) {
  if (track.n_sentences < 1) throw ParamError("adaptive track needs sentences");
  if (track.step_schedule_db.empty()) throw ParamError("empty step schedule");

  double snr = track.start_snr_db;
  for (int k = 0; k < track.n_sentences; ++k) {
    const double step =
        track.step_schedule_db[std::min<std::size_t>(static_cast<std::size_t>(k),
                                                     track.step_schedule_db.size() - 1)];
    const double score = sentence_score(listener, snr + condition_offset_db, rng);
    snr -= step * (score - 0.5) / 0.25;
  }
  return snr;  // the SNR that would be presented next
}

std::vector<double> default_band_weights(const std::vector<double>& centers_hz) {
  std::vector<double> w(centers_hz.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    w[i] = std::pow(centers_hz[i], 0.3);
    sum += w[i];
  }
  for (double& v : w) v /= sum;
  return w;
}

EffectiveSnr effective_snr(const BandSnrReport& report, Side ci_side,
                           const std::vector<double>& weights) {
  const std::size_t n = report.band_centers_hz.size();
  if (weights.size() != n) {
    throw ParamError("effective_snr: weight/band length mismatch");
  }
  double wsum = 0.0;
  for (double w : weights) wsum += w;
  if (std::abs(wsum - 1.0) > 1e-6) throw ParamError("effective_snr: weights must sum to 1");

  const Side ha_side = other_side(ci_side);
  EffectiveSnr out;
  for (Side ear : {Side::Left, Side::Right}) {
    const bool ha = ear == ha_side;
    double acc = 0.0, wacc = 0.0;
    for (std::size_t b = 0; b < n; ++b) {
      if (ha && report.band_centers_hz[b] > 500.0) continue;  // audible bands only
      acc += weights[b] * report.ear(ear)[b];
      wacc += weights[b];
    }
    if (wacc <= 0.0) throw ParamError("effective_snr: no audible bands for an ear");
    const double v = acc / wacc;
    (ear == Side::Left ? out.left_db : out.right_db) = v;
  }
  out.better_ear_db = std::max(out.left_db, out.right_db);
  return out;
}

std::vector<SrtConditionResult> run_speech_experiment(const SpeechExperimentConfig& cfg,
                                                      const HrtfSet& hrtfs,
                                                      const BeamformerParams& bf) {
  const double fs = hrtfs.sample_rate();
  const SampleBuffer speech =
      speech_shaped_noise(cfg.speech_dur_s, fs, Rng::derive(cfg.seed, 0x5), -25.0);

  const std::vector<double> centers = third_octave_centers();
  const std::vector<double> edges = third_octave_edges(centers);
  const std::vector<double> weights = default_band_weights(centers);

  Chain natural;
  natural.bf = bf;
  Chain enhanced;
  enhanced.bf = bf;
  enhanced.enhance = true;

  std::vector<SrtConditionResult> results;
  for (SpatialCondition cond :
       {SpatialCondition::S0NCI, SpatialCondition::S0NHA, SpatialCondition::S0N360}) {
    const SpeechNoiseScenes scenes = make_condition_scenes(
        cond, cfg.ci_side, speech, cfg.noise_dur_s, fs, Rng::derive(cfg.seed, 0x6));

    SrtConditionResult r;
    r.condition = condition_name(cond);
    r.offset_natural_db =
        effective_snr(band_snr(scenes.speech, scenes.noise, hrtfs, natural, edges),
                      cfg.ci_side, weights)
            .better_ear_db;
    r.offset_enhanced_db =
        effective_snr(band_snr(scenes.speech, scenes.noise, hrtfs, enhanced, edges),
                      cfg.ci_side, weights)
            .better_ear_db;

    auto run_batch = [&](double offset, std::uint64_t stream) {
      std::vector<double> srts(static_cast<std::size_t>(cfg.runs_per_condition));
      const int jobs = std::max(1, cfg.jobs);
      auto worker = [&](int begin, int end) {
        for (int i = begin; i < end; ++i) {
          Rng rng(Rng::derive(cfg.seed, stream * 1000003ULL + static_cast<std::uint64_t>(i)));
          srts[static_cast<std::size_t>(i)] =
              run_adaptive_srt(cfg.track, cfg.listener, offset, rng);
        }
      };
      if (jobs == 1) {
        worker(0, cfg.runs_per_condition);
      } else {
        std::vector<std::thread> pool;
        const int chunk = (cfg.runs_per_condition + jobs - 1) / jobs;
        for (int j = 0; j < jobs; ++j) {
          const int begin = j * chunk;
          const int end = std::min(cfg.runs_per_condition, begin + chunk);
          if (begin < end) pool.emplace_back(worker, begin, end);
        }
        for (auto& t : pool) t.join();
      }
      return srts;
    };

    const auto cond_index = static_cast<std::uint64_t>(results.size());
    r.runs_natural_db = run_batch(r.offset_natural_db, 2 * cond_index);
    r.runs_enhanced_db = run_batch(r.offset_enhanced_db, 2 * cond_index + 1);

    auto mean = [](const std::vector<double>& v) {
      double s = 0.0;
      for (double x : v) s += x;
      return v.empty() ? 0.0 : s / static_cast<double>(v.size());
    };
    r.mean_srt_natural_db = mean(r.runs_natural_db);
    r.mean_srt_enhanced_db = mean(r.runs_enhanced_db);
    r.improvement_db = r.mean_srt_natural_db - r.mean_srt_enhanced_db;
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace hse
