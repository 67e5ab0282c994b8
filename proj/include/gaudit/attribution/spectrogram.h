// include/gaudit/attribution/spectrogram.h

// Copyright 2026 The gaudit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "gaudit/oracle/features.h"

namespace gaudit::attribution {

struct Waveform {
  std::vector<float> samples;  // mono, nominally in [-1, 1]
  double sample_rate = 16000.0;
};

struct FeatureOptions {
  std::size_t n_bins = 80;
  double target_sample_rate = 16000.0;
  double window_s = 0.025;
  double hop_s = 0.010;
  std::size_t fft_size = 512;
  double low_hz = 20.0;
  double high_hz = 0.0;  // <= 0 means Nyquist
  // Lower bound on log filterbank energies; silence maps exactly here.
  double log_floor = -23.025850929940457;  // log(1e-10)
};

// Frames that fit in `n_samples` without padding.
std::size_t NumFrames(std::size_t n_samples, std::size_t window, std::size_t hop);

// Windowed-sinc resampling.
std::vector<float> Resample(std::span<const float> samples, double from_rate, double to_rate);

// Triangular mel filters over the one-sided power spectrum; weights[b] has
// fft_size / 2 + 1 entries.
struct MelFilterbank {
  std::vector<double> centers_hz;
  std::vector<std::vector<double>> weights;
};
MelFilterbank MakeMelFilterbank(const FeatureOptions& opts);

// Log-mel filterbank features (Hamming window, per-frame DC removal).
// Audio above the target rate is resampled down; lower rates, empty audio
// and audio shorter than one window throw Error(kInvalidArgument).
oracle::AcousticFeatures ComputeFeatures(const Waveform& waveform,
                                         const FeatureOptions& opts = {});

// Reads 16-bit PCM or 32-bit float mono RIFF/WAVE.
Waveform ReadWav(const std::filesystem::path& path);
void WriteWav(const std::filesystem::path& path, const Waveform& waveform);

// Center frequency of a bin. Throws Error(kInvalidArgument) when out of range.
double BinToHz(std::span<const double> bin_centers_hz, std::size_t bin);

struct BandBins {
  std::vector<std::size_t> bins;
  std::vector<std::string> warnings;
};

// Bins whose center lies in [low_hz, high_hz]. An empty selection carries a
// warning. Throws Error(kInvalidArgument) unless low_hz < high_hz.
BandBins HzBandToBins(std::span<const double> bin_centers_hz, double low_hz, double high_hz);

// Default axis for feature matrices stored without one: 80 mel bins at
// 16 kHz with a 10 ms hop.
oracle::AcousticFeatures FeaturesFromDefaultAxis(Matrix matrix);

// Loads utterance features: ".wav" is run through ComputeFeatures, anything
// else is read as a CSV matrix on the default axis.
oracle::AcousticFeatures LoadFeatures(const std::filesystem::path& path,
                                      const FeatureOptions& opts = {});

}  // namespace gaudit::attribution
