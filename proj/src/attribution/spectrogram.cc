// src/attribution/spectrogram.cc

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

#include "gaudit/attribution/spectrogram.h"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <mutex>
#include <numbers>

#include "gaudit/common/error.h"
#include "gaudit/common/io.h"

namespace gaudit::attribution {

namespace {

[[noreturn]] void Invalid(const std::string& msg) { throw Error(ErrorCode::kInvalidArgument, msg); }

// FFTW planning is not thread-safe.
std::mutex& FftwPlanMutex() {
  static std::mutex mu;
  return mu;
}

class RealFft {
 public:
  explicit RealFft(std::size_t n) : n_(n) {
    in_ = fftw_alloc_real(n);
    out_ = fftw_alloc_complex(n / 2 + 1);
    std::lock_guard lock(FftwPlanMutex());
    plan_ = fftw_plan_dft_r2c_1d(static_cast<int>(n), in_, out_, FFTW_ESTIMATE);
  }
  ~RealFft() {
    {
      std::lock_guard lock(FftwPlanMutex());
      fftw_destroy_plan(plan_);
    }
    fftw_free(in_);
    fftw_free(out_);
  }
  RealFft(const RealFft&) = delete;
  RealFft& operator=(const RealFft&) = delete;

  // Power spectrum of `frame`, zero-padded to n.
  void PowerSpectrum(std::span<const double> frame, std::vector<double>& power) {
    std::fill(in_, in_ + n_, 0.0);
    std::copy(frame.begin(), frame.end(), in_);
    fftw_execute(plan_);
    power.resize(n_ / 2 + 1);
    for (std::size_t k = 0; k < power.size(); ++k) {
      power[k] = out_[k][0] * out_[k][0] + out_[k][1] * out_[k][1];
    }
  }

 private:
  std::size_t n_;
  double* in_ = nullptr;
  fftw_complex* out_ = nullptr;
  fftw_plan plan_ = nullptr;
};

double Sinc(double x) {
  if (x == 0.0) return 1.0;
  const double px = std::numbers::pi * x;
  return std::sin(px) / px;
}

template <typename T>
T ReadLe(const std::string& buf, std::size_t pos) {
  T v;
  std::memcpy(&v, buf.data() + pos, sizeof(T));
  return v;
}

template <typename T>
void AppendLe(std::string& buf, T v) {
  char bytes[sizeof(T)];
  std::memcpy(bytes, &v, sizeof(T));
  buf.append(bytes, sizeof(T));
}

}  // namespace

std::size_t NumFrames(std::size_t n_samples, std::size_t window, std::size_t hop) {
  if (n_samples < window || hop == 0) return 0;
  return (n_samples - window) / hop + 1;
}

std::vector<float> Resample(std::span<const float> samples, double from_rate, double to_rate) {
  if (!(from_rate > 0.0) || !(to_rate > 0.0)) Invalid("sample rates must be positive");
  if (from_rate == to_rate) return {samples.begin(), samples.end()};
  // Low-pass at 95 % of the lower Nyquist, Hann-windowed sinc with
  // kZeros zero crossings on each side.
  constexpr int kZeros = 16;
  const double cutoff = 0.95 * 0.5 * std::min(from_rate, to_rate);
  const double half_width = kZeros / (2.0 * cutoff);  // seconds
  const auto n_out = static_cast<std::size_t>(
      std::floor(static_cast<double>(samples.size()) * to_rate / from_rate));
  std::vector<float> out(n_out);
  for (std::size_t n = 0; n < n_out; ++n) {
    const double t = static_cast<double>(n) / to_rate;
    const auto first = static_cast<long>(std::ceil((t - half_width) * from_rate));
    const auto last = static_cast<long>(std::floor((t + half_width) * from_rate));
    double acc = 0.0;
    for (long k = std::max(0L, first);
         k <= std::min(last, static_cast<long>(samples.size()) - 1); ++k) {
      const double dt = t - static_cast<double>(k) / from_rate;
      const double window = 0.5 + 0.5 * std::cos(std::numbers::pi * dt / half_width);
      acc += samples[static_cast<std::size_t>(k)] * 2.0 * cutoff / from_rate *
             Sinc(2.0 * cutoff * dt) * window;
    }
    out[n] = static_cast<float>(acc);
  }
  return out;
}

MelFilterbank MakeMelFilterbank(const FeatureOptions& opts) {
  const double sr = opts.target_sample_rate;
  const double high = opts.high_hz > 0.0 ? opts.high_hz : sr / 2.0;
  const std::size_t n_fft_bins = opts.fft_size / 2 + 1;
  const double mel_low = oracle::HzToMel(opts.low_hz);
  const double step = (oracle::HzToMel(high) - mel_low) / static_cast<double>(opts.n_bins + 1);

  MelFilterbank fb;
  fb.centers_hz = oracle::MelBinCenters(
      {.n_bins = opts.n_bins, .sample_rate = sr, .low_hz = opts.low_hz, .high_hz = high});
  fb.weights.assign(opts.n_bins, std::vector<double>(n_fft_bins, 0.0));
  for (std::size_t b = 0; b < opts.n_bins; ++b) {
    const double left = mel_low + step * static_cast<double>(b);
    const double center = left + step;
    const double right = center + step;
    for (std::size_t k = 0; k < n_fft_bins; ++k) {
      const double mel = oracle::HzToMel(static_cast<double>(k) * sr / static_cast<double>(opts.fft_size));
      if (mel > left && mel < right) {
        fb.weights[b][k] = mel <= center ? (mel - left) / step : (right - mel) / step;
      }
    }
  }
  return fb;
}

oracle::AcousticFeatures ComputeFeatures(const Waveform& waveform, const FeatureOptions& opts) {
  if (waveform.samples.empty()) Invalid("cannot compute features of empty audio");
  if (waveform.sample_rate < opts.target_sample_rate) {
    Invalid("sample rate " + std::to_string(waveform.sample_rate) + " Hz is below the required " +
            std::to_string(opts.target_sample_rate) + " Hz");
  }
  const std::vector<float> samples =
      waveform.sample_rate == opts.target_sample_rate
          ? waveform.samples
          : Resample(waveform.samples, waveform.sample_rate, opts.target_sample_rate);

  const auto window = static_cast<std::size_t>(std::lround(opts.window_s * opts.target_sample_rate));
  const auto hop = static_cast<std::size_t>(std::lround(opts.hop_s * opts.target_sample_rate));
  if (window > opts.fft_size) Invalid("window longer than FFT size");
  const std::size_t n_frames = NumFrames(samples.size(), window, hop);
  if (n_frames == 0) Invalid("audio shorter than one analysis window");

  std::vector<double> hamming(window);
  for (std::size_t i = 0; i < window; ++i) {
    hamming[i] = 0.54 - 0.46 * std::cos(2.0 * std::numbers::pi * static_cast<double>(i) /
                                        static_cast<double>(window - 1));
  }
  const auto fb = MakeMelFilterbank(opts);

  oracle::AcousticFeatures out;
  out.matrix = Matrix(opts.n_bins, n_frames);
  out.frame_hop_s = static_cast<double>(hop) / opts.target_sample_rate;
  out.bin_centers_hz = fb.centers_hz;

  RealFft fft(opts.fft_size);
  std::vector<double> frame(window), power;
  for (std::size_t f = 0; f < n_frames; ++f) {
    double mean = 0.0;
    for (std::size_t i = 0; i < window; ++i) {
      frame[i] = samples[f * hop + i];
      mean += frame[i];
    }
    mean /= static_cast<double>(window);
    for (std::size_t i = 0; i < window; ++i) frame[i] = (frame[i] - mean) * hamming[i];
    fft.PowerSpectrum(frame, power);
    for (std::size_t b = 0; b < opts.n_bins; ++b) {
      double e = 0.0;
      const auto& w = fb.weights[b];
      for (std::size_t k = 0; k < power.size(); ++k) e += w[k] * power[k];
      out.matrix(b, f) = std::max(std::log(e), opts.log_floor);
    }
  }
  return out;
}

Waveform ReadWav(const std::filesystem::path& path) {
  const std::string buf = io::ReadFile(path);
  auto bad = [&](const std::string& why) -> Error {
    return Error(ErrorCode::kInvalidArgument, path.string() + ": " + why);
  };
  if (buf.size() < 12 || buf.compare(0, 4, "RIFF") != 0 || buf.compare(8, 4, "WAVE") != 0) {
    throw bad("not a RIFF/WAVE file");
  }
  std::uint16_t format = 0, channels = 0, bits = 0;
  std::uint32_t rate = 0;
  std::size_t pos = 12;
  bool have_fmt = false;
  while (pos + 8 <= buf.size()) {
    const std::string id = buf.substr(pos, 4);
    const auto size = ReadLe<std::uint32_t>(buf, pos + 4);
    const std::size_t body = pos + 8;
    if (body + size > buf.size()) throw bad("truncated chunk '" + id + "'");
    if (id == "fmt ") {
      format = ReadLe<std::uint16_t>(buf, body);
      channels = ReadLe<std::uint16_t>(buf, body + 2);
      rate = ReadLe<std::uint32_t>(buf, body + 4);
      bits = ReadLe<std::uint16_t>(buf, body + 14);
      have_fmt = true;
    } else if (id == "data") {
      if (!have_fmt) throw bad("data chunk before fmt chunk");
      if (channels != 1) throw bad("expected mono audio, found " + std::to_string(channels) + " channels");
      Waveform w;
      w.sample_rate = rate;
      if (format == 1 && bits == 16) {
        for (std::size_t i = 0; i + 2 <= size; i += 2) {
          w.samples.push_back(static_cast<float>(ReadLe<std::int16_t>(buf, body + i)) / 32768.0f);
        }
      } else if (format == 3 && bits == 32) {
        for (std::size_t i = 0; i + 4 <= size; i += 4) w.samples.push_back(ReadLe<float>(buf, body + i));
      } else {
        throw bad("unsupported sample format");
      }
      return w;
    }
    pos = body + size + (size & 1);
  }
  throw bad("no data chunk");
}

void WriteWav(const std::filesystem::path& path, const Waveform& waveform) {
  const auto rate = static_cast<std::uint32_t>(std::lround(waveform.sample_rate));
  const auto data_size = static_cast<std::uint32_t>(waveform.samples.size() * 2);
  std::string buf = "RIFF";
  AppendLe<std::uint32_t>(buf, 36 + data_size);
  buf += "WAVEfmt ";
  AppendLe<std::uint32_t>(buf, 16);
  AppendLe<std::uint16_t>(buf, 1);
  AppendLe<std::uint16_t>(buf, 1);
  AppendLe<std::uint32_t>(buf, rate);
  AppendLe<std::uint32_t>(buf, rate * 2);
  AppendLe<std::uint16_t>(buf, 2);
  AppendLe<std::uint16_t>(buf, 16);
  buf += "data";
  AppendLe<std::uint32_t>(buf, data_size);
  for (float s : waveform.samples) {
    const float clamped = std::clamp(s, -1.0f, 1.0f);
    AppendLe<std::int16_t>(buf, static_cast<std::int16_t>(std::lround(clamped * 32767.0f)));
  }
  io::WriteFile(path, buf);
}

double BinToHz(std::span<const double> bin_centers_hz, std::size_t bin) {
  if (bin >= bin_centers_hz.size()) {
    Invalid("bin " + std::to_string(bin) + " out of range for " +
            std::to_string(bin_centers_hz.size()) + " bins");
  }
  return bin_centers_hz[bin];
}

BandBins HzBandToBins(std::span<const double> bin_centers_hz, double low_hz, double high_hz) {
  if (!(low_hz < high_hz)) Invalid("band must satisfy low < high");
  BandBins out;
  for (std::size_t b = 0; b < bin_centers_hz.size(); ++b) {
    if (bin_centers_hz[b] >= low_hz && bin_centers_hz[b] <= high_hz) out.bins.push_back(b);
  }
  if (out.bins.empty()) {
    out.warnings.push_back("band [" + io::FormatDouble(low_hz) + ", " + io::FormatDouble(high_hz) +
                           "] Hz contains no bin center");
  }
  return out;
}

oracle::AcousticFeatures FeaturesFromDefaultAxis(Matrix matrix) {
  oracle::AcousticFeatures f;
  f.bin_centers_hz = oracle::MelBinCenters({.n_bins = matrix.rows()});
  f.frame_hop_s = 0.01;
  f.matrix = std::move(matrix);
  f.Validate();
  return f;
}

oracle::AcousticFeatures LoadFeatures(const std::filesystem::path& path, const FeatureOptions& opts) {
  if (path.extension() == ".wav" || path.extension() == ".WAV") {
    return ComputeFeatures(ReadWav(path), opts);
  }
  return FeaturesFromDefaultAxis(io::ParseCsvMatrix(io::ReadFile(path)));
}

}  // namespace gaudit::attribution
