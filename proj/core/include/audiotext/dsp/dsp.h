/* Copyright 2026 The audiotext Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef AUDIOTEXT_DSP_DSP_H_
#define AUDIOTEXT_DSP_DSP_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "audiotext/io/wav.h"
#include "audiotext/matrix.h"

namespace audiotext::dsp {

inline constexpr int kSampleRate = 22050;

// Spectrogram generation settings. Window and hop are sample counts.
struct DspConfig {
  int sample_rate = kSampleRate;
  int win_length = 1102;
  int hop_length = 275;
  int fft_size = 2048;
  int n_mels = 80;
  double f_min = 0.0;
  double f_max = 11025.0;
  double log_floor = 1e-5;

  int NumBins() const { return fft_size / 2 + 1; }

  // Throws Error(kInvalidArgument) when an invariant is violated.
  void Validate() const;

  // Single-line "key=value" serialization used by the dataset manifest.
  std::string ToString() const;
  static DspConfig FromString(std::string_view text);

  friend bool operator==(const DspConfig&, const DspConfig&) = default;
};

// Mono waveform. Every sample is finite and within [-1, 1].
class Waveform {
 public:
  explicit Waveform(std::vector<double> samples, int sample_rate = kSampleRate);

  const std::vector<double>& samples() const { return samples_; }
  int sample_rate() const { return sample_rate_; }
  std::size_t size() const { return samples_.size(); }

  // Multi-channel files are mixed down by channel mean.
  static Waveform FromWav(const io::WavData& wav);
  static Waveform Load(const std::filesystem::path& path);

  // PCM-16 mono file at this waveform's sample rate.
  io::WavData ToWav() const;

 private:
  std::vector<double> samples_;
  int sample_rate_;
};

// STFT frames x (fft_size / 2 + 1) bins.
struct ComplexSpectrogram {
  Matrix real;
  Matrix imag;

  std::size_t num_frames() const { return real.rows(); }
};

struct LinearSpectrogram {
  Matrix mag;
};

struct MelFilterbank {
  Matrix weights;               // [n_mels, fft_size / 2 + 1]
  std::vector<int> edge_bins;   // n_mels + 2 FFT bin indices
  std::vector<double> edge_hz;  // bin-centre frequency of each edge
};

enum class SpectrogramFormat { kMel, kLinear };

std::string_view FormatName(SpectrogramFormat format);
SpectrogramFormat ParseFormat(std::string_view name);

// Frames x n_mels feature matrix; produced for both spectrogram formats so
// the downstream width is fixed.
struct MelSpectrogram {
  Matrix frames;

  std::size_t num_frames() const { return frames.rows(); }
};

enum class WindowKind { kHann, kRectangular };

// Periodic Hann window, w[n] = 0.5 - 0.5 cos(2 pi n / N).
std::vector<double> HannWindow(int length);
std::vector<double> MakeWindow(WindowKind kind, int length);

// 1 + floor((num_samples - win_length) / hop_length), or 0 if too short.
std::size_t NumFrames(std::size_t num_samples, const DspConfig& cfg);

// Frame l covers samples [l*hop, l*hop + win), windowed and zero-padded to
// fft_size. Only the non-negative bins 0..fft_size/2 are kept.
ComplexSpectrogram Stft(const Waveform& w, const DspConfig& cfg,
                        WindowKind window = WindowKind::kHann);

LinearSpectrogram Magnitude(const ComplexSpectrogram& s);

// m = 2595 log10(1 + f / 700).
double HzToMel(double hz);
double MelToHz(double mel);

MelFilterbank BuildMelFilterbank(const DspConfig& cfg);

// Averages contiguous groups of linear bins down to n_mels columns.
Matrix GroupAverageBins(const Matrix& mag, int n_out);

// stft -> magnitude -> (mel filterbank | bin-group average) -> optional
// ln(max(x, log_floor)).
MelSpectrogram ComputeMelSpectrogram(const Waveform& w, const DspConfig& cfg,
                                     SpectrogramFormat format = SpectrogramFormat::kMel,
                                     bool log_compress = true);

// Teacher-forcing input: row 0 becomes zeros, row t takes input row t-1.
MelSpectrogram ShiftRight(const MelSpectrogram& z);

}  // namespace audiotext::dsp

#endif  // AUDIOTEXT_DSP_DSP_H_
