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

#ifndef AUDIOTEXT_SYNTHDATA_DATASET_H_
#define AUDIOTEXT_SYNTHDATA_DATASET_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "audiotext/dsp/dsp.h"
#include "audiotext/matrix.h"
#include "audiotext/synthdata/image.h"
#include "audiotext/synthdata/speech.h"

namespace audiotext::synth {

inline constexpr int kManifestVersion = 1;
inline constexpr const char* kManifestFileName = "manifest.tsv";

struct SampleRecord {
  std::string id;
  std::string label;
  Split split = Split::kTrain;
  std::string voice;
  std::uint64_t sample_seed = 0;
  std::string image_path;  // relative to the dataset root
  std::string audio_path;  // relative to the dataset root

  friend bool operator==(const SampleRecord&, const SampleRecord&) = default;
};

// Per-bin mean/std of log spectrogram frames over the train split.
struct NormalizationStats {
  std::vector<double> mean;
  std::vector<double> stddev;
};

// Line-oriented tab-separated manifest with a versioned header. Stats are
// stored as MELT files referenced by relative path.
struct DatasetManifest {
  std::uint64_t global_seed = 0;
  std::string charset;
  std::string voice;
  dsp::DspConfig dsp;
  std::string mel_mean_path;
  std::string mel_std_path;
  std::string linear_mean_path;
  std::string linear_std_path;
  std::vector<SampleRecord> records;

  void Save(const std::filesystem::path& path) const;
  static DatasetManifest Load(const std::filesystem::path& path);
};

struct GenerateConfig {
  std::filesystem::path out_dir;
  std::uint64_t global_seed = 42;
  int n_train = 2000;
  int n_test_per_split = 200;
  std::string voice = "female_a";
  dsp::DspConfig dsp;
};

// Accumulates per-bin statistics in a fixed order.
class StatsAccumulator {
 public:
  explicit StatsAccumulator(int n_bins);
  void Add(const dsp::MelSpectrogram& spec);
  NormalizationStats Finish() const;

 private:
  std::vector<double> sum_;
  std::vector<double> sum_sq_;
  std::size_t count_ = 0;
};

// Speech for `label` after a PCM-16 round trip, i.e. exactly what a WAV
// written by GenerateDataset decodes to.
dsp::Waveform QuantizedSpeech(std::string_view label, const VoiceProfile& voice);

// Log spectrogram normalized per bin: (x - mean) / std.
dsp::MelSpectrogram NormalizedTarget(const dsp::Waveform& wave, const dsp::DspConfig& cfg,
                                     dsp::SpectrogramFormat format,
                                     const NormalizationStats& stats);

// Writes images/, audio/, stats/ and manifest.tsv under cfg.out_dir.
DatasetManifest GenerateDataset(const GenerateConfig& cfg);

// A loaded manifest with lazy access to its files.
class Dataset {
 public:
  // `manifest_path` may be the manifest file or the directory holding it.
  // Throws when a referenced file is missing (naming the record id) or when
  // the stored dsp config differs from `expected`.
  static Dataset Load(const std::filesystem::path& manifest_path,
                      const dsp::DspConfig& expected = dsp::DspConfig{});

  const DatasetManifest& manifest() const { return manifest_; }
  const std::filesystem::path& root() const { return root_; }

  std::vector<const SampleRecord*> Records(Split split) const;
  const NormalizationStats& Stats(dsp::SpectrogramFormat format) const;

  Matrix LoadImage(const SampleRecord& record) const;
  dsp::Waveform LoadAudio(const SampleRecord& record) const;
  dsp::MelSpectrogram LoadMelTarget(const SampleRecord& record,
                                    dsp::SpectrogramFormat format) const;

 private:
  DatasetManifest manifest_;
  std::filesystem::path root_;
  NormalizationStats mel_stats_;
  NormalizationStats linear_stats_;
};

std::filesystem::path ResolveManifestPath(const std::filesystem::path& path);

}  // namespace audiotext::synth

#endif  // AUDIOTEXT_SYNTHDATA_DATASET_H_
