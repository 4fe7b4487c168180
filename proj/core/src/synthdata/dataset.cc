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

#include "audiotext/synthdata/dataset.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "audiotext/charset.h"
#include "audiotext/error.h"
#include "audiotext/io/melt.h"
#include "audiotext/io/pgm.h"
#include "audiotext/rng.h"
#include "audiotext/synthdata/words.h"

namespace audiotext::synth {
namespace fs = std::filesystem;
namespace {

constexpr double kMinStd = 1e-6;
constexpr const char* kHeaderTag = "#audiotext-manifest";
constexpr const char* kRecordColumns = "id\tlabel\tsplit\tvoice\tsample_seed\timage\taudio";

std::vector<std::string> SplitTabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return fields;
}

std::uint64_t ParseU64(const std::string& s, const std::string& ctx) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorKind::kFormat, ctx + ": bad integer '" + s + "'");
  }
  return v;
}

io::RawTensor VectorTensor(const std::vector<double>& v) {
  return io::RawTensor{{static_cast<std::uint32_t>(v.size())}, v};
}

std::vector<double> LoadVector(const fs::path& path, std::size_t expected) {
  io::RawTensor t = io::LoadMelt(path);
  if (t.shape.size() != 1 || t.shape[0] != expected) {
    throw Error(ErrorKind::kFormat, path.string() + ": expected a vector of length " +
                                        std::to_string(expected));
  }
  return std::move(t.data);
}

std::string RecordId(Split split, int index) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%s_%05d", std::string(SplitName(split)).c_str(), index);
  return buf;
}

}  // namespace

void DatasetManifest::Save(const fs::path& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::kIo, path.string() + ": cannot open for writing");
  out << kHeaderTag << '\t' << kManifestVersion << '\n';
  out << "global_seed\t" << global_seed << '\n';
  out << "charset\t" << charset << '\n';
  out << "voice\t" << voice << '\n';
  out << "dsp\t" << dsp.ToString() << '\n';
  out << "stats_mel_mean\t" << mel_mean_path << '\n';
  out << "stats_mel_std\t" << mel_std_path << '\n';
  out << "stats_linear_mean\t" << linear_mean_path << '\n';
  out << "stats_linear_std\t" << linear_std_path << '\n';
  out << "records\t" << records.size() << '\n';
  out << kRecordColumns << '\n';
  for (const auto& r : records) {
    out << r.id << '\t' << r.label << '\t' << SplitName(r.split) << '\t' << r.voice << '\t'
        << r.sample_seed << '\t' << r.image_path << '\t' << r.audio_path << '\n';
  }
  if (!out) throw Error(ErrorKind::kIo, path.string() + ": write failed");
}

DatasetManifest DatasetManifest::Load(const fs::path& path) {
  const std::string ctx = path.string();
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, ctx + ": cannot open manifest");
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorKind::kFormat, ctx + ": empty manifest");
  const auto header = SplitTabs(line);
  if (header.size() != 2 || header[0] != kHeaderTag) {
    throw Error(ErrorKind::kFormat, ctx + ": missing manifest header");
  }
  if (ParseU64(header[1], ctx) != kManifestVersion) {
    throw Error(ErrorKind::kFormat, ctx + ": unsupported manifest version " + header[1]);
  }

  std::map<std::string, std::string> kv;
  std::size_t n_records = 0;
  while (std::getline(in, line)) {
    const auto fields = SplitTabs(line);
    if (fields.size() != 2) throw Error(ErrorKind::kFormat, ctx + ": malformed line '" + line + "'");
    if (fields[0] == "records") {
      n_records = ParseU64(fields[1], ctx);
      break;
    }
    kv[fields[0]] = fields[1];
  }
  auto get = [&](const std::string& key) {
    auto it = kv.find(key);
    if (it == kv.end()) throw Error(ErrorKind::kFormat, ctx + ": missing key " + key);
    return it->second;
  };

  DatasetManifest m;
  m.global_seed = ParseU64(get("global_seed"), ctx);
  m.charset = get("charset");
  m.voice = get("voice");
  m.dsp = dsp::DspConfig::FromString(get("dsp"));
  m.mel_mean_path = get("stats_mel_mean");
  m.mel_std_path = get("stats_mel_std");
  m.linear_mean_path = get("stats_linear_mean");
  m.linear_std_path = get("stats_linear_std");

  if (!std::getline(in, line) || line != kRecordColumns) {
    throw Error(ErrorKind::kFormat, ctx + ": missing record column header");
  }
  m.records.reserve(n_records);
  for (std::size_t i = 0; i < n_records; ++i) {
    if (!std::getline(in, line)) throw Error(ErrorKind::kFormat, ctx + ": truncated records");
    const auto f = SplitTabs(line);
    if (f.size() != 7) throw Error(ErrorKind::kFormat, ctx + ": malformed record '" + line + "'");
    SampleRecord r{f[0], f[1], ParseSplit(f[2]), f[3], ParseU64(f[4], ctx), f[5], f[6]};
    if (r.label.empty() || !InCharset(r.label)) {
      throw Error(ErrorKind::kFormat, ctx + ": record " + r.id + " has an invalid label");
    }
    m.records.push_back(std::move(r));
  }
  std::vector<std::string> ids;
  for (const auto& r : m.records) ids.push_back(r.id);
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) {
    throw Error(ErrorKind::kFormat, ctx + ": duplicate record id");
  }
  return m;
}

StatsAccumulator::StatsAccumulator(int n_bins)
    : sum_(static_cast<std::size_t>(n_bins), 0.0), sum_sq_(static_cast<std::size_t>(n_bins), 0.0) {}

void StatsAccumulator::Add(const dsp::MelSpectrogram& spec) {
  if (spec.frames.cols() != sum_.size()) {
    throw Error(ErrorKind::kShapeMismatch, "stats accumulator: bin count mismatch");
  }
  for (std::size_t t = 0; t < spec.frames.rows(); ++t) {
    for (std::size_t j = 0; j < sum_.size(); ++j) {
      const double v = spec.frames(t, j);
      sum_[j] += v;
      sum_sq_[j] += v * v;
    }
  }
  count_ += spec.frames.rows();
}

NormalizationStats StatsAccumulator::Finish() const {
  if (count_ == 0) throw Error(ErrorKind::kState, "no frames accumulated for statistics");
  NormalizationStats stats{std::vector<double>(sum_.size()), std::vector<double>(sum_.size())};
  const double n = static_cast<double>(count_);
  for (std::size_t j = 0; j < sum_.size(); ++j) {
    const double mean = sum_[j] / n;
    const double var = std::max(sum_sq_[j] / n - mean * mean, 0.0);
    stats.mean[j] = mean;
    stats.stddev[j] = std::max(std::sqrt(var), kMinStd);
  }
  return stats;
}

dsp::Waveform QuantizedSpeech(std::string_view label, const VoiceProfile& voice) {
  return dsp::Waveform::FromWav(SynthSpeech(label, voice).ToWav());
}

dsp::MelSpectrogram NormalizedTarget(const dsp::Waveform& wave, const dsp::DspConfig& cfg,
                                     dsp::SpectrogramFormat format,
                                     const NormalizationStats& stats) {
  dsp::MelSpectrogram spec = dsp::ComputeMelSpectrogram(wave, cfg, format, true);
  if (stats.mean.size() != spec.frames.cols() || stats.stddev.size() != spec.frames.cols()) {
    throw Error(ErrorKind::kShapeMismatch, "normalization stats do not match spectrogram width");
  }
  for (std::size_t t = 0; t < spec.frames.rows(); ++t) {
    for (std::size_t j = 0; j < spec.frames.cols(); ++j) {
      spec.frames(t, j) = (spec.frames(t, j) - stats.mean[j]) / stats.stddev[j];
    }
  }
  return spec;
}

DatasetManifest GenerateDataset(const GenerateConfig& cfg) {
  cfg.dsp.Validate();
  if (cfg.n_train < 1 || cfg.n_test_per_split < 0) {
    throw Error(ErrorKind::kInvalidArgument, "need n_train >= 1 and n_test_per_split >= 0");
  }
  const VoiceProfile& voice = GetVoiceProfile(cfg.voice);
  const fs::path root = cfg.out_dir;
  std::error_code ec;
  for (const char* sub : {"images", "audio", "stats"}) {
    fs::create_directories(root / sub, ec);
    if (ec) throw Error(ErrorKind::kIo, (root / sub).string() + ": " + ec.message());
  }

  DatasetManifest m;
  m.global_seed = cfg.global_seed;
  m.charset = std::string(kCharset);
  m.voice = std::string(voice.name);
  m.dsp = cfg.dsp;
  m.mel_mean_path = "stats/mel_mean.melt";
  m.mel_std_path = "stats/mel_std.melt";
  m.linear_mean_path = "stats/linear_mean.melt";
  m.linear_std_path = "stats/linear_std.melt";

  const auto words = WordList();
  StatsAccumulator mel_acc(cfg.dsp.n_mels);
  StatsAccumulator lin_acc(cfg.dsp.n_mels);

  struct Plan {
    Split split;
    int count;
  };
  const Plan plans[] = {{Split::kTrain, cfg.n_train},
                        {Split::kRegular, cfg.n_test_per_split},
                        {Split::kOccluded, cfg.n_test_per_split},
                        {Split::kNoisy, cfg.n_test_per_split}};
  std::uint64_t global_index = 0;
  for (const auto& plan : plans) {
    for (int i = 0; i < plan.count; ++i, ++global_index) {
      SampleRecord r;
      r.id = RecordId(plan.split, i);
      r.split = plan.split;
      r.voice = std::string(voice.name);
      r.sample_seed = DeriveSeed(cfg.global_seed, global_index);
      r.image_path = "images/" + r.id + ".pgm";
      r.audio_path = "audio/" + r.id + ".wav";

      Rng rng(r.sample_seed);
      r.label = std::string(words[rng.UniformInt(words.size())]);
      const CorruptionSpec corruption = plan.split == Split::kTrain
                                            ? CorruptionSpec::SampleTrain(rng)
                                            : CorruptionSpec::ForTestSplit(plan.split);
      const Matrix image = RenderWordImage(r.label, corruption, rng.NextU64());
      io::WritePgm(root / r.image_path, ToGray8(image));

      const io::WavData wav = SynthSpeech(r.label, voice).ToWav();
      io::WriteWav(root / r.audio_path, wav);
      if (plan.split == Split::kTrain) {
        const dsp::Waveform decoded = dsp::Waveform::FromWav(wav);
        mel_acc.Add(dsp::ComputeMelSpectrogram(decoded, cfg.dsp, dsp::SpectrogramFormat::kMel));
        lin_acc.Add(
            dsp::ComputeMelSpectrogram(decoded, cfg.dsp, dsp::SpectrogramFormat::kLinear));
      }
      m.records.push_back(std::move(r));
    }
  }

  const NormalizationStats mel_stats = mel_acc.Finish();
  const NormalizationStats lin_stats = lin_acc.Finish();
  io::SaveMelt(root / m.mel_mean_path, VectorTensor(mel_stats.mean));
  io::SaveMelt(root / m.mel_std_path, VectorTensor(mel_stats.stddev));
  io::SaveMelt(root / m.linear_mean_path, VectorTensor(lin_stats.mean));
  io::SaveMelt(root / m.linear_std_path, VectorTensor(lin_stats.stddev));
  m.Save(root / kManifestFileName);
  return m;
}

fs::path ResolveManifestPath(const fs::path& path) {
  if (fs::is_directory(path)) return path / kManifestFileName;
  return path;
}

Dataset Dataset::Load(const fs::path& manifest_path, const dsp::DspConfig& expected) {
  Dataset ds;
  const fs::path file = ResolveManifestPath(manifest_path);
  ds.manifest_ = DatasetManifest::Load(file);
  ds.root_ = file.parent_path();
  if (ds.manifest_.charset != kCharset) {
    throw Error(ErrorKind::kFormat, file.string() + ": charset mismatch");
  }
  if (!(ds.manifest_.dsp == expected)) {
    throw Error(ErrorKind::kFormat, file.string() + ": dsp config mismatch (manifest '" +
                                        ds.manifest_.dsp.ToString() + "', expected '" +
                                        expected.ToString() + "')");
  }
  for (const auto& r : ds.manifest_.records) {
    if (!fs::exists(ds.root_ / r.image_path)) {
      throw Error(ErrorKind::kIo, "record " + r.id + ": missing image file " + r.image_path);
    }
    if (!fs::exists(ds.root_ / r.audio_path)) {
      throw Error(ErrorKind::kIo, "record " + r.id + ": missing audio file " + r.audio_path);
    }
  }
  const auto bins = static_cast<std::size_t>(expected.n_mels);
  ds.mel_stats_ = {LoadVector(ds.root_ / ds.manifest_.mel_mean_path, bins),
                   LoadVector(ds.root_ / ds.manifest_.mel_std_path, bins)};
  ds.linear_stats_ = {LoadVector(ds.root_ / ds.manifest_.linear_mean_path, bins),
                      LoadVector(ds.root_ / ds.manifest_.linear_std_path, bins)};
  return ds;
}

std::vector<const SampleRecord*> Dataset::Records(Split split) const {
  std::vector<const SampleRecord*> out;
  for (const auto& r : manifest_.records) {
    if (r.split == split) out.push_back(&r);
  }
  return out;
}

const NormalizationStats& Dataset::Stats(dsp::SpectrogramFormat format) const {
  return format == dsp::SpectrogramFormat::kMel ? mel_stats_ : linear_stats_;
}

Matrix Dataset::LoadImage(const SampleRecord& record) const {
  const fs::path path = root_ / record.image_path;
  if (!fs::exists(path)) {
    throw Error(ErrorKind::kIo, "record " + record.id + ": missing image file " + record.image_path);
  }
  const io::GrayImage8 img = io::ReadPgm(path);
  if (img.height != kImageHeight || img.width != kImageWidth) {
    throw Error(ErrorKind::kFormat, "record " + record.id + ": image is not 32x128");
  }
  return FromGray8(img);
}

dsp::Waveform Dataset::LoadAudio(const SampleRecord& record) const {
  const fs::path path = root_ / record.audio_path;
  if (!fs::exists(path)) {
    throw Error(ErrorKind::kIo, "record " + record.id + ": missing audio file " + record.audio_path);
  }
  return dsp::Waveform::Load(path);
}

dsp::MelSpectrogram Dataset::LoadMelTarget(const SampleRecord& record,
                                           dsp::SpectrogramFormat format) const {
  return NormalizedTarget(LoadAudio(record), manifest_.dsp, format, Stats(format));
}

}  // namespace audiotext::synth
