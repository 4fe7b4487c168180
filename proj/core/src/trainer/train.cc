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

#include "audiotext/trainer/train.h"

#include <cmath>
#include <fstream>
#include <iterator>
#include <limits>

#include <fmt/format.h>

#include "audiotext/audio/audio_decoder.h"
#include "audiotext/audio/mel_loss.h"
#include "audiotext/autograd/adam.h"
#include "audiotext/autograd/ops.h"
#include "audiotext/autograd/tape.h"
#include "audiotext/error.h"
#include "audiotext/inference/model_io.h"
#include "audiotext/synthdata/speech.h"
#include "audiotext/trainer/checkpoint.h"

namespace audiotext::train {
namespace {

namespace fs = std::filesystem;

std::uint64_t Fnv1a(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) h = (h ^ c) * 0x100000001b3ull;
  return h;
}

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot read " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

struct AudioBatch {
  ag::Tensor shifted;  // [B, T, F]
  ag::Tensor target;   // [B, T, F]
  ag::Tensor mask;     // [B, T], 1 for real frames
};

AudioBatch MakeAudioBatch(const std::vector<Matrix>& targets, const std::vector<std::size_t>& idx) {
  std::size_t t_max = 0;
  const std::size_t width = targets[idx.front()].cols();
  for (std::size_t i : idx) t_max = std::max(t_max, targets[i].rows());
  const std::size_t b_n = idx.size();
  std::vector<double> shifted(b_n * t_max * width, 0.0), target(b_n * t_max * width, 0.0);
  std::vector<double> mask(b_n * t_max, 0.0);
  for (std::size_t b = 0; b < b_n; ++b) {
    const Matrix& z = targets[idx[b]];
    double* tgt = target.data() + b * t_max * width;
    double* sh = shifted.data() + b * t_max * width;
    std::copy(z.data().begin(), z.data().end(), tgt);
    if (z.rows() > 1) std::copy_n(z.data().begin(), (z.rows() - 1) * width, sh + width);
    std::fill_n(mask.begin() + b * t_max, z.rows(), 1.0);
  }
  return {ag::Tensor::FromData({b_n, t_max, width}, std::move(shifted)),
          ag::Tensor::FromData({b_n, t_max, width}, std::move(target)),
          ag::Tensor::FromData({b_n, t_max}, std::move(mask))};
}

std::vector<std::size_t> Shuffled(std::size_t n, Rng& rng) {
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng.UniformInt(i)]);
  return order;
}

}  // namespace

ImageData LoadImageData(const synth::Dataset& dataset) {
  ImageData data;
  for (const synth::SampleRecord* r : dataset.Records(synth::Split::kTrain)) {
    data.train_images.push_back(dataset.LoadImage(*r));
    data.train_labels.push_back(r->label);
  }
  if (data.train_images.empty()) throw Error(ErrorKind::kInvalidArgument, "dataset has no train split");
  for (synth::Split s : {synth::Split::kRegular, synth::Split::kOccluded, synth::Split::kNoisy}) {
    data.test_splits.push_back(inference::LoadSplit(dataset, s));
  }
  data.fingerprint = Fnv1a(ReadFile(dataset.root() / synth::kManifestFileName));
  return data;
}

std::vector<Matrix> LoadAudioTargets(const synth::Dataset& dataset, dsp::SpectrogramFormat format,
                                     const std::string& voice) {
  const auto records = dataset.Records(synth::Split::kTrain);
  std::vector<Matrix> out;
  if (voice.empty() || voice == dataset.manifest().voice) {
    for (const synth::SampleRecord* r : records) {
      out.push_back(dataset.LoadMelTarget(*r, format).frames);
    }
    return out;
  }
  const synth::VoiceProfile& profile = synth::GetVoiceProfile(voice);
  const dsp::DspConfig& cfg = dataset.manifest().dsp;
  std::vector<dsp::Waveform> waves;
  synth::StatsAccumulator acc(cfg.n_mels);
  for (const synth::SampleRecord* r : records) {
    waves.push_back(synth::QuantizedSpeech(r->label, profile));
    acc.Add(dsp::ComputeMelSpectrogram(waves.back(), cfg, format, true));
  }
  const synth::NormalizationStats stats = acc.Finish();
  for (const auto& w : waves) out.push_back(synth::NormalizedTarget(w, cfg, format, stats).frames);
  return out;
}

TrainResult TrainRun(const TrainConfig& cfg, const ImageData& data,
                     const std::vector<Matrix>* targets, const ProgressFn& progress) {
  cfg.Validate();
  const std::size_t n = data.train_images.size();
  if (cfg.with_audio && (targets == nullptr || targets->size() != n)) {
    throw Error(ErrorKind::kInvalidArgument, "audio targets missing or misaligned with images");
  }
  std::vector<rec::LabelSeq> labels;
  for (const auto& l : data.train_labels) labels.push_back(rec::EncodeLabel(l));

  Rng rec_rng(DeriveSeed(cfg.seed, 1));
  rec::Recognizer recognizer({}, rec_rng);
  nn::ParameterList params = recognizer.Parameters(std::string(inference::kRecognizerPrefix));

  std::unique_ptr<audio::AudioDecoder> decoder;
  if (cfg.with_audio) {
    Rng audio_rng(DeriveSeed(cfg.seed, 2));
    audio::AudioDecoderConfig dcfg;
    dcfg.n_mels = targets->front().cols();
    dcfg.n_layers = cfg.n_layers;
    decoder = std::make_unique<audio::AudioDecoder>(dcfg, audio_rng);
    decoder->CollectParameters(std::string(inference::kAudioPrefix), params);
  }
  ag::Adam adam(nn::Tensors(params), {.lr = cfg.lr});
  Rng shuffle_rng(DeriveSeed(cfg.seed, 3));

  TrainResult result;
  for (int epoch = 1; epoch <= cfg.epochs; ++epoch) {
    const auto order = Shuffled(n, shuffle_rng);
    double sum_rec = 0.0, sum_mel = 0.0, sum_loss = 0.0;
    std::size_t steps = 0;
    for (std::size_t begin = 0; begin < n; begin += cfg.batch_size, ++steps) {
      const std::vector<std::size_t> idx(order.begin() + begin,
                                         order.begin() + std::min(n, begin + cfg.batch_size));
      std::vector<const Matrix*> images;
      std::vector<rec::LabelSeq> batch_labels;
      std::vector<double> inv_len;
      for (std::size_t i : idx) {
        images.push_back(&data.train_images[i]);
        batch_labels.push_back(labels[i]);
        inv_len.push_back(1.0 / static_cast<double>(labels[i].size()));
      }
      try {
        ag::Tape tape;
        ag::TapeScope scope(tape);
        const auto out = recognizer.Forward(rec::StackImages(images));
        const ag::Tensor l_rec = ag::Mean(ag::Mul(rec::CtcLossBatch(out.log_probs, batch_labels),
                                                  ag::Tensor::FromData({idx.size()}, inv_len)));
        ag::Tensor loss = l_rec;
        if (decoder) {
          const AudioBatch ab = MakeAudioBatch(*targets, idx);
          const ag::Tensor l_mel =
              audio::MaskedL1Loss(decoder->Forward(ab.shifted, out.embeddings), ab.target, &ab.mask);
          loss = JointLoss(l_rec, l_mel, cfg.alpha);
          sum_mel += l_mel.item();
        }
        if (!std::isfinite(loss.item())) throw Error(ErrorKind::kNumeric, "non-finite loss");
        sum_rec += l_rec.item();
        sum_loss += loss.item();
        adam.ZeroGrad();
        tape.Backward(loss);
        adam.Step();
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::kNumeric) throw;
        throw Error(ErrorKind::kNumeric,
                    fmt::format("epoch {} step {}: {}", epoch, steps + 1, e.what()));
      }
    }
    EpochRow row;
    row.epoch = epoch;
    const double s = static_cast<double>(steps);
    row.l_rec = sum_rec / s;
    row.l_mel = decoder ? sum_mel / s : std::numeric_limits<double>::quiet_NaN();
    row.loss = sum_loss / s;
    double* acc[] = {&row.acc_regular, &row.acc_occluded, &row.acc_noisy};
    for (std::size_t i = 0; i < data.test_splits.size() && i < 3; ++i) {
      *acc[i] = inference::EvaluateSplit(recognizer, data.test_splits[i]).accuracy;
    }
    result.log.Append(row);
    if (progress) progress(row);
  }
  result.checkpoint = BuildCheckpoint(params, adam, {cfg.epochs, cfg.Snapshot()});
  return result;
}

TrainResult TrainAndSave(const TrainConfig& cfg, const ProgressFn& progress) {
  cfg.Validate();
  const synth::Dataset dataset = synth::Dataset::Load(cfg.data_dir);
  const ImageData data = LoadImageData(dataset);
  std::vector<Matrix> targets;
  if (cfg.with_audio) targets = LoadAudioTargets(dataset, cfg.format, cfg.voice);
  TrainResult result = TrainRun(cfg, data, cfg.with_audio ? &targets : nullptr, progress);
  fs::create_directories(cfg.out_dir);
  result.log.Save(cfg.out_dir / kMetricsFileName);
  result.checkpoint.Save(cfg.out_dir / kCheckpointFileName);
  return result;
}

}  // namespace audiotext::train
