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

#include <cmath>
#include <fstream>
#include <iterator>
#include <limits>

#include "audiotext/audio/audio_decoder.h"
#include "audiotext/autograd/ops.h"
#include "audiotext/autograd/tape.h"
#include "audiotext/error.h"
#include "audiotext/inference/model_io.h"
#include "audiotext/trainer/ablation.h"
#include "audiotext/trainer/checkpoint.h"
#include "audiotext/trainer/train.h"
#include "doctest.h"
#include "test_util.h"

namespace audiotext::train {
namespace {

namespace fs = std::filesystem;

std::string Bytes(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Small dataset shared by the tests in this file.
const fs::path& TinyData() {
  static testing::TempDir dir("trainer");
  static const bool made = [] {
    synth::GenerateConfig cfg;
    cfg.out_dir = dir.path();
    cfg.n_train = 24;
    cfg.n_test_per_split = 8;
    cfg.global_seed = 5;
    synth::GenerateDataset(cfg);
    return true;
  }();
  (void)made;
  return dir.path();
}

TrainConfig TinyConfig() {
  TrainConfig cfg;
  cfg.epochs = 2;
  cfg.batch_size = 8;
  cfg.seed = 9;
  cfg.data_dir = TinyData();
  return cfg;
}

TEST_CASE("joint loss arithmetic") {
  CHECK(JointLoss(2.0, 0.5, 1.0) == 2.5);
  CHECK(JointLoss(2.0, 0.5, 2.0) == 3.0);
  CHECK(JointLoss(2.0, 0.5, 0.0) == 2.0);
  const auto l_rec = ag::Tensor::Scalar(1.2345678901234567);
  const auto l_mel = ag::Tensor::Scalar(0.37);
  CHECK(JointLoss(l_rec, l_mel, 0.0).item() == l_rec.item());
  CHECK(JointLoss(l_rec, l_mel, 1.0).item() == 1.2345678901234567 + 0.37);
}

TEST_CASE("config validation") {
  TrainConfig cfg;
  CHECK_NOTHROW(cfg.Validate());
  cfg.alpha = -0.1;
  CHECK_THROWS_AS(cfg.Validate(), Error);
  cfg = {};
  cfg.n_layers = 0;
  CHECK_THROWS_AS(cfg.Validate(), Error);
  cfg = {};
  cfg.epochs = 0;
  CHECK_THROWS_AS(cfg.Validate(), Error);
  CHECK(TrainConfig{}.Snapshot().find("alpha=1\n") != std::string::npos);
}

TEST_CASE("metrics log is append-only and round trips") {
  MetricsLog log;
  log.Append({1, 3.5, 0.25, 3.75, 0.1, 0.2, 0.3});
  CHECK_THROWS_AS(log.Append({3, 0, 0, 0, 0, 0, 0}), Error);
  log.Append({2, 1.0 / 3.0, std::numeric_limits<double>::quiet_NaN(), 0.1, 0.5, 0.25, 1.0});
  testing::TempDir dir("metrics");
  log.Save(dir / "m.csv");
  const auto back = MetricsLog::Load(dir / "m.csv");
  REQUIRE(back.rows().size() == 2);
  CHECK(back.rows()[1].l_rec == 1.0 / 3.0);
  CHECK(std::isnan(back.rows()[1].l_mel));
  CHECK(back.ToCsv() == log.ToCsv());
  CHECK(log.ToCsv().rfind(MetricsLog::kHeader, 0) == 0);
}

TEST_CASE("identical configs give byte-identical metrics and checkpoints") {
  TrainConfig cfg = TinyConfig();
  testing::TempDir a("run_a"), b("run_b");
  cfg.out_dir = a.path();
  const auto ra = TrainAndSave(cfg);
  cfg.out_dir = b.path();
  TrainAndSave(cfg);
  CHECK(Bytes(a / kMetricsFileName) == Bytes(b / kMetricsFileName));
  CHECK(Bytes(a / kCheckpointFileName) == Bytes(b / kCheckpointFileName));
  REQUIRE(ra.log.rows().size() == 2);
  CHECK(ra.log.rows()[0].l_mel > 0.0);

  cfg.seed = 10;
  testing::TempDir c("run_c");
  cfg.out_dir = c.path();
  TrainAndSave(cfg);
  CHECK(Bytes(a / kMetricsFileName) != Bytes(c / kMetricsFileName));
}

TEST_CASE("baseline arm has no audio namespace and shares the recognizer init") {
  const auto dataset = synth::Dataset::Load(TinyData());
  const ImageData data = LoadImageData(dataset);
  TrainConfig cfg = TinyConfig();
  cfg.epochs = 1;
  cfg.with_audio = false;
  const auto base = TrainRun(cfg, data, nullptr);
  CHECK(base.checkpoint.CountPrefix("audio/") == 0);
  CHECK(base.checkpoint.CountPrefix("optim/m/audio/") == 0);
  CHECK(base.checkpoint.CountPrefix("rec/") > 0);
  CHECK(std::isnan(base.log.back().l_mel));
  CHECK(base.log.back().loss == base.log.back().l_rec);

  const auto targets = LoadAudioTargets(dataset, cfg.format, cfg.voice);
  cfg.with_audio = true;
  const auto joint = TrainRun(cfg, data, &targets);
  CHECK(joint.checkpoint.CountPrefix("audio/") > 0);
  CHECK_THROWS_AS(TrainRun(cfg, data, nullptr), Error);
}

TEST_CASE("checkpoint restore reproduces recognizer outputs bit for bit") {
  const auto dataset = synth::Dataset::Load(TinyData());
  const ImageData data = LoadImageData(dataset);
  const auto targets = LoadAudioTargets(dataset, dsp::SpectrogramFormat::kMel, "");
  TrainConfig cfg = TinyConfig();
  cfg.epochs = 1;
  const auto run = TrainRun(cfg, data, &targets);
  testing::TempDir dir("ckpt");
  run.checkpoint.Save(dir / "c.mckp");
  const auto table = io::NamedTable::Load(dir / "c.mckp");

  Rng r1(1), r2(2);
  rec::Recognizer model({}, r1);
  audio::AudioDecoder decoder({}, r2);
  nn::ParameterList params = model.Parameters("rec/");
  decoder.CollectParameters("audio/", params);
  ag::Adam adam(nn::Tensors(params));
  const CheckpointMeta meta = RestoreCheckpoint(table, params, &adam);
  CHECK(meta.epoch == 1);
  CHECK(meta.config == cfg.Snapshot());
  CHECK(adam.step() == 3);

  const auto reloaded = inference::LoadRecognizer(table);
  const auto images = rec::StackImages({&data.train_images[0], &data.train_images[1]});
  ag::NoGradScope no_grad;
  const auto a = model.Forward(images).log_probs, b = reloaded->Forward(images).log_probs;
  CHECK(std::equal(a.data().begin(), a.data().end(), b.data().begin()));
}

TEST_CASE("stripping audio state leaves recognition unchanged") {
  const auto dataset = synth::Dataset::Load(TinyData());
  const ImageData data = LoadImageData(dataset);
  const auto targets = LoadAudioTargets(dataset, dsp::SpectrogramFormat::kMel, "");
  TrainConfig cfg = TinyConfig();
  cfg.epochs = 1;
  auto table = TrainRun(cfg, data, &targets).checkpoint;
  const auto full = inference::LoadRecognizer(table);
  const std::size_t audio_entries = table.CountPrefix("audio/");
  CHECK(StripAudio(table) == 3 * audio_entries);
  CHECK(table.CountPrefix("audio/") == 0);
  const auto stripped = inference::LoadRecognizer(table);
  for (const auto& split : data.test_splits) {
    const auto pa = inference::PredictBatched(*full, split.images);
    const auto pb = inference::PredictBatched(*stripped, split.images);
    CHECK(pa == pb);
  }
}

TEST_CASE("non-finite loss aborts with epoch and step context") {
  const auto dataset = synth::Dataset::Load(TinyData());
  const ImageData data = LoadImageData(dataset);
  auto targets = LoadAudioTargets(dataset, dsp::SpectrogramFormat::kMel, "");
  for (auto& t : targets) t(0, 0) = std::numeric_limits<double>::quiet_NaN();
  TrainConfig cfg = TinyConfig();
  CHECK_THROWS_WITH_AS(TrainRun(cfg, data, &targets), doctest::Contains("epoch 1 step 1"), Error);
}

TEST_CASE("voice targets are re-synthesized for another profile") {
  const auto dataset = synth::Dataset::Load(TinyData());
  const auto own = LoadAudioTargets(dataset, dsp::SpectrogramFormat::kMel, "");
  const auto same = LoadAudioTargets(dataset, dsp::SpectrogramFormat::kMel, dataset.manifest().voice);
  const auto other = LoadAudioTargets(dataset, dsp::SpectrogramFormat::kMel, "male_a");
  REQUIRE(own.size() == other.size());
  CHECK(own.front() == same.front());
  CHECK(own.front().rows() == other.front().rows());
  CHECK(own.front() != other.front());
  CHECK_THROWS_AS(LoadAudioTargets(dataset, dsp::SpectrogramFormat::kMel, "robot"), Error);
}

TEST_CASE("ablation axes and row structure") {
  CHECK(DefaultAxisValues(AblationAxis::kLayers).size() == 4);
  CHECK(DefaultAxisValues(AblationAxis::kAlpha).size() == 3);
  CHECK(DefaultAxisValues(AblationAxis::kFormat).size() == 2);
  CHECK(DefaultAxisValues(AblationAxis::kVoice).size() == 4);
  CHECK_THROWS_AS(ParseAxis("depth"), Error);
  CHECK_THROWS_AS(ApplyAxisValue({}, AblationAxis::kLayers, "2.5"), Error);
  CHECK_THROWS_AS(ApplyAxisValue({}, AblationAxis::kAlpha, "-1"), Error);
  CHECK(ApplyAxisValue({}, AblationAxis::kFormat, "linear").format == dsp::SpectrogramFormat::kLinear);

  const auto dataset = synth::Dataset::Load(TinyData());
  TrainConfig cfg = TinyConfig();
  cfg.epochs = 1;
  const auto rows = RunAblation(dataset, AblationAxis::kAlpha, {"0", "1"}, cfg);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].seed == rows[1].seed);
  CHECK(rows[0].data_fingerprint == rows[1].data_fingerprint);
  CHECK(rows[0].final.loss == rows[0].final.l_rec);
  CHECK(rows[1].final.loss != rows[1].final.l_rec);
  const std::string table = AblationTableCsv(rows);
  CHECK(std::count(table.begin(), table.end(), '\n') == 3);
}

}  // namespace
}  // namespace audiotext::train
