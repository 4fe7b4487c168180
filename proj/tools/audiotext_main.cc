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

// Command-line surface: gen-data, spectrogram, train, eval, ablate, gradcheck.

#include <cstdio>
#include <fstream>

#include <fmt/format.h>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "audiotext/dsp/dsp.h"
#include "audiotext/inference/evaluate.h"
#include "audiotext/inference/model_io.h"
#include "audiotext/io/melt.h"
#include "audiotext/trainer/ablation.h"
#include "audiotext/trainer/gradcheck_suite.h"
#include "audiotext/trainer/train.h"
#include "cli_common.h"

namespace audiotext::cli {
namespace {

namespace fs = std::filesystem;

void LogEpoch(const train::EpochRow& r) {
  spdlog::info("epoch {} l_rec={:.5f} l_mel={:.5f} loss={:.5f} acc regular={:.4f} occluded={:.4f} noisy={:.4f}",
               r.epoch, r.l_rec, r.l_mel, r.loss, r.acc_regular, r.acc_occluded, r.acc_noisy);
}

void AddTrainOptions(CLI::App* cmd, train::TrainConfig& cfg, std::string& format) {
  cmd->add_option("--alpha", cfg.alpha, "audio loss weight")->capture_default_str();
  cmd->add_option("--layers", cfg.n_layers, "audio decoder layers")->capture_default_str();
  cmd->add_option("--format", format, "mel|linear")->capture_default_str();
  cmd->add_option("--voice", cfg.voice, "voice profile for audio targets (default: dataset voice)");
  cmd->add_option("--seed", cfg.seed, "run seed")->capture_default_str();
  cmd->add_option("--epochs", cfg.epochs, "training epochs")->capture_default_str();
  cmd->add_option("--lr", cfg.lr, "Adam learning rate")->capture_default_str();
  cmd->add_option("--batch", cfg.batch_size, "batch size")->capture_default_str();
}

}  // namespace
}  // namespace audiotext::cli

int main(int argc, char** argv) {
  using namespace audiotext;
  namespace fs = std::filesystem;
  spdlog::set_default_logger(spdlog::stderr_color_st("audiotext"));
  spdlog::set_pattern("[%H:%M:%S] %v");

  CLI::App app{"Audio-guided word recognition at desk scale"};
  app.require_subcommand(1);
  std::function<void()> action;

  // gen-data
  synth::GenerateConfig gen;
  std::string gen_out;
  auto* gen_cmd = app.add_subcommand("gen-data", "generate the synthetic dataset");
  gen_cmd->add_option("--out", gen_out, "output directory")->required();
  gen_cmd->add_option("--seed", gen.global_seed, "dataset seed")->capture_default_str();
  gen_cmd->add_option("--n-train", gen.n_train, "training samples")->capture_default_str();
  gen_cmd->add_option("--n-test", gen.n_test_per_split, "samples per test split")->capture_default_str();
  gen_cmd->add_option("--voice", gen.voice, "voice profile")->capture_default_str();
  gen_cmd->callback([&] {
    action = [&] {
      gen.out_dir = gen_out;
      const auto manifest = synth::GenerateDataset(gen);
      std::printf("dataset=%s records=%zu\n", gen_out.c_str(), manifest.records.size());
    };
  });

  // spectrogram
  std::string wav_path, spec_out, spec_format = "mel";
  bool no_log = false;
  auto* spec_cmd = app.add_subcommand("spectrogram", "compute a spectrogram of a WAV file");
  spec_cmd->add_option("--wav", wav_path, "input WAV")->required();
  spec_cmd->add_option("--out", spec_out, "output MELT tensor [frames, 80]")->required();
  spec_cmd->add_option("--format", spec_format, "mel|linear")->capture_default_str();
  spec_cmd->add_flag("--no-log", no_log, "skip log compression");
  spec_cmd->callback([&] {
    action = [&] {
      const auto spec = dsp::ComputeMelSpectrogram(dsp::Waveform::Load(wav_path), dsp::DspConfig{},
                                                   dsp::ParseFormat(spec_format), !no_log);
      const Matrix& f = spec.frames;
      io::SaveMelt(spec_out, {{static_cast<std::uint32_t>(f.rows()), static_cast<std::uint32_t>(f.cols())},
                              f.data()});
      std::printf("frames=%zu bins=%zu\n", f.rows(), f.cols());
    };
  });

  // train
  train::TrainConfig tcfg;
  std::string train_data, train_out, train_format = "mel";
  bool no_audio = false;
  auto* train_cmd = app.add_subcommand("train", "train one run");
  train_cmd->add_option("--data", train_data, "dataset directory")->required();
  train_cmd->add_option("--out", train_out, "run output directory")->required();
  cli::AddTrainOptions(train_cmd, tcfg, train_format);
  train_cmd->add_flag("--no-audio", no_audio, "baseline arm without the audio decoder");
  train_cmd->callback([&] {
    action = [&] {
      tcfg.data_dir = train_data;
      tcfg.out_dir = train_out;
      tcfg.format = dsp::ParseFormat(train_format);
      tcfg.with_audio = !no_audio;
      const auto result = train::TrainAndSave(tcfg, cli::LogEpoch);
      const auto& last = result.log.back();
      std::printf("epochs=%d l_rec=%.6f l_mel=%.6f acc_regular=%.4f acc_occluded=%.4f acc_noisy=%.4f out=%s\n",
                  last.epoch, last.l_rec, last.l_mel, last.acc_regular, last.acc_occluded,
                  last.acc_noisy, train_out.c_str());
    };
  });

  // eval
  std::string eval_ckpt, eval_data, eval_splits = "regular,occluded,noisy", eval_pred;
  auto* eval_cmd = app.add_subcommand("eval", "evaluate a checkpoint");
  eval_cmd->add_option("--ckpt", eval_ckpt, "checkpoint file")->required();
  eval_cmd->add_option("--data", eval_data, "dataset directory")->required();
  eval_cmd->add_option("--splits", eval_splits, "comma-separated splits")->capture_default_str();
  eval_cmd->add_option("--predictions", eval_pred, "write id/prediction/reference TSV here");
  eval_cmd->callback([&] {
    action = [&] {
      const auto model = inference::LoadRecognizer(fs::path(eval_ckpt));
      const auto dataset = synth::Dataset::Load(eval_data);
      const auto results = inference::EvaluateModel(*model, dataset, cli::ParseSplits(eval_splits));
      for (const auto& r : results) {
        std::printf("split=%s accuracy=%.6f n=%zu\n", std::string(synth::SplitName(r.split)).c_str(),
                    r.accuracy, r.predictions.size());
      }
      if (!eval_pred.empty()) inference::WritePredictionsTsv(eval_pred, results);
    };
  });

  // ablate
  train::TrainConfig acfg;
  std::string abl_axis, abl_values, abl_data, abl_out, abl_format = "mel";
  auto* abl_cmd = app.add_subcommand("ablate", "sweep one axis with shared data and seed");
  abl_cmd->add_option("--axis", abl_axis, "layers|alpha|format|voice")->required();
  abl_cmd->add_option("--values", abl_values, "comma-separated values (default: the standard arms)");
  abl_cmd->add_option("--data", abl_data, "dataset directory")->required();
  abl_cmd->add_option("--out", abl_out, "write ablation.csv and per-run metrics here");
  cli::AddTrainOptions(abl_cmd, acfg, abl_format);
  abl_cmd->callback([&] {
    action = [&] {
      acfg.format = dsp::ParseFormat(abl_format);
      const auto axis = train::ParseAxis(abl_axis);
      const auto values = abl_values.empty() ? train::DefaultAxisValues(axis) : cli::SplitCommaList(abl_values);
      const auto dataset = synth::Dataset::Load(abl_data);
      const auto rows = train::RunAblation(dataset, axis, values, acfg, cli::LogEpoch);
      const std::string table = train::AblationTableCsv(rows);
      std::fputs(table.c_str(), stdout);
      if (!abl_out.empty()) {
        fs::create_directories(abl_out);
        std::ofstream(fs::path(abl_out) / "ablation.csv", std::ios::binary) << table;
        for (const auto& r : rows) {
          r.log.Save(fs::path(abl_out) / fmt::format("metrics_{}_{}.csv", r.axis, r.value));
        }
      }
    };
  });

  // gradcheck
  train::SuiteOptions suite;
  auto* gc_cmd = app.add_subcommand("gradcheck", "run the finite-difference gradient suites");
  gc_cmd->add_option("--seeds", suite.seeds, "instances per case")->capture_default_str();
  gc_cmd->add_option("--filter", suite.filter, "only cases whose name contains this");
  gc_cmd->callback([&] {
    action = [&] {
      bool ok = true;
      for (const auto& r : train::RunGradCheckSuite(suite)) {
        std::printf("case=%s seeds=%d rejected=%d worst_rel_err=%.3e status=%s\n", r.name.c_str(),
                    r.seeds, r.rejected_draws, r.worst_rel_error, r.passed ? "pass" : "FAIL");
        ok = ok && r.passed;
      }
      if (!ok) throw Error(ErrorKind::kNumeric, "gradient check failed");
    };
  });

  return cli::RunApp(app, argc, argv, [&] {
    if (action) action();
  });
}
