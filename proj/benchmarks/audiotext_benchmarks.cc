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

#include <benchmark/benchmark.h>

#include "audiotext/audio/audio_decoder.h"
#include "audiotext/autograd/ops.h"
#include "audiotext/autograd/tape.h"
#include "audiotext/dsp/dsp.h"
#include "audiotext/nn/attention.h"
#include "audiotext/nn/init.h"
#include "audiotext/recognizer/ctc.h"
#include "audiotext/recognizer/recognizer.h"

namespace audiotext {
namespace {

ag::Tensor Random(const ag::Shape& shape, Rng& rng, bool requires_grad = false) {
  auto t = nn::NormalParameter(shape, 1.0, rng);
  t.set_requires_grad(requires_grad);
  return t;
}

dsp::Waveform Noise(std::size_t n) {
  Rng rng(1);
  std::vector<double> x(n);
  for (double& v : x) v = rng.Uniform(-0.5, 0.5);
  return dsp::Waveform(std::move(x));
}

void BM_Stft(benchmark::State& state) {
  const auto w = Noise(static_cast<std::size_t>(state.range(0)));
  const dsp::DspConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(dsp::Stft(w, cfg));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Stft)->Arg(22050)->Arg(4096);

void BM_MelSpectrogram(benchmark::State& state) {
  const auto w = Noise(22050);
  const dsp::DspConfig cfg;
  const auto format = state.range(0) == 0 ? dsp::SpectrogramFormat::kMel : dsp::SpectrogramFormat::kLinear;
  for (auto _ : state) benchmark::DoNotOptimize(dsp::ComputeMelSpectrogram(w, cfg, format));
}
BENCHMARK(BM_MelSpectrogram)->Arg(0)->Arg(1);

// First encoder stage at training batch size: [16, 1, 32, 128] -> 32 channels.
void BM_Conv2dForwardBackward(benchmark::State& state) {
  Rng rng(2);
  const auto x = Random({16, 1, 32, 128}, rng);
  const auto w = Random({32, 1, 3, 3}, rng, true), b = Random({32}, rng, true);
  for (auto _ : state) {
    ag::Tape tape;
    ag::TapeScope scope(tape);
    tape.Backward(ag::Sum(ag::Conv2d(x, w, b)));
  }
}
BENCHMARK(BM_Conv2dForwardBackward)->Unit(benchmark::kMillisecond);

// Decoder self-attention over the longest target (61 frames) at batch 16.
void BM_AttentionForward(benchmark::State& state) {
  Rng rng(3);
  nn::MultiHeadAttention mha(256, 4, rng);
  const auto x = Random({16, 61, 256}, rng);
  const auto mask = ag::CausalMask(61);
  ag::NoGradScope no_grad;
  for (auto _ : state) benchmark::DoNotOptimize(mha.Forward(x, x, x, &mask));
}
BENCHMARK(BM_AttentionForward)->Unit(benchmark::kMillisecond);

void BM_CtcLossBatch(benchmark::State& state) {
  Rng rng(4);
  const std::size_t batch = 16, frames = 32;
  const auto logits = Random({batch, frames, rec::kNumClasses}, rng, true);
  std::vector<rec::LabelSeq> labels(batch, rec::EncodeLabel("letters"));
  for (auto _ : state) {
    ag::Tape tape;
    ag::TapeScope scope(tape);
    tape.Backward(ag::Sum(rec::CtcLossBatch(ag::LogSoftmaxRows(logits), labels)));
  }
}
BENCHMARK(BM_CtcLossBatch)->Unit(benchmark::kMicrosecond);

void BM_RecognizerForward(benchmark::State& state) {
  Rng rng(5);
  rec::Recognizer model({}, rng);
  const auto images = Random({16, 32, 128}, rng);
  ag::NoGradScope no_grad;
  for (auto _ : state) benchmark::DoNotOptimize(model.Forward(images));
}
BENCHMARK(BM_RecognizerForward)->Unit(benchmark::kMillisecond);

void BM_AudioDecoderForward(benchmark::State& state) {
  Rng rng(6);
  audio::AudioDecoder decoder({}, rng);
  const auto shifted = Random({16, 40, 80}, rng), memory = Random({16, 32, 256}, rng);
  ag::NoGradScope no_grad;
  for (auto _ : state) benchmark::DoNotOptimize(decoder.Forward(shifted, memory));
}
BENCHMARK(BM_AudioDecoderForward)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace audiotext

BENCHMARK_MAIN();
