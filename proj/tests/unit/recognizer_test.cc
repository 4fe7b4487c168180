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

#include <chrono>
#include <cmath>

#include "audiotext/autograd/adam.h"
#include "audiotext/autograd/gradcheck.h"
#include "audiotext/autograd/ops.h"
#include "audiotext/autograd/tape.h"
#include "audiotext/error.h"
#include "audiotext/recognizer/metrics.h"
#include "audiotext/recognizer/recognizer.h"
#include "audiotext/synthdata/image.h"
#include "doctest.h"
#include "oracles.h"

namespace audiotext::rec {
namespace {

using oracle::AllLabels;
using oracle::EnumeratedMass;
using oracle::RandomLogProbs;

TEST_CASE("label encoding") {
  CHECK(EncodeLabel("az") == LabelSeq{1, 26});
  CHECK(DecodeLabel({3, 1, 20}) == "cat");
  CHECK_THROWS_AS(EncodeLabel("a1"), Error);
}

TEST_CASE("ctc on one frame with three uniform classes is ln 3") {
  const double l3 = -std::log(3.0);
  auto lp = ag::Tensor::FromData({1, 3}, {l3, l3, l3});
  CHECK(CtcLoss(lp, {1}).item() == doctest::Approx(std::log(3.0)).epsilon(1e-14));
}

TEST_CASE("ctc matches exhaustive path enumeration") {
  const auto start = std::chrono::steady_clock::now();
  Rng rng(7);
  int checked = 0, infeasible = 0;
  for (std::size_t t_len = 1; t_len <= 6; ++t_len) {
    for (int alphabet = 1; alphabet <= 3; ++alphabet) {
      const std::size_t n_cls = static_cast<std::size_t>(alphabet) + 1;
      const auto lp = RandomLogProbs(t_len, n_cls, rng);
      const auto tensor = ag::Tensor::FromData({t_len, n_cls}, lp);
      for (const auto& label : AllLabels(alphabet, 3)) {
        const double mass = EnumeratedMass(lp, t_len, n_cls, label);
        if (!CtcAlignable(label, t_len)) {
          CHECK(mass == 0.0);
          CHECK_THROWS_WITH_AS(CtcLoss(tensor, label), doctest::Contains("label unalignable"), Error);
          ++infeasible;
          continue;
        }
        const double oracle = -std::log(mass);
        const double got = CtcLoss(tensor, label).item();
        CHECK(std::abs(got - oracle) <= 1e-9 * std::abs(oracle));
        CHECK(got >= 0.0);
        ++checked;
      }
    }
  }
  CHECK(checked > 100);
  CHECK(infeasible > 0);
  CHECK(std::chrono::steady_clock::now() - start < std::chrono::seconds(30));
}

TEST_CASE("ctc example with label ab over three frames") {
  Rng rng(8);
  const auto lp = RandomLogProbs(3, 3, rng);
  const double oracle = -std::log(EnumeratedMass(lp, 3, 3, {1, 2}));
  CHECK(CtcLoss(ag::Tensor::FromData({3, 3}, lp), {1, 2}).item() ==
        doctest::Approx(oracle).epsilon(1e-12));
}

TEST_CASE("batched ctc equals per-sample ctc") {
  Rng rng(9);
  const auto a = RandomLogProbs(5, 4, rng), b = RandomLogProbs(5, 4, rng);
  std::vector<double> both(a);
  both.insert(both.end(), b.begin(), b.end());
  const auto batch = CtcLossBatch(ag::Tensor::FromData({2, 5, 4}, both), {{1, 2}, {3, 3}});
  CHECK(batch.data()[0] == CtcLoss(ag::Tensor::FromData({5, 4}, a), {1, 2}).item());
  CHECK(batch.data()[1] == CtcLoss(ag::Tensor::FromData({5, 4}, b), {3, 3}).item());
  CHECK_THROWS_AS(CtcLossBatch(ag::Tensor::FromData({2, 5, 4}, both), {{1}}), Error);
  CHECK_THROWS_AS(CtcLoss(ag::Tensor::FromData({5, 4}, a), {4}), Error);
}

TEST_CASE("ctc gradient matches finite differences") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    Rng rng(100 + seed);
    std::vector<double> logits(2 * 7 * 5);
    for (double& v : logits) v = rng.Normal();
    auto x = ag::Tensor::FromData({2, 7, 5}, logits, true);
    const auto results = ag::GradCheck(
        [&] { return ag::Sum(CtcLossBatch(ag::LogSoftmaxRows(x), {{1, 4, 4}, {2, 3}})); },
        {{"logits", x}});
    CHECK(results[0].rel_error < 1e-4);
  }
}

TEST_CASE("ctc stays finite for probabilities near e^-700") {
  const std::size_t t_len = 32;
  std::vector<double> lp(t_len * kNumClasses, -700.0);
  auto x = ag::Tensor::FromData({1, t_len, kNumClasses}, lp, true);
  ag::Tape tape;
  ag::TapeScope scope(tape);
  auto loss = ag::Sum(CtcLossBatch(x, {EncodeLabel("hello")}));
  CHECK(std::isfinite(loss.item()));
  CHECK(loss.item() > 700.0 * (t_len - 1));
  tape.Backward(loss);
  for (double g : x.grad()) CHECK(std::isfinite(g));
}

TEST_CASE("greedy decode collapses repeats then drops blanks") {
  auto frames = [](std::vector<int> argmax) {
    std::vector<double> lp(argmax.size() * kNumClasses, -5.0);
    for (std::size_t t = 0; t < argmax.size(); ++t) lp[t * kNumClasses + argmax[t]] = -0.1;
    return lp;
  };
  CHECK(DecodeLabel(CtcGreedyDecode(frames({1, 1, 0, 1, 2}), kNumClasses)) == "aab");
  CHECK(CtcGreedyDecode(frames({0, 0, 0}), kNumClasses).empty());
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto lp = RandomLogProbs(12, 4, rng);
    std::vector<int> path;
    for (std::size_t t = 0; t < 12; ++t) {
      int best = 0;
      for (int k = 1; k < 4; ++k) best = lp[t * 4 + k] > lp[t * 4 + best] ? k : best;
      path.push_back(best);
    }
    CHECK(CtcGreedyDecode(lp, 4) == oracle::CollapsePath(path));
  }
}

TEST_CASE("word accuracy") {
  CHECK(WordAccuracy({"a", "b"}, {"a", "b"}) == 1.0);
  CHECK(WordAccuracy({"a", "b"}, {"c", "d"}) == 0.0);
  CHECK(WordAccuracy({"a", "b", "c", "d"}, {"a", "b", "c", "x"}) == 0.75);
  CHECK_THROWS_AS(WordAccuracy({"a"}, {"a", "b"}), Error);
}

TEST_CASE("encoder output contract") {
  Rng rng(12);
  ImageEncoder enc({}, rng);
  CHECK(enc.config().SequenceLength() == 32);
  const Matrix img = synth::RenderWordImage("word", synth::CorruptionSpec::Regular(), 1);
  ag::NoGradScope no_grad;
  const auto a = enc.Forward(StackImages({&img}));
  CHECK(a.shape() == ag::Shape{1, 32, 256});
  const auto again = enc.Forward(StackImages({&img}));
  CHECK(std::equal(a.data().begin(), a.data().end(), again.data().begin()));
  // Batch composition may change GEMM blocking, so only closeness is required.
  const auto pair = enc.Forward(StackImages({&img, &img}));
  CHECK(pair.shape() == ag::Shape{2, 32, 256});
  for (std::size_t i = 0; i < a.numel(); ++i) {
    CHECK(pair.data()[a.numel() + i] == doctest::Approx(a.data()[i]).epsilon(1e-12));
  }
  CHECK_THROWS_AS(enc.Forward(ag::Tensor::Zeros({1, 32, 64})), Error);
  CHECK_THROWS_AS(ImageEncoder(ImageEncoderConfig{.stages = {}}, rng), Error);
}

TEST_CASE("reduced encoder gradients match finite differences") {
  Rng rng(13);
  const ImageEncoderConfig cfg{.in_height = 8, .in_width = 16, .stages = {{3, 2, 2}, {4, 2, 1}}};
  ImageEncoder enc(cfg, rng);
  std::vector<double> pixels(2 * 8 * 16);
  for (double& p : pixels) p = rng.Uniform();
  const auto images = ag::Tensor::FromData({2, 8, 16}, pixels);
  const auto out_shape = ag::Shape{2, cfg.SequenceLength(), cfg.d_model()};
  std::vector<double> probe(2 * cfg.SequenceLength() * cfg.d_model());
  for (double& p : probe) p = rng.Normal();
  const auto probe_t = ag::Tensor::FromData(out_shape, probe);
  std::vector<std::pair<std::string, ag::Tensor>> inputs;
  for (const auto& p : enc.Parameters()) inputs.emplace_back(p.name, p.tensor);
  const auto results =
      ag::GradCheck([&] { return ag::Sum(ag::Mul(enc.Forward(images), probe_t)); }, inputs);
  CHECK(results.size() == 5);
  for (const auto& r : results) {
    INFO(r.name);
    CHECK(r.rel_error < 1e-4);
  }
}

TEST_CASE("recognizer outputs normalized frames and learns a fixed sample") {
  Rng rng(14);
  Recognizer model({}, rng);
  const Matrix img = synth::RenderWordImage("cab", synth::CorruptionSpec::Regular(), 3);
  const auto images = StackImages({&img});
  {
    ag::NoGradScope no_grad;
    const auto lp = model.Forward(images).log_probs;
    REQUIRE(lp.shape() == ag::Shape{1, 32, kNumClasses});
    for (std::size_t t = 0; t < 32; ++t) {
      double z = 0.0;
      for (std::size_t k = 0; k < kNumClasses; ++k) z += std::exp(lp.data()[t * kNumClasses + k]);
      CHECK(z == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
  ag::Adam adam(nn::Tensors(model.Parameters()));
  std::vector<double> losses;
  for (int step = 0; step <= 50; ++step) {
    ag::Tape tape;
    ag::TapeScope scope(tape);
    auto loss = ag::Mean(CtcLossBatch(model.Forward(images).log_probs, {EncodeLabel("cab")}));
    losses.push_back(loss.item());
    adam.ZeroGrad();
    tape.Backward(loss);
    adam.Step();
  }
  CHECK(losses.back() < losses.front());
  CHECK(model.Predict(images) == std::vector<std::string>{"cab"});
}

}  // namespace
}  // namespace audiotext::rec
