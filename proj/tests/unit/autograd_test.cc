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
#include <functional>
#include <limits>

#include "audiotext/autograd/adam.h"
#include "audiotext/autograd/gradcheck.h"
#include "audiotext/autograd/ops.h"
#include "audiotext/autograd/tape.h"
#include "audiotext/error.h"
#include "audiotext/rng.h"
#include "doctest.h"

namespace audiotext::ag {
namespace {

// Values bounded away from zero so kinks of relu/abs stay outside +-h.
Tensor Random(const Shape& shape, Rng& rng, bool requires_grad = true) {
  std::vector<double> v(NumElements(shape));
  for (double& x : v) x = (rng.Uniform() < 0.5 ? -1.0 : 1.0) * rng.Uniform(0.1, 1.0);
  return Tensor::FromData(shape, std::move(v), requires_grad);
}

// sum(f(inputs) * r) with a fixed random projection r.
double MaxRelError(const std::function<Tensor()>& f, const std::vector<Tensor>& inputs,
                   std::uint64_t seed) {
  Rng rng(seed ^ 0xABCDull);
  Tensor probe;
  {
    NoGradScope ng;
    probe = Random(f().shape(), rng, false);
  }
  std::vector<std::pair<std::string, Tensor>> named;
  for (std::size_t i = 0; i < inputs.size(); ++i) named.emplace_back("in" + std::to_string(i), inputs[i]);
  double worst = 0.0;
  for (const auto& r : GradCheck([&] { return Sum(Mul(f(), probe)); }, named)) {
    worst = std::max(worst, r.rel_error);
  }
  return worst;
}

std::vector<double> Values(const Tensor& t) { return {t.data().begin(), t.data().end()}; }

TEST_CASE("relu forward and subgradient at zero") {
  Tape tape;
  TapeScope scope(tape);
  auto x = Tensor::FromData({3}, {-1, 0, 2}, true);
  auto y = Relu(x);
  CHECK(Values(y) == std::vector<double>{0, 0, 2});
  tape.Backward(Sum(y));
  CHECK(x.grad() == std::vector<double>{0, 0, 1});
}

TEST_CASE("sum(relu(x)) at [-1, 2] has grad [0, 1]") {
  Tape tape;
  TapeScope scope(tape);
  auto x = Tensor::FromData({2}, {-1, 2}, true);
  tape.Backward(Sum(Relu(x)));
  CHECK(x.grad() == std::vector<double>{0, 1});
}

TEST_CASE("broadcast add over leading dims, both operand orders") {
  auto a = Tensor::FromData({2, 3}, {1, 2, 3, 4, 5, 6});
  auto b = Tensor::FromData({3}, {10, 20, 30});
  CHECK(Values(Add(a, b)) == std::vector<double>{11, 22, 33, 14, 25, 36});
  CHECK(Values(Add(b, a)) == std::vector<double>{11, 22, 33, 14, 25, 36});
  CHECK(Values(Sub(b, a)) == std::vector<double>{9, 18, 27, 6, 15, 24});
}

TEST_CASE("shape mismatch lists both shapes") {
  auto a = Tensor::Zeros({2, 3});
  auto b = Tensor::Zeros({2});
  try {
    Add(a, b);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kShapeMismatch);
    const std::string msg = e.what();
    CHECK(msg.find("[2, 3]") != std::string::npos);
    CHECK(msg.find("[2]") != std::string::npos);
  }
  CHECK_THROWS_AS(MatMul(Tensor::Zeros({2, 3}), Tensor::Zeros({2, 3})), Error);
}

TEST_CASE("mean of abs difference equals a scalar loop") {
  Rng rng(1);
  auto a = Random({7, 5}, rng), b = Random({7, 5}, rng);
  double acc = 0.0;
  for (std::size_t i = 0; i < a.numel(); ++i) acc += std::abs(a.data()[i] - b.data()[i]);
  CHECK(Mean(Abs(Sub(a, b))).item() == doctest::Approx(acc / 35.0).epsilon(1e-14));
}

TEST_CASE("matmul hand case and identity") {
  auto a = Tensor::FromData({2, 2}, {1, 2, 3, 4});
  auto b = Tensor::FromData({2, 2}, {5, 6, 7, 8});
  CHECK(Values(MatMul(a, b)) == std::vector<double>{19, 22, 43, 50});
  CHECK(Values(MatMulNT(a, Transpose2d(b))) == std::vector<double>{19, 22, 43, 50});
  Rng rng(2);
  auto r = Random({4, 6}, rng, false);
  std::vector<double> eye(36, 0.0);
  for (int i = 0; i < 6; ++i) eye[i * 7] = 1.0;
  CHECK(Values(MatMul(r, Tensor::FromData({6, 6}, eye))) == Values(r));
}

TEST_CASE("matmul gradient of sum(A B) matches finite differences") {
  Rng rng(3);
  auto a = Random({3, 4}, rng), b = Random({4, 5}, rng);
  auto results = GradCheck([&] { return Sum(MatMul(a, b)); }, {{"a", a}, {"b", b}});
  for (const auto& r : results) CHECK(r.rel_error < 1e-6);
}

TEST_CASE("softmax basics") {
  CHECK(Values(SoftmaxRows(Tensor::FromData({1, 2}, {0, 0}))) == std::vector<double>{0.5, 0.5});
  CHECK(Values(SoftmaxRows(Tensor::FromData({1, 2}, {1000, 1000}))) ==
        std::vector<double>{0.5, 0.5});
  Rng rng(4);
  auto x = Random({5, 9}, rng, false);
  for (double& v : x.mutable_data()) v *= 10;
  auto y = SoftmaxRows(x);
  for (std::size_t r = 0; r < 5; ++r) {
    double total = 0.0, naive_total = 0.0;
    for (std::size_t j = 0; j < 9; ++j) naive_total += std::exp(x.data()[r * 9 + j]);
    for (std::size_t j = 0; j < 9; ++j) {
      total += y.data()[r * 9 + j];
      CHECK(y.data()[r * 9 + j] ==
            doctest::Approx(std::exp(x.data()[r * 9 + j]) / naive_total).epsilon(1e-12));
    }
    CHECK(std::abs(total - 1.0) < 1e-12);
  }
}

TEST_CASE("masked softmax gives exact zeros and rejects degenerate rows") {
  auto mask = CausalMask(3);
  Rng rng(5);
  auto x = Random({2, 3, 3}, rng, false);
  auto y = SoftmaxRows(x, &mask);
  for (std::size_t b = 0; b < 2; ++b) {
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = i + 1; j < 3; ++j) CHECK(y.data()[(b * 3 + i) * 3 + j] == 0.0);
    }
  }
  const double inf = std::numeric_limits<double>::infinity();
  auto full = Tensor::FromData({2, 2}, {0, 0, -inf, -inf});
  try {
    SoftmaxRows(Tensor::Zeros({2, 2}), &full);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()) == "degenerate attention row");
  }
}

TEST_CASE("layer norm contracts") {
  auto gamma = Tensor::Full({6}, 1.0), beta = Tensor::Zeros({6});
  auto c = LayerNorm(Tensor::Full({1, 6}, 3.7), gamma, beta);
  for (double v : c.data()) CHECK(std::abs(v) < 1e-2);
  Rng rng(6);
  auto x = Random({4, 6}, rng, false);
  auto y = LayerNorm(x, gamma, beta);
  for (std::size_t r = 0; r < 4; ++r) {
    double m = 0, v = 0;
    for (std::size_t j = 0; j < 6; ++j) m += y.data()[r * 6 + j];
    m /= 6;
    for (std::size_t j = 0; j < 6; ++j) v += std::pow(y.data()[r * 6 + j] - m, 2);
    v /= 6;
    CHECK(std::abs(m) < 1e-12);
    CHECK(v == doctest::Approx(1.0).epsilon(1e-3));
  }
}

TEST_CASE("layer norm gradient matches finite differences") {
  Rng rng(7);
  auto x = Random({3, 8}, rng), g = Random({8}, rng), b = Random({8}, rng);
  CHECK(MaxRelError([&] { return LayerNorm(x, g, b); }, {x, g, b}, 7) < 1e-4);
}

TEST_CASE("backward of a product of scalars") {
  Tape tape;
  TapeScope scope(tape);
  auto x = Tensor::Scalar(3.0, true), y = Tensor::Scalar(-2.0, true);
  tape.Backward(Mul(x, y));
  CHECK(x.grad()[0] == -2.0);
  CHECK(y.grad()[0] == 3.0);
}

TEST_CASE("backward error paths") {
  Tape tape;
  TapeScope scope(tape);
  auto x = Tensor::FromData({2}, {1, 2}, true);
  CHECK_THROWS_AS(tape.Backward(Relu(x)), Error);
  auto loss = Sum(x);
  tape.Backward(loss);
  try {
    tape.Backward(loss);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("twice") != std::string::npos);
  }
  tape.Clear();
  CHECK_THROWS_AS(tape.Backward(Sum(Tensor::Zeros({2}))), Error);
}

TEST_CASE("no recording without a tape or under NoGradScope") {
  auto x = Tensor::FromData({2}, {1, 2}, true);
  CHECK_FALSE(Sum(x).requires_grad());
  Tape tape;
  TapeScope scope(tape);
  {
    NoGradScope ng;
    Sum(x);
  }
  CHECK(tape.size() == 0);
  Sum(x);
  CHECK(tape.size() == 1);
}

TEST_CASE("a parameter used twice accumulates both path gradients") {
  Rng rng(8);
  auto w = Random({3, 3}, rng), x = Random({2, 3}, rng);
  auto f = [&] { return Add(MatMul(x, w), Relu(MatMulNT(x, w))); };
  CHECK(MaxRelError(f, {w, x}, 8) < 1e-6);
  Tape tape;
  TapeScope scope(tape);
  auto v = Tensor::Scalar(2.0, true);
  tape.Backward(Add(Mul(v, v), v));  // d/dv (v^2 + v) = 2v + 1
  CHECK(v.grad()[0] == 5.0);
}

TEST_CASE("finite checks surface non-finite outputs") {
  SetFiniteChecks(true);
  auto big = Tensor::FromData({1}, {1e308});
  try {
    ScalarMul(big, 10.0);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kNumeric);
    CHECK(std::string(e.what()).find("ScalarMul") != std::string::npos);
  }
  SetFiniteChecks(false);
  CHECK(std::isinf(ScalarMul(big, 10.0).item()));
}

TEST_CASE("structural ops forward semantics") {
  auto a = Tensor::FromData({2, 3}, {1, 2, 3, 4, 5, 6});
  CHECK(Values(Transpose2d(a)) == std::vector<double>{1, 4, 2, 5, 3, 6});
  CHECK(Values(Slice(a, 1, 1, 3)) == std::vector<double>{2, 3, 5, 6});
  CHECK(Values(Concat({a, a}, 1)) == std::vector<double>{1, 2, 3, 1, 2, 3, 4, 5, 6, 4, 5, 6});
  CHECK(Values(Concat({a, a}, 0)).size() == 12);
  CHECK(Reshape(a, {3, 2}).shape() == Shape{3, 2});
  CHECK_THROWS_AS(Reshape(a, {4}), Error);
  CHECK(Values(MeanAxis(a, 0)) == std::vector<double>{2.5, 3.5, 4.5});
  CHECK(Values(MeanAxis(a, 1)) == std::vector<double>{2, 5});
  CHECK(Sum(a).item() == 21.0);
  CHECK(Mean(a).item() == 3.5);
  auto img = Tensor::FromData({1, 1, 2, 4}, {1, 5, 2, 0, 3, 4, 8, 7});
  CHECK(Values(MaxPool2d(img, 2, 2)) == std::vector<double>{5, 8});
  CHECK(Values(MaxPool2d(img, 2, 1)) == std::vector<double>{3, 5, 8, 7});
}

TEST_CASE("conv2d matches a direct convolution loop") {
  Rng rng(9);
  auto x = Random({2, 3, 5, 6}, rng, false), w = Random({4, 3, 3, 3}, rng, false),
       b = Random({4}, rng, false);
  auto y = Conv2d(x, w, b);
  REQUIRE(y.shape() == Shape{2, 4, 5, 6});
  double max_diff = 0.0;
  for (int n = 0; n < 2; ++n)
    for (int o = 0; o < 4; ++o)
      for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 6; ++j) {
          double acc = b.data()[o];
          for (int c = 0; c < 3; ++c)
            for (int ky = 0; ky < 3; ++ky)
              for (int kx = 0; kx < 3; ++kx) {
                const int yy = i + ky - 1, xx = j + kx - 1;
                if (yy < 0 || yy >= 5 || xx < 0 || xx >= 6) continue;
                acc += w.data()[((o * 3 + c) * 3 + ky) * 3 + kx] *
                       x.data()[((n * 3 + c) * 5 + yy) * 6 + xx];
              }
          max_diff = std::max(max_diff, std::abs(acc - y.data()[((n * 4 + o) * 5 + i) * 6 + j]));
        }
  CHECK(max_diff < 1e-12);
}

TEST_CASE("dropout") {
  Rng rng(10);
  auto x = Tensor::Full({1000}, 1.0);
  CHECK(Dropout(x, 0.0, rng).impl() == x.impl());
  auto y = Dropout(x, 0.1, rng);
  int zeros = 0;
  for (double v : y.data()) {
    CHECK((v == 0.0 || v == doctest::Approx(1.0 / 0.9)));
    zeros += v == 0.0;
  }
  CHECK(zeros > 50);
  CHECK(zeros < 150);
  CHECK_THROWS_AS(Dropout(x, 1.0, rng), Error);
}

TEST_CASE("adam first step with bias correction") {
  auto w = Tensor::FromData({1}, {1.0}, true);
  Adam opt({w}, {.lr = 0.1});
  w.impl()->GradBuffer()[0] = 1.0;
  opt.Step();
  CHECK(std::abs(w.item() - 0.9) < 1e-6);
  CHECK(opt.step() == 1);
}

TEST_CASE("adam leaves parameters unchanged under zero gradient") {
  auto w = Tensor::FromData({3}, {1.0, -2.0, 0.5}, true);
  Adam opt({w});
  w.impl()->GradBuffer();
  opt.Step();
  CHECK(Values(w) == std::vector<double>{1.0, -2.0, 0.5});
  Adam never({w});
  never.Step();
  CHECK(Values(w) == std::vector<double>{1.0, -2.0, 0.5});
}

std::vector<double> Trajectory() {
  Rng rng(11);
  auto w = Random({4, 3}, rng), x = Random({5, 4}, rng, false);
  Adam opt({w}, {.lr = 0.01});
  std::vector<double> traj;
  for (int step = 0; step < 20; ++step) {
    Tape tape;
    TapeScope scope(tape);
    opt.ZeroGrad();
    tape.Backward(Mean(Abs(MatMul(x, w))));
    opt.Step();
    traj.insert(traj.end(), w.data().begin(), w.data().end());
  }
  return traj;
}

TEST_CASE("adam trajectories are deterministic") { CHECK(Trajectory() == Trajectory()); }

TEST_CASE("adam state restore validates sizes") {
  auto w = Tensor::Zeros({2}, true);
  Adam opt({w});
  CHECK_THROWS_AS(opt.SetState(1, {{0.0}}, {{0.0}}), Error);
  CHECK_NOTHROW(opt.SetState(5, {{0.1, 0.2}}, {{0.3, 0.4}}));
  CHECK(opt.step() == 5);
  CHECK_THROWS_AS(Adam({w}, {.lr = -1.0}), Error);
}

// Square with a deliberately halved derivative.
Tensor BrokenSquare(const Tensor& a) {
  std::vector<double> out(a.numel());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.data()[i] * a.data()[i];
  const bool rec = ShouldRecord({&a});
  Tensor y = MakeResult(a.shape(), std::move(out), rec);
  if (rec) {
    Tape::Current()->Record(y.shared_impl(), [ai = a.shared_impl(), o = y.impl()] {
      auto& g = ai->GradBuffer();
      for (std::size_t i = 0; i < g.size(); ++i) g[i] += o->grad[i] * ai->data[i];
    });
  }
  return y;
}

TEST_CASE("gradcheck flags a wrong backward") {
  Rng rng(12);
  auto a = Random({6}, rng);
  CHECK(MaxRelError([&] { return BrokenSquare(a); }, {a}, 12) > 0.3);
  CHECK(MaxRelError([&] { return Mul(a, a); }, {a}, 12) < 1e-8);
}

TEST_CASE("relative error definition") {
  CHECK(RelativeError({1, 0}, {1, 0}) == 0.0);
  CHECK(RelativeError({0, 0}, {0, 0}) == 0.0);
  CHECK(RelativeError({3, 4}, {0, 0}) == doctest::Approx(1.0));
}

}  // namespace
}  // namespace audiotext::ag
