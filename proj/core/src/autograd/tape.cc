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

#include "audiotext/autograd/tape.h"

#include <cmath>

#include "audiotext/error.h"

namespace audiotext::ag {
namespace {

thread_local Tape* g_current_tape = nullptr;
thread_local bool g_finite_checks = false;

}  // namespace

void Tape::Record(std::shared_ptr<TensorImpl> output, BackwardFn backward) {
  if (consumed_) {
    throw Error(ErrorKind::kState, "recording onto a tape that already ran backward; Clear() it");
  }
  entries_.push_back({std::move(output), std::move(backward)});
}

void Tape::Backward(const Tensor& loss) {
  if (consumed_) throw Error(ErrorKind::kState, "backward called twice without resetting the tape");
  if (!loss.defined() || loss.numel() != 1) {
    throw Error(ErrorKind::kShapeMismatch,
                "backward needs a scalar loss, got shape " +
                    (loss.defined() ? ShapeString(loss.shape()) : std::string("<undefined>")));
  }
  if (!loss.requires_grad()) {
    throw Error(ErrorKind::kState, "loss is not connected to the tape");
  }
  consumed_ = true;
  loss.impl()->GradBuffer()[0] += 1.0;
  for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) {
    if (!it->output->grad.empty()) it->backward();
  }
}

void Tape::Clear() {
  entries_.clear();
  consumed_ = false;
}

Tape* Tape::Current() { return g_current_tape; }

TapeScope::TapeScope(Tape& tape) : previous_(g_current_tape) { g_current_tape = &tape; }
TapeScope::~TapeScope() { g_current_tape = previous_; }

NoGradScope::NoGradScope() : previous_(g_current_tape) { g_current_tape = nullptr; }
NoGradScope::~NoGradScope() { g_current_tape = previous_; }

void SetFiniteChecks(bool enabled) { g_finite_checks = enabled; }
bool FiniteChecksEnabled() { return g_finite_checks; }

bool ShouldRecord(std::initializer_list<const Tensor*> inputs) {
  if (g_current_tape == nullptr) return false;
  for (const Tensor* t : inputs) {
    if (t != nullptr && t->defined() && t->requires_grad()) return true;
  }
  return false;
}

Tensor MakeResult(Shape shape, std::vector<double> data, bool record) {
  return Tensor::FromData(std::move(shape), std::move(data), record);
}

void CheckFinite(std::string_view op, const Tensor& out) {
  if (!g_finite_checks) return;
  for (double v : out.data()) {
    if (!std::isfinite(v)) {
      throw Error(ErrorKind::kNumeric, "non-finite value produced by " + std::string(op));
    }
  }
}

void Backward(const Tensor& loss) {
  Tape* tape = Tape::Current();
  if (tape == nullptr) throw Error(ErrorKind::kState, "backward without an active tape");
  tape->Backward(loss);
}

}  // namespace audiotext::ag
