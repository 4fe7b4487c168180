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

#ifndef AUDIOTEXT_AUTOGRAD_TAPE_H_
#define AUDIOTEXT_AUTOGRAD_TAPE_H_

#include <functional>
#include <memory>
#include <string_view>
#include <vector>

#include "audiotext/autograd/tensor.h"

namespace audiotext::ag {

// Records differentiable operations in execution order (hence topologically
// sorted). Ops record only while a tape is installed on the current thread
// through TapeScope and at least one input requires a gradient; without an
// installed tape every op is a plain forward computation.
class Tape {
 public:
  using BackwardFn = std::function<void()>;

  Tape() = default;
  Tape(const Tape&) = delete;
  Tape& operator=(const Tape&) = delete;

  void Record(std::shared_ptr<TensorImpl> output, BackwardFn backward);

  // Seeds d(loss)/d(loss) = 1 and runs recorded backward functions in
  // reverse order. A tape may be run once per Clear().
  void Backward(const Tensor& loss);

  // Drops all records (and the intermediates they keep alive).
  void Clear();

  std::size_t size() const { return entries_.size(); }
  bool consumed() const { return consumed_; }

  // Tape installed on this thread, or nullptr.
  static Tape* Current();

 private:
  friend class TapeScope;

  struct Entry {
    std::shared_ptr<TensorImpl> output;
    BackwardFn backward;
  };

  std::vector<Entry> entries_;
  bool consumed_ = false;
};

// Installs `tape` as the current thread's tape for the scope's lifetime.
class TapeScope {
 public:
  explicit TapeScope(Tape& tape);
  ~TapeScope();
  TapeScope(const TapeScope&) = delete;
  TapeScope& operator=(const TapeScope&) = delete;

 private:
  Tape* previous_;
};

// Temporarily uninstalls the current tape (forward-only evaluation).
class NoGradScope {
 public:
  NoGradScope();
  ~NoGradScope();
  NoGradScope(const NoGradScope&) = delete;
  NoGradScope& operator=(const NoGradScope&) = delete;

 private:
  Tape* previous_;
};

// When enabled, every op verifies its output is finite and throws
// Error(kNumeric) naming the op otherwise. Thread-local; off by default.
void SetFiniteChecks(bool enabled);
bool FiniteChecksEnabled();

// Helpers for op implementations.
bool ShouldRecord(std::initializer_list<const Tensor*> inputs);
Tensor MakeResult(Shape shape, std::vector<double> data, bool record);
void CheckFinite(std::string_view op, const Tensor& out);

// Convenience: Tape::Current()->Backward(loss); throws if no tape.
void Backward(const Tensor& loss);

}  // namespace audiotext::ag

#endif  // AUDIOTEXT_AUTOGRAD_TAPE_H_
