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

#include "audiotext/dsp/fft.h"

#include <fftw3.h>

#include <vector>

#include "audiotext/error.h"

namespace audiotext::dsp {

struct FftPlan::Impl {
  fftw_plan plan = nullptr;
};

FftPlan::FftPlan(std::size_t size) : size_(size), impl_(std::make_unique<Impl>()) {
  if (size == 0) throw Error(ErrorKind::kInvalidArgument, "fft size must be positive");
  std::vector<std::complex<double>> scratch(size);
  auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
  impl_->plan = fftw_plan_dft_1d(static_cast<int>(size), buf, buf, FFTW_FORWARD,
                                 FFTW_ESTIMATE | FFTW_UNALIGNED);
  if (impl_->plan == nullptr) throw Error(ErrorKind::kState, "fftw failed to create a plan");
}

FftPlan::~FftPlan() {
  if (impl_ && impl_->plan) fftw_destroy_plan(impl_->plan);
}

void FftPlan::Forward(std::span<std::complex<double>> data) const {
  if (data.size() != size_) {
    throw Error(ErrorKind::kShapeMismatch, "fft buffer has " + std::to_string(data.size()) +
                                               " points, plan expects " + std::to_string(size_));
  }
  auto* buf = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(impl_->plan, buf, buf);
}

bool IsPowerOfTwo(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace audiotext::dsp
