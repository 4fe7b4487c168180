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

#ifndef AUDIOTEXT_DSP_FFT_H_
#define AUDIOTEXT_DSP_FFT_H_

#include <complex>
#include <memory>
#include <span>

namespace audiotext::dsp {

// Complex forward FFT of a fixed size, backed by FFTW. Not thread-safe to
// construct concurrently; Forward() on distinct buffers is safe.
class FftPlan {
 public:
  explicit FftPlan(std::size_t size);
  ~FftPlan();
  FftPlan(const FftPlan&) = delete;
  FftPlan& operator=(const FftPlan&) = delete;

  std::size_t size() const { return size_; }

  // In place: X[k] = sum_n x[n] exp(-2*pi*i*k*n/N), unnormalized.
  void Forward(std::span<std::complex<double>> data) const;

 private:
  struct Impl;
  std::size_t size_;
  std::unique_ptr<Impl> impl_;
};

bool IsPowerOfTwo(std::size_t n);

}  // namespace audiotext::dsp

#endif  // AUDIOTEXT_DSP_FFT_H_
