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

#ifndef AUDIOTEXT_SRC_AUTOGRAD_OPS_INTERNAL_H_
#define AUDIOTEXT_SRC_AUTOGRAD_OPS_INTERNAL_H_

#include <Eigen/Core>
#include <utility>

#include "audiotext/autograd/tape.h"
#include "audiotext/autograd/tensor.h"

namespace audiotext::ag::internal {

using RowMat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ConstMatMap = Eigen::Map<const RowMat>;
using MatMap = Eigen::Map<RowMat>;

inline ConstMatMap AsMatrix(const std::vector<double>& v, Eigen::Index rows, Eigen::Index cols) {
  return ConstMatMap(v.data(), rows, cols);
}
inline MatMap AsMatrix(std::vector<double>& v, Eigen::Index rows, Eigen::Index cols) {
  return MatMap(v.data(), rows, cols);
}

template <typename F>
void RecordOp(const Tensor& out, F&& backward) {
  Tape::Current()->Record(out.shared_impl(), std::forward<F>(backward));
}

[[noreturn]] void ThrowShape(const std::string& op, const std::string& detail);

}  // namespace audiotext::ag::internal

#endif  // AUDIOTEXT_SRC_AUTOGRAD_OPS_INTERNAL_H_
