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

#ifndef AUDIOTEXT_RECOGNIZER_CTC_H_
#define AUDIOTEXT_RECOGNIZER_CTC_H_

#include <string>
#include <span>
#include <string_view>
#include <vector>

#include "audiotext/autograd/tensor.h"

namespace audiotext::rec {

// Class layout: 0 = blank, 1..26 = 'a'..'z', 27 = pad (never emitted).
inline constexpr int kBlank = 0;
inline constexpr int kPad = 27;
inline constexpr int kNumClasses = 28;

using LabelSeq = std::vector<int>;

LabelSeq EncodeLabel(std::string_view word);
std::string DecodeLabel(const LabelSeq& label);

// True iff some length-T frame labeling collapses to `label`: T must cover
// each label plus one blank between every pair of equal neighbours.
bool CtcAlignable(const LabelSeq& label, std::size_t num_frames);

// Negative log-likelihood of `label` under per-frame log-probabilities
// `log_probs` [T, C], summed over all blank-augmented alignments. Labels use
// classes 1..C-1; class 0 is the blank. Throws "label unalignable" when no
// alignment exists.
ag::Tensor CtcLoss(const ag::Tensor& log_probs, const LabelSeq& label);

// Batched form: log_probs [B, T, C] -> per-sample losses [B].
ag::Tensor CtcLossBatch(const ag::Tensor& log_probs, const std::vector<LabelSeq>& labels);

// Per-frame argmax (lowest index on ties), collapse repeats, drop blanks
// and pads. Rows of `log_probs` are frames.
LabelSeq CtcGreedyDecode(std::span<const double> log_probs, std::size_t num_classes);

// [B, T, C] -> one decoded word per sample.
std::vector<std::string> CtcGreedyDecodeBatch(const ag::Tensor& log_probs);

}  // namespace audiotext::rec

#endif  // AUDIOTEXT_RECOGNIZER_CTC_H_
