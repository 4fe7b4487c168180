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

#ifndef AUDIOTEXT_AUDIO_MEL_LOSS_H_
#define AUDIOTEXT_AUDIO_MEL_LOSS_H_

#include "audiotext/autograd/tensor.h"

namespace audiotext::audio {

// Mean |pred - target| over frames whose mask entry is nonzero.
// pred, target: [B, T, F] or [T, F]; frame_mask: [B, T] or [T], or null for
// all frames. Throws when every frame is masked out.
ag::Tensor MaskedL1Loss(const ag::Tensor& pred, const ag::Tensor& target,
                        const ag::Tensor* frame_mask = nullptr);

}  // namespace audiotext::audio

#endif  // AUDIOTEXT_AUDIO_MEL_LOSS_H_
