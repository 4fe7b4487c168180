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

#ifndef AUDIOTEXT_SYNTHDATA_SPEECH_H_
#define AUDIOTEXT_SYNTHDATA_SPEECH_H_

#include <span>
#include <string>
#include <string_view>

#include "audiotext/dsp/dsp.h"

namespace audiotext::synth {

// Deterministic stand-in for a speaker: scales both formant frequencies.
struct VoiceProfile {
  std::string_view name;
  double freq_scale;
};

// female_a, female_b, male_a, male_b.
std::span<const VoiceProfile> AllVoiceProfiles();
const VoiceProfile& GetVoiceProfile(std::string_view name);

inline constexpr int kSegmentSamples = 2205;  // 100 ms at 22050 Hz
inline constexpr int kFadeSamples = 110;      // 5 ms at 22050 Hz

// Each letter k contributes one segment of
//   0.4 sin(2 pi f1 t) + 0.4 sin(2 pi f2 t),
//   f1 = (200 + 40k) * scale,  f2 = (1200 + 55k) * scale,
// with t measured from the segment start and linear fades at both ends.
dsp::Waveform SynthSpeech(std::string_view label, const VoiceProfile& voice);

}  // namespace audiotext::synth

#endif  // AUDIOTEXT_SYNTHDATA_SPEECH_H_
