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

#include "audiotext/synthdata/speech.h"

#include <array>
#include <cmath>
#include <numbers>

#include "audiotext/charset.h"
#include "audiotext/error.h"

namespace audiotext::synth {
namespace {

constexpr std::array<VoiceProfile, 4> kVoices = {{
    {"female_a", 1.0},
    {"female_b", 1.05},
    {"male_a", 0.70},
    {"male_b", 0.74},
}};

}  // namespace

std::span<const VoiceProfile> AllVoiceProfiles() { return kVoices; }

const VoiceProfile& GetVoiceProfile(std::string_view name) {
  for (const auto& v : kVoices) {
    if (v.name == name) return v;
  }
  throw Error(ErrorKind::kInvalidArgument, "unknown voice profile '" + std::string(name) +
                                               "' (female_a|female_b|male_a|male_b)");
}

dsp::Waveform SynthSpeech(std::string_view label, const VoiceProfile& voice) {
  if (label.empty()) throw Error(ErrorKind::kInvalidArgument, "empty label");
  if (!(voice.freq_scale > 0.3 && voice.freq_scale < 2.0)) {
    throw Error(ErrorKind::kInvalidArgument, "voice freq_scale outside (0.3, 2.0)");
  }
  std::vector<double> samples(label.size() * kSegmentSamples);
  const double two_pi = 2.0 * std::numbers::pi;
  for (std::size_t i = 0; i < label.size(); ++i) {
    const int k = CharIndex(label[i]);
    if (k < 0) {
      throw Error(ErrorKind::kInvalidArgument,
                  "character '" + std::string(1, label[i]) + "' outside charset a-z");
    }
    const double f1 = (200.0 + 40.0 * k) * voice.freq_scale;
    const double f2 = (1200.0 + 55.0 * k) * voice.freq_scale;
    double* seg = samples.data() + i * kSegmentSamples;
    for (int n = 0; n < kSegmentSamples; ++n) {
      const double t = static_cast<double>(n) / dsp::kSampleRate;
      double gain = 1.0;
      if (n < kFadeSamples) {
        gain = static_cast<double>(n) / kFadeSamples;
      } else if (n >= kSegmentSamples - kFadeSamples) {
        gain = static_cast<double>(kSegmentSamples - 1 - n) / kFadeSamples;
      }
      seg[n] = gain * (0.4 * std::sin(two_pi * f1 * t) + 0.4 * std::sin(two_pi * f2 * t));
    }
  }
  return dsp::Waveform(std::move(samples));
}

}  // namespace audiotext::synth
