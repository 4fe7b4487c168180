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
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include "audiotext/charset.h"
#include "audiotext/error.h"
#include "audiotext/io/melt.h"
#include "audiotext/synthdata/dataset.h"
#include "audiotext/synthdata/font.h"
#include "audiotext/synthdata/image.h"
#include "audiotext/synthdata/speech.h"
#include "audiotext/synthdata/words.h"
#include "doctest.h"
#include "test_util.h"

namespace audiotext::synth {
namespace {

using testing::TempDir;

std::string ReadFile(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST_CASE("word list has 1000 unique lowercase words of length 3 to 8") {
  const auto words = WordList();
  REQUIRE(words.size() == 1000);
  std::set<std::string_view> unique(words.begin(), words.end());
  CHECK(unique.size() == 1000);
  for (auto w : words) {
    CHECK(w.size() >= 3);
    CHECK(w.size() <= 8);
    CHECK(InCharset(w));
  }
}

TEST_CASE("voice profiles") {
  CHECK(AllVoiceProfiles().size() == 4);
  CHECK(GetVoiceProfile("female_a").freq_scale == 1.0);
  CHECK(GetVoiceProfile("female_b").freq_scale == 1.05);
  CHECK(GetVoiceProfile("male_a").freq_scale == 0.70);
  CHECK(GetVoiceProfile("male_b").freq_scale == 0.74);
  CHECK_THROWS_AS(GetVoiceProfile("robot"), Error);
}

TEST_CASE("speech length is one segment per character") {
  CHECK(SynthSpeech("ab", GetVoiceProfile("female_a")).size() == 4410);
  CHECK(SynthSpeech("hello", GetVoiceProfile("male_b")).size() == 5 * 2205);
  CHECK_THROWS_AS(SynthSpeech("a1", GetVoiceProfile("female_a")), Error);
  CHECK_THROWS_AS(SynthSpeech("Ab", GetVoiceProfile("female_a")), Error);
}

TEST_CASE("speech sample formula") {
  const auto w = SynthSpeech("c", GetVoiceProfile("male_a"));
  const double f1 = (200.0 + 40.0 * 2) * 0.7, f2 = (1200.0 + 55.0 * 2) * 0.7;
  for (int n : {0, 50, 110, 500, 1500, 2094, 2100, 2204}) {
    double gain = 1.0;
    if (n < 110) gain = n / 110.0;
    if (n >= 2095) gain = (2204 - n) / 110.0;
    const double t = n / 22050.0;
    const double expected =
        gain * (0.4 * std::sin(2 * std::numbers::pi * f1 * t) + 0.4 * std::sin(2 * std::numbers::pi * f2 * t));
    CHECK(w.samples()[n] == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("speech is deterministic and edit-local") {
  const auto& v = GetVoiceProfile("female_a");
  const auto a = SynthSpeech("cat", v);
  CHECK(a.samples() == SynthSpeech("cat", v).samples());
  const auto b = SynthSpeech("cut", v);
  bool middle_differs = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i < 2205 || i >= 4410) {
      CHECK(a.samples()[i] == b.samples()[i]);
    } else if (a.samples()[i] != b.samples()[i]) {
      middle_differs = true;
    }
  }
  CHECK(middle_differs);
}

TEST_CASE("voices change audio but not images") {
  const auto a = SynthSpeech("word", GetVoiceProfile("female_a"));
  const auto b = SynthSpeech("word", GetVoiceProfile("male_a"));
  CHECK(a.samples() != b.samples());
  CHECK(RenderWordImage("word", CorruptionSpec::Regular(), 5) ==
        RenderWordImage("word", CorruptionSpec::Regular(), 5));
}

TEST_CASE("font glyphs are distinct") {
  std::set<std::array<std::uint8_t, kGlyphHeight>> seen;
  for (int i = 0; i < 26; ++i) seen.insert(GlyphRows(i));
  CHECK(seen.size() == 26);
}

TEST_CASE("regular rendering equals clean rasterization") {
  const auto clean = RasterizeWord("house");
  const auto img = RenderWordImage("house", CorruptionSpec::Regular(), 99);
  CHECK(img == clean.pixels);
  CHECK(img.rows() == 32);
  CHECK(img.cols() == 128);
  double ink = 0.0;
  for (double v : img.data()) {
    CHECK((v == 0.0 || v == 1.0));
    ink += v;
  }
  CHECK(ink > 0.0);
}

TEST_CASE("rasterized word is centred and glyph boxes are ordered") {
  const auto r = RasterizeWord("abc");
  REQUIRE(r.glyphs.size() == 3);
  const int left = r.glyphs.front().x;
  const int right = kImageWidth - (r.glyphs.back().x + r.glyphs.back().width);
  CHECK(std::abs(left - right) <= 1);
  for (std::size_t i = 1; i < r.glyphs.size(); ++i) CHECK(r.glyphs[i].x > r.glyphs[i - 1].x);
  for (const auto& g : r.glyphs) {
    CHECK(g.y >= 0);
    CHECK(g.y + g.height <= kImageHeight);
  }
}

TEST_CASE("long labels are rejected") {
  CHECK_NOTHROW(RasterizeWord(std::string(20, 'a')));
  try {
    RasterizeWord(std::string(21, 'a'));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()) == "label exceeds canvas");
  }
}

TEST_CASE("rendering is deterministic given the seed") {
  const auto spec = CorruptionSpec::Noisy();
  CHECK(RenderWordImage("tiger", spec, 1) == RenderWordImage("tiger", spec, 1));
  CHECK_FALSE(RenderWordImage("tiger", spec, 1) == RenderWordImage("tiger", spec, 2));
  for (double v : RenderWordImage("tiger", spec, 1).data()) {
    CHECK(v >= 0.0);
    CHECK(v <= 1.0);
  }
}

TEST_CASE("full occlusion of glyph 0 fills its bounding box") {
  CorruptionSpec spec = CorruptionSpec::Regular();
  spec.split = Split::kOccluded;
  spec.occlusion_frac = 1.0;
  spec.occluded_glyph = 0;
  const auto box = RasterizeWord("zebra").glyphs[0];
  const auto img = RenderWordImage("zebra", spec, 3);
  for (int y = box.y; y < box.y + box.height; ++y) {
    for (int x = box.x; x < box.x + box.width; ++x) CHECK(img(y, x) == kOccluderValue);
  }
  const auto clean = RasterizeWord("zebra").pixels;
  for (int y = 0; y < kImageHeight; ++y) {
    for (int x = box.x + box.width; x < kImageWidth; ++x) CHECK(img(y, x) == clean(y, x));
  }
}

TEST_CASE("corruption spec validation and presets") {
  CorruptionSpec bad;
  bad.blur_passes = 5;
  CHECK_THROWS_AS(bad.Validate(), Error);
  bad = {};
  bad.occlusion_frac = 1.5;
  CHECK_THROWS_AS(bad.Validate(), Error);
  bad = {};
  bad.noise_sigma = -0.1;
  CHECK_THROWS_AS(bad.Validate(), Error);
  CHECK(CorruptionSpec::ForTestSplit(Split::kOccluded).occlusion_frac > 0.0);
  CHECK(CorruptionSpec::ForTestSplit(Split::kNoisy).noise_sigma > 0.0);
  CHECK_THROWS_AS(CorruptionSpec::ForTestSplit(Split::kTrain), Error);
  CHECK(ParseSplit(SplitName(Split::kNoisy)) == Split::kNoisy);
  Rng rng(1);
  for (int i = 0; i < 200; ++i) CHECK_NOTHROW(CorruptionSpec::SampleTrain(rng).Validate());
}

TEST_CASE("gray8 conversion round trip") {
  const auto img = RenderWordImage("quiet", CorruptionSpec::Noisy(), 4);
  const auto back = FromGray8(ToGray8(img));
  for (std::size_t i = 0; i < img.size(); ++i) {
    CHECK(std::abs(back.data()[i] - img.data()[i]) <= 0.5 / 255.0 + 1e-12);
  }
}

GenerateConfig SmallConfig(const std::filesystem::path& dir, std::uint64_t seed) {
  GenerateConfig cfg;
  cfg.out_dir = dir;
  cfg.global_seed = seed;
  cfg.n_train = 10;
  cfg.n_test_per_split = 2;
  return cfg;
}

TEST_CASE("dataset generation writes every file and stats") {
  TempDir dir("synth");
  const auto m = GenerateDataset(SmallConfig(dir.path(), 42));
  REQUIRE(m.records.size() == 16);
  int n_train = 0;
  std::set<std::string> ids;
  for (const auto& r : m.records) {
    ids.insert(r.id);
    n_train += r.split == Split::kTrain;
    CHECK(std::filesystem::exists(dir.path() / r.image_path));
    CHECK(std::filesystem::exists(dir.path() / r.audio_path));
    CHECK(r.label.size() >= 3);
    CHECK(r.label.size() <= 8);
  }
  CHECK(ids.size() == 16);
  CHECK(n_train == 10);
  CHECK(std::filesystem::exists(dir / "manifest.tsv"));
  CHECK(io::LoadMelt(dir.path() / m.mel_mean_path).shape == std::vector<std::uint32_t>{80});
}

TEST_CASE("same seed gives byte-identical manifests, different seeds differ") {
  TempDir a("synth"), b("synth"), c("synth");
  GenerateDataset(SmallConfig(a.path(), 7));
  GenerateDataset(SmallConfig(b.path(), 7));
  const auto mc = GenerateDataset(SmallConfig(c.path(), 8));
  CHECK(ReadFile(a / "manifest.tsv") == ReadFile(b / "manifest.tsv"));
  CHECK(ReadFile(a / "images/train_00003.pgm") == ReadFile(b / "images/train_00003.pgm"));
  const auto ma = DatasetManifest::Load(a / "manifest.tsv");
  std::vector<std::string> la, lc;
  for (const auto& r : ma.records) la.push_back(r.label);
  for (const auto& r : mc.records) lc.push_back(r.label);
  CHECK(la != lc);
}

TEST_CASE("load round trip preserves records") {
  TempDir dir("synth");
  const auto m = GenerateDataset(SmallConfig(dir.path(), 3));
  const auto ds = Dataset::Load(dir.path());
  CHECK(ds.manifest().records == m.records);
  CHECK(ds.manifest().global_seed == 3);
  CHECK(ds.Records(Split::kTrain).size() == 10);
  CHECK(ds.Records(Split::kNoisy).size() == 2);
  const auto img = ds.LoadImage(*ds.Records(Split::kRegular)[0]);
  CHECK(img.rows() == 32);
  CHECK(img.cols() == 128);
}

TEST_CASE("stats come from the train split only") {
  TempDir dir("synth");
  const auto m = GenerateDataset(SmallConfig(dir.path(), 11));
  const auto ds = Dataset::Load(dir.path());
  StatsAccumulator acc(80);
  for (const auto* r : ds.Records(Split::kTrain)) {
    acc.Add(dsp::ComputeMelSpectrogram(ds.LoadAudio(*r), dsp::DspConfig{}));
  }
  const auto stats = acc.Finish();
  const auto& stored = ds.Stats(dsp::SpectrogramFormat::kMel);
  for (int j = 0; j < 80; ++j) {
    CHECK(stored.mean[j] == doctest::Approx(stats.mean[j]).epsilon(1e-12));
    CHECK(stored.stddev[j] == doctest::Approx(stats.stddev[j]).epsilon(1e-12));
  }
}

TEST_CASE("loaded mel target equals the normalized dsp pipeline") {
  TempDir dir("synth");
  GenerateDataset(SmallConfig(dir.path(), 5));
  const auto ds = Dataset::Load(dir.path());
  const auto* r = ds.Records(Split::kTrain)[2];
  const auto target = ds.LoadMelTarget(*r, dsp::SpectrogramFormat::kMel);
  const auto raw = dsp::ComputeMelSpectrogram(
      dsp::Waveform::Load(dir.path() / r->audio_path), dsp::DspConfig{});
  const auto& st = ds.Stats(dsp::SpectrogramFormat::kMel);
  REQUIRE(target.frames.rows() == raw.frames.rows());
  for (std::size_t t = 0; t < raw.frames.rows(); ++t) {
    for (std::size_t j = 0; j < 80; ++j) {
      CHECK(target.frames(t, j) ==
            doctest::Approx((raw.frames(t, j) - st.mean[j]) / st.stddev[j]).epsilon(1e-12));
    }
  }
}

TEST_CASE("load errors: missing file names the record, config mismatch, bad stats") {
  TempDir dir("synth");
  GenerateDataset(SmallConfig(dir.path(), 5));
  std::filesystem::remove(dir / "audio/train_00004.wav");
  try {
    Dataset::Load(dir.path());
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("train_00004") != std::string::npos);
  }

  TempDir dir2("synth");
  GenerateDataset(SmallConfig(dir2.path(), 5));
  dsp::DspConfig other;
  other.hop_length = 256;
  CHECK_THROWS_AS(Dataset::Load(dir2.path(), other), Error);
  {
    std::fstream f(dir2 / "stats/mel_mean.melt", std::ios::in | std::ios::out | std::ios::binary);
    f.write("XXXX", 4);
  }
  try {
    Dataset::Load(dir2.path());
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kFormat);
  }
}

}  // namespace
}  // namespace audiotext::synth
