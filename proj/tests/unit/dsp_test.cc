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
#include <complex>
#include <numbers>

#include "audiotext/dsp/dsp.h"
#include "audiotext/dsp/fft.h"
#include "audiotext/error.h"
#include "audiotext/rng.h"
#include "doctest.h"
#include "oracles.h"
#include "test_util.h"

namespace audiotext::dsp {
namespace {

std::vector<double> RandomSamples(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> x(n);
  for (double& v : x) v = rng.Uniform(-1.0, 1.0);
  return x;
}

using oracle::NaiveBin;

TEST_CASE("default config matches the reference settings") {
  const DspConfig cfg;
  CHECK(cfg.sample_rate == 22050);
  CHECK(cfg.win_length == 1102);
  CHECK(cfg.hop_length == 275);
  CHECK(cfg.fft_size == 2048);
  CHECK(cfg.n_mels == 80);
  CHECK(cfg.f_min == 0.0);
  CHECK(cfg.f_max == 11025.0);
  CHECK(cfg.log_floor == 1e-5);
  CHECK(cfg.NumBins() == 1025);
}

TEST_CASE("config string round trip and validation") {
  DspConfig cfg;
  cfg.hop_length = 300;
  cfg.log_floor = 1.5e-6;
  CHECK(DspConfig::FromString(cfg.ToString()) == cfg);
  DspConfig bad;
  bad.win_length = 4096;
  CHECK_THROWS_AS(bad.Validate(), Error);
  bad = DspConfig{};
  bad.f_max = 20000;
  CHECK_THROWS_AS(bad.Validate(), Error);
  bad = DspConfig{};
  bad.hop_length = 0;
  CHECK_THROWS_AS(bad.Validate(), Error);
}

TEST_CASE("waveform invariants") {
  CHECK_THROWS_AS(Waveform({}), Error);
  CHECK_THROWS_AS(Waveform({0.0, 1.5}), Error);
  CHECK_THROWS_AS(Waveform({0.0}, 16000), Error);
  try {
    Waveform({0.0, std::nan("")});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kNumeric);
    CHECK(std::string(e.what()) == "non-finite input");
  }
}

TEST_CASE("stereo wav is mixed down by channel mean") {
  io::WavData wav{22050, 2, {32767, -32767, 16384, 0}};
  const Waveform w = Waveform::FromWav(wav);
  REQUIRE(w.size() == 2);
  CHECK(w.samples()[0] == doctest::Approx(0.0));
  CHECK(w.samples()[1] == doctest::Approx(16384.0 / 32767.0 / 2.0));
}

TEST_CASE("frame count for one second of audio is 77") {
  const DspConfig cfg;
  CHECK(NumFrames(22050, cfg) == 77);
  const auto s = Stft(Waveform(std::vector<double>(22050, 0.0)), cfg);
  CHECK(s.num_frames() == 77);
  CHECK(s.real.cols() == 1025);
  CHECK(NumFrames(1102, cfg) == 1);
  CHECK(NumFrames(1101, cfg) == 0);
}

TEST_CASE("stft rejects short input") {
  try {
    Stft(Waveform(std::vector<double>(1101, 0.1)), DspConfig{});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()) == "waveform too short");
  }
}

TEST_CASE("constant signal under a rectangular window concentrates in bin 0") {
  const auto s = Stft(Waveform(std::vector<double>(1102, 1.0)), DspConfig{},
                      WindowKind::kRectangular);
  const auto mag = Magnitude(s).mag;
  CHECK(mag(0, 0) == doctest::Approx(1102.0).epsilon(1e-12));
  // The zero-padded box has spectral nulls only at multiples of 2048/1102;
  // compare against the closed form instead of zero for the other bins.
  double max_err = 0.0;
  for (int f = 1; f < 1025; ++f) {
    const double theta = std::numbers::pi * f / 2048.0;
    const double expected = std::abs(std::sin(1102 * theta) / std::sin(theta));
    max_err = std::max(max_err, std::abs(mag(0, f) - expected));
  }
  CHECK(max_err < 1e-9);
}

TEST_CASE("constant signal without zero padding has only a DC bin") {
  DspConfig cfg;
  cfg.win_length = 2048;
  const auto mag = Magnitude(Stft(Waveform(std::vector<double>(2048, 1.0)), cfg,
                                  WindowKind::kRectangular)).mag;
  CHECK(mag(0, 0) == doctest::Approx(2048.0).epsilon(1e-12));
  for (int f = 1; f < 1025; ++f) CHECK(mag(0, f) < 1e-9);
}

TEST_CASE("stft matches a naive DFT oracle") {
  DspConfig small;
  small.win_length = 64;
  small.hop_length = 64;
  small.fft_size = 64;
  small.n_mels = 4;
  const auto x = RandomSamples(64, 1);
  const auto s = Stft(Waveform(x), small);
  const auto w = HannWindow(64);
  double max_diff = 0.0;
  for (int f = 0; f <= 32; ++f) {
    const auto ref = NaiveBin(x, w, 0, f, 64);
    max_diff = std::max(max_diff, std::abs(ref - std::complex<double>(s.real(0, f), s.imag(0, f))));
  }
  CHECK(max_diff < 1e-9);
}

TEST_CASE("stft on a multi-frame signal matches the naive double sum") {
  const DspConfig cfg;
  const auto x = RandomSamples(4096, 2);
  const auto s = Stft(Waveform(x), cfg);
  REQUIRE(s.num_frames() == NumFrames(4096, cfg));
  const auto w = HannWindow(cfg.win_length);
  double max_diff = 0.0;
  for (std::size_t l = 0; l < s.num_frames(); ++l) {
    for (int f = 0; f < 1025; f += 37) {
      const auto ref = NaiveBin(x, w, l * 275, f, 2048);
      max_diff =
          std::max(max_diff, std::abs(ref - std::complex<double>(s.real(l, f), s.imag(l, f))));
    }
  }
  CHECK(max_diff < 1e-9);
}

TEST_CASE("parseval holds per frame") {
  const DspConfig cfg;
  const auto x = RandomSamples(3000, 3);
  const auto w = HannWindow(cfg.win_length);
  const FftPlan plan(2048);
  for (std::size_t l = 0; l < NumFrames(x.size(), cfg); ++l) {
    std::vector<std::complex<double>> buf(2048);
    double time_energy = 0.0;
    for (int n = 0; n < cfg.win_length; ++n) {
      buf[n] = x[l * 275 + n] * w[n];
      time_energy += std::norm(buf[n]);
    }
    plan.Forward(buf);
    double freq_energy = 0.0;
    for (const auto& c : buf) freq_energy += std::norm(c);
    CHECK(std::abs(freq_energy - 2048.0 * time_energy) / (2048.0 * time_energy) < 1e-9);
  }
}

TEST_CASE("magnitude uses hypot") {
  ComplexSpectrogram s{Matrix(1, 2), Matrix(1, 2)};
  s.real(0, 0) = 3;
  s.imag(0, 0) = 4;
  const auto m = Magnitude(s).mag;
  CHECK(m(0, 0) == 5.0);
  CHECK(m(0, 1) == 0.0);
  Rng rng(4);
  ComplexSpectrogram r{Matrix(3, 5), Matrix(3, 5)};
  for (double& v : r.real.data()) v = rng.Normal();
  for (double& v : r.imag.data()) v = rng.Normal();
  const auto rm = Magnitude(r).mag;
  for (std::size_t i = 0; i < rm.size(); ++i) {
    CHECK(rm.data()[i] == std::hypot(r.real.data()[i], r.imag.data()[i]));
  }
}

TEST_CASE("mel scale values") {
  CHECK(HzToMel(0.0) == 0.0);
  CHECK(HzToMel(700.0) == doctest::Approx(781.172838748).epsilon(1e-11));
  CHECK(std::abs(HzToMel(700.0) - 781.17) < 0.005);
  CHECK(std::abs(HzToMel(1000.0) - 1000.0) < 0.1);
  CHECK_THROWS_AS(HzToMel(-1.0), Error);
  double prev = -1.0;
  for (double f = 0.0; f <= 11025.0; f += 12.5) {
    const double m = HzToMel(f);
    CHECK(m > prev);
    prev = m;
    const double back = MelToHz(m);
    CHECK(std::abs(back - f) <= 1e-9 * std::max(f, 1.0));
  }
}

TEST_CASE("mel filterbank structure") {
  const DspConfig cfg;
  const auto fb = BuildMelFilterbank(cfg);
  REQUIRE(fb.weights.rows() == 80);
  REQUIRE(fb.weights.cols() == 1025);
  REQUIRE(fb.edge_hz.size() == 82);
  for (std::size_t i = 1; i < fb.edge_hz.size(); ++i) CHECK(fb.edge_hz[i] > fb.edge_hz[i - 1]);
  for (std::size_t j = 0; j < 80; ++j) {
    const auto row = fb.weights.row(j);
    int n_max = 0;
    for (double v : row) {
      CHECK(v >= 0.0);
      if (v == 1.0) ++n_max;
    }
    CHECK(n_max == 1);
    // Unimodal: non-decreasing up to the peak, non-increasing after.
    const auto peak = static_cast<std::size_t>(std::max_element(row.begin(), row.end()) - row.begin());
    for (std::size_t k = 1; k <= peak; ++k) CHECK(row[k] >= row[k - 1]);
    for (std::size_t k = peak + 1; k < row.size(); ++k) CHECK(row[k] <= row[k - 1]);
  }
}

TEST_CASE("filterbank rejects too coarse a resolution") {
  DspConfig cfg;
  cfg.fft_size = 128;
  cfg.win_length = 128;
  try {
    BuildMelFilterbank(cfg);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()) == "filterbank resolution too low");
  }
}

TEST_CASE("log-mel of silence is the floor") {
  const auto z = ComputeMelSpectrogram(Waveform(std::vector<double>(22050, 0.0)), DspConfig{});
  REQUIRE(z.frames.rows() == 77);
  REQUIRE(z.frames.cols() == 80);
  for (double v : z.frames.data()) CHECK(v == doctest::Approx(std::log(1e-5)));
  CHECK(std::log(1e-5) == doctest::Approx(-11.5129).epsilon(1e-5));
}

TEST_CASE("mel spectrogram equals filterbank product of the magnitude") {
  const DspConfig cfg;
  const Waveform w(RandomSamples(5000, 5));
  const auto mag = Magnitude(Stft(w, cfg)).mag;
  const auto fb = BuildMelFilterbank(cfg);
  const auto z = ComputeMelSpectrogram(w, cfg, SpectrogramFormat::kMel, false);
  for (std::size_t l = 0; l < mag.rows(); ++l) {
    for (std::size_t j = 0; j < 80; ++j) {
      double acc = 0.0;
      for (std::size_t k = 0; k < 1025; ++k) acc += fb.weights(j, k) * mag(l, k);
      CHECK(z.frames(l, j) == doctest::Approx(acc).epsilon(1e-12));
    }
  }
}

TEST_CASE("filterbank on an all-ones spectrum yields row sums") {
  const auto fb = BuildMelFilterbank(DspConfig{});
  for (std::size_t j = 0; j < 80; ++j) {
    double sum = 0.0;
    for (double v : fb.weights.row(j)) sum += v;
    const int lo = fb.edge_bins[j], hi = fb.edge_bins[j + 2];
    // Triangle over integer bins: (hi - lo) / 2 exactly.
    CHECK(sum == doctest::Approx((hi - lo) / 2.0));
  }
}

TEST_CASE("linear format has the same shape but different values") {
  const Waveform w(RandomSamples(22050, 6));
  const auto mel = ComputeMelSpectrogram(w, DspConfig{}, SpectrogramFormat::kMel);
  const auto lin = ComputeMelSpectrogram(w, DspConfig{}, SpectrogramFormat::kLinear);
  CHECK(lin.frames.rows() == 77);
  CHECK(lin.frames.cols() == 80);
  CHECK_FALSE(lin.frames == mel.frames);
  CHECK(ParseFormat("linear") == SpectrogramFormat::kLinear);
  CHECK_THROWS_AS(ParseFormat("bark"), Error);
}

TEST_CASE("group averaging covers every bin once") {
  Matrix m(1, 1025);
  for (std::size_t k = 0; k < 1025; ++k) m(0, k) = static_cast<double>(k);
  const auto g = GroupAverageBins(m, 80);
  double weighted = 0.0;
  for (int i = 0; i < 80; ++i) {
    const std::size_t b = i * 1025 / 80, e = (i + 1) * 1025 / 80;
    weighted += g(0, i) * static_cast<double>(e - b);
  }
  CHECK(weighted == doctest::Approx(1025.0 * 1024.0 / 2.0));
}

TEST_CASE("shift right") {
  MelSpectrogram z{Matrix(3, 2)};
  for (std::size_t i = 0; i < 6; ++i) z.frames.data()[i] = static_cast<double>(i + 1);
  const auto s = ShiftRight(z);
  CHECK(s.frames.row(0)[0] == 0.0);
  CHECK(s.frames.row(0)[1] == 0.0);
  CHECK(s.frames(1, 0) == 1.0);
  CHECK(s.frames(2, 1) == 4.0);
  MelSpectrogram one{Matrix(1, 3, 7.0)};
  CHECK(ShiftRight(one).frames == Matrix(1, 3, 0.0));
  Rng rng(7);
  MelSpectrogram r{Matrix(10, 80)};
  for (double& v : r.frames.data()) v = rng.Normal();
  const auto rs = ShiftRight(r);
  for (std::size_t t = 1; t < 10; ++t) {
    for (std::size_t j = 0; j < 80; ++j) CHECK(rs.frames(t, j) == r.frames(t - 1, j));
  }
  CHECK_FALSE(rs.frames == r.frames);
  MelSpectrogram zero{Matrix(4, 3)};
  CHECK(ShiftRight(zero).frames == zero.frames);
}

TEST_CASE("wav file round trip through waveform") {
  testing::TempDir dir("dsp");
  const Waveform w(RandomSamples(1000, 8));
  io::WriteWav(dir / "w.wav", w.ToWav());
  const Waveform back = Waveform::Load(dir / "w.wav");
  REQUIRE(back.size() == w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    CHECK(std::abs(back.samples()[i] - w.samples()[i]) <= 0.5 / 32767.0 + 1e-12);
  }
}

}  // namespace
}  // namespace audiotext::dsp
