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

#include "audiotext/dsp/dsp.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <sstream>

#include "audiotext/dsp/fft.h"
#include "audiotext/error.h"

namespace audiotext::dsp {
namespace {

std::string FormatDouble(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

double ParseDouble(std::string_view s, std::string_view key) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorKind::kFormat, "dsp config: bad value for " + std::string(key));
  }
  return v;
}

int ParseInt(std::string_view s, std::string_view key) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorKind::kFormat, "dsp config: bad value for " + std::string(key));
  }
  return v;
}

}  // namespace

void DspConfig::Validate() const {
  auto fail = [](const std::string& what) {
    throw Error(ErrorKind::kInvalidArgument, "invalid dsp config: " + what);
  };
  if (sample_rate <= 0) fail("sample_rate must be positive");
  if (win_length < 1 || win_length > fft_size) fail("need 1 <= win_length <= fft_size");
  if (hop_length < 1) fail("hop_length must be >= 1");
  if (!IsPowerOfTwo(static_cast<std::size_t>(fft_size))) fail("fft_size must be a power of two");
  if (n_mels < 1) fail("n_mels must be >= 1");
  if (!(f_min >= 0.0 && f_min < f_max && f_max <= sample_rate / 2.0)) {
    fail("need 0 <= f_min < f_max <= sample_rate / 2");
  }
  if (!(log_floor > 0.0)) fail("log_floor must be positive");
}

std::string DspConfig::ToString() const {
  std::ostringstream os;
  os << "sample_rate=" << sample_rate << " win_length=" << win_length
     << " hop_length=" << hop_length << " fft_size=" << fft_size << " n_mels=" << n_mels
     << " f_min=" << FormatDouble(f_min) << " f_max=" << FormatDouble(f_max)
     << " log_floor=" << FormatDouble(log_floor);
  return os.str();
}

DspConfig DspConfig::FromString(std::string_view text) {
  std::map<std::string, std::string, std::less<>> kv;
  std::istringstream is{std::string(text)};
  std::string token;
  while (is >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::kFormat, "dsp config: bad token " + token);
    kv[token.substr(0, eq)] = token.substr(eq + 1);
  }
  auto get = [&](std::string_view key) -> const std::string& {
    auto it = kv.find(key);
    if (it == kv.end()) throw Error(ErrorKind::kFormat, "dsp config: missing " + std::string(key));
    return it->second;
  };
  DspConfig cfg;
  cfg.sample_rate = ParseInt(get("sample_rate"), "sample_rate");
  cfg.win_length = ParseInt(get("win_length"), "win_length");
  cfg.hop_length = ParseInt(get("hop_length"), "hop_length");
  cfg.fft_size = ParseInt(get("fft_size"), "fft_size");
  cfg.n_mels = ParseInt(get("n_mels"), "n_mels");
  cfg.f_min = ParseDouble(get("f_min"), "f_min");
  cfg.f_max = ParseDouble(get("f_max"), "f_max");
  cfg.log_floor = ParseDouble(get("log_floor"), "log_floor");
  if (kv.size() != 8) throw Error(ErrorKind::kFormat, "dsp config: unexpected keys");
  cfg.Validate();
  return cfg;
}

Waveform::Waveform(std::vector<double> samples, int sample_rate)
    : samples_(std::move(samples)), sample_rate_(sample_rate) {
  if (sample_rate_ != kSampleRate) {
    throw Error(ErrorKind::kInvalidArgument,
                "unsupported sample rate " + std::to_string(sample_rate_) + " (expected 22050)");
  }
  if (samples_.empty()) throw Error(ErrorKind::kInvalidArgument, "empty waveform");
  for (double s : samples_) {
    if (!std::isfinite(s)) throw Error(ErrorKind::kNumeric, "non-finite input");
    if (std::abs(s) > 1.0) throw Error(ErrorKind::kInvalidArgument, "sample outside [-1, 1]");
  }
}

Waveform Waveform::FromWav(const io::WavData& wav) {
  const std::size_t frames = wav.NumFrames();
  std::vector<double> mono(frames, 0.0);
  for (std::size_t i = 0; i < frames; ++i) {
    double acc = 0.0;
    for (int c = 0; c < wav.channels; ++c) {
      acc += io::FromPcm16(wav.interleaved[i * wav.channels + c]);
    }
    mono[i] = acc / wav.channels;
  }
  return Waveform(std::move(mono), wav.sample_rate);
}

Waveform Waveform::Load(const std::filesystem::path& path) {
  return FromWav(io::ReadWav(path));
}

io::WavData Waveform::ToWav() const {
  io::WavData wav;
  wav.sample_rate = sample_rate_;
  wav.channels = 1;
  wav.interleaved.reserve(samples_.size());
  for (double s : samples_) wav.interleaved.push_back(io::ToPcm16(s));
  return wav;
}

std::string_view FormatName(SpectrogramFormat format) {
  return format == SpectrogramFormat::kMel ? "mel" : "linear";
}

SpectrogramFormat ParseFormat(std::string_view name) {
  if (name == "mel") return SpectrogramFormat::kMel;
  if (name == "linear") return SpectrogramFormat::kLinear;
  throw Error(ErrorKind::kInvalidArgument,
              "unknown spectrogram format '" + std::string(name) + "' (mel|linear)");
}

std::vector<double> HannWindow(int length) {
  std::vector<double> w(static_cast<std::size_t>(length));
  for (int n = 0; n < length; ++n) {
    w[n] = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * n / length);
  }
  return w;
}

std::vector<double> MakeWindow(WindowKind kind, int length) {
  if (kind == WindowKind::kRectangular) return std::vector<double>(length, 1.0);
  return HannWindow(length);
}

std::size_t NumFrames(std::size_t num_samples, const DspConfig& cfg) {
  const auto win = static_cast<std::size_t>(cfg.win_length);
  if (num_samples < win) return 0;
  return 1 + (num_samples - win) / static_cast<std::size_t>(cfg.hop_length);
}

ComplexSpectrogram Stft(const Waveform& w, const DspConfig& cfg, WindowKind window) {
  cfg.Validate();
  if (w.sample_rate() != cfg.sample_rate) {
    throw Error(ErrorKind::kInvalidArgument, "waveform sample rate does not match dsp config");
  }
  if (w.size() < static_cast<std::size_t>(cfg.win_length)) {
    throw Error(ErrorKind::kInvalidArgument, "waveform too short");
  }
  const std::size_t frames = NumFrames(w.size(), cfg);
  const std::size_t bins = static_cast<std::size_t>(cfg.NumBins());
  const auto win = MakeWindow(window, cfg.win_length);
  const FftPlan plan(static_cast<std::size_t>(cfg.fft_size));

  ComplexSpectrogram out{Matrix(frames, bins), Matrix(frames, bins)};
  std::vector<std::complex<double>> buf(static_cast<std::size_t>(cfg.fft_size));
  const auto& x = w.samples();
  for (std::size_t l = 0; l < frames; ++l) {
    const std::size_t start = l * static_cast<std::size_t>(cfg.hop_length);
    std::fill(buf.begin(), buf.end(), std::complex<double>{});
    for (int n = 0; n < cfg.win_length; ++n) buf[n] = x[start + n] * win[n];
    plan.Forward(buf);
    for (std::size_t f = 0; f < bins; ++f) {
      out.real(l, f) = buf[f].real();
      out.imag(l, f) = buf[f].imag();
    }
  }
  return out;
}

LinearSpectrogram Magnitude(const ComplexSpectrogram& s) {
  if (s.real.rows() != s.imag.rows() || s.real.cols() != s.imag.cols()) {
    throw Error(ErrorKind::kShapeMismatch, "real/imag spectrogram shapes differ");
  }
  LinearSpectrogram out{Matrix(s.real.rows(), s.real.cols())};
  const auto& re = s.real.data();
  const auto& im = s.imag.data();
  auto& mag = out.mag.data();
  for (std::size_t i = 0; i < mag.size(); ++i) mag[i] = std::hypot(re[i], im[i]);
  return out;
}

double HzToMel(double hz) {
  if (!(hz >= 0.0)) throw Error(ErrorKind::kInvalidArgument, "negative frequency");
  return 2595.0 * std::log10(1.0 + hz / 700.0);
}

double MelToHz(double mel) {
  if (!(mel >= 0.0)) throw Error(ErrorKind::kInvalidArgument, "negative mel value");
  return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0);
}

MelFilterbank BuildMelFilterbank(const DspConfig& cfg) {
  cfg.Validate();
  const int n_edges = cfg.n_mels + 2;
  const int bins = cfg.NumBins();
  const double mel_lo = HzToMel(cfg.f_min);
  const double mel_hi = HzToMel(cfg.f_max);

  MelFilterbank fb;
  fb.edge_bins.resize(n_edges);
  fb.edge_hz.resize(n_edges);
  for (int i = 0; i < n_edges; ++i) {
    const double mel = mel_lo + (mel_hi - mel_lo) * i / (n_edges - 1);
    const double hz = MelToHz(mel);
    const long bin = std::lround(hz * cfg.fft_size / cfg.sample_rate);
    fb.edge_bins[i] = static_cast<int>(std::clamp<long>(bin, 0, bins - 1));
    fb.edge_hz[i] = static_cast<double>(fb.edge_bins[i]) * cfg.sample_rate / cfg.fft_size;
    if (i > 0 && fb.edge_bins[i] <= fb.edge_bins[i - 1]) {
      throw Error(ErrorKind::kInvalidArgument, "filterbank resolution too low");
    }
  }

  fb.weights = Matrix(static_cast<std::size_t>(cfg.n_mels), static_cast<std::size_t>(bins));
  for (int j = 0; j < cfg.n_mels; ++j) {
    const int lo = fb.edge_bins[j];
    const int mid = fb.edge_bins[j + 1];
    const int hi = fb.edge_bins[j + 2];
    for (int k = lo; k <= mid; ++k) {
      fb.weights(j, k) = static_cast<double>(k - lo) / (mid - lo);
    }
    for (int k = mid + 1; k <= hi; ++k) {
      fb.weights(j, k) = static_cast<double>(hi - k) / (hi - mid);
    }
  }
  return fb;
}

Matrix GroupAverageBins(const Matrix& mag, int n_out) {
  const std::size_t bins = mag.cols();
  if (n_out < 1 || static_cast<std::size_t>(n_out) > bins) {
    throw Error(ErrorKind::kInvalidArgument, "cannot group " + std::to_string(bins) +
                                                 " bins into " + std::to_string(n_out));
  }
  Matrix out(mag.rows(), static_cast<std::size_t>(n_out));
  for (int g = 0; g < n_out; ++g) {
    const std::size_t begin = static_cast<std::size_t>(g) * bins / n_out;
    const std::size_t end = static_cast<std::size_t>(g + 1) * bins / n_out;
    for (std::size_t r = 0; r < mag.rows(); ++r) {
      double acc = 0.0;
      for (std::size_t k = begin; k < end; ++k) acc += mag(r, k);
      out(r, g) = acc / static_cast<double>(end - begin);
    }
  }
  return out;
}

MelSpectrogram ComputeMelSpectrogram(const Waveform& w, const DspConfig& cfg,
                                     SpectrogramFormat format, bool log_compress) {
  const LinearSpectrogram lin = Magnitude(Stft(w, cfg));
  MelSpectrogram out;
  if (format == SpectrogramFormat::kMel) {
    const MelFilterbank fb = BuildMelFilterbank(cfg);
    out.frames = Matrix(lin.mag.rows(), static_cast<std::size_t>(cfg.n_mels));
    for (std::size_t l = 0; l < lin.mag.rows(); ++l) {
      const auto frame = lin.mag.row(l);
      for (int j = 0; j < cfg.n_mels; ++j) {
        double acc = 0.0;
        for (int k = fb.edge_bins[j]; k <= fb.edge_bins[j + 2]; ++k) {
          acc += fb.weights(j, k) * frame[k];
        }
        out.frames(l, j) = acc;
      }
    }
  } else {
    out.frames = GroupAverageBins(lin.mag, cfg.n_mels);
  }
  if (log_compress) {
    for (double& v : out.frames.data()) v = std::log(std::max(v, cfg.log_floor));
  }
  return out;
}

MelSpectrogram ShiftRight(const MelSpectrogram& z) {
  const auto& in = z.frames;
  MelSpectrogram out{Matrix(in.rows(), in.cols())};
  for (std::size_t t = 1; t < in.rows(); ++t) {
    std::copy(in.row(t - 1).begin(), in.row(t - 1).end(), out.frames.row(t).begin());
  }
  return out;
}

}  // namespace audiotext::dsp
