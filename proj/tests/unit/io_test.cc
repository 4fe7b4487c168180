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
#include <set>

#include "audiotext/error.h"
#include "audiotext/io/melt.h"
#include "audiotext/io/named_table.h"
#include "audiotext/io/pgm.h"
#include "audiotext/io/wav.h"
#include "audiotext/rng.h"
#include "doctest.h"
#include "test_util.h"

namespace audiotext {
namespace {

using testing::TempDir;

TEST_CASE("splitmix64 matches the reference sequence") {
  // Reference outputs of the public-domain splitmix64 generator seeded with 0.
  std::uint64_t state = 0;
  const std::uint64_t expected[] = {0xE220A8397B1DCDAFull, 0x6E789E6AA1B965F4ull,
                                    0x06C45D188009454Full};
  for (std::uint64_t e : expected) {
    CHECK(SplitMix64(state) == e);
    state += 0x9E3779B97F4A7C15ull;
  }
}

TEST_CASE("derived seeds are distinct and reproducible") {
  std::set<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < 1000; ++i) seen.insert(DeriveSeed(42, i));
  CHECK(seen.size() == 1000);
  CHECK(DeriveSeed(42, 7) == DeriveSeed(42, 7));
  CHECK(DeriveSeed(42, 7) != DeriveSeed(43, 7));
}

TEST_CASE("rng distributions have the expected moments") {
  Rng rng(123);
  const int n = 200000;
  double su = 0, sn = 0, sn2 = 0;
  std::uint64_t hist[5] = {};
  for (int i = 0; i < n; ++i) {
    const double u = rng.Uniform();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    su += u;
    const double z = rng.Normal();
    sn += z;
    sn2 += z * z;
    const auto k = rng.UniformInt(5);
    REQUIRE(k < 5);
    ++hist[k];
  }
  CHECK(su / n == doctest::Approx(0.5).epsilon(0.01));
  CHECK(std::abs(sn / n) < 0.01);
  CHECK(sn2 / n == doctest::Approx(1.0).epsilon(0.02));
  for (auto h : hist) CHECK(static_cast<double>(h) / n == doctest::Approx(0.2).epsilon(0.03));
}

TEST_CASE("shuffle is a seeded permutation") {
  std::vector<int> a(50), b(50);
  for (int i = 0; i < 50; ++i) a[i] = b[i] = i;
  Rng r1(9), r2(9);
  r1.Shuffle(std::span<int>(a));
  r2.Shuffle(std::span<int>(b));
  CHECK(a == b);
  std::set<int> s(a.begin(), a.end());
  CHECK(s.size() == 50);
}

TEST_CASE("melt round trip and byte layout") {
  TempDir dir("io");
  io::RawTensor t{{2, 3}, {1, 2, 3, 4, 5, -6.5}};
  io::SaveMelt(dir / "t.melt", t);
  const auto back = io::LoadMelt(dir / "t.melt");
  CHECK(back.shape == t.shape);
  CHECK(back.data == t.data);

  std::ifstream in(dir / "t.melt", std::ios::binary);
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)), {});
  REQUIRE(bytes.size() == 4 + 4 + 2 * 4 + 6 * 8);
  CHECK(std::string(bytes.begin(), bytes.begin() + 4) == "MELT");
  CHECK(bytes[4] == 2);  // rank, little-endian
  CHECK(bytes[8] == 2);
  CHECK(bytes[12] == 3);
}

TEST_CASE("melt rejects corrupt magic bytes") {
  TempDir dir("io");
  {
    std::ofstream out(dir / "bad.melt", std::ios::binary);
    out << "MELX\x01\x00\x00\x00";
  }
  try {
    io::LoadMelt(dir / "bad.melt");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kFormat);
    CHECK(std::string(e.what()).find("bad magic") != std::string::npos);
  }
}

TEST_CASE("melt rejects truncated payload") {
  TempDir dir("io");
  io::SaveMelt(dir / "t.melt", {{4}, {1, 2, 3, 4}});
  std::filesystem::resize_file(dir / "t.melt", 20);
  CHECK_THROWS_AS(io::LoadMelt(dir / "t.melt"), Error);
}

TEST_CASE("named table keeps order and supports prefix removal") {
  TempDir dir("io");
  io::NamedTable table;
  table.PutTensor("rec/w", {{2}, {1, 2}});
  table.PutText("meta/alpha", "1");
  table.PutTensor("audio/w", {{1}, {3}});
  table.PutTensor("audio/b", {{1}, {4}});
  table.Save(dir / "c.ckpt");
  auto loaded = io::NamedTable::Load(dir / "c.ckpt");
  REQUIRE(loaded.entries().size() == 4);
  CHECK(loaded.entries()[0].name == "rec/w");
  CHECK(loaded.FindText("meta/alpha") == std::optional<std::string>("1"));
  CHECK(loaded.FindTensor("rec/w")->data == std::vector<double>{1, 2});
  CHECK(loaded.CountPrefix("audio/") == 2);
  CHECK(loaded.RemovePrefix("audio/") == 2);
  CHECK_FALSE(loaded.Contains("audio/w"));
  CHECK(loaded.FindTensor("missing") == nullptr);
}

TEST_CASE("pcm16 conversion clamps and rounds") {
  CHECK(io::ToPcm16(1.0) == 32767);
  CHECK(io::ToPcm16(-1.0) == -32767);
  CHECK(io::ToPcm16(2.0) == 32767);
  CHECK(io::ToPcm16(0.0) == 0);
  CHECK(io::FromPcm16(32767) == 1.0);
  CHECK(io::FromPcm16(-32768) == -1.0);
  for (int v : {-1234, 0, 17, 30000}) {
    CHECK(io::ToPcm16(io::FromPcm16(static_cast<std::int16_t>(v))) == v);
  }
}

TEST_CASE("wav round trip, stereo preserved") {
  TempDir dir("io");
  io::WavData wav{22050, 2, {1, -1, 100, -100, 32767, -32768}};
  io::WriteWav(dir / "a.wav", wav);
  const auto back = io::ReadWav(dir / "a.wav");
  CHECK(back.sample_rate == 22050);
  CHECK(back.channels == 2);
  CHECK(back.NumFrames() == 3);
  CHECK(back.interleaved == wav.interleaved);
}

TEST_CASE("wav reader rejects non-riff data") {
  TempDir dir("io");
  {
    std::ofstream out(dir / "x.wav", std::ios::binary);
    out << "not a wav file at all";
  }
  CHECK_THROWS_AS(io::ReadWav(dir / "x.wav"), Error);
}

TEST_CASE("pgm round trip") {
  TempDir dir("io");
  io::GrayImage8 img{4, 2, {0, 1, 2, 3, 252, 253, 254, 255}};
  io::WritePgm(dir / "i.pgm", img);
  const auto back = io::ReadPgm(dir / "i.pgm");
  CHECK(back.width == 4);
  CHECK(back.height == 2);
  CHECK(back.pixels == img.pixels);
}

}  // namespace
}  // namespace audiotext
