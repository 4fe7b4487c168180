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

#include "audiotext/trainer/metrics_log.h"

#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "audiotext/error.h"

namespace audiotext::train {

void MetricsLog::Append(const EpochRow& row) {
  const int expected = static_cast<int>(rows_.size()) + 1;
  if (row.epoch != expected) {
    throw Error(ErrorKind::kState,
                fmt::format("metrics log expects epoch {}, got {}", expected, row.epoch));
  }
  rows_.push_back(row);
}

std::string MetricsLog::ToCsv() const {
  std::string out = std::string(kHeader) + "\n";
  for (const auto& r : rows_) {
    out += fmt::format("{},{},{},{},{},{},{}\n", r.epoch, r.l_rec, r.l_mel, r.loss, r.acc_regular,
                       r.acc_occluded, r.acc_noisy);
  }
  return out;
}

void MetricsLog::Save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kIo, "cannot write " + path.string());
  out << ToCsv();
  if (!out) throw Error(ErrorKind::kIo, "failed writing " + path.string());
}

MetricsLog MetricsLog::Load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot read " + path.string());
  std::string line;
  if (!std::getline(in, line) || line != kHeader) {
    throw Error(ErrorKind::kFormat, path.string() + ": unexpected metrics header");
  }
  MetricsLog log;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string cell;
    std::vector<std::string> cells;
    while (std::getline(fields, cell, ',')) cells.push_back(cell);
    if (cells.size() != 7) {
      throw Error(ErrorKind::kFormat, fmt::format("{}:{}: expected 7 fields", path.string(), line_no));
    }
    try {
      log.Append({std::stoi(cells[0]), std::stod(cells[1]), std::stod(cells[2]), std::stod(cells[3]),
                  std::stod(cells[4]), std::stod(cells[5]), std::stod(cells[6])});
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::kFormat, fmt::format("{}:{}: malformed number", path.string(), line_no));
    }
  }
  return log;
}

}  // namespace audiotext::train
