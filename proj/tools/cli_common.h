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

#ifndef AUDIOTEXT_TOOLS_CLI_COMMON_H_
#define AUDIOTEXT_TOOLS_CLI_COMMON_H_

#include <cstdio>
#include <exception>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "audiotext/error.h"
#include "audiotext/synthdata/image.h"

namespace audiotext::cli {

// Single stderr line: error kind=<kind> message="<text>".
inline void PrintError(const char* kind, const std::string& message) {
  std::string escaped;
  for (char c : message) {
    if (c == '"' || c == '\\') escaped.push_back('\\');
    escaped.push_back(c == '\n' ? ' ' : c);
  }
  std::fprintf(stderr, "error kind=%s message=\"%s\"\n", kind, escaped.c_str());
}

inline std::vector<std::string> SplitCommaList(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

inline std::vector<synth::Split> ParseSplits(const std::string& text) {
  std::vector<synth::Split> out;
  for (const auto& s : SplitCommaList(text)) out.push_back(synth::ParseSplit(s));
  if (out.empty()) throw Error(ErrorKind::kInvalidArgument, "no splits given");
  return out;
}

// Parses and runs; maps every failure to one machine-parsable line and exit code.
inline int RunApp(CLI::App& app, int argc, char** argv, const std::function<void()>& after_parse = {}) {
  try {
    app.parse(argc, argv);
    if (after_parse) after_parse();
    return 0;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    PrintError("usage", e.what());
    return 2;
  } catch (const Error& e) {
    PrintError(ErrorKindName(e.kind()), e.what());
    return 1;
  } catch (const std::exception& e) {
    PrintError("internal", e.what());
    return 1;
  }
}

}  // namespace audiotext::cli

#endif  // AUDIOTEXT_TOOLS_CLI_COMMON_H_
