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

#ifndef AUDIOTEXT_TRAINER_GRADCHECK_SUITE_H_
#define AUDIOTEXT_TRAINER_GRADCHECK_SUITE_H_

#include <cstdint>
#include <string>
#include <vector>

namespace audiotext::train {

struct SuiteOptions {
  int seeds = 20;
  double threshold = 1e-4;
  std::uint64_t base_seed = 1000;
  std::string filter;  // substring of case names; empty runs all
};

struct SuiteCaseResult {
  std::string name;
  int seeds = 0;
  int rejected_draws = 0;  // instances redrawn for lying within 1e-4 of a kink
  double worst_rel_error = 0.0;
  bool passed = false;
};

// Central-difference checks of every differentiable operation and of the
// composite modules, each over `seeds` randomized instances. Instances whose
// forward pass puts a relu, abs, max-pool or L1 input within 1e-4 of its
// non-differentiable point are redrawn.
std::vector<std::string> GradCheckSuiteNames();
std::vector<SuiteCaseResult> RunGradCheckSuite(const SuiteOptions& options = {});

}  // namespace audiotext::train

#endif  // AUDIOTEXT_TRAINER_GRADCHECK_SUITE_H_
