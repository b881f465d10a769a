// Copyright 2026 The vnfplace Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <chrono>
#include <cstdint>

#include "vnfp/exact.hpp"

namespace vnfp::detail {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

/// Counts explored search nodes and trips once the node or time limit is hit.
class BudgetMeter {
 public:
  explicit BudgetMeter(const SearchBudget& budget) : budget_(budget) {}

  /// Records one explored node; returns true when the search must stop.
  bool tick() {
    ++explored_;
    if (exhausted_) return true;
    if (explored_ >= budget_.maxNodesExplored) exhausted_ = true;
    if ((explored_ & 0xFF) == 0 && clock_.seconds() >= budget_.timeLimitSeconds) exhausted_ = true;
    return exhausted_;
  }

  bool exhausted() const noexcept { return exhausted_; }
  std::uint64_t explored() const noexcept { return explored_; }
  double seconds() const { return clock_.seconds(); }

 private:
  SearchBudget budget_;
  Stopwatch clock_;
  std::uint64_t explored_ = 0;
  bool exhausted_ = false;
};

}  // namespace vnfp::detail
