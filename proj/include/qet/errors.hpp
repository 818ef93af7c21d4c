// Copyright 2026 The qet-steady Authors
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

#include <stdexcept>
#include <string>
#include <string_view>

namespace qet {

enum class ErrorKind {
  // configuration / input
  Config,
  UnknownPreset,
  InvalidParams,
  InvalidState,
  InvalidOutcome,
  InvalidIndex,
  NonHermitianInput,
  NonPositiveFrequency,
  AllPointsSkipped,
  Io,
  // numerical
  DegenerateKernel,
  ZeroTraceKernel,
  NoKernel,
  NotConverged,
  NotXForm,
};

constexpr std::string_view kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Config: return "config";
    case ErrorKind::UnknownPreset: return "unknown_preset";
    case ErrorKind::InvalidParams: return "invalid_params";
    case ErrorKind::InvalidState: return "invalid_state";
    case ErrorKind::InvalidOutcome: return "invalid_outcome";
    case ErrorKind::InvalidIndex: return "invalid_index";
    case ErrorKind::NonHermitianInput: return "non_hermitian_input";
    case ErrorKind::NonPositiveFrequency: return "non_positive_frequency";
    case ErrorKind::AllPointsSkipped: return "all_points_skipped";
    case ErrorKind::Io: return "io";
    case ErrorKind::DegenerateKernel: return "degenerate_kernel";
    case ErrorKind::ZeroTraceKernel: return "zero_trace_kernel";
    case ErrorKind::NoKernel: return "no_kernel";
    case ErrorKind::NotConverged: return "not_converged";
    case ErrorKind::NotXForm: return "not_x_form";
  }
  return "unknown";
}

/// True for failures of the linear algebra itself (as opposed to bad input).
constexpr bool is_numerical(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DegenerateKernel:
    case ErrorKind::ZeroTraceKernel:
    case ErrorKind::NoKernel:
    case ErrorKind::NotConverged:
    case ErrorKind::NotXForm:
      return true;
    default:
      return false;
  }
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qet
