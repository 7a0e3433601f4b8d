/*
   Copyright 2026 The rootpath Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <stdexcept>
#include <string>

namespace rootpath {

/// Failure categories surfaced by the library. Callers branch on the code;
/// the message carries the human-readable detail.
enum class Errc {
    parse_error,
    degree_zero,
    not_monic,
    no_significant_derivative,
    target_critical,
    start_exhausted,
    plan_exhausted,
    newton_stalled,
    derivative_vanished,
    step_underflow,
    solve_failed,
    oracle_diverged,
    size_mismatch,
};

constexpr const char* errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::parse_error: return "ParseError";
        case Errc::degree_zero: return "DegreeZero";
        case Errc::not_monic: return "NotMonic";
        case Errc::no_significant_derivative: return "NoSignificantDerivative";
        case Errc::target_critical: return "TargetCritical";
        case Errc::start_exhausted: return "StartExhausted";
        case Errc::plan_exhausted: return "PlanExhausted";
        case Errc::newton_stalled: return "NewtonStalled";
        case Errc::derivative_vanished: return "DerivativeVanished";
        case Errc::step_underflow: return "StepUnderflow";
        case Errc::solve_failed: return "SolveFailed";
        case Errc::oracle_diverged: return "OracleDiverged";
        case Errc::size_mismatch: return "SizeMismatch";
    }
    return "Error";
}

class Error : public std::runtime_error {
  public:
    Error(Errc code, std::string message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message),
          code_(code),
          message_(std::move(message)) {}

    Errc code() const noexcept { return code_; }

    /// Message without the "Name: " prefix, for re-wrapping.
    const std::string& message() const noexcept { return message_; }

  private:
    Errc code_;
    std::string message_;
};

}  // namespace rootpath
