// Copyright 2026 The triqubit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
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

namespace triqubit {

enum class ErrorCode {
    ZeroState,
    ZeroScale,
    NonPositiveScale,
    DivisionByZero,
    BackendMismatch,
    NotUnitary,
    ImpossibleOutcome,
    NotSeparable,
    ResidualNonzero,
    InvalidInput,
};

constexpr std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::ZeroState:
            return "ZeroState";
        case ErrorCode::ZeroScale:
            return "ZeroScale";
        case ErrorCode::NonPositiveScale:
            return "NonPositiveScale";
        case ErrorCode::DivisionByZero:
            return "DivisionByZero";
        case ErrorCode::BackendMismatch:
            return "BackendMismatch";
        case ErrorCode::NotUnitary:
            return "NotUnitary";
        case ErrorCode::ImpossibleOutcome:
            return "ImpossibleOutcome";
        case ErrorCode::NotSeparable:
            return "NotSeparable";
        case ErrorCode::ResidualNonzero:
            return "ResidualNonzero";
        case ErrorCode::InvalidInput:
            return "InvalidInput";
    }
    return "Unknown";
}

/// Error raised by every library operation. The code is stable and is what
/// the CLI maps onto exit statuses.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {
    }

    ErrorCode code() const noexcept {
        return code_;
    }

   private:
    ErrorCode code_;
};

}  // namespace triqubit
