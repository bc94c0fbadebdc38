// Copyright 2026 The chshb Authors
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

#include "chshb/error.h"

namespace chshb {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NonHermitianOperator:
            return "NonHermitianOperator";
        case ErrorCode::ImaginaryExpectation:
            return "ImaginaryExpectation";
        case ErrorCode::NoConvergence:
            return "NoConvergence";
        case ErrorCode::InvalidRank:
            return "InvalidRank";
        case ErrorCode::InvalidState:
            return "InvalidState";
        case ErrorCode::ThetaOutOfRange:
            return "ThetaOutOfRange";
        case ErrorCode::IndexOutOfRange:
            return "IndexOutOfRange";
        case ErrorCode::EntryOutOfRange:
            return "EntryOutOfRange";
        case ErrorCode::EpsilonOutOfRange:
            return "EpsilonOutOfRange";
        case ErrorCode::EmptyCounts:
            return "EmptyCounts";
        case ErrorCode::InvalidArgument:
            return "InvalidArgument";
    }
    return "Unknown";
}

ChshError::ChshError(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {
}

}  // namespace chshb
