/*
   Copyright 2026 The lcarev Authors

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

#include "lcarev/error.hpp"

namespace lcarev {

std::string_view error_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::Ok: return "Ok";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::SplitError: return "SplitError";
        case ErrorCode::ZeroRule: return "ZeroRule";
        case ErrorCode::NoConstantTerm: return "NoConstantTerm";
        case ErrorCode::NotNormalized: return "NotNormalized";
        case ErrorCode::NotIrreducible: return "NotIrreducible";
        case ErrorCode::NotOdd: return "NotOdd";
        case ErrorCode::InvalidInput: return "InvalidInput";
        case ErrorCode::InvalidModulus: return "InvalidModulus";
        case ErrorCode::DivByZero: return "DivByZero";
        case ErrorCode::Undefined: return "Undefined";
        case ErrorCode::ShapeError: return "ShapeError";
        case ErrorCode::Singular: return "Singular";
        case ErrorCode::CapExceeded: return "CapExceeded";
        case ErrorCode::StepBudgetExceeded: return "StepBudgetExceeded";
        case ErrorCode::FactorTimeout: return "FactorTimeout";
        case ErrorCode::Timeout: return "Timeout";
        case ErrorCode::CycleMismatch: return "CycleMismatch";
        case ErrorCode::IoError: return "IoError";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

}  // namespace lcarev
