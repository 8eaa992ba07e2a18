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

#ifndef LCAREV_ERROR_HPP
#define LCAREV_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace lcarev {

/// Error codes shared by the C++ core, the C API and the CLI exit status.
/// Values are grouped by family in blocks of ten and never renumbered.
enum class ErrorCode : int {
    Ok = 0,
    InvalidArgument = 1,

    ParseError = 10,
    SplitError = 11,

    ZeroRule = 20,
    NoConstantTerm = 21,
    NotNormalized = 22,
    NotIrreducible = 23,
    NotOdd = 24,
    InvalidInput = 25,
    InvalidModulus = 26,
    DivByZero = 27,
    Undefined = 28,
    ShapeError = 29,
    Singular = 30,

    CapExceeded = 40,
    StepBudgetExceeded = 41,

    FactorTimeout = 50,
    Timeout = 51,

    CycleMismatch = 60,

    IoError = 70,

    Internal = 90,
};

std::string_view error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace lcarev

#endif
