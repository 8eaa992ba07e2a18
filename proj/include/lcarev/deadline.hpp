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

#ifndef LCAREV_DEADLINE_HPP
#define LCAREV_DEADLINE_HPP

#include <chrono>
#include <cstdint>
#include <optional>

#include "lcarev/error.hpp"

namespace lcarev {

/// Cooperative wall-clock budget. Long loops call check() periodically; an
/// unset deadline never expires.
class Deadline {
public:
    using clock = std::chrono::steady_clock;

    Deadline() = default;

    static Deadline none() { return {}; }
    static Deadline after(double seconds) {
        Deadline d;
        d.at_ = clock::now() + std::chrono::duration_cast<clock::duration>(std::chrono::duration<double>(seconds));
        return d;
    }

    bool expired() const { return at_ && clock::now() >= *at_; }

    void check(ErrorCode code = ErrorCode::Timeout) const {
        if (expired()) fail(code, "time budget exhausted");
    }

    /// Cheap variant for hot loops: only reads the clock every 4096 calls.
    void tick(ErrorCode code = ErrorCode::Timeout) const {
        if (at_ && (++ticks_ & 0xfffu) == 0) check(code);
    }

private:
    std::optional<clock::time_point> at_;
    mutable std::uint32_t ticks_ = 0;
};

}  // namespace lcarev

#endif
