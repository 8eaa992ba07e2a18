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

#include "lcarev/natural.hpp"

#include "lcarev/error.hpp"

namespace lcarev {

Natural parse_natural(std::string_view text) {
    if (text.empty()) fail(ErrorCode::ParseError, "empty integer");
    for (char c : text)
        if (c < '0' || c > '9') fail(ErrorCode::ParseError, "not a decimal natural: " + std::string(text));
    return Natural(std::string(text), 10);
}

std::string to_decimal(const Natural& n) { return n.get_str(10); }

std::uint64_t to_u64(const Natural& n) {
    if (!fits_u64(n)) fail(ErrorCode::CapExceeded, "value does not fit in 64 bits: " + to_decimal(n));
    std::uint64_t v = 0;
    mpz_export(&v, nullptr, -1, sizeof v, 0, 0, n.get_mpz_t());
    return v;
}

Natural from_u64(std::uint64_t v) {
    Natural r;
    mpz_import(r.get_mpz_t(), 1, -1, sizeof v, 0, 0, &v);
    return r;
}

}  // namespace lcarev
