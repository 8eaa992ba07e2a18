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

#include "lcarev/report.hpp"

#include <algorithm>

namespace lcarev {

bool ReversibilityReport::reversible_at(const Natural& n) const {
    if (sgn(period) <= 0) return false;
    const Natural res = n % period;
    if (!fits_u64(res)) return false;
    return std::binary_search(residues.begin(), residues.end(), to_u64(res));
}

}  // namespace lcarev
