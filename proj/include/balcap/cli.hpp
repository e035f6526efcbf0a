// Copyright 2026 The balcap Authors
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

#ifndef BALCAP_CLI_HPP
#define BALCAP_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace balcap {

inline constexpr int kExitAffirmative = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;

// Runs the command line front end. `args` excludes the program name.
// Exit 0: computed, affirmative. Exit 1: computed, negative (unbalanced,
// empty core, invalid capacity). Exit 2: usage or parse error. On 0 and 1
// `out` receives exactly one JSON document; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace balcap

#endif  // BALCAP_CLI_HPP
