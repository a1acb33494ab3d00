// Copyright 2026 The ctdrive Authors
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

#include <cstdint>
#include <string>
#include <string_view>

namespace ctd {

// Shortest locale-independent representation that round-trips exactly.
std::string format_double(double v);

std::uint64_t fnv1a64(std::string_view data);

// Writes through a temporary file and renames, so failed runs never leave
// partial output behind.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace ctd
