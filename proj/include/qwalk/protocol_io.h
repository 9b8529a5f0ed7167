// Copyright 2026 The qwalk Authors
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

// Line-oriented walk protocol files.
//
//   # comment (also allowed after entries)
//   identity                  all-identity step ("-" is accepted too)
//   -1:45 1:12.2349           half-wave-plate angle in decimal degrees
//   0:id                      explicit identity coin
//   2:custom(a,b,c,d)         real 2x2 matrix, row-major
//   2:custom(r,i,r,i,r,i,r,i) complex 2x2 matrix, row-major (re, im) pairs
//
// Each non-blank, non-comment line is one step, in order.

#ifndef QWALK_PROTOCOL_IO_H
#define QWALK_PROTOCOL_IO_H

#include <filesystem>
#include <string>
#include <string_view>

#include "qwalk/walk.h"

namespace qwalk {

/// Throws ProtocolParseError carrying the 1-based source line. Angles are
/// range-checked and custom coins unitarity-checked at parse time.
Protocol parse_protocol(std::string_view text);

/// Throws IoError if the file cannot be read, ProtocolParseError otherwise.
Protocol load_protocol(const std::filesystem::path &path);

/// Inverse of parse_protocol up to angle round-off (17 significant digits).
std::string format_protocol(const Protocol &protocol);

}  // namespace qwalk

#endif
