// Copyright 2026 The Procarcade Authors
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
#ifndef PROCARCADE_HARNESS_PNG_H_
#define PROCARCADE_HARNESS_PNG_H_

#include <cstdint>
#include <span>
#include <string>

namespace procarcade::harness {

// Writes row-major RGB pixels, each enlarged to a scale x scale block.
// Failures throw ErrorKind::kConfig.
void WritePng(const std::string& path, std::span<const uint8_t> rgb, int width, int height,
              int scale = 1);

}  // namespace procarcade::harness

#endif  // PROCARCADE_HARNESS_PNG_H_
