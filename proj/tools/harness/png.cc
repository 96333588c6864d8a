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
#include "harness/png.h"

#include <png.h>

#include <cstdio>
#include <memory>
#include <vector>

#include "procarcade/error.h"

namespace procarcade::harness {

void WritePng(const std::string& path, std::span<const uint8_t> rgb, int width, int height,
              int scale) {
  if (width <= 0 || height <= 0 || scale <= 0 ||
      rgb.size() != static_cast<size_t>(width) * height * 3) {
    Fail(ErrorKind::kDomain, "bad image dimensions for '" + path + "'");
  }
  std::unique_ptr<FILE, int (*)(FILE*)> file(std::fopen(path.c_str(), "wb"), &std::fclose);
  if (!file) Fail(ErrorKind::kConfig, "cannot open '" + path + "' for writing");
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (info == nullptr) {
    png_destroy_write_struct(&png, nullptr);
    Fail(ErrorKind::kConfig, "libpng initialization failed");
  }
  const int out_w = width * scale;
  const int out_h = height * scale;
  std::vector<png_byte> row(static_cast<size_t>(out_w) * 3);
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    Fail(ErrorKind::kConfig, "libpng failed writing '" + path + "'");
  }
  png_init_io(png, file.get());
  png_set_IHDR(png, info, out_w, out_h, 8, PNG_COLOR_TYPE_RGB, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  for (int y = 0; y < out_h; ++y) {
    const uint8_t* src = rgb.data() + static_cast<size_t>(y / scale) * width * 3;
    for (int x = 0; x < out_w; ++x) {
      for (int c = 0; c < 3; ++c) row[static_cast<size_t>(x) * 3 + c] = src[(x / scale) * 3 + c];
    }
    png_write_row(png, row.data());
  }
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
}

}  // namespace procarcade::harness
