// Copyright 2026 The Fractal FFT Authors.
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

#ifndef FFFT_CLI_SIGNAL_IO_HPP
#define FFFT_CLI_SIGNAL_IO_HPP

// Signals are plain text, one complex sample per line as "re,im". Output
// uses 17 significant digits so values survive a format/parse round trip.

#include <filesystem>
#include <string>
#include <string_view>

#include "ffft/phasor.hpp"

namespace ffft::cli {

ComplexVector parse_signal(std::string_view text);
std::string format_signal(const ComplexVector& signal);

ComplexVector load_signal(const std::filesystem::path& path);
void save_signal(const std::filesystem::path& path, const ComplexVector& signal);

}  // namespace ffft::cli

#endif  // FFFT_CLI_SIGNAL_IO_HPP
