// Copyright 2026 The Authors.
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

// Polymatroidal diagrams: the n x n grid whose cell (i, j) is white iff j is
// in the i-th set of the presentation.

#ifndef POLYMAT_DIAGRAM_HPP_
#define POLYMAT_DIAGRAM_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "polymat/core.hpp"

namespace polymat {

enum class DiagramFormat { kAscii, kSvg };

// "ascii" or "svg"; anything else throws InvalidInput.
DiagramFormat parse_diagram_format(std::string_view name);

struct Diagram {
  int n = 0;
  std::vector<std::vector<bool>> white;  // white[row][col], 0-indexed

  static Diagram of(const Presentation& p);
  // Rows back to sets.
  Presentation presentation() const;
};

inline constexpr char kWhiteCell = '.';
inline constexpr char kBlackCell = '#';
inline constexpr int kSvgCellSize = 20;

// ASCII: n lines of n characters, row 1 on top. SVG: unit squares of
// kSvgCellSize px with 1px grid lines.
std::string render(const Presentation& p, DiagramFormat format);

// Inverse of the ASCII rendering. Throws InvalidInput on ragged or
// non-square input, foreign characters, or an all-black row.
Presentation parse_ascii_diagram(std::string_view text);

}  // namespace polymat

#endif  // POLYMAT_DIAGRAM_HPP_
