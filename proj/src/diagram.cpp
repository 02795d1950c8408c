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

#include "polymat/diagram.hpp"

#include <sstream>

#include "polymat/error.hpp"

namespace polymat {

DiagramFormat parse_diagram_format(std::string_view name) {
  if (name == "ascii") return DiagramFormat::kAscii;
  if (name == "svg") return DiagramFormat::kSvg;
  throw InvalidInput("unknown diagram format '" + std::string(name) + "' (expected ascii|svg)");
}

Diagram Diagram::of(const Presentation& p) {
  Diagram d;
  d.n = p.n();
  d.white.assign(static_cast<std::size_t>(d.n), std::vector<bool>(static_cast<std::size_t>(d.n)));
  for (int row = 0; row < d.n; ++row) {
    for (int col = 0; col < d.n; ++col) {
      d.white[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] =
          p[static_cast<std::size_t>(row)].contains(col + 1);
    }
  }
  return d;
}

Presentation Diagram::presentation() const {
  std::vector<IndexSet> sets;
  for (const auto& row : white) {
    std::uint64_t mask = 0;
    for (std::size_t col = 0; col < row.size(); ++col) {
      if (row[col]) mask |= 1ULL << col;
    }
    sets.emplace_back(n, mask);
  }
  return Presentation(n, std::move(sets));
}

std::string render(const Presentation& p, DiagramFormat format) {
  const Diagram d = Diagram::of(p);
  std::ostringstream out;
  if (format == DiagramFormat::kAscii) {
    for (const auto& row : d.white) {
      for (bool w : row) out << (w ? kWhiteCell : kBlackCell);
      out << '\n';
    }
    return out.str();
  }

  const int side = d.n * kSvgCellSize;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << side + 2 << "\" height=\""
      << side + 2 << "\" viewBox=\"-1 -1 " << side + 2 << ' ' << side + 2 << "\">\n";
  for (int row = 0; row < d.n; ++row) {
    for (int col = 0; col < d.n; ++col) {
      const bool w = d.white[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
      out << "  <rect x=\"" << col * kSvgCellSize << "\" y=\"" << row * kSvgCellSize
          << "\" width=\"" << kSvgCellSize << "\" height=\"" << kSvgCellSize << "\" fill=\""
          << (w ? "white" : "black") << "\" stroke=\"gray\" stroke-width=\"1\"/>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

Presentation parse_ascii_diagram(std::string_view text) {
  std::vector<std::string> lines;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  const int n = static_cast<int>(lines.size());
  if (n == 0) throw InvalidInput("empty diagram");
  Diagram d;
  d.n = n;
  for (const auto& line : lines) {
    if (static_cast<int>(line.size()) != n) throw InvalidInput("diagram is not square");
    std::vector<bool> row;
    for (char c : line) {
      if (c != kWhiteCell && c != kBlackCell) {
        throw InvalidInput(std::string("unexpected diagram character '") + c + "'");
      }
      row.push_back(c == kWhiteCell);
    }
    d.white.push_back(std::move(row));
  }
  return d.presentation();
}

}  // namespace polymat
