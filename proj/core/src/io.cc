// Copyright 2026 The Rigicheck Authors.
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

#include "rigicheck/io.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "rigicheck/error.h"

namespace rigicheck {
namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

// Yields the tokens of each content line, skipping comments and blanks.
std::vector<Line> ContentLines(std::istream& in) {
  std::vector<Line> lines;
  std::string text;
  int number = 0;
  while (std::getline(in, text)) {
    ++number;
    text.erase(std::min(text.find('#'), text.size()));
    std::istringstream words(text);
    Line line{number, {}};
    std::string token;
    while (words >> token) line.tokens.push_back(token);
    if (line.tokens.empty()) continue;
    lines.push_back(std::move(line));
  }
  return lines;
}

VertexId ParseLabel(const std::string& token, int line) {
  VertexId value = 0;
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end || value < 0) {
    throw InvalidInput("line " + std::to_string(line) + ": bad vertex label '" + token + "'");
  }
  return value;
}

std::ifstream OpenOrThrow(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  return in;
}

}  // namespace

SimplicialMulticomplex ParseFacets(std::istream& in) {
  std::vector<Line> lines = ContentLines(in);
  std::optional<int> dim;
  std::size_t first = 0;
  if (!lines.empty() && lines.front().tokens.front() == "dim") {
    const Line& header = lines.front();
    if (header.tokens.size() != 2) {
      throw InvalidInput("line " + std::to_string(header.number) + ": expected 'dim k'");
    }
    dim = ParseLabel(header.tokens[1], header.number);
    first = 1;
  }
  if (!dim) {
    if (lines.empty()) throw InvalidInput("empty facet file needs a 'dim k' header");
    dim = static_cast<int>(lines.front().tokens.size()) - 1;
  }
  SimplicialMulticomplex s(*dim);
  for (std::size_t i = first; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (static_cast<int>(line.tokens.size()) != *dim + 1) {
      throw InvalidInput("line " + std::to_string(line.number) + ": expected " +
                         std::to_string(*dim + 1) + " labels");
    }
    std::vector<VertexId> facet;
    for (const std::string& token : line.tokens) facet.push_back(ParseLabel(token, line.number));
    try {
      s.Add(Simplex(std::move(facet)));
    } catch (const InvalidInput& e) {
      throw InvalidInput("line " + std::to_string(line.number) + ": " + e.what());
    }
  }
  return s;
}

SimplicialMulticomplex ReadFacetFile(const std::string& path) {
  std::ifstream in = OpenOrThrow(path);
  return ParseFacets(in);
}

void WriteFacets(std::ostream& out, const SimplicialMulticomplex& s) {
  out << "dim " << s.dim() << '\n';
  for (const Simplex& facet : s.Expanded()) {
    for (std::size_t i = 0; i < facet.size(); ++i) out << (i ? " " : "") << facet[i];
    out << '\n';
  }
}

std::string FacetsToString(const SimplicialMulticomplex& s) {
  std::ostringstream out;
  WriteFacets(out, s);
  return out.str();
}

Graph ParseEdgeList(std::istream& in) {
  Graph g;
  for (const Line& line : ContentLines(in)) {
    if (line.tokens.size() == 1) {
      g.AddVertex(ParseLabel(line.tokens[0], line.number));
      continue;
    }
    if (line.tokens.size() != 2) {
      throw InvalidInput("line " + std::to_string(line.number) + ": expected 'u v'");
    }
    VertexId a = ParseLabel(line.tokens[0], line.number);
    VertexId b = ParseLabel(line.tokens[1], line.number);
    if (a == b) throw InvalidInput("line " + std::to_string(line.number) + ": loop");
    g.AddEdge(a, b);
  }
  return g;
}

Graph ReadEdgeFile(const std::string& path) {
  std::ifstream in = OpenOrThrow(path);
  return ParseEdgeList(in);
}

void WriteEdgeList(std::ostream& out, const Graph& g) {
  for (const auto& [a, b] : g.Edges()) out << a << ' ' << b << '\n';
  for (VertexId v : g.Vertices()) {
    if (g.Degree(v) == 0) out << v << '\n';
  }
}

}  // namespace rigicheck
