// Copyright 2026 The mcg Authors.
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

#ifndef MCG_IO_HPP
#define MCG_IO_HPP

#include <cstddef>
#include <istream>
#include <optional>
#include <string>

#include "mcg/graph.hpp"

namespace mcg {

enum class GraphFormat { Graph6, Sparse6, EdgeList };

std::optional<GraphFormat> format_from_string(const std::string& s);  // g6 / s6 / elist
const char* format_name(GraphFormat f);

class ParseError : public Error {
public:
    ParseError(const std::string& what, size_t byte_offset)
        : Error(what + " (byte " + std::to_string(byte_offset) + ")"), offset(byte_offset)
    {
    }
    size_t offset;
};

/// Decodes one graph. graph6 carries simple graphs only; sparse6 and the
/// edge-list format carry multigraphs. Bit-level layouts follow the nauty
/// format descriptions; the edge-list format is a "n m" header followed by
/// m "u v" lines, with '#' comments and blank lines allowed.
Multigraph parse_graph(const std::string& text, GraphFormat format);

/// Encodes one graph; round-trips byte-exactly through parse_graph.
/// graph6 output includes no trailing newline; rejects multigraphs.
std::string emit_graph(const Multigraph& g, GraphFormat format);

/// Reads consecutive graphs from a stream: one line per graph for g6/s6,
/// one record for edge lists. Format headers (">>graph6<<") are skipped.
class GraphReader {
public:
    GraphReader(std::istream& in, GraphFormat format);

    /// Fetches the next graph. Returns false at end of input. Malformed
    /// records throw ParseError; the stream stays readable so the caller
    /// can continue with the following record.
    bool next(Multigraph& out, std::string& source_label);

    size_t line_number() const { return line_; }

private:
    std::istream& in_;
    GraphFormat format_;
    size_t line_ = 0;
    bool read_significant_line(std::string& line);
};

}  // namespace mcg

#endif  // MCG_IO_HPP
