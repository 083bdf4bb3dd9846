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

#include "mcg/io.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace mcg {

std::optional<GraphFormat> format_from_string(const std::string& s)
{
    if (s == "g6" || s == "graph6") return GraphFormat::Graph6;
    if (s == "s6" || s == "sparse6") return GraphFormat::Sparse6;
    if (s == "elist" || s == "edgelist") return GraphFormat::EdgeList;
    return std::nullopt;
}

const char* format_name(GraphFormat f)
{
    switch (f) {
        case GraphFormat::Graph6: return "g6";
        case GraphFormat::Sparse6: return "s6";
        case GraphFormat::EdgeList: return "elist";
    }
    return "?";
}

namespace {

constexpr int kBias = 63;

// --- bit cursor over printable payload bytes ------------------------------

struct BitReader {
    const std::string& s;
    size_t byte;  // current byte index
    int bit = 0;  // bits consumed within current byte (0..5)

    size_t bits_left() const
    {
        if (byte >= s.size()) return 0;
        return (s.size() - byte) * 6 - bit;
    }
    int take1()
    {
        int c = s[byte] - kBias;
        int b = (c >> (5 - bit)) & 1;
        if (++bit == 6) {
            bit = 0;
            byte++;
        }
        return b;
    }
    uint32_t take(int k)
    {
        uint32_t x = 0;
        for (int i = 0; i < k; ++i) x = (x << 1) | static_cast<uint32_t>(take1());
        return x;
    }
};

struct BitWriter {
    std::string out;
    int bit = 0;

    void put1(int b)
    {
        if (bit == 0) out.push_back(static_cast<char>(kBias));
        int c = out.back() - kBias;
        c |= b << (5 - bit);
        out.back() = static_cast<char>(c + kBias);
        if (++bit == 6) bit = 0;
    }
    void put(uint32_t x, int k)
    {
        for (int i = k - 1; i >= 0; --i) put1((x >> i) & 1);
    }
    void pad_ones()
    {
        while (bit != 0) put1(1);
    }
};

void check_payload_bytes(const std::string& s, size_t from)
{
    for (size_t i = from; i < s.size(); ++i)
        if (s[i] < 63 || s[i] > 126) throw ParseError("byte outside the printable range", i);
}

// N(n) header; returns (n, bytes consumed)
std::pair<int, size_t> parse_order(const std::string& s, size_t at)
{
    if (at >= s.size()) throw ParseError("missing graph order", at);
    unsigned char c0 = static_cast<unsigned char>(s[at]);
    if (c0 != 126) {
        int n = c0 - kBias;
        if (n < 0 || n > 62) throw ParseError("bad graph order byte", at);
        return {n, 1};
    }
    if (at + 3 >= s.size()) throw ParseError("truncated long order", at);
    if (static_cast<unsigned char>(s[at + 1]) == 126)
        throw ParseError("graph order beyond supported range", at + 1);
    int n = 0;
    for (int i = 1; i <= 3; ++i) {
        int d = s[at + i] - kBias;
        if (d < 0 || d > 63) throw ParseError("bad graph order byte", at + i);
        n = (n << 6) | d;
    }
    return {n, 4};
}

std::string emit_order(int n)
{
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
        out.push_back(static_cast<char>((n & 63) + kBias));
    }
    return out;
}

int bits_for(int n)  // bits needed for values 0..n-1, at least 1
{
    int k = 1;
    while ((1 << k) < n) k++;
    return k;
}

// --- graph6 ----------------------------------------------------------------

Multigraph parse_g6(const std::string& text)
{
    std::string s = text;
    if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
    auto [n, consumed] = parse_order(s, 0);
    if (n > kMaxVertices) throw ParseError("graph order exceeds the supported limit", 0);
    check_payload_bytes(s, consumed);
    size_t need_bits = static_cast<size_t>(n) * (n - 1) / 2;
    size_t need_bytes = (need_bits + 5) / 6;
    if (s.size() - consumed != need_bytes)
        throw ParseError("payload length mismatch", std::min(s.size(), consumed + need_bytes));
    BitReader br{s, consumed};
    std::vector<std::pair<int, int>> pairs;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (br.take1()) pairs.push_back({i, j});
    while (br.bits_left() > 0)
        if (br.take1()) throw ParseError("nonzero padding bits", br.byte);
    return build_graph(n, pairs);
}

std::string emit_g6(const Multigraph& g)
{
    int n = g.vertex_count();
    for (const Edge& e : g.edges())
        if (g.multiplicity(e.u, e.v) > 1)
            throw Error("graph6 cannot carry parallel edges; use sparse6 or elist");
    std::string out = emit_order(n);
    BitWriter bw;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) bw.put1(((g.neighbors(i) >> j) & 1) ? 1 : 0);
    while (bw.bit != 0) bw.put1(0);
    return out + bw.out;
}

// --- sparse6 -----------------------------------------------------------------

Multigraph parse_s6(const std::string& text)
{
    std::string s = text;
    if (s.rfind(">>sparse6<<", 0) == 0) s = s.substr(11);
    if (s.empty() || s[0] != ':') throw ParseError("sparse6 must start with ':'", 0);
    s = s.substr(1);
    auto [n, consumed] = parse_order(s, 0);
    if (n > kMaxVertices) throw ParseError("graph order exceeds the supported limit", 0);
    check_payload_bytes(s, consumed);
    int k = bits_for(n);
    BitReader br{s, consumed};
    std::vector<std::pair<int, int>> pairs;
    int v = 0;
    while (br.bits_left() >= static_cast<size_t>(k) + 1) {
        int b = br.take1();
        int x = static_cast<int>(br.take(k));
        if (b) v++;
        if (v >= n || x >= n) break;
        if (x > v) {
            v = x;
        } else if (x == v) {
            // tolerate all-ones padding that lands on a loop position
            if (x == n - 1 && br.bits_left() < static_cast<size_t>(k) + 1) break;
            throw ParseError("loop edge in sparse6 payload", br.byte);
        } else {
            pairs.push_back({x, v});
        }
    }
    return build_graph(n, pairs);
}

std::string emit_s6(const Multigraph& g)
{
    int n = g.vertex_count();
    int k = bits_for(n);
    std::vector<std::pair<int, int>> edges;  // (min, max)
    for (const Edge& e : g.edges())
        edges.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
    std::sort(edges.begin(), edges.end(),
              [](const auto& a, const auto& b) { return a.second != b.second ? a.second < b.second
                                                                             : a.first < b.first; });
    BitWriter bw;
    int v = 0;
    for (const auto& [u, w] : edges) {
        if (w == v) {
            bw.put1(0);
            bw.put(static_cast<uint32_t>(u), k);
        } else if (w == v + 1) {
            bw.put1(1);
            bw.put(static_cast<uint32_t>(u), k);
            v = w;
        } else {
            bw.put1(1);
            bw.put(static_cast<uint32_t>(w), k);
            bw.put1(0);
            bw.put(static_cast<uint32_t>(u), k);
            v = w;
        }
    }
    // Padding: all ones, except that for n = 2^k a long pad after an edge at
    // v = n-2 could be misread as one more entry, so it starts with a zero.
    int pad = (bw.bit == 0) ? 0 : 6 - bw.bit;
    if (pad >= k + 1 && n == (1 << k) && v == n - 2) bw.put1(0);
    bw.pad_ones();
    return ":" + emit_order(n) + bw.out;
}

// --- edge list ---------------------------------------------------------------

bool significant(const std::string& line)
{
    for (char c : line) {
        if (c == '#') return false;
        if (!isspace(static_cast<unsigned char>(c))) return true;
    }
    return false;
}

Multigraph parse_elist(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    int n = -1, m = -1;
    std::vector<std::pair<int, int>> pairs;
    size_t offset = 0;
    while (std::getline(in, line)) {
        size_t line_start = offset;
        offset += line.size() + 1;
        if (!significant(line)) continue;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n >> m) || n < 0 || m < 0)
                throw ParseError("bad edge-list header, expected 'n m'", line_start);
            if (n > kMaxVertices) throw ParseError("graph order exceeds the supported limit", line_start);
            continue;
        }
        int u, v;
        if (!(ls >> u >> v)) throw ParseError("bad edge line, expected 'u v'", line_start);
        pairs.push_back({u, v});
        if (static_cast<int>(pairs.size()) == m) break;
    }
    if (n < 0) throw ParseError("missing edge-list header", 0);
    if (static_cast<int>(pairs.size()) != m) throw ParseError("fewer edge lines than the header promises", offset);
    return build_graph(n, pairs);
}

std::string emit_elist(const Multigraph& g)
{
    std::vector<std::pair<int, int>> edges;
    for (const Edge& e : g.edges()) edges.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
    std::sort(edges.begin(), edges.end());
    std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
    for (const auto& [u, v] : edges) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

}  // namespace

Multigraph parse_graph(const std::string& text, GraphFormat format)
{
    switch (format) {
        case GraphFormat::Graph6: return parse_g6(text);
        case GraphFormat::Sparse6: return parse_s6(text);
        case GraphFormat::EdgeList: return parse_elist(text);
    }
    throw Error("unknown format");
}

std::string emit_graph(const Multigraph& g, GraphFormat format)
{
    switch (format) {
        case GraphFormat::Graph6: return emit_g6(g);
        case GraphFormat::Sparse6: return emit_s6(g);
        case GraphFormat::EdgeList: return emit_elist(g);
    }
    throw Error("unknown format");
}

GraphReader::GraphReader(std::istream& in, GraphFormat format) : in_(in), format_(format) {}

bool GraphReader::read_significant_line(std::string& line)
{
    while (std::getline(in_, line)) {
        line_++;
        if (line.rfind(">>graph6<<", 0) == 0 || line.rfind(">>sparse6<<", 0) == 0) {
            // strip an attached first record after the header
            line = line.substr(line.find("<<") + 2);
            if (line.empty()) continue;
            return true;
        }
        if (format_ == GraphFormat::EdgeList ? significant(line) : !line.empty()) return true;
    }
    return false;
}

bool GraphReader::next(Multigraph& out, std::string& source_label)
{
    std::string line;
    if (format_ != GraphFormat::EdgeList) {
        if (!read_significant_line(line)) return false;
        source_label = "line " + std::to_string(line_);
        out = parse_graph(line, format_);
        return true;
    }
    // edge list: header line then exactly m edge lines
    if (!read_significant_line(line)) return false;
    source_label = "line " + std::to_string(line_);
    std::istringstream hs(line);
    int n = -1, m = -1;
    if (!(hs >> n >> m) || n < 0 || m < 0)
        throw ParseError("bad edge-list header, expected 'n m'", line_);
    std::string block = line + "\n";
    for (int i = 0; i < m; ++i) {
        if (!read_significant_line(line))
            throw ParseError("fewer edge lines than the header promises", line_);
        block += line + "\n";
    }
    out = parse_graph(block, GraphFormat::EdgeList);
    return true;
}

}  // namespace mcg
