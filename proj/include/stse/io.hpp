#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stse/design.hpp"
#include "stse/graph.hpp"

namespace stse {

/// A list of triples under a header "<kind> <order>", as read from a file.
struct TripleFile {
    std::string kind;
    int order = 0;
    std::vector<Triple> triples;
};

/// "psts <u>" followed by one triple per line. '#' starts a comment.
/// Throws ParseError with the offending line and column.
Psts parse_psts(std::string_view text);

/// "graph <n>" followed by one edge "<x> <y>" per line.
Graph parse_graph(std::string_view text);

/// Any header "<kind> <n>" followed by triples; pairs may not repeat.
TripleFile parse_triples(std::string_view text);

std::string render_psts(const Psts& p);
std::string render_graph(const Graph& g);
/// Header "<kind> <n>", then the triples in lexicographic order.
std::string render_triples(std::string_view kind, int order, std::span<const Triple> triples);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace stse
