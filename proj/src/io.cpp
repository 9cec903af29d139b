#include "stse/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "stse/errors.hpp"

namespace stse {

namespace {

struct Token {
    std::string_view text;
    int column = 0;
};

struct Line {
    int number = 0;
    std::vector<Token> tokens;
};

// Non-empty lines with comments removed, split on blanks.
std::vector<Line> lex(std::string_view text) {
    std::vector<Line> out;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(pos, end - pos);
        ++number;
        if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            if (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r') {
                ++i;
                continue;
            }
            const std::size_t start = i;
            while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' && raw[i] != '\r') ++i;
            line.tokens.push_back({raw.substr(start, i - start), static_cast<int>(start) + 1});
        }
        if (!line.tokens.empty()) out.push_back(std::move(line));
        if (end == text.size()) break;
        pos = end + 1;
    }
    return out;
}

int to_int(const Line& line, const Token& t) {
    int value = 0;
    const auto* first = t.text.data();
    const auto* last = first + t.text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || value < 0)
        throw ParseError(line.number, t.column, "expected a non-negative integer, got '" + std::string(t.text) + "'");
    return value;
}

std::pair<std::string, int> header(const std::vector<Line>& lines) {
    if (lines.empty()) throw ParseError(1, 1, "missing header");
    const Line& h = lines.front();
    if (h.tokens.size() != 2) throw ParseError(h.number, 1, "header must be '<kind> <order>'");
    return {std::string(h.tokens[0].text), to_int(h, h.tokens[1])};
}

int vertex(const Line& line, const Token& t, int order) {
    const int v = to_int(line, t);
    if (v >= order)
        throw ParseError(line.number, t.column,
                         "index " + std::to_string(v) + " out of range for order " + std::to_string(order));
    return v;
}

TripleFile triples_after_header(const std::vector<Line>& lines, std::string kind, int order) {
    TripleFile out{std::move(kind), order, {}};
    std::map<std::pair<int, int>, int> seen;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        if (line.tokens.size() != 3)
            throw ParseError(line.number, line.tokens.size() > 3 ? line.tokens[3].column : 1, "expected three indices");
        int v[3];
        for (int k = 0; k < 3; ++k) v[k] = vertex(line, line.tokens[k], order);
        if (v[0] == v[1] || v[0] == v[2] || v[1] == v[2])
            throw ParseError(line.number, 1, "triple repeats a point");
        const Triple t(v[0], v[1], v[2]);
        for (const Edge& e : t.edges()) {
            auto [it, fresh] = seen.emplace(std::pair{e.x, e.y}, line.number);
            if (!fresh)
                throw ParseError(line.number, 1,
                                 "pair " + to_string(e) + " already covered on line " + std::to_string(it->second) +
                                     ", repeated on line " + std::to_string(line.number));
        }
        out.triples.push_back(t);
    }
    return out;
}

}  // namespace

TripleFile parse_triples(std::string_view text) {
    const auto lines = lex(text);
    auto [kind, order] = header(lines);
    return triples_after_header(lines, std::move(kind), order);
}

Psts parse_psts(std::string_view text) {
    const auto lines = lex(text);
    auto [kind, order] = header(lines);
    if (kind != "psts") throw ParseError(lines.front().number, 1, "expected header 'psts <u>'");
    TripleFile f = triples_after_header(lines, kind, order);
    return Psts(order, std::move(f.triples));
}

Graph parse_graph(std::string_view text) {
    const auto lines = lex(text);
    auto [kind, order] = header(lines);
    if (kind != "graph") throw ParseError(lines.front().number, 1, "expected header 'graph <n>'");
    Graph g(order);
    std::map<std::pair<int, int>, int> seen;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        if (line.tokens.size() != 2)
            throw ParseError(line.number, line.tokens.size() > 2 ? line.tokens[2].column : 1, "expected two indices");
        const int x = vertex(line, line.tokens[0], order);
        const int y = vertex(line, line.tokens[1], order);
        if (x == y) throw ParseError(line.number, line.tokens[1].column, "loop at vertex " + std::to_string(x));
        const Edge e(x, y);
        auto [it, fresh] = seen.emplace(std::pair{e.x, e.y}, line.number);
        if (!fresh)
            throw ParseError(line.number, 1,
                             "edge " + to_string(e) + " already listed on line " + std::to_string(it->second));
        g.add_edge(x, y);
    }
    return g;
}

std::string render_triples(std::string_view kind, int order, std::span<const Triple> triples) {
    std::vector<Triple> sorted(triples.begin(), triples.end());
    std::sort(sorted.begin(), sorted.end());
    std::ostringstream os;
    os << kind << ' ' << order << '\n';
    for (const Triple& t : sorted) os << t.v[0] << ' ' << t.v[1] << ' ' << t.v[2] << '\n';
    return os.str();
}

std::string render_psts(const Psts& p) { return render_triples("psts", p.order(), p.triples()); }

std::string render_graph(const Graph& g) {
    std::ostringstream os;
    os << "graph " << g.order() << '\n';
    for (const Edge& e : g.edges()) os << e.x << ' ' << e.y << '\n';
    return os.str();
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_text_file(const std::string& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

}  // namespace stse
