#include <string>

#include "psilab/errors.hpp"
#include "psilab/graph.hpp"

namespace psilab {

// Short-form graph6: one header byte 63+n, then the upper triangle in column order
// (0,1),(0,2),(1,2),(0,3),... packed six bits per byte, big end first, padded with
// zeros, each group offset by 63.

Graph parse_graph6(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.empty()) throw ParseError("empty graph6 string", 0);
    for (std::size_t i = 0; i < text.size(); ++i) {
        auto c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126) throw ParseError("byte outside graph6 range 63..126", i);
    }
    const int n = static_cast<unsigned char>(text[0]) - 63;
    if (n > kMaxGraph6Vertices) throw ParseError("long-form graph6 header (n > 62) is not supported", 0);

    const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
    const std::size_t body = (bits + 5) / 6;
    if (text.size() - 1 < body) throw ParseError("truncated bit field", text.size());
    if (text.size() - 1 > body) throw ParseError("trailing bytes after bit field", 1 + body);

    GraphBuilder b(n);
    std::size_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            int group = static_cast<unsigned char>(text[1 + k / 6]) - 63;
            if ((group >> (5 - k % 6)) & 1) b.add_edge(i, j);
        }
    }
    if (body > 0) {
        const std::size_t used = bits - (body - 1) * 6;
        const int last = static_cast<unsigned char>(text[body]) - 63;
        if ((last & ((1 << (6 - used)) - 1)) != 0) throw ParseError("nonzero padding bits", body);
    }
    return std::move(b).build();
}

std::string emit_graph6(const Graph& g) {
    const int n = g.order();
    if (n > kMaxGraph6Vertices)
        throw UnsupportedSize("graph6 short form holds at most 62 vertices, got " + std::to_string(n));
    std::string out(1, static_cast<char>(63 + n));
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
    return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
    static constexpr std::string_view kHeader = ">>graph6<<";
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        std::string_view view(line);
        while (!view.empty() && (view.back() == '\r' || view.back() == ' ' || view.back() == '\t'))
            view.remove_suffix(1);
        if (view.starts_with(kHeader)) view.remove_prefix(kHeader.size());
        else if (view.starts_with(">>")) continue;
        if (view.empty()) continue;
        out.push_back(parse_graph6(view));
    }
    return out;
}

}  // namespace psilab
