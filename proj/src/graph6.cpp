#include "ddg/graph6.hpp"

#include "json.hpp"

namespace ddg {

namespace {

constexpr int kBias = 63;  // printable offset: every graph6 byte is value+63

long long body_bits(int n) { return static_cast<long long>(n) * (n - 1) / 2; }

}  // namespace

std::string graph6_encode(const Graph& g) {
    const int n = g.size();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        // 63 <= n <= 258047: '~' then 18 bits, big-endian, six per byte
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
        out.push_back(static_cast<char>((n & 63) + kBias));
    }
    int group = 0, filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + kBias));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + kBias));
    return out;
}

Graph graph6_decode(std::string_view s) {
    if (s.empty()) throw MalformedHeader("empty graph6 string");
    size_t pos = 0;
    long long n = 0;
    const auto byte_at = [&](size_t i) -> int {
        const int b = static_cast<unsigned char>(s[i]);
        if (b < kBias || b > 126)
            throw MalformedHeader("byte " + std::to_string(i) + " outside graph6 range");
        return b - kBias;
    };
    if (byte_at(0) != 63) {
        n = byte_at(0);
        pos = 1;
    } else {
        if (s.size() >= 2 && byte_at(1) == 63)
            throw SizeOverflow("graph6 vertex counts beyond 258047 are not supported");
        if (s.size() < 4) throw MalformedHeader("truncated multi-byte vertex count");
        n = (static_cast<long long>(byte_at(1)) << 12) | (byte_at(2) << 6) | byte_at(3);
        pos = 4;
    }
    if (n < 1 || n > Graph::kMaxVertices)
        throw SizeOverflow("graph6 vertex count " + std::to_string(n) + " outside [1, " +
                           std::to_string(Graph::kMaxVertices) + "]");
    const long long bits = body_bits(static_cast<int>(n));
    const long long need = (bits + 5) / 6;
    const long long have = static_cast<long long>(s.size()) - static_cast<long long>(pos);
    if (have < need) throw TruncatedBits("graph6 body too short");
    if (have > need) throw TruncatedBits("trailing bytes after graph6 body");
    GraphBuilder b(static_cast<int>(n));
    long long bit_index = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit_index) {
            const int group = byte_at(pos + static_cast<size_t>(bit_index / 6));
            if ((group >> (5 - bit_index % 6)) & 1) b.add_edge(i, j);
        }
    }
    if (bits % 6 != 0) {
        const int last = byte_at(s.size() - 1);
        const int pad = static_cast<int>(6 - bits % 6);
        if (last & ((1 << pad) - 1)) throw TruncatedBits("nonzero padding bits");
    }
    return b.build();
}

std::string adjacency_json(const Graph& g) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < g.size(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < g.size(); ++j) row.push_back(g.adjacent(i, j) ? 1 : 0);
        rows.push_back(std::move(row));
    }
    return nlohmann::json{{"n", g.size()}, {"rows", std::move(rows)}}.dump();
}

}  // namespace ddg
