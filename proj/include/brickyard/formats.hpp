#pragma once

// graph6 / sparse6 / edgelist codecs, byte-level per the published format
// descriptions. graph6 carries simple graphs; sparse6 and edgelist preserve
// parallel edges. Loops are illegal in this library and parsing rejects them
// with the offending position.

#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>

#include "brickyard/multigraph.hpp"

namespace brickyard {

struct parse_error : std::runtime_error {
    parse_error(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " (at byte " + std::to_string(pos) + ")"),
          position(pos) {}
    std::size_t position;
};

enum class GraphFormat { autodetect, graph6, sparse6, edgelist };

namespace detail {

inline constexpr int kBias6 = 63;

inline int data_byte(std::string_view s, std::size_t i) {
    if (i >= s.size()) throw parse_error("truncated input", i);
    const unsigned char c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126) throw parse_error("byte outside printable range 63..126", i);
    return c - kBias6;
}

// N(n): 1 byte below 63, '~' + 3 bytes to 2^18-1, '~~' + 6 bytes beyond
// (rejected here; far past desk scale).
inline int decode_order(std::string_view s, std::size_t& i) {
    int b = data_byte(s, i);
    if (b < 63) {
        ++i;
        return b;
    }
    if (i + 1 < s.size() && static_cast<unsigned char>(s[i + 1]) == 126)
        throw parse_error("graph order beyond supported range", i);
    ++i;
    int n = 0;
    for (int k = 0; k < 3; ++k, ++i) n = (n << 6) | data_byte(s, i);
    return n;
}

inline void encode_order(std::string& out, int n) {
    if (n < 0) throw std::invalid_argument("encode: negative order");
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias6));
        return;
    }
    if (n >= (1 << 18)) throw std::invalid_argument("encode: order beyond supported range");
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + kBias6));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kBias6));
    out.push_back(static_cast<char>((n & 63) + kBias6));
}

class BitReader {
public:
    BitReader(std::string_view s, std::size_t start) : s_(s), i_(start) {}

    // -1 on end of data
    int next_bit() {
        if (avail_ == 0) {
            if (i_ >= s_.size() || s_[i_] == '\n' || s_[i_] == '\r') return -1;
            cur_ = data_byte(s_, i_);
            ++i_;
            avail_ = 6;
        }
        --avail_;
        return (cur_ >> avail_) & 1;
    }
    // -1 on end of data mid-field
    long next_field(int bits) {
        long x = 0;
        for (int k = 0; k < bits; ++k) {
            const int b = next_bit();
            if (b < 0) return -1;
            x = (x << 1) | b;
        }
        return x;
    }
    std::size_t position() const { return i_; }

private:
    std::string_view s_;
    std::size_t i_;
    int cur_ = 0;
    int avail_ = 0;
};

class BitWriter {
public:
    void push(int bit) {
        cur_ = (cur_ << 1) | bit;
        if (++filled_ == 6) flush_group();
    }
    void push_field(long x, int bits) {
        for (int k = bits - 1; k >= 0; --k) push(static_cast<int>((x >> k) & 1));
    }
    // pad the final group with ones (sparse6); `lead_zero` per the sparse6
    // power-of-two rule
    void finish(bool lead_zero = false) {
        if (filled_ == 0) return;
        if (lead_zero) {
            push(0);
            if (filled_ == 0) return;
        }
        while (filled_ != 0) push(1);
    }
    // pad the final group with zeros (graph6)
    void finish_zeros() {
        while (filled_ != 0) push(0);
    }
    int bits_pending() const { return filled_; }
    const std::string& bytes() const { return out_; }

private:
    void flush_group() {
        out_.push_back(static_cast<char>(cur_ + kBias6));
        cur_ = 0;
        filled_ = 0;
    }
    std::string out_;
    int cur_ = 0;
    int filled_ = 0;
};

inline std::string_view strip_header(std::string_view s, std::string_view header) {
    if (s.substr(0, header.size()) == header) s.remove_prefix(header.size());
    return s;
}

}  // namespace detail

inline MultiGraph parse_graph6(std::string_view line) {
    line = detail::strip_header(line, ">>graph6<<");
    std::size_t i = 0;
    const int n = detail::decode_order(line, i);
    MultiGraph g(n);
    detail::BitReader bits(line, i);
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row) {
            const int b = bits.next_bit();
            if (b < 0) throw parse_error("graph6 data truncated", bits.position());
            if (b) g.add_edge(row, col);
        }
    return g;
}

inline MultiGraph parse_sparse6(std::string_view line) {
    line = detail::strip_header(line, ">>sparse6<<");
    if (line.empty() || line[0] != ':')
        throw parse_error("sparse6 line must start with ':'", 0);
    std::size_t i = 1;
    const int n = detail::decode_order(line, i);
    MultiGraph g(n);
    const int k = n <= 1 ? 0 : std::bit_width(static_cast<unsigned>(n - 1));
    detail::BitReader bits(line, i);
    long v = 0;
    for (;;) {
        const int b = bits.next_bit();
        if (b < 0) break;
        if (b) ++v;
        const long x = bits.next_field(k);
        if (x < 0) break;  // incomplete trailing field is padding
        if (x > v) {
            v = x;
        } else if (v < n) {
            if (x == v)
                throw parse_error("sparse6 encodes a loop at vertex " + std::to_string(v),
                                  bits.position());
            g.add_edge(static_cast<int>(x), static_cast<int>(v));
        }
    }
    return g;
}

inline MultiGraph parse_edgelist(std::string_view text) {
    std::istringstream in{std::string(text)};
    auto pos = [&in]() -> std::size_t {
        const auto p = in.tellg();
        return p < 0 ? std::size_t{0} : static_cast<std::size_t>(p);
    };
    long long n = -1, m = -1;
    if (!(in >> n >> m) || n < 0 || m < 0)
        throw parse_error("edgelist header must be 'n m'", 0);
    if (n > (1 << 18)) throw parse_error("edgelist order beyond supported range", 0);
    MultiGraph g(static_cast<int>(n));
    for (long long j = 0; j < m; ++j) {
        long long u, v;
        if (!(in >> u >> v))
            throw parse_error("edgelist truncated at edge " + std::to_string(j), pos());
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw parse_error("edgelist vertex out of range at edge " + std::to_string(j),
                              pos());
        if (u == v)
            throw parse_error("edgelist encodes a loop at edge " + std::to_string(j),
                              pos());
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    return g;
}

inline GraphFormat detect_format(std::string_view bytes) {
    if (bytes.substr(0, 10) == ">>graph6<<") return GraphFormat::graph6;
    if (bytes.substr(0, 11) == ">>sparse6<<") return GraphFormat::sparse6;
    if (bytes.empty()) throw parse_error("empty input", 0);
    const unsigned char c = static_cast<unsigned char>(bytes[0]);
    if (c == ':') return GraphFormat::sparse6;
    if (c >= '0' && c <= '9') return GraphFormat::edgelist;
    if (c >= 63 && c <= 126) return GraphFormat::graph6;
    throw parse_error("unrecognized graph format", 0);
}

inline MultiGraph parse_graph(std::string_view bytes,
                              GraphFormat fmt = GraphFormat::autodetect) {
    if (fmt == GraphFormat::autodetect) fmt = detect_format(bytes);
    switch (fmt) {
        case GraphFormat::graph6: return parse_graph6(bytes);
        case GraphFormat::sparse6: return parse_sparse6(bytes);
        case GraphFormat::edgelist: return parse_edgelist(bytes);
        default: throw parse_error("unrecognized graph format", 0);
    }
}

inline std::string to_graph6(const MultiGraph& g) {
    if (!is_simple(g))
        throw std::invalid_argument("to_graph6: graph has parallel edges");
    const int n = g.vertex_count();
    auto adj = detail::adjacency_bits(g);
    std::string out;
    detail::encode_order(out, n);
    detail::BitWriter bits;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row)
            bits.push((adj[static_cast<std::size_t>(row)] >> col) & 1u ? 1 : 0);
    bits.finish_zeros();
    out += bits.bytes();
    return out;
}

inline std::string to_sparse6(const MultiGraph& g) {
    const int n = g.vertex_count();
    const int k = n <= 1 ? 0 : std::bit_width(static_cast<unsigned>(n - 1));
    std::string out = ":";
    detail::encode_order(out, n);

    std::vector<std::pair<int, int>> es;  // (max, min), sorted
    es.reserve(g.edges().size());
    for (auto [u, v] : g.edges())
        es.emplace_back(std::max(u, v), std::min(u, v));
    std::sort(es.begin(), es.end());

    detail::BitWriter bits;
    long v = 0;
    for (auto [w, u] : es) {
        if (w == v) {
            bits.push(0);
            bits.push_field(u, k);
        } else if (w == v + 1) {
            ++v;
            bits.push(1);
            bits.push_field(u, k);
        } else {
            v = w;
            bits.push(1);
            bits.push_field(w, k);
            bits.push(0);
            bits.push_field(u, k);
        }
    }
    // all-ones padding would decode as an edge only when n is a power of two,
    // at least k+1 pad bits remain, and the stream stands at v == n-2
    const int pad = bits.bits_pending() == 0 ? 0 : 6 - bits.bits_pending();
    const bool lead_zero = n > 1 && (n & (n - 1)) == 0 && pad >= k + 1 && v == n - 2;
    bits.finish(lead_zero);
    out += bits.bytes();
    return out;
}

inline std::string to_edgelist(const MultiGraph& g) {
    std::string out = std::to_string(g.vertex_count()) + " " +
                      std::to_string(g.edge_count()) + "\n";
    for (auto [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

}  // namespace brickyard
