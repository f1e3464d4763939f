#include "ngsum/graph6.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace ngsum {

namespace {

[[noreturn]] void fail(const std::string& what, size_t offset) {
    throw std::invalid_argument("graph6: " + what + " at byte offset " + std::to_string(offset));
}

}  // namespace

std::string graph6_encode(const DenseMatrix& adj) {
    const int n = adj.n;
    if (n < 1 || n > 62) throw std::invalid_argument("graph6_encode: order must be in [1,62]");
    if (!adj.is_symmetric(1e-9)) throw std::invalid_argument("graph6_encode: matrix not symmetric");
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int bit = 5;
    unsigned byte = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            const double x = adj.at(i, j);
            if (std::abs(x) > 1e-9 && std::abs(x - 1.0) > 1e-9)
                throw std::invalid_argument("graph6_encode: entries must be 0/1");
            if (x > 0.5) byte |= 1u << bit;
            if (--bit < 0) {
                out.push_back(static_cast<char>(byte + 63));
                byte = 0;
                bit = 5;
            }
        }
    }
    if (bit != 5) out.push_back(static_cast<char>(byte + 63));
    return out;
}

std::string graph6_encode(const StaircaseMatrix& a) {
    if (!a.is_symmetric())
        throw std::invalid_argument("graph6_encode: staircase matrix is not symmetric");
    return graph6_encode(a.to_dense());
}

DenseMatrix graph6_decode(const std::string& input) {
    std::string s = input;
    size_t base = 0;
    const std::string header = ">>graph6<<";
    if (s.rfind(header, 0) == 0) {
        s = s.substr(header.size());
        base = header.size();
    }
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    if (s.empty()) fail("empty input", base);
    const unsigned char first = static_cast<unsigned char>(s[0]);
    if (first == 126) fail("orders above 62 are not supported", base);
    if (first < 63 || first > 125) fail("invalid order byte '" + std::string(1, s[0]) + "'", base);
    const int n = first - 63;
    const long long bits = static_cast<long long>(n) * (n - 1) / 2;
    const size_t want = static_cast<size_t>((bits + 5) / 6);
    if (s.size() - 1 != want)
        fail("expected " + std::to_string(want) + " data bytes, got " + std::to_string(s.size() - 1),
             base + s.size());
    DenseMatrix adj(n);
    long long k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            const size_t pos = 1 + static_cast<size_t>(k / 6);
            const unsigned char b = static_cast<unsigned char>(s[pos]);
            if (b < 63 || b > 126) fail("invalid data byte '" + std::string(1, s[pos]) + "'", base + pos);
            const int bit = 5 - static_cast<int>(k % 6);
            if ((b - 63) >> bit & 1) {
                adj.at(i, j) = 1.0;
                adj.at(j, i) = 1.0;
            }
        }
    }
    return adj;
}

DenseMatrix edge_list_decode(const std::string& text, int n_hint) {
    std::istringstream in(text);
    std::vector<std::pair<int, int>> edges;
    int n = n_hint;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        int u, v;
        if (!(ls >> u)) continue;  // blank line
        if (!(ls >> v))
            throw std::invalid_argument("edge list: missing second endpoint on line " +
                                        std::to_string(lineno));
        if (u < 1 || v < 1 || u == v)
            throw std::invalid_argument("edge list: bad edge on line " + std::to_string(lineno));
        n = std::max({n, u, v});
        edges.emplace_back(u - 1, v - 1);
    }
    DenseMatrix adj(n);
    for (auto [u, v] : edges) {
        adj.at(u, v) = 1.0;
        adj.at(v, u) = 1.0;
    }
    return adj;
}

std::string edge_list_encode(const DenseMatrix& adj) {
    std::ostringstream out;
    for (int i = 0; i < adj.n; ++i)
        for (int j = i + 1; j < adj.n; ++j)
            if (adj.at(i, j) > 0.5) out << (i + 1) << ' ' << (j + 1) << '\n';
    return out.str();
}

}  // namespace ngsum
