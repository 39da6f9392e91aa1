#include <cctype>
#include <istream>
#include <sstream>

#include "copclean/error.hpp"
#include "copclean/formats.hpp"

namespace copclean {

namespace {

constexpr int kLow = 63;
constexpr int kHigh = 126;

int decode_byte(std::string_view s, std::size_t pos) {
  if (pos >= s.size()) throw Error(ErrorCode::Truncated, "record ends inside size field");
  const auto c = static_cast<unsigned char>(s[pos]);
  if (c < kLow || c > kHigh) throw Error(ErrorCode::InvalidChar, "byte " + std::to_string(c) + " at offset " + std::to_string(pos));
  return c - kLow;
}

void append_size(std::string& out, long long n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kLow));
    return;
  }
  const int groups = n <= 258047 ? 3 : 6;
  out.push_back(static_cast<char>(kHigh));
  if (groups == 6) out.push_back(static_cast<char>(kHigh));
  for (int i = groups - 1; i >= 0; --i) out.push_back(static_cast<char>(((n >> (6 * i)) & 63) + kLow));
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  constexpr std::string_view header = ">>graph6<<";
  if (line.starts_with(header)) line.remove_prefix(header.size());
  if (line.empty()) throw Error(ErrorCode::Truncated, "empty record");

  std::size_t pos = 0;
  long long n = 0;
  if (decode_byte(line, 0) != 63) {
    n = decode_byte(line, 0);
    pos = 1;
  } else if (line.size() > 1 && decode_byte(line, 1) == 63) {
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | decode_byte(line, i);
    pos = 8;
  } else {
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | decode_byte(line, i);
    pos = 4;
  }
  if (n > kGraph6MaxOrder) throw Error(ErrorCode::UnsupportedSize, "order " + std::to_string(n) + " exceeds cap");

  const long long bits = n * (n - 1) / 2;
  const auto needed = static_cast<std::size_t>((bits + 5) / 6);
  const std::size_t available = line.size() - pos;
  for (std::size_t i = pos; i < line.size(); ++i) decode_byte(line, i);
  if (available < needed)
    throw Error(ErrorCode::Truncated, "expected " + std::to_string(needed) + " edge bytes, found " + std::to_string(available));
  if (available > needed) throw Error(ErrorCode::TrailingData, std::to_string(available - needed) + " extra bytes");

  std::vector<Edge> edges;
  long long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = line[pos + static_cast<std::size_t>(k / 6)] - kLow;
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  return Graph(static_cast<int>(n), edges);
}

std::string emit_graph6(const Graph& g) {
  const long long n = g.order();
  if (n > kGraph6MaxOrder) throw Error(ErrorCode::UnsupportedSize, "order " + std::to_string(n) + " exceeds cap");
  std::string out;
  append_size(out, n);
  const long long bits = n * (n - 1) / 2;
  std::string body(static_cast<std::size_t>((bits + 5) / 6), 0);
  for (auto [u, v] : g.edges()) {
    // edge {u,v} with u < v sits at bit index v(v-1)/2 + u
    const long long k = static_cast<long long>(v) * (v - 1) / 2 + u;
    body[static_cast<std::size_t>(k / 6)] |= static_cast<char>(1 << (5 - k % 6));
  }
  for (auto& c : body) c = static_cast<char>(c + kLow);
  return out + body;
}

Graph parse_edge_list(std::istream& in, std::string name) {
  std::vector<Edge> edges;
  int declared = -1;
  int max_id = -1;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) {
      std::string comment = line.substr(hash + 1);
      std::istringstream cs(comment);
      std::string token;
      if (cs >> token && token.starts_with("n=")) declared = std::stoi(token.substr(2));
      line.erase(hash);
    }
    std::istringstream ls(line);
    long long u = 0;
    long long v = 0;
    if (!(ls >> u)) continue;
    std::string rest;
    if (!(ls >> v) || (ls >> rest))
      throw Error(ErrorCode::BadParam, "edge list line " + std::to_string(lineno) + ": expected 'u v'");
    if (u < 0 || v < 0 || u > kGraph6MaxOrder || v > kGraph6MaxOrder)
      throw Error(ErrorCode::VertexOutOfRange, "edge list line " + std::to_string(lineno));
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    max_id = std::max({max_id, static_cast<int>(u), static_cast<int>(v)});
  }
  const int n = std::max(declared, max_id + 1);
  return Graph(n, edges, std::move(name));
}

std::string emit_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "# n=" << g.order() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace copclean
