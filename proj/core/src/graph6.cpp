#include "deza/graph6.hpp"

#include <algorithm>

namespace deza {

namespace {

constexpr char kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

void append_size(std::string& out, std::size_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
  }
}

unsigned sextet(std::string_view s, std::size_t pos) {
  auto c = static_cast<unsigned char>(s[pos]);
  if (c < 63 || c > 126) {
    throw Graph6Error("bad graph6 character " + std::to_string(c), pos);
  }
  return c - 63U;
}

}  // namespace

std::string graph6_encode(const Graph& g) {
  const auto n = g.order();
  std::string out;
  append_size(out, n);
  unsigned acc = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1U : 0U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    acc <<= (6 - filled);
    out.push_back(static_cast<char>(acc + kBias));
  }
  return out;
}

Graph graph6_decode(std::string_view line) {
  std::size_t base = 0;
  if (line.starts_with(kHeader)) base = kHeader.size();
  auto s = line.substr(base);
  if (!s.empty() && s.back() == '\n') s.remove_suffix(1);
  if (!s.empty() && s.back() == '\r') s.remove_suffix(1);
  if (s.empty()) throw Graph6Error("empty graph6 line", base);

  std::size_t n = 0;
  std::size_t pos = 0;
  auto need = [&](std::size_t count) {
    if (s.size() < pos + count) {
      throw Graph6Error("truncated graph6 size header", base + s.size());
    }
  };
  if (static_cast<unsigned char>(s[0]) != 126) {
    n = sextet(s, 0);
    pos = 1;
  } else if (s.size() > 1 && static_cast<unsigned char>(s[1]) == 126) {
    pos = 2;
    need(6);
    for (int i = 0; i < 6; ++i, ++pos) n = (n << 6) | sextet(s, pos);
  } else {
    pos = 1;
    need(3);
    for (int i = 0; i < 3; ++i, ++pos) n = (n << 6) | sextet(s, pos);
  }
  if (n > kVertexCap) {
    throw Graph6Error("vertex count " + std::to_string(n) + " exceeds cap",
                      base);
  }

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (s.size() - pos != body) {
    throw Graph6Error("graph6 body has " + std::to_string(s.size() - pos) +
                          " bytes, expected " + std::to_string(body),
                      base + std::min(s.size(), pos + body));
  }

  GraphBuilder b(n);
  std::size_t bit = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++bit) {
      auto byte_pos = pos + bit / 6;
      auto value = sextet(s, byte_pos);
      if ((value >> (5 - bit % 6)) & 1U) b.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    auto last = pos + body - 1;
    auto value = sextet(s, last);
    auto pad = 6 - bits % 6;
    if ((value & ((1U << pad) - 1)) != 0) {
      throw Graph6Error("nonzero graph6 padding bits", base + last);
    }
  } else if (body > 0) {
    sextet(s, pos + body - 1);
  }
  return std::move(b).build();
}

}  // namespace deza
