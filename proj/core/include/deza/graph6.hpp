#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "deza/graph.hpp"

namespace deza {

class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Standard graph6 line without the trailing newline.
std::string graph6_encode(const Graph& g);

/// Accepts a line with or without a trailing '\n' (and optional ">>graph6<<"
/// header).
Graph graph6_decode(std::string_view line);

}  // namespace deza
