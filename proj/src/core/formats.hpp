#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "core/graph.hpp"

namespace graphfp {

enum class Format { graph6, sparse6, edgelist };

class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& what, size_t byte_offset)
      : std::runtime_error(what + " (byte " + std::to_string(byte_offset) + ")"),
        offset(byte_offset) {}
  size_t offset;
};

class UnsupportedFeatureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Format parse_format_name(std::string_view name);
const char* format_name(Format f);

Graph parse_graph(std::string_view bytes, Format format);
std::string serialize_graph(const Graph& g, Format format);

}  // namespace graphfp
