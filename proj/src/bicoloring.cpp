#include "onetwo/bicoloring.hpp"

#include <charconv>
#include <stdexcept>

namespace onetwo {

Mode Mode::interval(std::uint32_t a, std::uint32_t b) {
  if (a > b) throw std::invalid_argument("mode needs a <= b");
  return Mode{ModeKind::kInterval, a, b};
}

Mode Mode::total(std::uint32_t a, std::uint32_t b) {
  if (a > b) throw std::invalid_argument("mode needs a <= b");
  return Mode{ModeKind::kTotal, a, b};
}

std::string to_string(const Mode& mode) {
  return std::string(mode.kind == ModeKind::kTotal ? "total" : "interval") + "[" +
         std::to_string(mode.a) + "," + std::to_string(mode.b) + "]";
}

std::string format_set(const std::vector<Vertex>& set) {
  std::string out;
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(set[i]);
  }
  return out;
}

std::vector<Vertex> parse_set(const std::string& text) {
  std::vector<Vertex> out;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_space();
  if (i == text.size()) return out;
  while (true) {
    skip_space();
    Vertex v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
    if (ec != std::errc() || v == 0) {
      throw std::invalid_argument("bad vertex list '" + text + "'");
    }
    out.push_back(v);
    i = static_cast<std::size_t>(ptr - text.data());
    skip_space();
    if (i == text.size()) break;
    if (text[i] != ',') throw std::invalid_argument("bad vertex list '" + text + "'");
    ++i;
  }
  return out;
}

}  // namespace onetwo
