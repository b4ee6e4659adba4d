#include "qal/corpus.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qal {

namespace detail {
extern const char* const fixtures_text;  // generated from data/fixtures.txt
}

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(std::size_t line, const std::string& what, std::size_t column) {
  throw ParseError("line " + std::to_string(line) + ": " + what, column);
}

}  // namespace

std::vector<NamedDiagram> parse_corpus(std::string_view text) {
  std::vector<NamedDiagram> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    const std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;

    const std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    const std::size_t base = static_cast<std::size_t>(body.data() - line.data());

    const auto colon = body.find(':');
    if (colon == std::string_view::npos) fail(line_no, "expected 'name: <PD>'", base + 1);
    NamedDiagram entry;
    entry.name = std::string(trim(body.substr(0, colon)));
    if (entry.name.empty()) fail(line_no, "empty name", base + 1);

    std::string_view rest = body.substr(colon + 1);
    std::size_t rest_col = base + colon + 2;
    const auto bar = rest.find('|');
    const std::string_view pd = rest.substr(0, bar);
    try {
      entry.diagram = parse_pd(pd);
    } catch (const ParseError& e) {
      fail(line_no, e.what(), rest_col + e.column() - 1);
    }

    std::size_t cursor = bar;
    while (cursor != std::string_view::npos) {
      const std::size_t start = cursor + 1;
      const std::size_t next = rest.find('|', start);
      const std::string_view tag = trim(rest.substr(start, next == std::string_view::npos ? next : next - start));
      const std::size_t col = rest_col + start;
      const auto eq = tag.find('=');
      if (eq == std::string_view::npos) fail(line_no, "expected key=value tag", col);
      const std::string_view key = trim(tag.substr(0, eq));
      const std::string_view value = trim(tag.substr(eq + 1));
      try {
        if (key == "jones") {
          entry.expected_jones = parse_laurent(value);
        } else if (key == "det") {
          entry.expected_det = std::stoll(std::string(value));
        } else {
          fail(line_no, "unknown tag '" + std::string(key) + "'", col);
        }
      } catch (const std::invalid_argument& e) {
        fail(line_no, std::string("bad ") + std::string(key) + " value: " + e.what(), col);
      }
      cursor = next;
    }
    out.push_back(std::move(entry));
  }
  return out;
}

std::vector<NamedDiagram> load_corpus(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open corpus file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_corpus(buf.str());
}

const std::vector<NamedDiagram>& builtin_fixtures() {
  static const std::vector<NamedDiagram> fixtures = parse_corpus(detail::fixtures_text);
  return fixtures;
}

const NamedDiagram& fixture(std::string_view name) {
  for (const auto& f : builtin_fixtures()) {
    if (f.name == name) return f;
  }
  throw std::out_of_range("unknown fixture '" + std::string(name) + "'");
}

}  // namespace qal
