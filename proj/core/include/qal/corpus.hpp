#pragma once

// Named diagram corpora. One entry per line:
//
//   name: X[..] X[..] ... [; circles=N] [| jones=<poly>] [| det=<d>]
//
// Blank lines and lines starting with '#' are ignored. The optional tags are
// expectations, checked by the tests and the CLI `fixtures` command.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qal/diagram.hpp"
#include "qal/laurent.hpp"

namespace qal {

struct NamedDiagram {
  std::string name;
  Diagram diagram;
  std::optional<HalfLaurent> expected_jones;
  std::optional<std::int64_t> expected_det;
};

/// Throws ParseError; the message carries "line N" and the column refers to
/// the offending line.
std::vector<NamedDiagram> parse_corpus(std::string_view text);
std::vector<NamedDiagram> load_corpus(const std::filesystem::path& path);

/// The fixture set compiled into the library.
const std::vector<NamedDiagram>& builtin_fixtures();
/// Throws std::out_of_range for unknown names.
const NamedDiagram& fixture(std::string_view name);

}  // namespace qal
