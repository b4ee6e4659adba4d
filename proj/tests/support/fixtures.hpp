#pragma once

#include <string>

#include "qal/corpus.hpp"
#include "qal/laurent.hpp"

namespace qal::testing {

inline const Diagram& fx(const char* name) { return fixture(name).diagram; }
inline HalfLaurent poly(const std::string& s) { return parse_laurent(s); }

}  // namespace qal::testing
