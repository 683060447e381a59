#pragma once

#include "supertriv/supermod.hpp"

#include <string>

namespace supertriv {

// On-disk module format: JSON with sorted keys, rationals as "p/q" strings
// (plain "p" for integers), actions keyed by generator name in row-major
// order. Canonical output is two-space indented with a trailing newline, so
// write(read(f)) is byte-identical for canonical files.

std::string module_to_json(const Supermodule& m);
Supermodule module_from_json(const std::string& text);

Supermodule read_module(const std::string& path);
void write_module(const std::string& path, const Supermodule& m);

} // namespace supertriv
