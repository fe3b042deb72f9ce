#pragma once

#include <filesystem>
#include <string>

#include "nsalg/magma.hpp"

namespace nsalg {

// CAY text format, one magma per file:
//   magma <name>
//   elements <lbl1> ... <lbln>
//   [neutro <lbl> ...]            optional: marks indeterminate elements
//   table
//   <n rows of n labels>          row i lists i*j for j = 1..n
//   end
// '#' starts a comment line. In place of the elements/table block a file
// may carry one synthesis directive:
//   loop L <n> <m>
//   neutrosophic ring <n> <add|mul>
//   neutrosophic adjoin of <base-file>     (path relative to the file)
// parse_magma handles the explicit-table form and the directives that need
// no file context; adjoin-of requires load_magma_file.
MagmaPtr parse_magma(const std::string& text);

// Handles directives too; adjoin-of loads the base relative to `path`.
MagmaPtr load_magma_file(const std::filesystem::path& path);

std::string format_magma(const FiniteMagma& m);

}  // namespace nsalg
