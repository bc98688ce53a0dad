#pragma once

#include "pea/table.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace pea {

// Algebra files are line oriented; '#' starts a comment:
//
//   pea <name>
//   elements <n>
//   zero <i>
//   one <i>
//   label <i> <token>     (optional)
//   sum <i> <j> <k>       (a+b = c; sums with 0 may be omitted)
//   end
//
// A file may hold several such blocks. Indices are those of the file;
// loading renumbers to normal form. Labels are single tokens.

/// Every algebra in `text`. Throws ParseError with the offending line.
std::vector<PeaTable> parse_peas(std::string_view text);

/// Exactly one algebra.
PeaTable parse_pea(std::string_view text);

/// Canonical text: normal-form indices, labels in index order, sums sorted
/// by (i, j) with the zero sums left implicit.
std::string emit_pea(const PeaTable& t);
std::string emit_peas(const std::vector<PeaTable>& ts);

std::string read_text(const std::filesystem::path& path);
std::vector<PeaTable> load_peas(const std::filesystem::path& path);
void save_peas(const std::filesystem::path& path, const std::vector<PeaTable>& ts);

/// Element tokens separated by commas or whitespace, each a label or a
/// decimal index. DomainError on unknown tokens.
ElementSet parse_element_list(const PeaTable& t, std::string_view text);

/// parse_element_list over a file, with '#' comments.
ElementSet load_element_set(const PeaTable& t, const std::filesystem::path& path);

}  // namespace pea
