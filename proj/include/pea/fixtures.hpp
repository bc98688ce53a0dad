#pragma once

#include "pea/pea.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace pea {

/// The built-in algebras ONE, C2, M3, B4, MO2 and C2xM3, in that order.
/// Every one passes verify_axioms.
const std::vector<PeaTable>& builtin_fixtures();

/// A built-in fixture by name; DomainError if there is none.
const PeaTable& builtin_fixture(const std::string& name);

/// Directory holding the persisted fixtures: $PEA_FIXTURES when set,
/// otherwise the fixtures directory of the source tree.
std::filesystem::path fixture_directory();

/// Every algebra in the *.pea files of `dir`, by file name then file order.
/// Tables failing verify_axioms raise DomainError.
std::vector<PeaTable> load_fixture_directory(const std::filesystem::path& dir);

/// Resolves a command-line algebra argument: an existing file (which must
/// hold exactly one algebra), a built-in fixture name, or the name of an
/// algebra in the fixture directory.
PeaTable resolve_algebra(const std::string& arg);

/// Name of a built-in fixture isomorphic to `t`, empty if none.
std::string builtin_alias(const PeaTable& t);

}  // namespace pea
