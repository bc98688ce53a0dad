#include "pea/fixtures.hpp"

#include "pea/construct.hpp"
#include "pea/errors.hpp"
#include "pea/io.hpp"
#include "pea/morphism.hpp"

#include <algorithm>
#include <cstdlib>

#ifndef PEA_SOURCE_FIXTURE_DIR
#define PEA_SOURCE_FIXTURE_DIR "fixtures"
#endif

namespace pea {

namespace {

PeaTable labelled(std::string name, const std::vector<std::string>& labels,
                  const std::vector<PeaTable::Sum>& sums) {
  return PeaTable::from_raw(labels.size(), 0, static_cast<Element>(labels.size()) - 1, sums, labels,
                            std::move(name));
}

std::vector<PeaTable> make_builtins() {
  std::vector<PeaTable> out;
  out.push_back(labelled("ONE", {"0"}, {}));
  out.push_back(labelled("C2", {"0", "1"}, {}));
  out.push_back(labelled("M3", {"0", "a", "1"}, {{1, 1, 2}}));
  out.push_back(labelled("B4", {"0", "p", "q", "1"}, {{1, 2, 3}, {2, 1, 3}}));
  // Horizontal sum of two copies of M3 glued at 0 and 1, with a+a' = b+b' = 1.
  out.push_back(labelled("MO2", {"0", "a", "a'", "b", "b'", "1"}, {{1, 2, 5}, {2, 1, 5}, {3, 4, 5}, {4, 3, 5}}));
  const std::vector<Pea> factors = {Pea(out[1]), Pea(out[2])};
  PeaTable product = direct_product(factors).algebra.table();
  product.set_name("C2xM3");
  out.push_back(std::move(product));
  for (const auto& t : out)
    if (!verify_axioms(t).ok()) throw InvariantViolation("built-in fixture " + t.name() + " is not a PEA");
  return out;
}

}  // namespace

const std::vector<PeaTable>& builtin_fixtures() {
  static const std::vector<PeaTable> fixtures = make_builtins();
  return fixtures;
}

const PeaTable& builtin_fixture(const std::string& name) {
  for (const auto& t : builtin_fixtures())
    if (t.name() == name) return t;
  throw DomainError("no built-in fixture named '" + name + "'");
}

std::filesystem::path fixture_directory() {
  const char* env = std::getenv("PEA_FIXTURES");
  return env != nullptr && *env != '\0' ? std::filesystem::path(env) : std::filesystem::path(PEA_SOURCE_FIXTURE_DIR);
}

std::vector<PeaTable> load_fixture_directory(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  if (std::filesystem::is_directory(dir))
    for (const auto& entry : std::filesystem::directory_iterator(dir))
      if (entry.is_regular_file() && entry.path().extension() == ".pea") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::vector<PeaTable> out;
  for (const auto& f : files)
    for (auto& t : load_peas(f)) {
      const AxiomReport r = verify_axioms(t);
      if (!r.ok())
        throw DomainError(f.string() + ": " + (t.name().empty() ? "an algebra" : t.name()) + " violates " +
                          axiom_name(r.violations.front().axiom));
      out.push_back(std::move(t));
    }
  return out;
}

PeaTable resolve_algebra(const std::string& arg) {
  const std::filesystem::path path(arg);
  if (std::filesystem::is_regular_file(path)) return parse_pea(read_text(path));
  for (const auto& t : builtin_fixtures())
    if (t.name() == arg) return t;
  for (auto& t : load_fixture_directory(fixture_directory()))
    if (t.name() == arg) return std::move(t);
  throw DomainError("'" + arg + "' is neither a readable file nor a fixture name");
}

std::string builtin_alias(const PeaTable& t) {
  const auto code = canonical_code(t);
  for (const auto& f : builtin_fixtures())
    if (f.size() == t.size() && canonical_code(f) == code) return f.name();
  return {};
}

}  // namespace pea
