#pragma once

// Exact constructions of the reference codes.

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "scdt/code.hpp"

namespace scdt {

class CatalogError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ExpectedProfile {
  int n = 0;
  std::size_t size = 0;
  std::size_t s = 0;
  int t = 0;
  bool tight = false;
  bool delsarte = false;
  std::vector<QuadExt> spectrum;  // descending
};

struct CatalogEntry {
  std::string name;  // canonical, e.g. "simplex(5)"
  std::string family;
  std::optional<int> param;
  ExpectedProfile expected;
  /// Beyond the Delsarte suite; analysed only on request.
  bool extended = false;
};

/// Parses "family", "family(n)" or "family-n". Throws CatalogError.
std::pair<std::string, std::optional<int>> parse_catalog_name(const std::string& name);

/// The fixed corpus: simplex and cross_polytope for 3 <= n <= 10, then the
/// sporadic codes. cell600 is included only when `extended` is set.
std::vector<CatalogEntry> catalog_entries(bool extended = true);

CatalogEntry catalog_entry(const std::string& name);
SphericalCode construct(const std::string& name);

SphericalCode simplex(int n);
SphericalCode cross_polytope(int n);
SphericalCode icosahedron();
SphericalCode clebsch16();
SphericalCode e8_kissing();
SphericalCode cell24();
SphericalCode cell600();

void emit(const std::string& name, const std::filesystem::path& path);

}  // namespace scdt
