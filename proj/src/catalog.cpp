#include "scdt/catalog.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>

#include "scdt/code_io.hpp"

namespace scdt {

namespace {

constexpr int kMinParam = 3;
constexpr int kMaxSimplex = 64;
constexpr int kMaxCross = 32;

QuadExt phi() { return QuadExt::normalize(make_rational(1, 2), make_rational(1, 2), 5); }

QuadExt dot(const std::vector<QuadExt>& a, const std::vector<QuadExt>& b) {
  QuadExt acc(0);
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

std::vector<QuadExt> ints(std::initializer_list<long> v) {
  std::vector<QuadExt> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

// All sign patterns applied to the nonzero entries of v.
void push_signed(std::vector<std::vector<QuadExt>>& out, const std::vector<QuadExt>& v) {
  std::vector<std::size_t> nz;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) nz.push_back(i);
  }
  for (unsigned mask = 0; mask < (1u << nz.size()); ++mask) {
    auto w = v;
    for (std::size_t b = 0; b < nz.size(); ++b) {
      if (mask & (1u << b)) w[nz[b]] = -w[nz[b]];
    }
    out.push_back(std::move(w));
  }
}

// +-e_i +- e_j in dimension n
std::vector<std::vector<QuadExt>> dn_roots(int n) {
  std::vector<std::vector<QuadExt>> out;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      std::vector<QuadExt> v(n, QuadExt(0));
      v[i] = QuadExt(1);
      v[j] = QuadExt(1);
      push_signed(out, v);
    }
  }
  return out;
}

bool even_permutation(const std::array<int, 4>& p) {
  int inversions = 0;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) inversions += p[i] > p[j];
  }
  return inversions % 2 == 0;
}

ExpectedProfile expected_for(const std::string& family, std::optional<int> param) {
  const QuadExt half = make_rational(1, 2);
  if (family == "simplex") {
    int n = *param;
    return {n, static_cast<std::size_t>(n + 1), 1, 2, true, true, {QuadExt(make_rational(-1, n))}};
  }
  if (family == "cross_polytope") {
    int n = *param;
    return {n, static_cast<std::size_t>(2 * n), 2, 3, true, true, ints({0, -1})};
  }
  if (family == "icosahedron") {
    QuadExt r = QuadExt::sqrt_of(make_rational(1, 5));
    return {3, 12, 3, 5, true, true, {r, -r, QuadExt(-1)}};
  }
  if (family == "clebsch16") {
    return {5, 16, 2, 3, false, true, {QuadExt(make_rational(1, 5)), QuadExt(make_rational(-3, 5))}};
  }
  if (family == "e8_kissing") return {8, 240, 4, 7, true, true, {half, QuadExt(0), -half, QuadExt(-1)}};
  if (family == "cell24") return {4, 24, 4, 5, false, false, {half, QuadExt(0), -half, QuadExt(-1)}};
  // cell600
  const QuadExt p = phi() / QuadExt(2);          // (1 + sqrt 5)/4
  const QuadExt q = (phi() - QuadExt(1)) / QuadExt(2);  // (sqrt 5 - 1)/4
  return {4, 120, 8, 11, false, false, {p, half, q, QuadExt(0), -q, -half, -p, QuadExt(-1)}};
}

const std::vector<std::string>& sporadic_families() {
  static const std::vector<std::string> names{"icosahedron", "clebsch16", "e8_kissing", "cell24", "cell600"};
  return names;
}

std::string canonical_name(const std::string& family, std::optional<int> param) {
  return param ? family + "(" + std::to_string(*param) + ")" : family;
}

}  // namespace

std::pair<std::string, std::optional<int>> parse_catalog_name(const std::string& name) {
  std::string family = name;
  std::optional<int> param;
  auto read_param = [&](const std::string& digits) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
      throw CatalogError("bad parameter in catalog name '" + name + "'");
    }
    param = v;
  };
  if (auto open = name.find('('); open != std::string::npos) {
    if (name.back() != ')') throw CatalogError("malformed catalog name '" + name + "'");
    family = name.substr(0, open);
    read_param(name.substr(open + 1, name.size() - open - 2));
  } else if (auto dash = name.rfind('-'); dash != std::string::npos && dash + 1 < name.size() &&
                                           std::isdigit(static_cast<unsigned char>(name[dash + 1]))) {
    family = name.substr(0, dash);
    read_param(name.substr(dash + 1));
  }
  if (family == "cross-polytope") family = "cross_polytope";

  if (family == "simplex" || family == "cross_polytope") {
    if (!param) throw CatalogError(family + " needs a dimension, e.g. " + family + "(4)");
    const int hi = family == "simplex" ? kMaxSimplex : kMaxCross;
    if (*param < kMinParam || *param > hi) {
      throw CatalogError(family + " dimension must lie in [" + std::to_string(kMinParam) + ", " + std::to_string(hi) +
                         "]");
    }
    return {family, param};
  }
  if (std::find(sporadic_families().begin(), sporadic_families().end(), family) != sporadic_families().end()) {
    if (param) throw CatalogError(family + " takes no parameter");
    return {family, param};
  }
  throw CatalogError("unknown catalog code '" + name + "'");
}

std::vector<CatalogEntry> catalog_entries(bool extended) {
  std::vector<CatalogEntry> out;
  for (const char* fam : {"simplex", "cross_polytope"}) {
    for (int n = 3; n <= 10; ++n) out.push_back({canonical_name(fam, n), fam, n, expected_for(fam, n), false});
  }
  for (const auto& fam : sporadic_families()) {
    const bool ext = fam == "cell600";
    if (ext && !extended) continue;
    out.push_back({fam, fam, std::nullopt, expected_for(fam, std::nullopt), ext});
  }
  return out;
}

CatalogEntry catalog_entry(const std::string& name) {
  auto [family, param] = parse_catalog_name(name);
  return {canonical_name(family, param), family, param, expected_for(family, param), family == "cell600"};
}

SphericalCode construct(const std::string& name) {
  auto [family, param] = parse_catalog_name(name);
  if (family == "simplex") return simplex(*param);
  if (family == "cross_polytope") return cross_polytope(*param);
  if (family == "icosahedron") return icosahedron();
  if (family == "clebsch16") return clebsch16();
  if (family == "e8_kissing") return e8_kissing();
  if (family == "cell24") return cell24();
  return cell600();
}

SphericalCode simplex(int n) {
  const auto size = static_cast<std::size_t>(n + 1);
  Matrix g(size, size, QuadExt(make_rational(-1, n)));
  for (std::size_t i = 0; i < size; ++i) g(i, i) = QuadExt(1);
  return SphericalCode::from_gram(n, std::move(g), canonical_name("simplex", n));
}

SphericalCode cross_polytope(int n) {
  std::vector<std::vector<QuadExt>> pts;
  for (int i = 0; i < n; ++i) {
    for (long sign : {1L, -1L}) {
      std::vector<QuadExt> v(n, QuadExt(0));
      v[i] = QuadExt(sign);
      pts.push_back(std::move(v));
    }
  }
  return SphericalCode::from_coords(n, std::move(pts), QuadExt(1), canonical_name("cross_polytope", n));
}

// Cyclic permutations of (0, +-1, +-phi); the Gram matrix is formed in
// Q(sqrt 5) so no normalisation by sqrt(1 + phi^2) is needed.
SphericalCode icosahedron() {
  std::vector<std::vector<QuadExt>> pts;
  for (int shift = 0; shift < 3; ++shift) {
    std::vector<std::vector<QuadExt>> base;
    push_signed(base, {QuadExt(0), QuadExt(1), phi()});
    for (auto& v : base) {
      std::vector<QuadExt> w(3);
      for (int k = 0; k < 3; ++k) w[(k + shift) % 3] = v[k];
      pts.push_back(std::move(w));
    }
  }
  const QuadExt norm2 = dot(pts[0], pts[0]);
  Matrix g(pts.size(), pts.size());
  for (std::size_t x = 0; x < pts.size(); ++x) {
    for (std::size_t y = 0; y < pts.size(); ++y) g(x, y) = dot(pts[x], pts[y]) / norm2;
  }
  return SphericalCode::from_gram(3, std::move(g), "icosahedron");
}

SphericalCode clebsch16() {
  std::vector<std::vector<QuadExt>> pts;
  for (unsigned mask = 0; mask < 32; ++mask) {
    if (__builtin_popcount(mask) % 2 != 0) continue;
    std::vector<QuadExt> v(5);
    for (int k = 0; k < 5; ++k) v[k] = QuadExt((mask >> k) & 1u ? -1L : 1L);
    pts.push_back(std::move(v));
  }
  return SphericalCode::from_coords(5, std::move(pts), QuadExt(5), "clebsch16");
}

SphericalCode e8_kissing() {
  auto pts = dn_roots(8);
  const QuadExt half = make_rational(1, 2);
  for (unsigned mask = 0; mask < 256; ++mask) {
    if (__builtin_popcount(mask) % 2 != 0) continue;
    std::vector<QuadExt> v(8);
    for (int k = 0; k < 8; ++k) v[k] = (mask >> k) & 1u ? -half : half;
    pts.push_back(std::move(v));
  }
  return SphericalCode::from_coords(8, std::move(pts), QuadExt(2), "e8_kissing");
}

SphericalCode cell24() { return SphericalCode::from_coords(4, dn_roots(4), QuadExt(2), "cell24"); }

SphericalCode cell600() {
  std::vector<std::vector<QuadExt>> pts;
  for (int i = 0; i < 4; ++i) {
    std::vector<QuadExt> v(4, QuadExt(0));
    v[i] = QuadExt(2);
    push_signed(pts, v);
  }
  push_signed(pts, ints({1, 1, 1, 1}));
  const std::array<QuadExt, 4> base{phi(), QuadExt(1), phi() - QuadExt(1), QuadExt(0)};
  std::array<int, 4> perm{0, 1, 2, 3};
  do {
    if (!even_permutation(perm)) continue;
    std::vector<QuadExt> v(4);
    for (int k = 0; k < 4; ++k) v[perm[k]] = base[k];
    push_signed(pts, v);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return SphericalCode::from_coords(4, std::move(pts), QuadExt(4), "cell600");
}

void emit(const std::string& name, const std::filesystem::path& path) { write_code(construct(name), path); }

}  // namespace scdt
