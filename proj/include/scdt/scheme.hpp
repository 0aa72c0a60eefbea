#pragma once

// Association scheme of a spherical code whose relations are the level sets
// of the inner product. All algebra is carried out in the (s+1)-dimensional
// relation-value representation: an element sum_l v_l A_l is the vector v.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "scdt/code.hpp"
#include "scdt/linalg.hpp"

namespace scdt {

enum class IdempotentSource {
  kGegenbauer,  // e_k(l) = h_k Q_k(a_l) / |C| for k < s, E_s by complement
  kSpectral,    // eigen-decomposition of the intersection algebra
};

struct SchemeTables {
  std::size_t classes = 0;  // s
  std::size_t points = 0;   // |C|
  int dim = 0;
  /// a_0 = 1 > a_1 > ... > a_s
  std::vector<QuadExt> relation_values;
  std::vector<std::uint8_t> relation_of;
  /// p_ij^k at index (i (s+1) + j)(s+1) + k
  std::vector<std::size_t> p;
  /// evalues(k, l) = value of E_k on relation l
  Matrix evalues;
  std::vector<QuadExt> mult;
  /// q_ij^k at index (i (s+1) + j)(s+1) + k, with E_i o E_j = (1/|C|) sum_k q_ij^k E_k
  std::vector<QuadExt> krein;
  IdempotentSource source = IdempotentSource::kGegenbauer;

  std::size_t rank() const { return classes + 1; }
  std::size_t p_at(std::size_t i, std::size_t j, std::size_t k) const { return p[(i * rank() + j) * rank() + k]; }
  const QuadExt& q_at(std::size_t i, std::size_t j, std::size_t k) const {
    return krein[(i * rank() + j) * rank() + k];
  }
  std::vector<QuadExt> idempotent(std::size_t k) const;
  /// Matrix product in the value representation.
  std::vector<QuadExt> product(const std::vector<QuadExt>& x, const std::vector<QuadExt>& y) const;
};

/// (x, y) lies in relation k but p_ij^k(x, y) differs from the reference
/// count taken at the first pair of relation k.
struct ConstancyFailure {
  std::size_t x = 0;
  std::size_t y = 0;
  std::size_t k = 0;
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t expected = 0;
  std::size_t found = 0;
  std::string describe() const;
};

class SchemeError : public std::runtime_error {
 public:
  explicit SchemeError(ConstancyFailure w) : std::runtime_error(w.describe()), witness_(w) {}
  const ConstancyFailure& witness() const { return witness_; }

 private:
  ConstancyFailure witness_;
};

struct SchemeOptions {
  unsigned workers = 1;
  /// Unset: Gegenbauer idempotents when t >= 2s - 2, spectral otherwise.
  std::optional<IdempotentSource> source;
};

std::variant<SchemeTables, ConstancyFailure> try_build_scheme(const SphericalCode& code,
                                                              const SchemeOptions& options = {});
/// Throws SchemeError carrying the witness when the relations do not form a
/// scheme.
SchemeTables build_scheme(const SphericalCode& code, const SchemeOptions& options = {});

/// Krein parameters from the value table: expands e_i(l) e_j(l) in the
/// idempotent basis.
std::vector<QuadExt> krein_parameters(const SchemeTables& tables);

struct SchemeChecks {
  bool resolution = false;    // sum_k e_k(l) = delta_{l0}
  bool idempotency = false;   // E_i E_j = delta_ij E_i
  bool multiplicities = false;  // positive integers summing to |C|
  bool krein_identity = false;  // q_0j^k = delta_jk
  bool krein_nonnegative = false;
  bool harmonic_ranks = false;  // m_k = h_{n,k} for k < s
  bool rational_middle = false;  // e_k(l) rational for 2 <= k <= s-1
  bool all() const {
    return resolution && idempotency && multiplicities && krein_identity && krein_nonnegative;
  }
};

SchemeChecks verify_tables(const SchemeTables& tables);

/// Dense |C| x |C| recomputation of idempotency and the Krein expansion.
bool dense_cross_check(const SphericalCode& code, const SchemeTables& tables);

enum class SuzukiClass { kNone, kI, kII, kIII, kIV, kV };
const char* to_string(SuzukiClass c);

struct AlternateOrdering {
  std::vector<std::size_t> order;  // E_order[0], ..., E_order[s]
  std::vector<SuzukiClass> matches;
  SuzukiClass suzuki_class = SuzukiClass::kNone;
  bool ambiguous = false;
};

struct OrderingReport {
  bool natural_ordering_qpoly = false;
  std::vector<AlternateOrdering> alternates;
  std::size_t total_qpoly = 0;
  bool within_suzuki_bound = true;  // total_qpoly <= 2
};

/// True iff E_order[0..s] is Q-polynomial: q_{1j}^k = 0 for |j-k| > 1 and
/// q_{1j}^{j+1} != 0 in the reindexed ordering.
bool is_qpolynomial(const SchemeTables& tables, const std::vector<std::size_t>& order);

/// Suzuki patterns the ordering fits, prefix/suffix-matched against the
/// listed sequences.
std::vector<SuzukiClass> suzuki_matches(const std::vector<std::size_t>& order);

OrderingReport qpoly_orderings(const SchemeTables& tables);

struct GaloisAction {
  bool identity = true;
  std::vector<std::size_t> permutation;  // E_k^sigma = E_{permutation[k]}
  bool anomaly = false;                  // conjugated table is not a permutation of the original
  std::int64_t radicand = 0;
};

GaloisAction galois_action(const SchemeTables& tables);

}  // namespace scdt
