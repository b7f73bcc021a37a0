#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chtilde/multiset_cone.hpp"
#include "chtilde/recurrence_engine.hpp"

namespace chtilde {

inline constexpr int kCertificateSchemaVersion = 1;

/// Evidence that L(e(n,i,j)) has only non-negative h-coefficients.
struct PositivityCertificate {
  int n = 0;
  int i = 0;
  int j = 0;
  /// Center c >= 0 of a cone containing the witness of e(n,i,j); positivity
  /// of the fold follows from cone membership.
  std::int64_t center = 0;
  std::vector<std::pair<std::int64_t, BigInt>> coefficients;  // sorted by index
  bool all_nonnegative = true;
  std::optional<std::int64_t> max_index;  // empty for the zero element
  BigInt mass;

  friend bool operator==(const PositivityCertificate&, const PositivityCertificate&) = default;
};

/// Evidence that M_{n,j} lies in R(c) with c = 2^{n+1} (j = 0) or 2^{n+1} - 1 (j = 1).
struct ConeCertificate {
  int n = 0;
  int j = 0;
  std::int64_t center = 0;
  ConeDecomposition decomposition;
  bool recomposition_ok = false;

  friend bool operator==(const ConeCertificate&, const ConeCertificate&) = default;
};

/// Cone center used by the positivity argument for e(n,i,j):
/// j=0: 2^{n+1} (i=0), 2^{n+1}-1 (i=+-1); j=1: 2^{n+1}-1 (i=0), 2^{n+1}-2 (i=+-1).
std::int64_t positivity_center(int n, int i, int j);

PositivityCertificate certify_positivity(RecurrenceEngine& engine, int n, int i, int j);

/// Throws ConeViolation if M_{n,j} is outside its cone.
ConeCertificate certify_cone(RecurrenceEngine& engine, int n, int j);

/// Re-derives every invariant of the certificate from its own fields.
bool is_valid(const PositivityCertificate& cert);
bool is_valid(const ConeCertificate& cert);

/// A cone certificate with center >= 0 forces every coefficient of the fold
/// of the recomposed multiset to be non-negative; true iff `pos` (for the
/// same n, j and i = 0) agrees.
bool positivity_follows(const ConeCertificate& cone, const PositivityCertificate& pos);

// JSON documents: UTF-8, stable key order, every BigInt as a decimal string.
std::string to_json(const PositivityCertificate& cert);
std::string to_json(const ConeCertificate& cert);
PositivityCertificate positivity_from_json(std::string_view text);
ConeCertificate cone_from_json(std::string_view text);

/// Bundle of all certificates for n <= n_max, as produced by `certify`.
struct CertificateSet {
  std::vector<PositivityCertificate> positivity;
  std::vector<ConeCertificate> cone;
  /// Pairs (n, j) where positivity_follows failed.
  std::vector<std::pair<int, int>> implication_failures;

  bool all_valid() const;
};

CertificateSet certify_all(RecurrenceEngine& engine, int n_max);

std::string to_json(const CertificateSet& set);

}  // namespace chtilde
