#ifndef FLATLIE_MANIFEST_HPP
#define FLATLIE_MANIFEST_HPP

#include <cstdint>
#include <map>
#include <string>

#include "flatlie/metric.hpp"

namespace flatlie {

/// Serializable description of a Lie algebra together with named forms and
/// named products. This is the on-disk JSON schema:
///
///   { "name": str, "dim": int, "basis": [str, ...],
///     "brackets": [ [i, j, [[k, "p/q"], ...]], ... ]   (i < j),
///     "forms":    { name: [["p/q", ...], ...], ... }   (symmetric n x n),
///     "products": { name: [ [i, j, [[k, "p/q"], ...]], ... ], ... } }
///
/// Rationals travel as strings matching -?digits(/digits)? and are
/// re-emitted in lowest terms, so canonical output is byte-stable.
struct Manifest {
  std::string name;
  Index dim = 0;
  std::vector<std::string> basis;
  SparseTable brackets;
  std::map<std::string, Matrix> forms;
  std::map<std::string, SparseTable> products;

  LieAlgebra algebra() const;
  ScalarProduct form(const std::string& form_name) const;
  Product product(const std::string& product_name) const;

  static Manifest from_algebra(const LieAlgebra& a);
};

/// Parses manifest JSON. Malformed JSON raises ParseError (with the line and
/// column from the JSON parser); schema violations raise ValidationError
/// naming the offending field.
Manifest parse_manifest(const std::string& text);

/// Canonical serialization: sorted keys, two-space indent, lowest-term
/// rationals, trailing newline. parse -> emit is idempotent byte-for-byte.
std::string emit_manifest(const Manifest& m);

/// FNV-1a 64-bit digest used to tie reports to their input bytes.
std::uint64_t fnv1a64(const std::string& bytes);
std::string digest_string(const std::string& bytes);

} // namespace flatlie

#endif
