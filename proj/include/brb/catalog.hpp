#ifndef BRB_CATALOG_HPP
#define BRB_CATALOG_HPP

#include "brb/duality.hpp"

#include <optional>
#include <string>
#include <vector>

namespace brb
{

/// A second (r, r*) choice on the same algebra together with an explicit
/// transformation carrying the original bracket onto the induced one.
struct AlternativePair
{
  Tensor2 r;
  Tensor2 r_star;
  LieAlgebra expected_dual;
  BasisChange witness;
};

struct CatalogEntry
{
  std::string name;
  LieAlgebra algebra;
  Tensor2 r;
  LieAlgebra expected_dual;
  Tensor2 r_star;
  /// Published transformation relating L to the bracket induced by r*.
  std::optional<BasisChange> witness;
  /// When set, the computed dual matches expected_dual only after this change
  /// of basis of L* (dim2: e^1 -> -e^1).
  std::optional<BasisChange> dual_basis_change;
  Verdict expected_verdict = Verdict::coboundary;
  std::optional<AlternativePair> alternative;
  /// h3n parameters a^1..a^n.
  std::vector<Scalar> params;
  std::string notes;
};

/// Names accepted by catalog_get, in catalog order.
const std::vector<std::string>& catalog_names();

/// Throws std::invalid_argument for unknown names, missing or zero h3n
/// parameters, or parameters passed to a fixed entry.
CatalogEntry catalog_get(const std::string& name, const std::vector<Scalar>& params = {});

/// Default parameter sets used when the whole table is verified.
std::vector<CatalogEntry> default_catalog();

struct EntryCheck
{
  std::string name;
  bool passed = false;
  std::string detail;
};

struct EntryReport
{
  std::string entry;
  std::vector<EntryCheck> checks;

  bool passed() const;
  /// One line per check: "<entry> <check> PASS|FAIL <detail>".
  std::string render() const;
};

EntryReport verify_entry(const CatalogEntry& entry);
EntryReport verify_entry(const std::string& name, const std::vector<Scalar>& params = {});

/// Verifies entries concurrently; reports come back in input order.
std::vector<EntryReport> verify_entries(const std::vector<CatalogEntry>& entries);

} // namespace brb

#endif
