#ifndef BRB_DUALITY_HPP
#define BRB_DUALITY_HPP

#include "brb/bialgebra.hpp"

#include <optional>

namespace brb
{

/// Invertible change of basis; column j holds the image S e_j.
class BasisChange
{
public:
  /// Throws AlgebraError if m is singular, DimensionError if not square.
  explicit BasisChange(Matrix m);

  static BasisChange identity(std::size_t n) { return BasisChange(Matrix::identity(n)); }
  /// Columns are the images of e_1, ..., e_n.
  static BasisChange from_images(const std::vector<Vector>& images);

  std::size_t dim() const { return m_.rows(); }
  const Matrix& matrix() const { return m_; }
  BasisChange inverse() const { return BasisChange(brb::inverse(m_)); }
  Vector apply(std::span<const Scalar> v) const { return m_.apply(v); }

  /// S maps even coordinates to even ones and odd to odd.
  bool is_parity_preserving(const std::vector<Parity>& parity) const;

  friend bool operator==(const BasisChange& a, const BasisChange& b) = default;

private:
  Matrix m_;
};

/// Algebra with brackets [x,y]' = S^{-1}[Sx, Sy]; S is an isomorphism from the
/// result onto L. Throws AlgebraError unless S is parity-preserving.
LieAlgebra transform_brackets(const LieAlgebra& L, const BasisChange& S);

/// S [x,y]_{L1} = [Sx, Sy]_{L2} on all basis pairs. Singular or
/// parity-breaking S simply fail. Throws DimensionError if the dimensions or
/// parity profiles differ.
bool verify_isomorphism(const LieAlgebra& L1, const LieAlgebra& L2, const Matrix& S);
inline bool verify_isomorphism(const LieAlgebra& L1, const LieAlgebra& L2, const BasisChange& S)
{
  return verify_isomorphism(L1, L2, S.matrix());
}

struct Signature
{
  std::size_t dim = 0;
  std::vector<std::size_t> derived_series;
  std::vector<std::size_t> lower_central_series;
  std::size_t center_dim = 0;
  std::size_t killing_rank = 0;
  bool abelian = false;
  std::size_t even_count = 0;
  std::size_t odd_count = 0;

  friend bool operator==(const Signature&, const Signature&) = default;
};

Signature invariant_signature(const LieAlgebra& L);

/// S with transform_brackets(L, S) equal to [e1,e2] = e2, [e1,e3] = e3,
/// [e2,e3] = 0, or nothing if L is not of that type.
std::optional<BasisChange> recognize_j3(const LieAlgebra& L);

/// First S in the deterministic enumeration (see automorphism_search.cpp)
/// with integer entries in [-bound, bound] satisfying verify_isomorphism(L1, L2, S).
/// The parallel version returns the same witness as the serial reference.
std::optional<BasisChange> search_automorphism(const LieAlgebra& L1, const LieAlgebra& L2, int bound);
std::optional<BasisChange> search_automorphism_serial(const LieAlgebra& L1, const LieAlgebra& L2, int bound);

enum class PairVerdict { exact, equivalent, failed };
std::string_view to_string(PairVerdict v);

struct PairReport
{
  LieAlgebra dual;
  /// Bracket on L induced by r*, read back through the canonical pairing.
  LieAlgebra induced;
  /// verify_isomorphism(L, induced, *witness) holds when present.
  std::optional<BasisChange> witness;
  PairVerdict verdict = PairVerdict::failed;
};

/// Builds L* from r, the bracket induced on L by r_star, and decides whether
/// it equals L (exact), is carried onto L by the supplied or a searched basis
/// change (equivalent), or neither (failed). Throws AlgebraError when r or
/// r_star is inadmissible.
PairReport verify_bialgebra_pair(const LieAlgebra& L, const Tensor2& r, const Tensor2& r_star,
                                 const std::optional<BasisChange>& hint = std::nullopt, int search_bound = 1);

} // namespace brb

#endif
