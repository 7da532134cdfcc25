#ifndef BRB_PROPOSITIONS_HPP
#define BRB_PROPOSITIONS_HPP

#include "brb/bialgebra.hpp"

#include <array>
#include <string>

namespace brb
{

/// Which blocks of r are nonzero in L (x) L = I(x)I + I(x)K + K(x)I + K(x)K.
struct BlockProfile
{
  bool ii = false;
  bool ik = false;
  bool ki = false;
  bool kk = false;

  bool inside_ii() const { return !ik && !ki && !kk; }
  bool inside_kk() const { return !ii && !ik && !ki; }
};

/// Throws AlgebraError unless I and K are complementary.
BlockProfile block_profile(const Tensor2& r, const Subspace& I, const Subspace& K);

struct BulletResult
{
  bool hypothesis_holds = false;
  /// Only meaningful when hypothesis_holds.
  bool conclusion_holds = false;
  /// Informational: the containment is an equality (bullets 3-6).
  bool equality = false;
  std::string details;
};

/// Six structural statements relating subspaces I, K of L to the
/// annihilators K' = I^0 and I' = K^0 in L*:
///   1. I subalgebra, r has no K(x)K part      => K' subalgebra of L*
///   2. I ideal                                => K' subalgebra
///   3. I ideal, r in I(x)I                    => K' inside center(L*)
///   4. I central                              => [L*,L*] inside K'
///   5. I abelian ideal, r in I(x)I            => K' inside center(L*), [L*,L*] inside K'
///   6. I = [L,L] = center(L), r in K(x)K      => K' abelian, [L*,L*] inside K'
struct PropReport
{
  Subspace k_prime;
  Subspace i_prime;
  std::array<BulletResult, 6> bullets;

  /// Every bullet whose hypothesis holds has its conclusion.
  bool all_hold() const;
};

/// Throws AlgebraError if I, K are not complementary or r is inadmissible.
PropReport check_propositions(const LieAlgebra& L, const Tensor2& r, const Subspace& I, const Subspace& K);

} // namespace brb

#endif
