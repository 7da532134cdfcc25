#include "brb/bialgebra.hpp"
#include "brb/catalog.hpp"

#include <doctest.h>

using namespace brb;

namespace
{
Vector e(std::size_t n, std::size_t i) { return basis_vector(n, i - 1); }

// [e1,e2]=e2, [e1,e3]=e3 in the given order of roles.
LieAlgebra j3()
{
  LieAlgebra L("j3", 3);
  L.add(0, 1, 1, Scalar(1));
  L.add(0, 2, 2, Scalar(1));
  return L;
}
} // namespace

TEST_SUITE("lie_core")
{
  TEST_CASE("bracket on catalog algebras")
  {
    LieAlgebra h3 = catalog_get("h3").algebra;
    CHECK(bracket(h3, e(3, 2), e(3, 3)) == e(3, 1));
    CHECK(bracket(h3, e(3, 3), e(3, 2)) == Scalar(-1) * e(3, 1));
    LieAlgebra p2 = catalog_get("p2").algebra;
    CHECK(bracket(p2, e(3, 3), e(3, 1)) == e(3, 2));
    Vector x = e(3, 1) + Scalar(2) * e(3, 3);
    CHECK(is_zero(bracket(p2, x, x)));
  }

  TEST_CASE("add validates parity and completes the partner")
  {
    LieAlgebra L("t", {Parity::odd, Parity::odd, Parity::even});
    L.add(0, 1, 2, Scalar(1));
    CHECK(L.constant(1, 0, 2) == Scalar(1));
    L.add(0, 0, 2, Scalar(3));
    CHECK(L.constant(0, 0, 2) == Scalar(3));
    CHECK_THROWS_AS(L.add(0, 1, 0, Scalar(1)), AlgebraError);
    CHECK_THROWS_AS(L.add(2, 2, 2, Scalar(1)), AlgebraError);
    LieAlgebra E("even", 2);
    E.add(0, 1, 0, Scalar(1));
    CHECK(E.constant(1, 0, 0) == Scalar(-1));
  }

  TEST_CASE("jacobi_report")
  {
    auto bad = jacobi_report(family3_unchecked(Scalar(1), Scalar(0), Scalar(1), Scalar(0)));
    CHECK_FALSE(bad.empty());
    for (const auto& v : bad)
      CHECK_FALSE(is_zero(v.defect));
    CHECK(jacobi_report(catalog_get("h3").algebra).empty());

    LieAlgebra c3("c3", {Parity::odd, Parity::odd, Parity::even});
    c3.add(0, 1, 2, Scalar(1));
    CHECK(jacobi_report(c3).empty());

    for (const auto& entry : default_catalog()) {
      CHECK(jacobi_report(entry.algebra).empty());
      CHECK(jacobi_report(entry.expected_dual).empty());
    }
  }

  TEST_CASE("super Jacobi catches a bad odd-odd bracket")
  {
    // {e1,e1} = e2 with [e2,e1] = e1 fails: {e1,{e1,e1}} must vanish.
    LieAlgebra L("s", {Parity::odd, Parity::even});
    L.add(0, 0, 1, Scalar(1));
    L.add(1, 0, 0, Scalar(1));
    CHECK_FALSE(jacobi_report(L).empty());
  }

  TEST_CASE("family3")
  {
    CHECK(family3(Scalar(0), Scalar(0), Scalar(1), Scalar(0)) == catalog_get("h3").algebra);
    CHECK(family3(Scalar(0), Scalar(0), Scalar(1), Scalar(-1)) == catalog_get("e2").algebra);
    CHECK(family3(Scalar(1), Scalar(0), Scalar(0), Scalar(0)) == j3());
    CHECK_THROWS_AS(family3(Scalar(1), Scalar(0), Scalar(1), Scalar(0)), AlgebraError);
  }

  TEST_CASE("derived subspace and center")
  {
    LieAlgebra h3 = catalog_get("h3").algebra;
    CHECK(derived_subspace(h3) == Subspace::coordinate(3, {0}));
    CHECK(center(h3) == Subspace::coordinate(3, {0}));
    CHECK(derived_subspace(j3()) == Subspace::coordinate(3, {1, 2}));
    CHECK(center(j3()).dim() == 0);
    LieAlgebra ab("ab", 3);
    CHECK(derived_subspace(ab).dim() == 0);
    CHECK(center(ab).dim() == 3);
  }

  TEST_CASE("subspace_class")
  {
    auto h = subspace_class(catalog_get("h3").algebra, Subspace::coordinate(3, {0}));
    CHECK(h.is_ideal);
    CHECK(h.is_abelian);
    CHECK(h.is_central);

    auto e = subspace_class(catalog_get("e2").algebra, Subspace::coordinate(3, {0, 1}));
    CHECK(e.is_subalgebra);
    CHECK(e.is_ideal);
    CHECK(e.is_abelian);
    CHECK_FALSE(e.is_central);

    auto j = subspace_class(j3(), Subspace::coordinate(3, {1}));
    CHECK(j.is_ideal);
    CHECK(j.is_abelian);

    auto s = subspace_class(catalog_get("e2").algebra, Subspace::coordinate(3, {2}));
    CHECK(s.is_subalgebra);
    CHECK_FALSE(s.is_ideal);
  }

  TEST_CASE("property: derived subspace and center are ideals")
  {
    for (const auto& entry : default_catalog())
      for (const LieAlgebra* L : {&entry.algebra, &entry.expected_dual}) {
        CHECK(subspace_class(*L, derived_subspace(*L)).is_ideal);
        auto z = subspace_class(*L, center(*L));
        CHECK(z.is_ideal);
        CHECK(z.is_central);
      }
  }

  TEST_CASE("killing form")
  {
    CHECK(killing_form(catalog_get("h3").algebra) == Matrix(3, 3));
    CHECK(killing_form(LieAlgebra("ab", 2)) == Matrix(2, 2));
    Matrix k = killing_form(j3());
    CHECK(rank(k) == 1);
    CHECK(k(0, 0) == Scalar(2));
    CHECK(k == k.transpose());
  }

  TEST_CASE("series dimensions")
  {
    LieAlgebra h3 = catalog_get("h3").algebra;
    CHECK(derived_series_dims(h3) == std::vector<std::size_t>{1, 0});
    CHECK(lower_central_series_dims(h3) == std::vector<std::size_t>{1, 0});
    CHECK(derived_series_dims(j3()) == std::vector<std::size_t>{2, 0});
    CHECK(lower_central_series_dims(j3()) == std::vector<std::size_t>{2});
  }
}
