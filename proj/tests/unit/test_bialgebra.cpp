#include "brb/catalog.hpp"

#include "free_tensor.hpp"
#include "random.hpp"

#include <doctest.h>

using namespace brb;

namespace
{
Vector e(std::size_t n, std::size_t i) { return basis_vector(n, i - 1); }

// Basis of {s : ad_x s = 0 for all x}, as tensors.
std::vector<Tensor2> invariant_tensors(const LieAlgebra& L)
{
  const std::size_t n = L.dim(), nn = n * n;
  Matrix m(n * nn, nn);
  for (std::size_t col = 0; col < nn; ++col) {
    Tensor2 t(n);
    t(col / n, col % n) = Scalar(1);
    for (std::size_t i = 0; i < n; ++i) {
      Tensor2 a = adjoint_act2_basis(L, i, t);
      for (std::size_t q = 0; q < nn; ++q)
        m(i * nn + q, col) = a(q / n, q % n);
    }
  }
  std::vector<Tensor2> out;
  for (const auto& v : nullspace(m)) {
    Tensor2 t(n);
    for (std::size_t q = 0; q < nn; ++q)
      t(q / n, q % n) = v[q];
    out.push_back(t);
  }
  return out;
}

bool admissible(const LieAlgebra& L, const Tensor2& r)
{
  try {
    dual_algebra(L, r);
    return true;
  } catch (const AlgebraError&) {
    return false;
  }
}
} // namespace

TEST_SUITE("bialgebra")
{
  TEST_CASE("cobracket examples")
  {
    auto h3 = catalog_get("h3");
    CHECK(cobracket(h3.algebra, h3.r, e(3, 2)) == wedge(0, 1, Scalar(1), 3));
    CHECK(cobracket(h3.algebra, h3.r, e(3, 1)).is_zero());
    auto gal = catalog_get("galilei");
    CHECK(cobracket(gal.algebra, gal.r, e(4, 3)) == wedge(0, 3, Scalar(1), 4));
  }

  TEST_CASE("cobracket is linear in x")
  {
    testing::Rng rng(41);
    auto p2 = catalog_get("p2");
    for (int k = 0; k < 20; ++k) {
      Vector x = rng.vector(3), y = rng.vector(3);
      Scalar a = rng.gaussian();
      CHECK(cobracket(p2.algebra, p2.r, a * x + y) ==
            a * cobracket(p2.algebra, p2.r, x) + cobracket(p2.algebra, p2.r, y));
    }
  }

  TEST_CASE("cocycle condition")
  {
    auto h3 = catalog_get("h3");
    CHECK(verify_cocycle(h3.algebra, h3.r));
    CHECK(verify_cocycle(h3.algebra, Tensor2(3)));
    auto e2 = catalog_get("e2");
    CHECK(verify_cocycle(e2.algebra, e2.r));
    testing::Rng rng(42);
    for (const auto& entry : default_catalog())
      for (int k = 0; k < 5; ++k)
        CHECK(verify_cocycle(entry.algebra, rng.even_tensor(entry.algebra.parity(), 40)));
  }

  TEST_CASE("schouten examples")
  {
    auto h3 = catalog_get("h3");
    CHECK(schouten(h3.algebra, h3.r) == alternating3(0, 1, 2, 3));
    auto e2 = catalog_get("e2");
    CHECK(schouten(e2.algebra, e2.r).is_zero());
    testing::Rng rng(43);
    LieAlgebra ab("ab", 3);
    CHECK(schouten(ab, rng.even_tensor(ab.parity(), 0)).is_zero());
    Tensor2 odd_even(3);
    odd_even(0, 2) = Scalar(1);
    CHECK_THROWS_AS(schouten(catalog_get("p2super").algebra, odd_even), AlgebraError);
  }

  TEST_CASE("oracle: schouten and cobracket match the free tensor algebra")
  {
    testing::Rng rng(44);
    for (const auto& entry : default_catalog()) {
      const LieAlgebra& L = entry.algebra;
      std::vector<Tensor2> samples{entry.r};
      const int extra = L.dim() > 5 ? 2 : 6;
      for (int k = 0; k < extra; ++k)
        samples.push_back(rng.even_tensor(L.parity(), 50));
      for (const auto& r : samples) {
        CHECK(schouten(L, r) == oracle::schouten(L, r));
        for (std::size_t i = 0; i < L.dim(); ++i)
          CHECK(cobracket(L, r, basis_vector(L.dim(), i)) == oracle::cobracket_basis(L, r, i));
      }
    }
  }

  TEST_CASE("invariance_defect")
  {
    auto h3 = catalog_get("h3");
    CHECK(invariance_defect(h3.algebra, h3.r).empty());
    testing::Rng rng(45);
    for (int k = 0; k < 20; ++k) {
      LieAlgebra L = family3(Scalar(0), rng.rational(), rng.rational(), rng.rational());
      CHECK(invariance_defect(L, unitary_r3(rng.rational(), rng.rational(), rng.rational())).empty());
    }
    auto e2 = catalog_get("e2");
    CHECK(invariance_defect(e2.algebra, e2.r).empty());

    // Non-unimodular A1 algebra: a generic non-unitary r is not invariant.
    LieAlgebra a1 = family3(Scalar(1), Scalar(0), Scalar(0), Scalar(0));
    Tensor2 r = simple_tensor(1, 1, Scalar(1), 3) + wedge(1, 2, Scalar(1), 3);
    CHECK_FALSE(invariance_defect(a1, r + simple_tensor(0, 1, Scalar(1), 3)).empty());
  }

  TEST_CASE("classify_r")
  {
    for (const char* name : {"dim2", "e2", "p2", "galilei"}) {
      auto entry = catalog_get(name);
      CHECK(classify_r(entry.algebra, entry.r).verdict == Verdict::triangular);
    }
    auto h3 = catalog_get("h3");
    auto c = classify_r(h3.algebra, h3.r);
    CHECK(c.verdict == Verdict::coboundary);
    CHECK(c.invariant);
    CHECK_FALSE(c.schouten_zero);
    auto sup = catalog_get("p2super");
    CHECK(is_graded_unitary(sup.algebra, sup.r));

    // Symmetric invariant part: quasitriangular.
    LieAlgebra ab("ab", 2);
    CHECK(classify_r(ab, simple_tensor(0, 0, Scalar(1), 2)).verdict == Verdict::quasitriangular);
  }

  TEST_CASE("classification invariants hold on random r")
  {
    testing::Rng rng(46);
    for (const auto& entry : default_catalog()) {
      if (entry.algebra.dim() > 5)
        continue;
      for (int k = 0; k < 10; ++k) {
        auto c = classify_r(entry.algebra, rng.even_tensor(entry.algebra.parity(), 50));
        if (c.verdict == Verdict::triangular)
          CHECK((c.schouten_zero && c.is_unitary));
        if (c.verdict == Verdict::quasitriangular)
          CHECK(c.schouten_zero);
        CHECK((c.verdict == Verdict::inadmissible) == !c.invariant);
      }
    }
  }

  TEST_CASE("dual_algebra examples")
  {
    auto h3 = catalog_get("h3");
    LieAlgebra d = dual_algebra(h3.algebra, h3.r);
    LieAlgebra expect("x", 3);
    expect.add(0, 1, 1, Scalar(1)).add(0, 2, 2, Scalar(1));
    CHECK(d == expect);
    CHECK(d.name() == "h3*");

    auto p2 = catalog_get("p2");
    LieAlgebra p("x", 3);
    p.add(0, 1, 0, Scalar(-1)).add(0, 1, 1, Scalar(1)).add(1, 2, 2, Scalar(1)).add(0, 2, 2, Scalar(1));
    CHECK(dual_algebra(p2.algebra, p2.r) == p);

    auto sup = catalog_get("p2super");
    LieAlgebra c3("x", {Parity::odd, Parity::odd, Parity::even});
    c3.add(0, 1, 2, Scalar(1));
    CHECK(dual_algebra(sup.algebra, sup.r) == c3);
  }

  TEST_CASE("dual_algebra rejects inadmissible r")
  {
    LieAlgebra a1 = family3(Scalar(1), Scalar(0), Scalar(0), Scalar(0));
    CHECK_THROWS_AS(dual_algebra(a1, simple_tensor(0, 1, Scalar(1), 3) + simple_tensor(1, 1, Scalar(1), 3)),
                    AlgebraError);
    // Invariant but symmetric: images are not antisymmetric.
    LieAlgebra h3 = catalog_get("h3").algebra;
    CHECK_THROWS_AS(dual_algebra(h3, simple_tensor(1, 1, Scalar(1), 3)), AlgebraError);
  }

  TEST_CASE("pairing identity on every catalog entry")
  {
    for (const auto& entry : default_catalog()) {
      const LieAlgebra& L = entry.algebra;
      const std::size_t n = L.dim();
      LieAlgebra d = dual_algebra(L, entry.r);
      for (std::size_t i = 0; i < n; ++i) {
        Tensor2 delta = cobracket(L, entry.r, basis_vector(n, i));
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t k = 0; k < n; ++k)
            CHECK(d.constant(j, k, i) == delta(j, k));
      }
    }
  }

  TEST_CASE("property: adding an invariant tensor leaves the cobracket unchanged")
  {
    testing::Rng rng(47);
    std::size_t nontrivial = 0;
    for (const auto& entry : default_catalog()) {
      const LieAlgebra& L = entry.algebra;
      auto inv = invariant_tensors(L);
      nontrivial += inv.empty() ? 0 : 1;
      for (int k = 0; k < 5; ++k) {
        Tensor2 s(L.dim());
        for (const auto& t : inv)
          s += rng.rational() * t;
        for (std::size_t i = 0; i < L.dim(); ++i)
          CHECK(cobracket(L, entry.r + s, basis_vector(L.dim(), i)) ==
                cobracket(L, entry.r, basis_vector(L.dim(), i)));
      }
    }
    // Central elements give e.g. e1 (x) e1 for the Heisenberg algebras.
    CHECK(nontrivial >= 4);
  }

  TEST_CASE("property: dual of an admissible r satisfies Jacobi")
  {
    testing::Rng rng(48);
    std::size_t seen = 0;
    for (const auto& entry : default_catalog()) {
      const LieAlgebra& L = entry.algebra;
      for (int k = 0; k < 30; ++k) {
        Tensor2 r = split_parts(rng.even_tensor(L.parity(), 70), L.parity()).antisym;
        if (!admissible(L, r))
          continue;
        ++seen;
        CHECK(jacobi_report(dual_algebra(L, r)).empty());
      }
    }
    CHECK(seen > 100);
  }

  TEST_CASE("closed forms: examples")
  {
    LieAlgebra h = family3_dual_closed(Scalar(0), Scalar(1), Scalar(0), Scalar(0), Scalar(0), Scalar(-1));
    LieAlgebra j("x", 3);
    j.add(0, 1, 1, Scalar(1)).add(0, 2, 2, Scalar(1));
    CHECK(h == j);

    LieAlgebra e = family3_dual_closed(Scalar(0), Scalar(1), Scalar(-1), Scalar(0), Scalar(1), Scalar::i());
    CHECK(e.constant(0, 1, 0) == Scalar(-1));
    CHECK(e.constant(0, 1, 1) == -Scalar::i());
    CHECK(family3_dual_closed(Scalar(1), Scalar(2), Scalar(3), Scalar(0), Scalar(0), Scalar(0)).is_abelian());

    CHECK(family3_schouten_closed(Scalar(0), Scalar(1), Scalar(0), Scalar(0), Scalar(0), Scalar(-1)) == Scalar(1));
    CHECK(family3_schouten_closed(Scalar(0), Scalar(1), Scalar(-1), Scalar(0), Scalar(1), Scalar::i()).is_zero());
    CHECK(family3_schouten_closed(Scalar(0), Scalar(-1), Scalar(-1), Scalar(0), Scalar(1), Scalar(1)).is_zero());

    LieAlgebra a = familyA1_dual_closed(Scalar(1), Scalar(0), Scalar(0));
    LieAlgebra ae("x", 3);
    ae.add(0, 1, 0, Scalar(1)).add(1, 2, 2, Scalar(1));
    CHECK(a == ae);
    CHECK(familyA1_dual_closed(Scalar(0), Scalar(0), Scalar(0)).is_abelian());
    LieAlgebra hw("x", 3);
    hw.add(1, 2, 0, Scalar(2));
    CHECK(familyA1_dual_closed(Scalar(0), Scalar(0), Scalar(1)) == hw);
  }

  TEST_CASE("closed forms agree with the generic machinery on 200 tuples")
  {
    testing::Rng rng(49);
    for (int k = 0; k < 200; ++k) {
      Scalar b = rng.rational(), c = rng.rational(), f = rng.rational();
      Scalar r12 = rng.rational(), r13 = rng.rational(), r23 = rng.rational();
      LieAlgebra L = family3(Scalar(0), b, c, f);
      Tensor2 r = unitary_r3(r12, r13, r23);
      CHECK(dual_algebra(L, r) == family3_dual_closed(b, c, f, r12, r13, r23));
      CHECK(schouten(L, r) == family3_schouten_closed(b, c, f, r12, r13, r23) * alternating3(0, 1, 2, 3));
    }
    LieAlgebra A1 = family3(Scalar(1), Scalar(0), Scalar(0), Scalar(0));
    for (int k = 0; k < 200; ++k) {
      Scalar r12 = rng.rational(), r13 = rng.rational(), r23 = rng.rational();
      Tensor2 r = unitary_r3(r12, r13, r23);
      CHECK(dual_algebra(A1, r) == familyA1_dual_closed(r12, r13, r23));
      CHECK(schouten(A1, r).is_zero());
      CHECK(jacobi_report(familyA1_dual_closed(r12, r13, r23)).empty());
    }
  }
}
