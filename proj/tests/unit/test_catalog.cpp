#include "brb/catalog.hpp"

#include <doctest.h>

using namespace brb;

TEST_SUITE("catalog")
{
  TEST_CASE("names and errors")
  {
    CHECK(catalog_names() == std::vector<std::string>{"dim2", "h3", "e2", "p2", "p2super", "galilei", "h3n"});
    CHECK_THROWS_AS(catalog_get("sl2"), std::invalid_argument);
    CHECK_THROWS_AS(catalog_get("h3n"), std::invalid_argument);
    CHECK_THROWS_AS(catalog_get("h3n", {Scalar(1), Scalar(0)}), std::invalid_argument);
    CHECK_THROWS_AS(catalog_get("h3", {Scalar(1)}), std::invalid_argument);
  }

  TEST_CASE("entry data")
  {
    auto h3 = catalog_get("h3");
    CHECK(h3.algebra.constant(1, 2, 0) == Scalar(1));
    CHECK(h3.r == wedge(1, 2, Scalar(-1), 3));
    CHECK(h3.r_star == wedge(1, 2, Scalar(1, 2), 3));
    CHECK(h3.expected_dual.constant(0, 1, 1) == Scalar(1));
    CHECK(h3.expected_dual.constant(0, 2, 2) == Scalar(1));

    auto dim2 = catalog_get("dim2");
    CHECK(dim2.algebra.constant(0, 1, 0) == Scalar(1));
    CHECK(dim2.r == wedge(0, 1, Scalar(1), 2));
    CHECK(dim2.r_star == wedge(0, 1, Scalar(-1), 2));

    auto e2 = catalog_get("e2");
    CHECK(e2.r_star == Scalar(-1, 2) * (wedge(0, 2, Scalar(1), 3) - wedge(1, 2, Scalar::i(), 3)));

    auto sup = catalog_get("p2super");
    CHECK(sup.algebra.is_super());
    CHECK(sup.algebra.constant(0, 0, 2).is_zero());
    CHECK(sup.algebra.constant(1, 1, 2).is_zero());
  }

  TEST_CASE("h3n with n=1, a=-1 is the h3 entry")
  {
    auto a = catalog_get("h3n", {Scalar(-1)});
    auto b = catalog_get("h3");
    CHECK(a.algebra == b.algebra);
    CHECK(a.r == b.r);
    CHECK(a.r_star == b.r_star);
    CHECK(a.expected_dual == b.expected_dual);
  }

  TEST_CASE("h3n layout")
  {
    auto e = catalog_get("h3n", {Scalar(1), Scalar(2), Scalar(3)});
    REQUIRE(e.algebra.dim() == 7);
    for (std::size_t i = 0; i < 3; ++i) {
      const std::size_t two = 1 + 2 * i, three = 2 + 2 * i;
      CHECK(e.algebra.constant(two, three, 0) == Scalar(1));
      CHECK(e.r(two, three) == Scalar(static_cast<long>(i + 1)));
      // [e^{2i}, e^1] = a^i e^{2i}
      CHECK(e.expected_dual.constant(two, 0, two) == Scalar(static_cast<long>(i + 1)));
      CHECK(e.expected_dual.constant(three, 0, three) == Scalar(static_cast<long>(i + 1)));
      CHECK(e.r_star(two, three) == Scalar(-1, 2) * Scalar(static_cast<long>(i + 1)).inverse());
    }
  }

  TEST_CASE("every default entry verifies except the super round trip")
  {
    for (const auto& rep : verify_entries(default_catalog())) {
      CAPTURE(rep.render());
      for (const auto& check : rep.checks) {
        if (rep.entry == "p2super" && check.name == "pair")
          CHECK_FALSE(check.passed);
        else
          CHECK(check.passed);
      }
    }
  }

  TEST_CASE("parallel verification matches serial order")
  {
    auto entries = default_catalog();
    auto par = verify_entries(entries);
    REQUIRE(par.size() == entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i)
      CHECK(par[i].render() == verify_entry(entries[i]).render());
  }

  TEST_CASE("h3n structure check")
  {
    for (const auto& params : std::vector<std::vector<Scalar>>{{Scalar(-1)}, {Scalar(1), Scalar(2)}}) {
      auto rep = verify_entry("h3n", params);
      bool found = false;
      for (const auto& c : rep.checks)
        if (c.name == "structure") {
          found = true;
          CHECK(c.passed);
        }
      CHECK(found);
    }
  }
}
