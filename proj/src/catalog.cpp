#include "brb/catalog.hpp"

#include <omp.h>

#include <algorithm>
#include <sstream>

namespace brb
{

namespace
{

// Catalog literals use the 1-based labels of the published tables.
struct Builder
{
  LieAlgebra alg;

  Builder(std::string name, std::size_t n) : alg(std::move(name), n) {}
  Builder(std::string name, std::vector<Parity> p) : alg(std::move(name), std::move(p)) {}

  Builder& b(std::size_t i, std::size_t j, std::size_t k, const Scalar& s)
  {
    alg.add(i - 1, j - 1, k - 1, s);
    return *this;
  }
};

Tensor2 w(std::size_t i, std::size_t j, const Scalar& s, std::size_t n) { return wedge(i - 1, j - 1, s, n); }
Tensor2 t(std::size_t i, std::size_t j, const Scalar& s, std::size_t n) { return simple_tensor(i - 1, j - 1, s, n); }

BasisChange images(const std::vector<Vector>& cols) { return BasisChange::from_images(cols); }

const Scalar I = Scalar::i();
const Scalar half(1, 2);

CatalogEntry dim2()
{
  CatalogEntry e;
  e.name = "dim2";
  e.algebra = Builder("dim2", 2).b(1, 2, 1, 1).alg;
  e.r = w(1, 2, 1, 2);
  e.expected_dual = Builder("dim2*", 2).b(1, 2, 2, 1).alg;
  e.r_star = w(1, 2, -1, 2);
  e.dual_basis_change = images({{-1, 0}, {0, 1}});
  e.expected_verdict = Verdict::triangular;
  e.notes = "two-dimensional non-abelian algebra; dual matches after e^1 -> -e^1";
  return e;
}

CatalogEntry h3()
{
  CatalogEntry e;
  e.name = "h3";
  e.algebra = Builder("h3", 3).b(2, 3, 1, 1).alg;
  e.r = w(2, 3, -1, 3);
  e.expected_dual = Builder("h3*", 3).b(1, 2, 2, 1).b(1, 3, 3, 1).alg;
  e.r_star = w(2, 3, half, 3);
  e.expected_verdict = Verdict::coboundary;
  e.params = {Scalar(-1)};
  e.notes = "Heisenberg-Weyl h(3) - j(3)";
  return e;
}

CatalogEntry e2()
{
  CatalogEntry e;
  e.name = "e2";
  e.algebra = Builder("e2", 3).b(2, 3, 1, 1).b(3, 1, 2, 1).alg;
  e.r = w(1, 3, 1, 3) + w(2, 3, I, 3);
  e.expected_dual = Builder("e2*", 3).b(1, 2, 1, -1).b(1, 2, 2, -I).b(2, 3, 3, 1).b(1, 3, 3, -I).alg;
  e.r_star = -half * (w(1, 3, 1, 3) - w(2, 3, I, 3));
  e.expected_verdict = Verdict::triangular;
  e.notes = "Euclidean plane e(2) - j(3)";
  return e;
}

CatalogEntry p2()
{
  CatalogEntry e;
  e.name = "p2";
  e.algebra = Builder("p2", 3).b(2, 3, 1, -1).b(3, 1, 2, 1).alg;
  e.r = w(1, 3, 1, 3) + w(2, 3, 1, 3);
  e.expected_dual = Builder("p2*", 3).b(1, 2, 1, -1).b(1, 2, 2, 1).b(2, 3, 3, 1).b(1, 3, 3, 1).alg;
  e.r_star = -half * (w(1, 3, 1, 3) + w(2, 3, 1, 3));
  e.expected_verdict = Verdict::triangular;
  e.alternative = AlternativePair{
      w(2, 3, 1, 3),
      w(1, 3, 1, 3),
      Builder("p2*", 3).b(1, 2, 2, 1).b(1, 3, 3, 1).alg,
      images({{1, 1, 0}, {1, -1, 0}, {0, 0, -1}}),
  };
  e.notes = "pseudoeuclidean plane p(2) - j(3)";
  return e;
}

CatalogEntry p2super()
{
  const std::vector<Parity> par{Parity::odd, Parity::odd, Parity::even};
  CatalogEntry e;
  e.name = "p2super";
  e.algebra = Builder("p2super", par).b(3, 2, 1, 1).b(3, 1, 2, 1).alg;
  e.r = half * (t(1, 1, 1, 3) + t(2, 2, 1, 3));
  e.expected_dual = Builder("c3", par).b(1, 2, 3, 1).alg;
  e.r_star = w(1, 2, 1, 3);
  e.witness = images({{-1, 1, 0}, {1, 1, 0}, {0, 0, 1}});
  e.expected_verdict = Verdict::triangular;
  e.notes = "p(2) - Clifford c(3) superbialgebra; e1, e2 odd";
  return e;
}

CatalogEntry galilei()
{
  CatalogEntry e;
  e.name = "galilei";
  e.algebra = Builder("galilei", 4).b(3, 1, 2, 1).b(3, 2, 4, 1).alg;
  e.r = w(1, 2, 1, 4) - w(3, 4, 1, 4);
  e.expected_dual = Builder("galilei*", 4).b(2, 4, 1, 1).b(1, 4, 3, 1).alg;
  e.r_star = -(w(1, 2, 1, 4) - w(3, 4, 1, 4));
  e.expected_verdict = Verdict::triangular;
  e.notes = "self-dual extended (1+1) Galilei algebra";
  return e;
}

// Flat order e1, e21, e31, e22, e32, ...: e_{2i} -> 2i, e_{3i} -> 2i+1 (1-based).
CatalogEntry h3n(const std::vector<Scalar>& a)
{
  if (a.empty())
    throw std::invalid_argument("h3n needs n >= 1 parameters a^1..a^n");
  for (const auto& x : a)
    if (x.is_zero())
      throw std::invalid_argument("h3n parameters must be nonzero");
  const std::size_t n = a.size();
  const std::size_t dim = 2 * n + 1;
  Builder L("h3n", dim);
  Builder D("h3n*", dim);
  Tensor2 r(dim);
  Tensor2 rs(dim);
  for (std::size_t i = 1; i <= n; ++i) {
    const std::size_t e2i = 2 * i;
    const std::size_t e3i = 2 * i + 1;
    L.b(e2i, e3i, 1, 1);
    D.b(e2i, 1, e2i, a[i - 1]).b(e3i, 1, e3i, a[i - 1]);
    r += w(e2i, e3i, a[i - 1], dim);
    rs += w(e2i, e3i, -half * a[i - 1].inverse(), dim);
  }
  CatalogEntry e;
  e.name = "h3n";
  e.algebra = std::move(L.alg);
  e.r = std::move(r);
  e.expected_dual = std::move(D.alg);
  e.r_star = std::move(rs);
  e.expected_verdict = Verdict::coboundary;
  e.params = a;
  e.notes = "Heisenberg-Weyl h(3n) - j(3n), n=" + std::to_string(n);
  return e;
}

std::string join(const std::vector<Scalar>& v)
{
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + v[i].to_string();
  return s;
}

// sum_i (a^i)^2 e1^e_{2i}^e_{3i} (full alternating sums).
Tensor3 heisenberg_schouten(const std::vector<Scalar>& a)
{
  const std::size_t dim = 2 * a.size() + 1;
  Tensor3 s(dim);
  for (std::size_t i = 1; i <= a.size(); ++i)
    s += (a[i - 1] * a[i - 1]) * alternating3(0, 2 * i - 1, 2 * i, dim);
  return s;
}

std::string pair_detail(const PairReport& rep)
{
  std::string d = std::string("verdict=") + std::string(to_string(rep.verdict));
  if (rep.witness) {
    d += " witness=";
    const Matrix& m = rep.witness->matrix();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      d += r ? ";" : "";
      for (std::size_t c = 0; c < m.cols(); ++c)
        d += (c ? "," : "") + m(r, c).to_string();
    }
  }
  return d;
}

} // namespace

const std::vector<std::string>& catalog_names()
{
  static const std::vector<std::string> names{"dim2", "h3", "e2", "p2", "p2super", "galilei", "h3n"};
  return names;
}

CatalogEntry catalog_get(const std::string& name, const std::vector<Scalar>& params)
{
  if (name == "h3n")
    return h3n(params);
  if (!params.empty())
    throw std::invalid_argument("catalog entry '" + name + "' takes no parameters");
  if (name == "dim2")
    return dim2();
  if (name == "h3")
    return h3();
  if (name == "e2")
    return e2();
  if (name == "p2")
    return p2();
  if (name == "p2super")
    return p2super();
  if (name == "galilei")
    return galilei();
  throw std::invalid_argument("unknown catalog entry '" + name + "'");
}

std::vector<CatalogEntry> default_catalog()
{
  std::vector<CatalogEntry> out;
  for (const auto& name : catalog_names())
    if (name != "h3n")
      out.push_back(catalog_get(name));
  out.push_back(h3n({Scalar(-1)}));
  out.push_back(h3n({Scalar(1), Scalar(2)}));
  out.push_back(h3n({Scalar(1), Scalar(2), Scalar(3)}));
  return out;
}

bool EntryReport::passed() const
{
  return std::all_of(checks.begin(), checks.end(), [](const EntryCheck& c) { return c.passed; });
}

std::string EntryReport::render() const
{
  std::ostringstream os;
  for (const auto& c : checks) {
    os << entry << ' ' << c.name << ' ' << (c.passed ? "PASS" : "FAIL");
    if (!c.detail.empty())
      os << ' ' << c.detail;
    os << '\n';
  }
  return os.str();
}

EntryReport verify_entry(const CatalogEntry& e)
{
  EntryReport rep;
  rep.entry = e.params.empty() || e.name != "h3n" ? e.name : e.name + "[" + join(e.params) + "]";
  auto add = [&](std::string name, bool ok, std::string detail = {}) {
    rep.checks.push_back({std::move(name), ok, std::move(detail)});
  };

  add("jacobi", jacobi_report(e.algebra).empty() && jacobi_report(e.expected_dual).empty());

  std::optional<LieAlgebra> dual;
  try {
    dual = dual_algebra(e.algebra, e.r);
    LieAlgebra cmp = e.dual_basis_change ? transform_brackets(*dual, *e.dual_basis_change) : *dual;
    add("dual", cmp == e.expected_dual, e.dual_basis_change ? "up to recorded basis change" : "literal");
  } catch (const std::exception& ex) {
    add("dual", false, ex.what());
  }

  try {
    PairReport pr = verify_bialgebra_pair(e.algebra, e.r, e.r_star, e.witness);
    const bool ok = pr.verdict == PairVerdict::exact ||
                    (pr.verdict == PairVerdict::equivalent && pr.witness &&
                     verify_isomorphism(e.algebra, pr.induced, *pr.witness));
    add("pair", ok, pair_detail(pr));
  } catch (const std::exception& ex) {
    add("pair", false, ex.what());
  }

  if (e.alternative) {
    const auto& alt = *e.alternative;
    try {
      LieAlgebra alt_dual = dual_algebra(e.algebra, alt.r);
      PairReport pr = verify_bialgebra_pair(e.algebra, alt.r, alt.r_star, alt.witness);
      const bool ok = alt_dual == alt.expected_dual && pr.verdict == PairVerdict::equivalent && pr.witness &&
                      *pr.witness == alt.witness;
      add("pair.published_transformation", ok, pair_detail(pr));
    } catch (const std::exception& ex) {
      add("pair.published_transformation", false, ex.what());
    }
  }

  if (e.algebra.is_super()) {
    // The graded-antisymmetric r* mirroring r; informational companion to "pair".
    const std::size_t n = e.algebra.dim();
    Tensor2 mirror(n);
    for (std::size_t m = 0; m < n; ++m)
      for (std::size_t p = 0; p < n; ++p)
        mirror(m, p) = e.r(m, p) * Scalar(2);
    try {
      PairReport pr = verify_bialgebra_pair(e.algebra, e.r, mirror);
      add("pair.graded_rstar", pr.verdict != PairVerdict::failed, "r*=2r transported to L*; " + pair_detail(pr));
    } catch (const std::exception& ex) {
      add("pair.graded_rstar", false, ex.what());
    }
  }

  try {
    RClassification cls = classify_r(e.algebra, e.r);
    std::string detail = std::string(to_string(cls.verdict)) + " unitary=" + (cls.is_unitary ? "yes" : "no") +
                         " schouten_zero=" + (cls.schouten_zero ? "yes" : "no") +
                         " invariant=" + (cls.invariant ? "yes" : "no");
    add("classify", cls.verdict == e.expected_verdict && cls.invariant, detail);
    if (e.expected_verdict == Verdict::coboundary && !e.params.empty()) {
      Tensor3 s = schouten(e.algebra, e.r);
      add("schouten", !s.is_zero() && s == heisenberg_schouten(e.params), "sum (a^i)^2 e1^e2i^e3i");
    }
  } catch (const std::exception& ex) {
    add("classify", false, ex.what());
  }

  if (e.name == "h3n" && dual) {
    const std::size_t dim = e.algebra.dim();
    std::vector<std::size_t> rest;
    for (std::size_t k = 1; k < dim; ++k)
      rest.push_back(k);
    const bool ok = center(e.algebra) == Subspace::coordinate(dim, {0}) &&
                    derived_subspace(*dual) == Subspace::coordinate(dim, rest);
    add("structure", ok, "center(L)=span{e1}, [L*,L*]=span{e^2i,e^3i}");
  }

  if (e.name == "galilei" && dual) {
    auto s = search_automorphism(*dual, e.algebra, 1);
    add("self_dual", s && verify_isomorphism(*dual, e.algebra, *s),
        s ? "L* isomorphic to L, search bound 1" : "no witness within bound 1");
  }

  return rep;
}

EntryReport verify_entry(const std::string& name, const std::vector<Scalar>& params)
{
  return verify_entry(catalog_get(name, params));
}

std::vector<EntryReport> verify_entries(const std::vector<CatalogEntry>& entries)
{
  std::vector<EntryReport> out(entries.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t i = 0; i < entries.size(); ++i)
    out[i] = verify_entry(entries[i]);
  return out;
}

} // namespace brb
