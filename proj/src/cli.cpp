#include "brb/cli.hpp"

#include "brb/catalog.hpp"
#include "brb/propositions.hpp"
#include "brb/text_format.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <functional>
#include <ostream>

namespace brb
{

namespace
{

struct Sources
{
  std::string alg_path;
  std::string r_path;
  std::string entry;
  std::size_t n = 0;
  std::string a;
};

void add_sources(CLI::App* sub, Sources& s, bool with_r)
{
  sub->add_option("--alg", s.alg_path, "algebra file");
  if (with_r)
    sub->add_option("--r", s.r_path, "r-matrix file");
  sub->add_option("--entry", s.entry, "catalog entry instead of files");
  sub->add_option("--n", s.n, "h3n: number of Heisenberg blocks");
  sub->add_option("--a", s.a, "h3n: comma separated nonzero parameters a^1..a^n");
}

std::vector<Scalar> entry_params(const std::string& name, std::size_t n, const std::string& a)
{
  std::vector<Scalar> params;
  if (!a.empty())
    params = parse_scalar_list(a);
  if (n != 0) {
    if (params.empty())
      for (std::size_t i = 1; i <= n; ++i)
        params.push_back(Scalar(static_cast<long>(i)));
    else if (params.size() != n)
      throw std::invalid_argument("--n does not match the number of --a parameters");
  }
  if (name == "h3n" && params.empty())
    params = {Scalar(-1)};
  return params;
}

CatalogEntry load_entry(const Sources& s) { return catalog_get(s.entry, entry_params(s.entry, s.n, s.a)); }

LieAlgebra load_algebra(const Sources& s)
{
  if (!s.entry.empty())
    return load_entry(s).algebra;
  if (s.alg_path.empty())
    throw std::invalid_argument("need --alg <file> or --entry <name>");
  return parse_algebra(read_file(s.alg_path));
}

Tensor2 load_r(const Sources& s, const LieAlgebra& L)
{
  Tensor2 r;
  if (!s.entry.empty()) {
    r = load_entry(s).r;
  } else {
    if (s.r_path.empty())
      throw std::invalid_argument("need --r <file> or --entry <name>");
    r = parse_rmatrix(read_file(s.r_path)).tensor;
  }
  if (r.dim() != L.dim())
    throw DimensionError("r-matrix dimension " + std::to_string(r.dim()) + " does not match algebra dimension " +
                         std::to_string(L.dim()));
  return r;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

void print_tensor2(std::ostream& out, const Tensor2& t)
{
  bool any = false;
  for (std::size_t m = 0; m < t.dim(); ++m)
    for (std::size_t p = 0; p < t.dim(); ++p)
      if (!t(m, p).is_zero()) {
        out << "t " << m + 1 << ' ' << p + 1 << ' ' << t(m, p) << '\n';
        any = true;
      }
  if (!any)
    out << "zero\n";
}

void print_tensor3(std::ostream& out, const Tensor3& t)
{
  bool any = false;
  const std::size_t n = t.dim();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (!t(a, b, c).is_zero()) {
          out << "s " << a + 1 << ' ' << b + 1 << ' ' << c + 1 << ' ' << t(a, b, c) << '\n';
          any = true;
        }
  if (!any)
    out << "zero\n";
}

void print_vector(std::ostream& out, const Vector& v)
{
  for (std::size_t i = 0; i < v.size(); ++i)
    out << (i ? " " : "") << v[i];
}

void print_subspace(std::ostream& out, const std::string& label, const Subspace& s)
{
  out << label << " dim " << s.dim() << '\n';
  for (const auto& v : s.basis()) {
    out << label << " basis ";
    print_vector(out, v);
    out << '\n';
  }
}

std::string join_dims(const std::vector<std::size_t>& v)
{
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Exact construction and verification of coboundary Lie (super)bialgebras", "brb"};
  app.require_subcommand(1);

  int code = exit_ok;
  Sources src;

  auto* dual = app.add_subcommand("dual", "print the dual Lie algebra L* determined by r");
  add_sources(dual, src, true);
  dual->callback([&] {
    LieAlgebra L = load_algebra(src);
    LieAlgebra d = dual_algebra(L, load_r(src, L));
    out << render_algebra(d);
  });

  std::string x_text;
  auto* cob = app.add_subcommand("cobracket", "print delta(x) = [x(x)1 + 1(x)x, r]");
  add_sources(cob, src, true);
  cob->add_option("--x", x_text, "vector: e<k> or comma separated coordinates")->required();
  cob->callback([&] {
    LieAlgebra L = load_algebra(src);
    Tensor2 r = load_r(src, L);
    print_tensor2(out, cobracket(L, r, parse_vector(x_text, L.dim())));
  });

  auto* sch = app.add_subcommand("schouten", "print the Schouten bracket [r,r]_s");
  add_sources(sch, src, true);
  sch->callback([&] {
    LieAlgebra L = load_algebra(src);
    print_tensor3(out, schouten(L, load_r(src, L)));
  });

  auto* cls = app.add_subcommand("classify", "classify r as triangular, quasitriangular, coboundary or inadmissible");
  add_sources(cls, src, true);
  cls->callback([&] {
    LieAlgebra L = load_algebra(src);
    RClassification c = classify_r(L, load_r(src, L));
    out << to_string(c.verdict) << '\n'
        << "unitary " << yes_no(c.is_unitary) << '\n'
        << "schouten_zero " << yes_no(c.schouten_zero) << '\n'
        << "invariant " << yes_no(c.invariant) << '\n';
    if (c.verdict == Verdict::inadmissible)
      code = exit_check_failed;
  });

  auto* jac = app.add_subcommand("jacobi", "list basis triples violating the graded Jacobi identity");
  add_sources(jac, src, false);
  jac->callback([&] {
    auto report = jacobi_report(load_algebra(src));
    if (report.empty()) {
      out << "jacobi ok\n";
      return;
    }
    for (const auto& v : report) {
      out << "violation " << v.i + 1 << ' ' << v.j + 1 << ' ' << v.k + 1 << " defect ";
      print_vector(out, v.defect);
      out << '\n';
    }
    code = exit_check_failed;
  });

  auto* inv = app.add_subcommand("invariants", "print isomorphism invariants");
  add_sources(inv, src, false);
  inv->callback([&] {
    Signature s = invariant_signature(load_algebra(src));
    out << "dim " << s.dim << '\n'
        << "derived_series " << join_dims(s.derived_series) << '\n'
        << "lower_central_series " << join_dims(s.lower_central_series) << '\n'
        << "center_dim " << s.center_dim << '\n'
        << "killing_rank " << s.killing_rank << '\n'
        << "abelian " << yes_no(s.abelian) << '\n'
        << "parity_counts " << s.even_count << ' ' << s.odd_count << '\n';
  });

  auto* rj3 = app.add_subcommand("recognize-j3",
                                 "find S bringing the algebra to [e1,e2]=e2, [e1,e3]=e3; with --r or --entry the "
                                 "dual algebra is examined");
  add_sources(rj3, src, true);
  rj3->callback([&] {
    LieAlgebra L = load_algebra(src);
    if (!src.entry.empty() || !src.r_path.empty())
      L = dual_algebra(L, load_r(src, L));
    if (auto S = recognize_j3(L)) {
      out << "found\n" << render_matrix(S->matrix());
    } else {
      out << "none\n";
      code = exit_check_failed;
    }
  });

  std::string rstar_path;
  std::string witness_path;
  int bound = 1;
  auto* pair = app.add_subcommand("pair", "check that (r, r*) forms a bi-r-matrix bialgebra");
  add_sources(pair, src, true);
  pair->add_option("--rstar", rstar_path, "r* file (on the dual algebra)");
  pair->add_option("--witness", witness_path, "candidate basis change, rows of S");
  pair->add_option("--bound", bound, "entry bound for the witness search")->check(CLI::NonNegativeNumber);
  pair->callback([&] {
    LieAlgebra L = load_algebra(src);
    Tensor2 r = load_r(src, L);
    Tensor2 rs;
    std::optional<BasisChange> hint;
    if (!rstar_path.empty()) {
      rs = parse_rmatrix(read_file(rstar_path)).tensor;
    } else if (!src.entry.empty()) {
      auto e = load_entry(src);
      rs = e.r_star;
      hint = e.witness;
    } else {
      throw std::invalid_argument("need --rstar <file> or --entry <name>");
    }
    if (rs.dim() != L.dim())
      throw DimensionError("r* dimension does not match the algebra");
    if (!witness_path.empty())
      hint = BasisChange(parse_matrix(read_file(witness_path)));
    PairReport rep = verify_bialgebra_pair(L, r, rs, hint, bound);
    out << "verdict " << to_string(rep.verdict) << '\n' << render_algebra(rep.dual) << render_algebra(rep.induced);
    if (rep.witness)
      out << "witness\n" << render_matrix(rep.witness->matrix());
    if (rep.verdict == PairVerdict::failed)
      code = exit_check_failed;
  });

  std::string ideal_text;
  std::string complement_text;
  auto* props = app.add_subcommand("props", "check the structural statements for I and its complement K");
  add_sources(props, src, true);
  props->add_option("--ideal", ideal_text, "comma separated basis indices spanning I")->required();
  props->add_option("--complement", complement_text, "indices spanning K (default: the remaining ones)");
  props->callback([&] {
    LieAlgebra L = load_algebra(src);
    Tensor2 r = load_r(src, L);
    auto idx = parse_index_list(ideal_text, L.dim());
    std::vector<std::size_t> kidx;
    if (!complement_text.empty()) {
      kidx = parse_index_list(complement_text, L.dim());
    } else {
      for (std::size_t i = 0; i < L.dim(); ++i)
        if (std::find(idx.begin(), idx.end(), i) == idx.end())
          kidx.push_back(i);
    }
    PropReport rep = check_propositions(L, r, Subspace::coordinate(L.dim(), idx), Subspace::coordinate(L.dim(), kidx));
    print_subspace(out, "K'", rep.k_prime);
    print_subspace(out, "I'", rep.i_prime);
    for (std::size_t b = 0; b < rep.bullets.size(); ++b) {
      const auto& res = rep.bullets[b];
      out << "bullet " << b + 1 << " hypothesis " << yes_no(res.hypothesis_holds);
      if (res.hypothesis_holds)
        out << " conclusion " << yes_no(res.conclusion_holds) << " equality " << yes_no(res.equality);
      out << " " << res.details << '\n';
    }
    if (!rep.all_hold())
      code = exit_check_failed;
  });

  std::string table_entry;
  auto* table = app.add_subcommand("verify-table", "verify catalog entries (all when no entry is given)");
  table->add_option("entry", table_entry, "catalog entry");
  table->add_option("--n", src.n, "h3n: number of blocks");
  table->add_option("--a", src.a, "h3n: comma separated nonzero parameters");
  table->callback([&] {
    std::vector<CatalogEntry> entries;
    if (table_entry.empty()) {
      if (src.n != 0 || !src.a.empty())
        throw std::invalid_argument("--n/--a require an entry name");
      entries = default_catalog();
    } else {
      entries.push_back(catalog_get(table_entry, entry_params(table_entry, src.n, src.a)));
    }
    bool ok = true;
    for (const auto& rep : verify_entries(entries)) {
      out << rep.render();
      ok = ok && rep.passed();
    }
    out << (ok ? "table PASS" : "table FAIL") << '\n';
    if (!ok)
      code = exit_check_failed;
  });

  std::string export_entry;
  std::string export_dir = ".";
  auto* exp = app.add_subcommand("export", "write a catalog entry to algebra / r-matrix files");
  exp->add_option("entry", export_entry, "catalog entry")->required();
  exp->add_option("--n", src.n, "h3n: number of blocks");
  exp->add_option("--a", src.a, "h3n: comma separated nonzero parameters");
  exp->add_option("--dir", export_dir, "output directory");
  exp->callback([&] {
    CatalogEntry e = catalog_get(export_entry, entry_params(export_entry, src.n, src.a));
    std::filesystem::create_directories(export_dir);
    const auto base = (std::filesystem::path(export_dir) / e.name).string();
    std::vector<std::pair<std::string, std::string>> files{
        {base + ".alg", render_algebra(e.algebra)},
        {base + ".rmat", render_rmatrix(e.name + ".r", e.r)},
        {base + ".dual.alg", render_algebra(e.expected_dual)},
        {base + ".rstar.rmat", render_rmatrix(e.name + ".rstar", e.r_star)},
    };
    if (e.witness)
      files.emplace_back(base + ".witness", render_matrix(e.witness->matrix()));
    for (const auto& [path, content] : files) {
      write_file(path, content);
      out << "wrote " << path << '\n';
    }
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const DimensionError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const AlgebraError& e) {
    err << "check failed: " << e.what() << '\n';
    return exit_check_failed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::domain_error& e) {
    err << "check failed: " << e.what() << '\n';
    return exit_check_failed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return code;
}

} // namespace brb
