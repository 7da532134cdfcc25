// Exhaustive search for S with S[x,y]_1 = [Sx,Sy]_2 over an integer box.
//
// Enumeration order: entries of S in row-major order; entry (r,c) tries its
// identity value first, then 0, 1, -1, 2, -2, ... within [-bound, bound].
// Matrices are visited lexicographically in that order, so the identity is
// always the first candidate. Entries linking generators of different parity
// are pinned to 0.
//
// The backtracking search evaluates a bracket constraint only once every
// entry it mentions is assigned, so it returns exactly the first matrix the
// brute-force enumeration would accept. The parallel variant splits the
// tree at a fixed depth and keeps the lowest-indexed subtree with a hit.

#include "brb/duality.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <limits>

namespace brb
{

namespace
{

struct LinearTerm
{
  std::size_t pos;
  Scalar coeff;
};

struct QuadraticTerm
{
  std::size_t pos_a;
  std::size_t pos_b;
  Scalar coeff;
};

// sum(linear) - sum(quadratic) == 0
struct Constraint
{
  std::vector<LinearTerm> linear;
  std::vector<QuadraticTerm> quadratic;
};

class SearchProblem
{
public:
  SearchProblem(const LieAlgebra& L1, const LieAlgebra& L2, int bound) : n_(L1.dim())
  {
    if (L2.dim() != n_)
      throw DimensionError("algebras have different dimensions");
    if (L1.parity() != L2.parity())
      throw DimensionError("algebras have different parity profiles");
    if (bound < 0)
      throw std::invalid_argument("search bound must be nonnegative");

    const std::size_t cells = n_ * n_;
    candidates_.resize(cells);
    for (std::size_t r = 0; r < n_; ++r)
      for (std::size_t c = 0; c < n_; ++c) {
        auto& cand = candidates_[r * n_ + c];
        if (L1.parity(r) != L1.parity(c)) {
          cand.push_back(0);
          continue;
        }
        const long id = r == c ? 1 : 0;
        if (id <= bound)
          cand.push_back(id);
        for (long v = 0; v <= bound; ++v) {
          if (v != id)
            cand.push_back(v);
          if (v != 0 && -v != id)
            cand.push_back(-v);
        }
      }

    by_last_.resize(cells);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i; j < n_; ++j)
        for (std::size_t k = 0; k < n_; ++k) {
          Constraint con;
          for (std::size_t l = 0; l < n_; ++l)
            if (!L1.constant(i, j, l).is_zero())
              con.linear.push_back({k * n_ + l, L1.constant(i, j, l)});
          for (std::size_t a = 0; a < n_; ++a)
            for (std::size_t b = 0; b < n_; ++b)
              if (!L2.constant(a, b, k).is_zero())
                con.quadratic.push_back({a * n_ + i, b * n_ + j, L2.constant(a, b, k)});
          if (con.linear.empty() && con.quadratic.empty())
            continue;
          std::size_t last = 0;
          for (const auto& t : con.linear)
            last = std::max(last, t.pos);
          for (const auto& t : con.quadratic)
            last = std::max({last, t.pos_a, t.pos_b});
          by_last_[last].push_back(std::move(con));
        }
  }

  std::size_t cells() const { return n_ * n_; }

  // Extends s (already holding entries [0, pos)) to the first full solution.
  bool dfs(std::vector<long>& s, std::size_t pos) const
  {
    if (pos == cells())
      return nonsingular(s);
    for (long v : candidates_[pos]) {
      s[pos] = v;
      if (consistent_at(s, pos) && dfs(s, pos + 1))
        return true;
    }
    return false;
  }

  // All consistent assignments of the first `depth` entries, in search order.
  std::vector<std::vector<long>> prefixes(std::size_t depth) const
  {
    std::vector<std::vector<long>> out;
    std::vector<long> s(cells(), 0);
    collect(s, 0, depth, out);
    return out;
  }

  BasisChange to_basis_change(const std::vector<long>& s) const
  {
    Matrix m(n_, n_);
    for (std::size_t p = 0; p < cells(); ++p)
      m(p / n_, p % n_) = Scalar(s[p]);
    return BasisChange(std::move(m));
  }

private:
  void collect(std::vector<long>& s, std::size_t pos, std::size_t depth, std::vector<std::vector<long>>& out) const
  {
    if (pos == depth) {
      out.push_back(s);
      return;
    }
    for (long v : candidates_[pos]) {
      s[pos] = v;
      if (consistent_at(s, pos))
        collect(s, pos + 1, depth, out);
    }
  }

  bool consistent_at(const std::vector<long>& s, std::size_t pos) const
  {
    for (const auto& con : by_last_[pos]) {
      Scalar acc;
      for (const auto& t : con.linear)
        if (s[t.pos] != 0)
          acc.add_product(t.coeff, Scalar(s[t.pos]));
      for (const auto& t : con.quadratic) {
        long prod = s[t.pos_a] * s[t.pos_b];
        if (prod != 0)
          acc.add_product(t.coeff, Scalar(-prod));
      }
      if (!acc.is_zero())
        return false;
    }
    // A completed row must be independent of the rows above it.
    if ((pos + 1) % n_ == 0) {
      const std::size_t rows = (pos + 1) / n_;
      Matrix m(rows, n_);
      for (std::size_t p = 0; p <= pos; ++p)
        m(p / n_, p % n_) = Scalar(s[p]);
      if (rank(std::move(m)) != rows)
        return false;
    }
    return true;
  }

  bool nonsingular(const std::vector<long>& s) const
  {
    Matrix m(n_, n_);
    for (std::size_t p = 0; p < cells(); ++p)
      m(p / n_, p % n_) = Scalar(s[p]);
    return !determinant(std::move(m)).is_zero();
  }

  std::size_t n_;
  std::vector<std::vector<long>> candidates_;
  std::vector<std::vector<Constraint>> by_last_;
};

} // namespace

std::optional<BasisChange> search_automorphism_serial(const LieAlgebra& L1, const LieAlgebra& L2, int bound)
{
  SearchProblem problem(L1, L2, bound);
  std::vector<long> s(problem.cells(), 0);
  if (problem.dfs(s, 0))
    return problem.to_basis_change(s);
  return std::nullopt;
}

std::optional<BasisChange> search_automorphism(const LieAlgebra& L1, const LieAlgebra& L2, int bound)
{
  SearchProblem problem(L1, L2, bound);
  // Split after the first row; rows are where rank pruning kicks in.
  const std::size_t depth = std::min<std::size_t>(problem.cells(), L1.dim());
  const auto roots = problem.prefixes(depth);
  if (roots.empty())
    return std::nullopt;

  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
  std::atomic<std::size_t> best{none};
  std::vector<std::vector<long>> found(roots.size());

#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t idx = 0; idx < roots.size(); ++idx) {
    if (idx > best.load(std::memory_order_relaxed))
      continue;
    std::vector<long> s = roots[idx];
    if (!problem.dfs(s, depth))
      continue;
    found[idx] = std::move(s);
    std::size_t cur = best.load();
    while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
    }
  }

  if (best == none)
    return std::nullopt;
  return problem.to_basis_change(found[best]);
}

} // namespace brb
