#ifndef BRB_TEXT_FORMAT_HPP
#define BRB_TEXT_FORMAT_HPP

#include "brb/duality.hpp"

#include <string>
#include <string_view>

namespace brb
{

// Line-oriented text formats. '#' starts a comment; blank lines are ignored.
// Indices are 1-based; scalars use the Scalar grammar.
//
//   alg <name>              rmat <name>
//   dim <n>                 dim <n>
//   parity <p1> ... <pn>    t <m> <p> <scalar>    adds scalar e_m (x) e_p
//   b <i> <j> <k> <scalar>  w <m> <p> <scalar>    adds scalar (e_m (x) e_p - e_p (x) e_m)
//   end                     end
//
// Basis changes are n lines of n scalars, the rows of S.

struct NamedTensor
{
  std::string name;
  Tensor2 tensor;
};

/// Throws ParseError (with line number) on grammar violations, DimensionError
/// on out-of-range indices, AlgebraError on parity-incompatible constants.
LieAlgebra parse_algebra(std::string_view text);
std::string render_algebra(const LieAlgebra& L);

NamedTensor parse_rmatrix(std::string_view text);
std::string render_rmatrix(const std::string& name, const Tensor2& r);

Matrix parse_matrix(std::string_view text);
std::string render_matrix(const Matrix& m);

/// "e2" (1-based basis label) or comma/space separated coordinates.
Vector parse_vector(std::string_view text, std::size_t dim);
/// Comma separated list of 1-based indices, returned 0-based.
std::vector<std::size_t> parse_index_list(std::string_view text, std::size_t dim);
/// Comma separated scalars.
std::vector<Scalar> parse_scalar_list(std::string_view text);

/// Throws ParseError if the file cannot be read.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace brb

#endif
