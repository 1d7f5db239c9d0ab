#pragma once

#include "ncjet/differential_operator.hpp"
#include "ncjet/jet.hpp"

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ncjet {

/// Any value the expression grammar can denote.
using Value = std::variant<OpenSum, CyclicSum, Covector, DifferentialOperator, GeneratingSection>;

/// Grammar summary:
///   letters      a, b (field 1), a2, b3 ...; jet suffix _x, _xx (n = 1) or
///                _{x^i,k} repeated (any n)
///   coefficients 3, -1/2, x, x^2 (n = 1), x1^2 (n > 1); products with `*`
///   open sums    a*b_x - 2*x*a, parentheses distribute
///   densities    cyc(a*a_x) + 1/2*cyc(b*b_x)
///   covectors    cov(a_x; a*a)
///   sections     sec(1; a: b_x; b: a*a) with the parity first
///   operators    op(p_xxx + 2*x*p_x + p), or in composition form
///                op(D^3 + x*D*1 + 1*D*x) where L*D^k*R means L D^k(p R);
///                D^k(...) differentiates its argument; rows separated by `;`,
///                columns by p1, p2, ...; D_i^k for n > 1.
/// Throws ParseError (with the byte offset) for malformed input, unknown
/// identifiers, and kind mismatches.
Value parse_value(std::string_view text, const JetContext &ctx);

OpenSum parse_open(std::string_view text, const JetContext &ctx);
/// A density; an open sum is closed into a necklace.
CyclicSum parse_density(std::string_view text, const JetContext &ctx);
/// cov(...), or a single open sum when m = 1.
Covector parse_covector(std::string_view text, const JetContext &ctx);
DifferentialOperator parse_operator(std::string_view text, const JetContext &ctx);
/// sec(...), or a covector-shaped value read as the even part of an even field.
GeneratingSection parse_section(std::string_view text, const JetContext &ctx);

std::string to_string(const Poly &p, const JetContext &ctx);
std::string to_string(const Letter &l, const JetContext &ctx);
std::string to_string(const OpenSum &s, const JetContext &ctx);
std::string to_string(const CyclicSum &s, const JetContext &ctx);
std::string to_string(const Covector &p, const JetContext &ctx);
std::string to_string(const DifferentialOperator &a, const JetContext &ctx);
std::string to_string(const GeneratingSection &q, const JetContext &ctx);
std::string to_string(const Value &v, const JetContext &ctx);

/// Expressions of a file: one per line; blank lines and `#` comments skipped.
std::vector<std::string> read_expression_file(const std::string &path);

} // namespace ncjet
