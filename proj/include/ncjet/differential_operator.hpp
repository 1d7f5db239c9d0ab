#pragma once

#include "ncjet/formal_sum.hpp"

#include <compare>
#include <vector>

namespace ncjet {

/// One term p -> coefficient * left * D^order(p_col) * right, landing in
/// component `row` of the image. Rows and columns are 1-based.
struct OpTerm
{
	int row = 1;
	int col = 1;
	OpenWord left;
	MultiIndex order{};
	OpenWord right;

	friend bool operator==(const OpTerm &, const OpTerm &) = default;
	friend std::strong_ordering operator<=>(const OpTerm &lhs, const OpTerm &rhs);
};

inline std::size_t hash_value(const OpTerm &t)
{
	std::uint64_t h = hash_letters(t.left.letters(), static_cast<std::uint64_t>(t.row) * 1000003u + t.col);
	const Letter mid = Letter::slot(1, t.order);
	h = hash_letters(std::span<const Letter>(&mid, 1), h);
	return hash_letters(t.right.letters(), h);
}

/// Noncommutative (matrix) total differential operator, kept in fully expanded
/// form: every derivative sits directly on the argument, so two operators are
/// equal iff their term maps coincide.
class DifferentialOperator : public LinearCombination<OpTerm>
{
	using Base = LinearCombination<OpTerm>;

  public:
	DifferentialOperator() = default;
	DifferentialOperator(const Base &b) : Base(b) {}

	/// D^order acting on a single component (m = 1 by default).
	static DifferentialOperator derivative(const MultiIndex &order, int row = 1, int col = 1);
	static DifferentialOperator left_multiplication(const OpenWord &w, int row = 1, int col = 1);
	static DifferentialOperator right_multiplication(const OpenWord &w, int row = 1, int col = 1);

	/// Largest row or column index used.
	int dimension() const;

	/// Rows of the image written as open words carrying one slot letter
	/// (LetterKind::Slot, field = column, order = derivative order).
	std::vector<OpenSum> slotted(int rows) const;
	/// Inverse of slotted(); every word must contain exactly one slot letter.
	static DifferentialOperator from_slotted(const std::vector<OpenSum> &rows);
};

using Covector = std::vector<OpenSum>;

} // namespace ncjet
