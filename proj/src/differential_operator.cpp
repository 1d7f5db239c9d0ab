#include "ncjet/differential_operator.hpp"
#include "ncjet/error.hpp"

#include <algorithm>

namespace ncjet {

std::strong_ordering operator<=>(const OpTerm &lhs, const OpTerm &rhs)
{
	if (auto c = lhs.row <=> rhs.row; c != 0)
		return c;
	if (auto c = lhs.col <=> rhs.col; c != 0)
		return c;
	if (auto c = graded_lex(lhs.order, rhs.order); c != 0)
		return c;
	if (auto c = lhs.left <=> rhs.left; c != 0)
		return c;
	return lhs.right <=> rhs.right;
}

DifferentialOperator DifferentialOperator::derivative(const MultiIndex &order, int row, int col)
{
	DifferentialOperator r;
	r.add(OpTerm{row, col, {}, order, {}}, 1);
	return r;
}

DifferentialOperator DifferentialOperator::left_multiplication(const OpenWord &w, int row, int col)
{
	DifferentialOperator r;
	r.add(OpTerm{row, col, w, {}, {}}, 1);
	return r;
}

DifferentialOperator DifferentialOperator::right_multiplication(const OpenWord &w, int row, int col)
{
	DifferentialOperator r;
	r.add(OpTerm{row, col, {}, {}, w}, 1);
	return r;
}

int DifferentialOperator::dimension() const
{
	int d = 0;
	for (const auto &[t, c] : *this)
		d = std::max({d, t.row, t.col});
	return d;
}

std::vector<OpenSum> DifferentialOperator::slotted(int rows) const
{
	std::vector<OpenSum> r(static_cast<std::size_t>(std::max(rows, dimension())));
	for (const auto &[t, c] : *this)
	{
		Letters w = t.left.letters();
		w.push_back(Letter::slot(t.col, t.order));
		w.insert(w.end(), t.right.letters().begin(), t.right.letters().end());
		r[t.row - 1].add(OpenWord(std::move(w)), c);
	}
	return r;
}

DifferentialOperator DifferentialOperator::from_slotted(const std::vector<OpenSum> &rows)
{
	DifferentialOperator r;
	for (std::size_t i = 0; i < rows.size(); ++i)
		for (const auto &[w, c] : rows[i])
		{
			const auto &s = w.letters();
			auto it = std::find_if(s.begin(), s.end(),
			                       [](const Letter &l) { return l.kind == LetterKind::Slot; });
			if (it == s.end() ||
			    std::find_if(it + 1, s.end(), [](const Letter &l) {
				    return l.kind == LetterKind::Slot;
			    }) != s.end())
				throw PreconditionError("operator term must contain exactly one argument slot");
			OpTerm t;
			t.row = static_cast<int>(i) + 1;
			t.col = it->field;
			t.order = it->order;
			t.left = OpenWord(Letters(s.begin(), it));
			t.right = OpenWord(Letters(it + 1, s.end()));
			r.add(t, c);
		}
	return r;
}

} // namespace ncjet
