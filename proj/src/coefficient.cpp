#include "ncjet/coefficient.hpp"

#include <numeric>

namespace ncjet {

Poly::Poly(const Rational &constant)
{
	if (constant != 0)
		terms_.emplace(MultiIndex{}, constant);
}

Poly Poly::monomial(const MultiIndex &exponents, const Rational &c)
{
	Poly p;
	p.add_term(exponents, c);
	return p;
}

Poly Poly::coordinate(int dir)
{
	MultiIndex e{};
	e[dir] = 1;
	return monomial(e);
}

bool Poly::is_constant() const
{
	return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

Rational Poly::constant() const
{
	auto it = terms_.find(MultiIndex{});
	return it == terms_.end() ? Rational(0) : it->second;
}

Poly Poly::derivative(int dir) const
{
	Poly r;
	for (const auto &[e, c] : terms_)
	{
		if (e[dir] == 0)
			continue;
		MultiIndex d = e;
		--d[dir];
		r.add_term(d, c * e[dir]);
	}
	return r;
}

void Poly::add_term(const MultiIndex &exponents, const Rational &c)
{
	if (c == 0)
		return;
	auto [it, inserted] = terms_.try_emplace(exponents, c);
	if (!inserted)
	{
		it->second += c;
		if (it->second == 0)
			terms_.erase(it);
	}
}

Poly &Poly::operator+=(const Poly &rhs)
{
	for (const auto &[e, c] : rhs.terms_)
		add_term(e, c);
	return *this;
}

Poly &Poly::operator-=(const Poly &rhs)
{
	for (const auto &[e, c] : rhs.terms_)
		add_term(e, -c);
	return *this;
}

Poly operator*(const Poly &lhs, const Poly &rhs)
{
	Poly r;
	for (const auto &[e1, c1] : lhs.terms_)
		for (const auto &[e2, c2] : rhs.terms_)
		{
			MultiIndex e;
			for (std::size_t i = 0; i < kMaxBaseDim; ++i)
				e[i] = static_cast<std::uint16_t>(e1[i] + e2[i]);
			r.add_term(e, c1 * c2);
		}
	return r;
}

Poly &Poly::operator*=(const Poly &rhs)
{
	*this = *this * rhs;
	return *this;
}

Poly &Poly::operator*=(const Rational &rhs)
{
	if (rhs == 0)
		terms_.clear();
	else
		for (auto &[e, c] : terms_)
			c *= rhs;
	return *this;
}

Poly Poly::operator-() const
{
	Poly r = *this;
	for (auto &[e, c] : r.terms_)
		c = -c;
	return r;
}

std::strong_ordering operator<=>(const Poly &lhs, const Poly &rhs)
{
	auto a = lhs.terms_.begin(), b = rhs.terms_.begin();
	for (; a != lhs.terms_.end() && b != rhs.terms_.end(); ++a, ++b)
	{
		if (auto c = graded_lex(a->first, b->first); c != 0)
			return c;
		if (a->second != b->second)
			return a->second < b->second ? std::strong_ordering::less
			                             : std::strong_ordering::greater;
	}
	return lhs.terms_.size() <=> rhs.terms_.size();
}

} // namespace ncjet
