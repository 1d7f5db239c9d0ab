#include "ncjet/formal_sum.hpp"

namespace ncjet {

CyclicSum close(const OpenSum &s)
{
	CyclicSum r;
	for (const auto &[w, c] : s)
		r.add_letters(w.letters(), c);
	return r;
}

OpenSum operator*(const OpenSum &lhs, const OpenSum &rhs)
{
	OpenSum r;
	for (const auto &[u, cu] : lhs)
		for (const auto &[v, cv] : rhs)
			r.add(concat(u, v), cu * cv);
	return r;
}

CyclicSum times(const CyclicSum &f, const CyclicSum &g)
{
	CyclicSum r;
	for (const auto &[u, cu] : f)
		for (const auto &[v, cv] : g)
		{
			const Poly c = cu * cv;
			if (u.empty() || v.empty())
			{
				// zero-length words multiply as scalars
				Letters joined = u.letters();
				joined.insert(joined.end(), v.letters().begin(), v.letters().end());
				r.add_letters(joined, c);
				continue;
			}
			const std::size_t lu = u.size(), lv = v.size();
			const Poly weight = c * Rational(1, static_cast<long>(lu * lv));
			for (std::size_t i = 0; i < lu; ++i)
			{
				const Letters ru = rotated(u.letters(), i);
				const int su = rotation_sign(u.letters(), i);
				for (std::size_t j = 0; j < lv; ++j)
				{
					const int sv = rotation_sign(v.letters(), j);
					Letters joined = ru;
					const Letters rv = rotated(v.letters(), j);
					joined.insert(joined.end(), rv.begin(), rv.end());
					r.add_letters(joined, su * sv > 0 ? weight : -weight);
				}
			}
		}
	return r;
}

int parity_of(const OpenSum &s)
{
	int p = 0;
	bool first = true;
	for (const auto &[w, c] : s)
	{
		const int q = w.odd_count() & 1;
		if (first)
			p = q, first = false;
		else if (q != p)
			return -1;
	}
	return p;
}

int max_odd_count(const CyclicSum &s)
{
	int k = 0;
	for (const auto &[w, c] : s)
		k = std::max(k, w.odd_count());
	return k;
}

} // namespace ncjet
