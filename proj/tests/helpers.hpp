#pragma once

#include "ncjet/corpus.hpp"
#include "ncjet/formal_sum.hpp"
#include "ncjet/syntax.hpp"

#include <initializer_list>

namespace testing {

inline ncjet::Letters evens(std::initializer_list<int> fields)
{
	ncjet::Letters w;
	for (int f : fields)
		w.push_back(ncjet::Letter::even(f));
	return w;
}

inline ncjet::CyclicSum cyc(const char *text, const ncjet::JetContext &ctx = {})
{
	return ncjet::parse_density(text, ctx);
}

inline ncjet::OpenSum open(const char *text, const ncjet::JetContext &ctx = {})
{
	return ncjet::parse_open(text, ctx);
}

inline ncjet::DifferentialOperator op(const char *text, const ncjet::JetContext &ctx = {})
{
	return ncjet::parse_operator(text, ctx);
}

/// Random letter string with up to `odd` odd letters drawn from m fields.
inline ncjet::Letters random_string(ncjet::Random &rng, int length, int m, int max_order, bool odd)
{
	ncjet::Letters w;
	for (int i = 0; i < length; ++i)
	{
		const int f = rng.uniform(1, m);
		const int k = rng.uniform(0, max_order);
		w.push_back(odd && rng.chance(1, 2) ? ncjet::Letter::odd_x(f, k) : ncjet::Letter::even_x(f, k));
	}
	return w;
}

} // namespace testing
