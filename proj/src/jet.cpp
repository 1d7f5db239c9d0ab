#include "ncjet/jet.hpp"
#include "ncjet/error.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <map>

namespace ncjet {

void JetContext::validate() const
{
	if (n < 1 || n > static_cast<int>(kMaxBaseDim))
		throw PreconditionError(fmt::format("base dimension must be in 1..{}", kMaxBaseDim));
	if (m < 1 || m > 255)
		throw PreconditionError("fibre dimension must be in 1..255");
	if (max_order < 0)
		throw PreconditionError("max_order must be nonnegative");
}

void JetContext::check_order(const Letter &l) const
{
	if (l.total_order() > max_order)
		throw ResourceError(fmt::format("jet order {} exceeds the bound {}", l.total_order(), max_order));
}

namespace {

template <class Word>
FormalSum<Word> differentiate(const FormalSum<Word> &f, int dir, const JetContext &ctx)
{
	if (dir < 1 || dir > ctx.n)
		throw PreconditionError(fmt::format("direction {} out of range 1..{}", dir, ctx.n));
	const int d = dir - 1;
	FormalSum<Word> r;
	for (const auto &[w, c] : f)
	{
		r.add_letters(w.letters(), c.derivative(d));
		Letters s = w.letters();
		for (std::size_t i = 0; i < s.size(); ++i)
		{
			const Letter old = s[i];
			s[i] = old.shifted(d);
			ctx.check_order(s[i]);
			r.add_letters(s, c);
			s[i] = old;
		}
	}
	return r;
}

} // namespace

CyclicSum total_derivative(const CyclicSum &f, int dir, const JetContext &ctx)
{
	return differentiate(f, dir, ctx);
}

OpenSum total_derivative(const OpenSum &f, int dir, const JetContext &ctx)
{
	return differentiate(f, dir, ctx);
}

OpenSum derivative_power(const OpenSum &f, const MultiIndex &sigma, const JetContext &ctx)
{
	OpenSum r = f;
	for (int d = 0; d < static_cast<int>(kMaxBaseDim); ++d)
		for (int k = 0; k < sigma[d]; ++k)
		{
			if (r.is_zero())
				return r;
			r = differentiate(r, d + 1, ctx);
		}
	return r;
}

OpenSum partial_jet(const CyclicSum &f, const Letter &letter)
{
	OpenSum r;
	for (const auto &[w, c] : f)
		for (std::size_t i = 0; i < w.size(); ++i)
			if (w[i] == letter)
			{
				auto [open, sign] = cut_after(w, i);
				r.add(open, sign > 0 ? c : -c);
			}
	return r;
}

GeneratingSection GeneratingSection::even_field(std::vector<OpenSum> phi)
{
	GeneratingSection q;
	q.parity = 0;
	q.even = std::move(phi);
	return q;
}

const OpenSum &GeneratingSection::component(LetterKind kind, int field) const
{
	static const OpenSum zero;
	const auto &v = kind == LetterKind::Odd ? odd : even;
	if (kind == LetterKind::Slot || field < 1 || field > static_cast<int>(v.size()))
		return zero;
	return v[field - 1];
}

bool GeneratingSection::is_zero() const
{
	auto z = [](const OpenSum &s) { return s.is_zero(); };
	return std::all_of(even.begin(), even.end(), z) && std::all_of(odd.begin(), odd.end(), z);
}

void GeneratingSection::validate() const
{
	for (const auto &s : even)
		if (!s.is_zero() && parity_of(s) != (parity & 1))
			throw PreconditionError("even component has the wrong parity");
	for (const auto &s : odd)
		if (!s.is_zero() && parity_of(s) != ((parity + 1) & 1))
			throw PreconditionError("odd component has the wrong parity");
}

namespace {

void add_into(std::vector<OpenSum> &dst, const std::vector<OpenSum> &src, const Rational &c)
{
	if (dst.size() < src.size())
		dst.resize(src.size());
	for (std::size_t i = 0; i < src.size(); ++i)
		dst[i] += src[i] * c;
}

bool same_components(const std::vector<OpenSum> &a, const std::vector<OpenSum> &b)
{
	const std::size_t n = std::max(a.size(), b.size());
	static const OpenSum zero;
	for (std::size_t i = 0; i < n; ++i)
		if ((i < a.size() ? a[i] : zero) != (i < b.size() ? b[i] : zero))
			return false;
	return true;
}

} // namespace

GeneratingSection &GeneratingSection::operator+=(const GeneratingSection &rhs)
{
	add_into(even, rhs.even, 1);
	add_into(odd, rhs.odd, 1);
	return *this;
}

GeneratingSection &GeneratingSection::operator*=(const Rational &c)
{
	for (auto &s : even)
		s *= c;
	for (auto &s : odd)
		s *= c;
	return *this;
}

GeneratingSection operator-(GeneratingSection lhs, const GeneratingSection &rhs)
{
	add_into(lhs.even, rhs.even, -1);
	add_into(lhs.odd, rhs.odd, -1);
	return lhs;
}

bool operator==(const GeneratingSection &lhs, const GeneratingSection &rhs)
{
	return same_components(lhs.even, rhs.even) && same_components(lhs.odd, rhs.odd);
}

namespace {

/// Caches D^sigma of the components of a generating section.
class ComponentDerivatives
{
  public:
	ComponentDerivatives(const GeneratingSection &q, const JetContext &ctx) : q_(q), ctx_(ctx) {}

	const OpenSum &operator()(const Letter &l)
	{
		auto it = cache_.find(l);
		if (it != cache_.end())
			return it->second;
		const OpenSum &base = q_.component(l.kind, l.field);
		return cache_.emplace(l, base.is_zero() ? base : derivative_power(base, l.order, ctx_))
		    .first->second;
	}

  private:
	const GeneratingSection &q_;
	const JetContext &ctx_;
	std::map<Letter, OpenSum> cache_;
};

} // namespace

CyclicSum evolutionary_apply(const GeneratingSection &q, const CyclicSum &f, const JetContext &ctx)
{
	ComponentDerivatives dphi(q, ctx);
	CyclicSum r;
	for (const auto &[w, c] : f)
	{
		const Letters &s = w.letters();
		for (std::size_t i = 0; i < s.size(); ++i)
		{
			if (s[i].kind == LetterKind::Slot)
				continue;
			const OpenSum &v = dphi(s[i]);
			if (v.is_zero())
				continue;
			// Rotate the occurrence to the front, where Q acts without a Koszul sign.
			const int sign = rotation_sign(s, i);
			Letters rest(s.begin() + i + 1, s.end());
			rest.insert(rest.end(), s.begin(), s.begin() + i);
			for (const auto &[u, cu] : v)
			{
				Letters joined = u.letters();
				joined.insert(joined.end(), rest.begin(), rest.end());
				const Poly coef = c * cu;
				r.add_letters(joined, sign > 0 ? coef : -coef);
			}
		}
	}
	return r;
}

OpenSum evolutionary_apply(const GeneratingSection &q, const OpenSum &f, const JetContext &ctx)
{
	ComponentDerivatives dphi(q, ctx);
	OpenSum r;
	for (const auto &[w, c] : f)
	{
		const Letters &s = w.letters();
		int odd_before = 0;
		for (std::size_t i = 0; i < s.size(); ++i)
		{
			const Letter l = s[i];
			if (l.kind != LetterKind::Slot)
			{
				const OpenSum &v = dphi(l);
				const bool negative = (q.parity & 1) && (odd_before & 1);
				for (const auto &[u, cu] : v)
				{
					Letters joined(s.begin(), s.begin() + i);
					joined.insert(joined.end(), u.letters().begin(), u.letters().end());
					joined.insert(joined.end(), s.begin() + i + 1, s.end());
					const Poly coef = c * cu;
					r.add_letters(joined, negative ? -coef : coef);
				}
			}
			odd_before += l.is_odd();
		}
	}
	return r;
}

std::vector<OpenSum> evolutionary_apply(const GeneratingSection &q, const std::vector<OpenSum> &f,
                                        const JetContext &ctx)
{
	std::vector<OpenSum> r;
	r.reserve(f.size());
	for (const auto &s : f)
		r.push_back(evolutionary_apply(q, s, ctx));
	return r;
}

DifferentialOperator linearization(const std::vector<OpenSum> &phi, LetterKind wrt)
{
	std::vector<OpenSum> rows(phi.size());
	for (std::size_t i = 0; i < phi.size(); ++i)
		for (const auto &[w, c] : phi[i])
		{
			Letters s = w.letters();
			for (std::size_t t = 0; t < s.size(); ++t)
			{
				if (s[t].kind != wrt)
					continue;
				const Letter old = s[t];
				s[t] = Letter::slot(old.field, old.order);
				rows[i].add_letters(s, c);
				s[t] = old;
			}
		}
	return DifferentialOperator::from_slotted(rows);
}

GeneratingSection graded_commutator(const GeneratingSection &q1, const GeneratingSection &q2,
                                    const JetContext &ctx)
{
	GeneratingSection r;
	r.parity = (q1.parity + q2.parity) & 1;
	const Rational sign = ((q1.parity & 1) && (q2.parity & 1)) ? -1 : 1;
	auto bracket = [&](const std::vector<OpenSum> &c1, const std::vector<OpenSum> &c2) {
		const std::size_t n = std::max(c1.size(), c2.size());
		std::vector<OpenSum> out(n);
		for (std::size_t j = 0; j < n; ++j)
		{
			if (j < c2.size())
				out[j] += evolutionary_apply(q1, c2[j], ctx);
			if (j < c1.size())
				out[j] -= evolutionary_apply(q2, c1[j], ctx) * sign;
		}
		return out;
	};
	r.even = bracket(q1.even, q2.even);
	r.odd = bracket(q1.odd, q2.odd);
	return r;
}

} // namespace ncjet
