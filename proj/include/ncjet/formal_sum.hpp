#pragma once

#include "ncjet/coefficient.hpp"
#include "ncjet/word.hpp"

#include <algorithm>
#include <cstdint>
#include <span>
#include <type_traits>
#include <unordered_map>
#include <vector>

namespace ncjet {

inline std::uint64_t hash_letters(std::span<const Letter> letters, std::uint64_t h = 0xcbf29ce484222325ull)
{
	for (const Letter &l : letters)
	{
		std::uint64_t v = static_cast<std::uint64_t>(l.kind) | (std::uint64_t{l.field} << 8);
		for (std::size_t d = 0; d < kMaxBaseDim; ++d)
			v = v * 0x9e3779b97f4a7c15ull + l.order[d];
		h = (h ^ v) * 0x100000001b3ull;
		h ^= h >> 29;
	}
	return h;
}

inline std::size_t hash_value(const OpenWord &w) { return hash_letters(w.letters()); }
inline std::size_t hash_value(const CyclicWord &w) { return hash_letters(w.letters()); }

struct TermHash
{
	template <class Key>
	std::size_t operator()(const Key &k) const
	{
		return hash_value(k);
	}
};

/// Finite linear combination of keys with polynomial coefficients. Zero
/// coefficients are never stored. Iteration order is unspecified; use
/// sorted() where a canonical order matters.
template <class Key>
class LinearCombination
{
  public:
	using Terms = std::unordered_map<Key, Poly, TermHash>;
	using const_iterator = typename Terms::const_iterator;
	using Entry = std::pair<const Key *, const Poly *>;

	LinearCombination() = default;

	static LinearCombination term(const Key &key, const Poly &c = 1)
	{
		LinearCombination r;
		r.add(key, c);
		return r;
	}

	void add(const Key &key, const Poly &c)
	{
		if (c.is_zero())
			return;
		auto [it, inserted] = terms_.try_emplace(key, c);
		if (!inserted)
		{
			it->second += c;
			if (it->second.is_zero())
				terms_.erase(it);
		}
	}

	bool is_zero() const { return terms_.empty(); }
	std::size_t size() const { return terms_.size(); }
	const Terms &terms() const { return terms_; }
	const_iterator begin() const { return terms_.begin(); }
	const_iterator end() const { return terms_.end(); }

	/// Terms in increasing key order.
	std::vector<Entry> sorted() const
	{
		std::vector<Entry> r;
		r.reserve(terms_.size());
		for (const auto &[k, c] : terms_)
			r.emplace_back(&k, &c);
		std::sort(r.begin(), r.end(), [](const Entry &a, const Entry &b) { return *a.first < *b.first; });
		return r;
	}

	Poly coefficient(const Key &key) const
	{
		auto it = terms_.find(key);
		return it == terms_.end() ? Poly() : it->second;
	}

	LinearCombination &operator+=(const LinearCombination &rhs)
	{
		for (const auto &[k, c] : rhs.terms_)
			add(k, c);
		return *this;
	}
	LinearCombination &operator-=(const LinearCombination &rhs)
	{
		for (const auto &[k, c] : rhs.terms_)
			add(k, -c);
		return *this;
	}
	LinearCombination &operator*=(const Poly &rhs)
	{
		if (rhs.is_zero())
		{
			terms_.clear();
			return *this;
		}
		for (auto it = terms_.begin(); it != terms_.end();)
		{
			it->second *= rhs;
			if (it->second.is_zero())
				it = terms_.erase(it);
			else
				++it;
		}
		return *this;
	}
	LinearCombination &operator*=(const Rational &rhs) { return *this *= Poly(rhs); }

	LinearCombination operator-() const
	{
		LinearCombination r = *this;
		for (auto &[k, c] : r.terms_)
			c = -c;
		return r;
	}

	friend LinearCombination operator+(LinearCombination lhs, const LinearCombination &rhs) { return lhs += rhs; }
	friend LinearCombination operator-(LinearCombination lhs, const LinearCombination &rhs) { return lhs -= rhs; }
	friend LinearCombination operator*(LinearCombination lhs, const Poly &rhs) { return lhs *= rhs; }
	friend LinearCombination operator*(const Poly &lhs, LinearCombination rhs) { return rhs *= lhs; }
	friend LinearCombination operator*(LinearCombination lhs, const Rational &rhs) { return lhs *= rhs; }
	friend LinearCombination operator*(const Rational &lhs, LinearCombination rhs) { return rhs *= lhs; }
	friend bool operator==(const LinearCombination &, const LinearCombination &) = default;

  protected:
	Terms terms_;
};

/// Formal sum of canonical words. Adding a raw letter string to a cyclic sum
/// brings it to canonical rotation first (and drops it if it is the zero word).
template <class Word>
class FormalSum : public LinearCombination<Word>
{
	using Base = LinearCombination<Word>;

  public:
	FormalSum() = default;
	FormalSum(const Base &b) : Base(b) {}
	FormalSum(Base &&b) : Base(std::move(b)) {}

	/// The scalar c times the zero-length word.
	static FormalSum scalar(const Poly &c)
	{
		FormalSum r;
		r.add_letters({}, c);
		return r;
	}
	static FormalSum of_letters(std::span<const Letter> letters, const Poly &c = 1)
	{
		FormalSum r;
		r.add_letters(letters, c);
		return r;
	}

	using Base::add;

	void add_letters(std::span<const Letter> letters, const Poly &c)
	{
		if (c.is_zero())
			return;
		if constexpr (std::is_same_v<Word, CyclicWord>)
		{
			Normalized nw = normalize(letters);
			if (nw.is_zero())
				return;
			Base::add(*nw.word, nw.sign > 0 ? c : -c);
		}
		else
			Base::add(Word(Letters(letters.begin(), letters.end())), c);
	}
};

using CyclicSum = FormalSum<CyclicWord>;
using OpenSum = FormalSum<OpenWord>;

/// Closes every word of the sum into a necklace.
CyclicSum close(const OpenSum &s);

/// Concatenation product in the free algebra.
OpenSum operator*(const OpenSum &lhs, const OpenSum &rhs);

/// The commutative, nonassociative product of cyclic words: the average over
/// all positions of the two marked points of the joined strings.
CyclicSum times(const CyclicSum &f, const CyclicSum &g);

/// Parity of a sum whose words all carry the same number of odd letters mod 2;
/// -1 for a sum of mixed parity, 0 for the zero sum.
int parity_of(const OpenSum &s);

/// Maximal number of odd letters over the words of the sum.
int max_odd_count(const CyclicSum &s);

} // namespace ncjet
