#include "ncjet/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncjet {

Letter Letter::even(int field, MultiIndex order)
{
	return {LetterKind::Even, static_cast<std::uint8_t>(field), order};
}

Letter Letter::odd(int field, MultiIndex order)
{
	return {LetterKind::Odd, static_cast<std::uint8_t>(field), order};
}

Letter Letter::slot(int index, MultiIndex order)
{
	return {LetterKind::Slot, static_cast<std::uint8_t>(index), order};
}

Letter Letter::even_x(int field, int k)
{
	MultiIndex o{};
	o[0] = static_cast<std::uint16_t>(k);
	return even(field, o);
}

Letter Letter::odd_x(int field, int k)
{
	MultiIndex o{};
	o[0] = static_cast<std::uint16_t>(k);
	return odd(field, o);
}

Letter Letter::shifted(int dir, int by) const
{
	Letter l = *this;
	l.order[dir] = static_cast<std::uint16_t>(l.order[dir] + by);
	return l;
}

Letter Letter::with_order(const MultiIndex &o) const
{
	Letter l = *this;
	l.order = o;
	return l;
}

int odd_count(std::span<const Letter> letters)
{
	return static_cast<int>(std::count_if(letters.begin(), letters.end(),
	                                      [](const Letter &l) { return l.is_odd(); }));
}

int rotation_sign(std::span<const Letter> letters, std::size_t shift)
{
	// An odd letter crossing the marked point overtakes the k-1 other odd letters.
	const int k = odd_count(letters);
	if (k % 2 == 1)
		return 1;
	int moved = 0;
	for (std::size_t i = 0; i < shift; ++i)
		moved += letters[i].is_odd();
	return sign_of_parity(moved);
}

Letters rotated(std::span<const Letter> letters, std::size_t shift)
{
	Letters r;
	r.reserve(letters.size());
	r.insert(r.end(), letters.begin() + shift, letters.end());
	r.insert(r.end(), letters.begin(), letters.begin() + shift);
	return r;
}

CyclicWord::CyclicWord(Letters letters) : letters_(std::move(letters)), odd_(ncjet::odd_count(letters_)) {}

namespace {

// Three-way comparison of the rotations of s starting at i and at j.
std::strong_ordering compare_rotations(std::span<const Letter> s, std::size_t i, std::size_t j)
{
	const std::size_t n = s.size();
	for (std::size_t t = 0; t < n; ++t)
	{
		if (auto c = s[(i + t) % n] <=> s[(j + t) % n]; c != 0)
			return c;
	}
	return std::strong_ordering::equal;
}

} // namespace

Normalized normalize(std::span<const Letter> letters)
{
	const std::size_t n = letters.size();
	if (n == 0)
		return {CyclicWord(Letters{}), 1};

	std::size_t best = 0;
	for (std::size_t r = 1; r < n; ++r)
		if (compare_rotations(letters, r, best) < 0)
			best = r;

	const int sign = rotation_sign(letters, best);
	// The word is zero when the canonical string is also reached with the
	// opposite sign, i.e. some nontrivial rotation fixes it with sign -1.
	for (std::size_t r = best + 1; r < n; ++r)
		if (compare_rotations(letters, r, best) == 0 && rotation_sign(letters, r) != sign)
			return {std::nullopt, 0};

	return {CyclicWord(rotated(letters, best)), sign};
}

std::pair<OpenWord, int> cut_after(const CyclicWord &w, std::size_t position)
{
	if (position >= w.size())
		throw std::out_of_range("cut_after: occurrence out of range");
	const auto &s = w.letters();
	Letters open;
	open.reserve(s.size() - 1);
	for (std::size_t t = 1; t < s.size(); ++t)
		open.push_back(s[(position + t) % s.size()]);
	return {OpenWord(std::move(open)), rotation_sign(s, position)};
}

Normalized close(const OpenWord &w)
{
	return normalize(w.letters());
}

OpenWord concat(const OpenWord &u, const OpenWord &v)
{
	Letters r;
	r.reserve(u.size() + v.size());
	r.insert(r.end(), u.letters().begin(), u.letters().end());
	r.insert(r.end(), v.letters().begin(), v.letters().end());
	return OpenWord(std::move(r));
}

} // namespace ncjet
