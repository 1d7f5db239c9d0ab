#pragma once

#include "ncjet/coefficient.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace ncjet {

enum class LetterKind : std::uint8_t
{
	Even = 0, ///< jet variable a^j_sigma
	Odd = 1,  ///< jet variable b^j_tau
	Slot = 2, ///< placeholder for the argument of an operator; behaves as even
};

/// One symbol of the alphabet. Fields are 1-based, multi-indices are indexed by
/// 0-based base directions.
struct Letter
{
	LetterKind kind = LetterKind::Even;
	std::uint8_t field = 1;
	MultiIndex order{};

	static Letter even(int field, MultiIndex order = {});
	static Letter odd(int field, MultiIndex order = {});
	static Letter slot(int index, MultiIndex order = {});
	/// Shorthand for n = 1: the letter of order k in x.
	static Letter even_x(int field, int k);
	static Letter odd_x(int field, int k);

	bool is_odd() const { return kind == LetterKind::Odd; }
	int total_order() const { return total_degree(order); }
	Letter shifted(int dir, int by = 1) const;
	Letter with_order(const MultiIndex &o) const;

	friend bool operator==(const Letter &, const Letter &) = default;
	/// The fixed total order: kind, field, then graded-lex on the multi-index.
	friend std::strong_ordering operator<=>(const Letter &lhs, const Letter &rhs)
	{
		if (auto c = lhs.kind <=> rhs.kind; c != 0)
			return c;
		if (auto c = lhs.field <=> rhs.field; c != 0)
			return c;
		return graded_lex(lhs.order, rhs.order);
	}
};

using Letters = std::vector<Letter>;

int odd_count(std::span<const Letter> letters);
inline int sign_of_parity(int p) { return (p & 1) ? -1 : 1; }

/// Lexicographic comparison of two words of possibly different length; shorter
/// words sort first.
inline std::strong_ordering compare_words(std::span<const Letter> lhs, std::span<const Letter> rhs)
{
	if (auto c = lhs.size() <=> rhs.size(); c != 0)
		return c;
	for (std::size_t i = 0; i < lhs.size(); ++i)
		if (auto c = lhs[i] <=> rhs[i]; c != 0)
			return c;
	return std::strong_ordering::equal;
}

/// A linearly ordered string with fixed endpoints (a cut necklace). The empty
/// word is the unit.
class OpenWord
{
  public:
	OpenWord() = default;
	explicit OpenWord(Letters letters) : letters_(std::move(letters)) {}
	OpenWord(std::initializer_list<Letter> letters) : letters_(letters) {}

	const Letters &letters() const { return letters_; }
	std::size_t size() const { return letters_.size(); }
	bool empty() const { return letters_.empty(); }
	int odd_count() const { return ncjet::odd_count(letters_); }
	const Letter &operator[](std::size_t i) const { return letters_[i]; }

	friend bool operator==(const OpenWord &, const OpenWord &) = default;
	friend std::strong_ordering operator<=>(const OpenWord &lhs, const OpenWord &rhs)
	{
		return compare_words(lhs.letters_, rhs.letters_);
	}

  private:
	Letters letters_;
};

struct Normalized;

/// A necklace in its canonical rotation. Instances are only produced by
/// normalize(), so a CyclicWord is always canonical and never the zero word.
class CyclicWord
{
  public:
	CyclicWord() = default; // the zero-length word

	const Letters &letters() const { return letters_; }
	std::size_t size() const { return letters_.size(); }
	bool empty() const { return letters_.empty(); }
	int odd_count() const { return odd_; }
	const Letter &operator[](std::size_t i) const { return letters_[i]; }

	friend bool operator==(const CyclicWord &, const CyclicWord &) = default;
	friend std::strong_ordering operator<=>(const CyclicWord &lhs, const CyclicWord &rhs)
	{
		return compare_words(lhs.letters_, rhs.letters_);
	}

  private:
	friend Normalized normalize(std::span<const Letter> letters);
	explicit CyclicWord(Letters letters);

	Letters letters_;
	int odd_ = 0;
};

/// Result of bringing a letter string to canonical cyclic form: the input is
/// equal to sign * word, or to zero when word is empty-optional.
struct Normalized
{
	std::optional<CyclicWord> word;
	int sign = 1;

	bool is_zero() const { return !word.has_value(); }
};

/// Sign acquired by the class when the first `shift` letters are moved, one by
/// one, from the front to the back of the string.
int rotation_sign(std::span<const Letter> letters, std::size_t shift);

/// The string rotated left by `shift` positions (no sign).
Letters rotated(std::span<const Letter> letters, std::size_t shift);

Normalized normalize(std::span<const Letter> letters);

/// Removes the letter at `position` and returns the open word read from the
/// letter right after it, together with the rotation sign.
/// Throws std::out_of_range for an invalid position.
std::pair<OpenWord, int> cut_after(const CyclicWord &w, std::size_t position);

Normalized close(const OpenWord &w);

OpenWord concat(const OpenWord &u, const OpenWord &v);

} // namespace ncjet
