#pragma once

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstdint>
#include <map>

namespace ncjet {

inline constexpr std::size_t kMaxBaseDim = 4;

using Rational = mpq_class;

/// Exponent vector; used both for base monomials x^e and for jet multi-indices.
using MultiIndex = std::array<std::uint16_t, kMaxBaseDim>;

inline int total_degree(const MultiIndex &index)
{
	int d = 0;
	for (auto e : index)
		d += e;
	return d;
}

/// Graded-lexicographic comparison: total degree first, then lexicographic.
inline std::strong_ordering graded_lex(const MultiIndex &lhs, const MultiIndex &rhs)
{
	if (auto c = total_degree(lhs) <=> total_degree(rhs); c != 0)
		return c;
	return lhs <=> rhs;
}

struct GradedLexLess
{
	bool operator()(const MultiIndex &lhs, const MultiIndex &rhs) const
	{
		return graded_lex(lhs, rhs) < 0;
	}
};

/// Polynomial in the base coordinates x^1..x^n with exact rational coefficients.
class Poly
{
  public:
	using Terms = std::map<MultiIndex, Rational, GradedLexLess>;

	Poly() = default;
	Poly(const Rational &constant);
	Poly(long constant) : Poly(Rational(constant)) {}
	Poly(int constant) : Poly(Rational(constant)) {}

	static Poly monomial(const MultiIndex &exponents, const Rational &c = 1);
	/// The coordinate function x^dir, dir is 0-based.
	static Poly coordinate(int dir);

	bool is_zero() const { return terms_.empty(); }
	bool is_constant() const;
	/// Constant term (the coefficient of x^0).
	Rational constant() const;
	const Terms &terms() const { return terms_; }
	std::size_t size() const { return terms_.size(); }

	/// Partial derivative in the 0-based direction dir.
	Poly derivative(int dir) const;

	Poly &operator+=(const Poly &rhs);
	Poly &operator-=(const Poly &rhs);
	Poly &operator*=(const Poly &rhs);
	Poly &operator*=(const Rational &rhs);

	friend Poly operator+(Poly lhs, const Poly &rhs) { return lhs += rhs; }
	friend Poly operator-(Poly lhs, const Poly &rhs) { return lhs -= rhs; }
	friend Poly operator*(const Poly &lhs, const Poly &rhs);
	friend Poly operator*(Poly lhs, const Rational &rhs) { return lhs *= rhs; }
	Poly operator-() const;

	friend bool operator==(const Poly &lhs, const Poly &rhs) { return lhs.terms_ == rhs.terms_; }
	/// Total order used for canonical output: compares term lists graded-lex.
	friend std::strong_ordering operator<=>(const Poly &lhs, const Poly &rhs);

  private:
	void add_term(const MultiIndex &exponents, const Rational &c);

	Terms terms_;
};

} // namespace ncjet
