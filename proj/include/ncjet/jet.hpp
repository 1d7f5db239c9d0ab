#pragma once

#include "ncjet/differential_operator.hpp"
#include "ncjet/formal_sum.hpp"

#include <vector>

namespace ncjet {

/// Dimensions of the jet space: n base coordinates, m even fields a^j and
/// their odd partners b^j. max_order bounds the total order of any jet letter
/// produced by differentiation.
struct JetContext
{
	int n = 1;
	int m = 1;
	int max_order = 32;

	void validate() const;
	void check_order(const Letter &l) const;
};

/// d/dx^dir (dir is 1-based) acting on the coefficients and, by the Leibniz
/// rule, on every jet letter. Slot letters are differentiated as well.
CyclicSum total_derivative(const CyclicSum &f, int dir, const JetContext &ctx);
OpenSum total_derivative(const OpenSum &f, int dir, const JetContext &ctx);

/// D^sigma = prod_i (d/dx^i)^{sigma_i}.
OpenSum derivative_power(const OpenSum &f, const MultiIndex &sigma, const JetContext &ctx);

/// Left derivative by a jet letter: the sum over its occurrences of the
/// necklace cut open right after that occurrence.
OpenSum partial_jet(const CyclicSum &f, const Letter &letter);

/// Evolutionary vector field Q = sum_j d^(a)_{even[j]} + d^(b)_{odd[j]} of the
/// given parity. Components of `even` have parity `parity`; components of
/// `odd` have the opposite parity.
struct GeneratingSection
{
	int parity = 0;
	std::vector<OpenSum> even;
	std::vector<OpenSum> odd;

	static GeneratingSection even_field(std::vector<OpenSum> phi);

	/// Component by kind and 1-based field; empty sum when absent.
	const OpenSum &component(LetterKind kind, int field) const;
	bool is_zero() const;
	/// Throws PreconditionError when a component has the wrong parity.
	void validate() const;

	GeneratingSection &operator+=(const GeneratingSection &rhs);
	GeneratingSection &operator*=(const Rational &c);
	friend GeneratingSection operator-(GeneratingSection lhs, const GeneratingSection &rhs);
	friend bool operator==(const GeneratingSection &lhs, const GeneratingSection &rhs);
};

/// Q acting from the left by the graded Leibniz rule; Q dives under the total
/// derivatives, so the letter a_sigma receives D^sigma of its component.
CyclicSum evolutionary_apply(const GeneratingSection &q, const CyclicSum &f, const JetContext &ctx);
OpenSum evolutionary_apply(const GeneratingSection &q, const OpenSum &f, const JetContext &ctx);
std::vector<OpenSum> evolutionary_apply(const GeneratingSection &q, const std::vector<OpenSum> &f,
                                        const JetContext &ctx);

/// Linearization of a tuple of open words with respect to the letters of the
/// given kind: row i collects, for every occurrence of a^j_sigma in phi_i, the
/// term (prefix) D^sigma(p_j) (suffix).
DifferentialOperator linearization(const std::vector<OpenSum> &phi, LetterKind wrt = LetterKind::Even);

/// [Q1, Q2] = Q1 o Q2 - (-1)^{q1 q2} Q2 o Q1, computed on generating sections.
GeneratingSection graded_commutator(const GeneratingSection &q1, const GeneratingSection &q2,
                                    const JetContext &ctx);

} // namespace ncjet
