#pragma once

#include "ncjet/differential_operator.hpp"
#include "ncjet/jet.hpp"

#include <optional>
#include <vector>

namespace ncjet {

/// A k-vector: a cohomology class of densities that are k-linear in the odd
/// letters, kept in the presentation <b, A(b,...,b)>/k!.
struct Multivector
{
	int degree = 0;
	/// Canonical density of the class.
	CyclicSum density;
	/// A^j(b,...,b) for j = 1..m; the odd letters of each word, read from left
	/// to right, are the argument slots 2..k. Empty for k = 0.
	std::vector<OpenSum> components;

	bool is_zero() const { return density.is_zero(); }
	/// For k = 2, the operator A with A(b) = components.
	DifferentialOperator bivector_operator() const;

	friend bool operator==(const Multivector &, const Multivector &) = default;
};

/// Brings a density homogeneous in the odd letters to normal form. The degree
/// must be given for the zero density (it defaults to 0 then).
/// Throws PreconditionError for a density of mixed degree or a degree that
/// disagrees with the explicit one.
Multivector normalize_multivector(const CyclicSum &density, const JetContext &ctx,
                                  std::optional<int> degree = std::nullopt);

/// P = 1/2 <b, A(b)>.
Multivector bivector(const DifferentialOperator &a, const JetContext &ctx);

/// Q^xi = -d^(a)_{delta_R xi / delta b} + d^(b)_{delta xi / delta a}, of parity k - 1.
GeneratingSection q_field(const Multivector &xi, const JetContext &ctx);

/// [[xi, eta]] = Q^xi(eta), a (k + l - 1)-vector.
Multivector schouten_bracket(const Multivector &xi, const Multivector &eta, const JetContext &ctx);

/// The same bracket from the coordinate formula
/// delta_R xi/delta a . delta eta/delta b - delta_R xi/delta b . delta eta/delta a.
Multivector schouten_coordinate(const Multivector &xi, const Multivector &eta, const JetContext &ctx);

/// xi(p_1, ..., p_k): the signed symmetrization over the arguments, reduced.
/// Throws PreconditionError unless exactly k covectors are given.
CyclicSum evaluate(const Multivector &xi, const std::vector<Covector> &args, const JetContext &ctx);

bool check_skew(const Multivector &xi, const Multivector &eta, const JetContext &ctx);
bool check_jacobi(const Multivector &xi, const Multivector &eta, const Multivector &omega,
                  const JetContext &ctx);
/// [Q^xi, Q^eta] = Q^[[xi, eta]].
bool check_prop1(const Multivector &xi, const Multivector &eta, const JetContext &ctx);

} // namespace ncjet
