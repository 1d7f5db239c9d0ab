#pragma once

#include "ncjet/differential_operator.hpp"
#include "ncjet/jet.hpp"

#include <vector>

namespace ncjet {

enum class Side
{
	Left,
	Right,
};

/// Variational derivative of a density with respect to a^j or b^j:
/// sum over sigma of (-D)^sigma applied to the cut at every occurrence of the
/// letter of order sigma. The right variation differs from the left one by the
/// Koszul sign of moving the removed letter across the remaining word.
OpenSum euler_derivative(const CyclicSum &f, LetterKind kind, int field, const JetContext &ctx,
                         Side side = Side::Left);

/// All m variational derivatives with respect to the letters of one kind.
Covector euler_derivatives(const CyclicSum &f, LetterKind kind, const JetContext &ctx,
                           Side side = Side::Left);

/// Whether f is a total divergence, i.e. zero in horizontal cohomology.
bool is_trivial(const CyclicSum &f, const JetContext &ctx);

/// Canonical representative of the cohomology class of f: two densities are
/// equivalent iff their reductions coincide.
CyclicSum reduce(const CyclicSum &f, const JetContext &ctx);

/// sum_j close(p_j phi^j).
CyclicSum coupling(const Covector &p, const std::vector<OpenSum> &phi);

/// Replaces every slot letter (field j, order tau) by D^tau(p_j).
OpenSum substitute_slots(const OpenSum &f, const Covector &p, const JetContext &ctx);

/// A(p); the result has one component per row of A (at least p.size()).
std::vector<OpenSum> op_apply(const DifferentialOperator &a, const Covector &p, const JetContext &ctx);

/// The operator with <p1, A(p2)> = <p2, A^dagger(p1)> modulo total derivatives.
DifferentialOperator adjoint(const DifferentialOperator &a, const JetContext &ctx);

bool is_skew_adjoint(const DifferentialOperator &a, const JetContext &ctx);

/// The velocity of a covector transported along the field with generating
/// section phi: the evolutionary action on p plus the action of the adjoint
/// linearization of phi.
Covector lift_covector_velocity(const std::vector<OpenSum> &phi, const Covector &p, const JetContext &ctx);

} // namespace ncjet
