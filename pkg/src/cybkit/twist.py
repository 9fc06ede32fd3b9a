"""Twisting machinery for coboundary Lie bialgebra structures.

A cobracket is stored by its images on the basis of g.  The two twist
conditions (the general one against the cobracket and the coboundary
one against the generating tensor) are implemented independently; their
agreement is one of the acceptance properties.
"""

from dataclasses import dataclass

from .algebra import DomainError, LieElement, span
from .linalg import ZERO
from .tensor import (Tensor2, Tensor3, ad_action2, alt3, cyb, is_invariant,
                     is_skew, mixed_bracket)
from .dualnum import is_lagrangian_subalgebra, _contract_first_leg


@dataclass(frozen=True)
class Cobracket:
    algebra: object
    images: tuple  # one Tensor2 per basis index

    def __call__(self, x):
        g = self.algebra
        out = Tensor2(g)
        for i, c in x.coords.items():
            out = out + self.images[i].scale(c)
        return out


def cobracket_from_r(rho):
    """delta(a) = [a@1 + 1@a, rho]; requires rho + rho^21 invariant."""
    g = rho.algebra
    sym = rho + rho.transpose_legs()
    full = span(g.dim, [LieElement.basis(i).to_vector(g.dim)
                        for i in range(g.dim)])
    if not is_invariant(sym, full):
        raise DomainError("symmetric part of rho is not invariant")
    images = tuple(ad_action2(g, LieElement.basis(i), rho)
                   for i in range(g.dim))
    return Cobracket(g, images)


def satisfies_cocycle(delta):
    """1-cocycle identity on all basis pairs."""
    g = delta.algebra
    for i in range(g.dim):
        ei = LieElement.basis(i)
        for j in range(g.dim):
            ej = LieElement.basis(j)
            lhs = delta(g.bracket(ei, ej))
            rhs = (ad_action2(g, ei, delta(ej))
                   - ad_action2(g, ej, delta(ei)))
            if lhs != rhs:
                return False
    return True


def _delta_tensor_id(delta, s):
    """(delta @ id)(s): delta expands into legs 1-2, identity into leg 3."""
    g = delta.algebra
    out = {}
    for (i, j), c in s.coeffs.items():
        for (p, q), v in delta.images[i].coeffs.items():
            key = (p, q, j)
            w = out.get(key, ZERO) + c * v
            if w == 0:
                out.pop(key, None)
            else:
                out[key] = w
    return Tensor3(g, out)


def twist_residual_general(delta, s):
    """CYB(s) - Alt((delta @ id)(s))."""
    if not is_skew(s):
        raise DomainError("twist tensor must be skew")
    return cyb(s) - alt3(_delta_tensor_id(delta, s))


def twist_condition_general(delta, s):
    return twist_residual_general(delta, s).is_zero()


def twist_residual_triangular(rho, s):
    """CYB(s) + [[rho, s]] + [[s, rho]]."""
    if not is_skew(s):
        raise DomainError("twist tensor must be skew")
    return cyb(s) + mixed_bracket(rho, s) + mixed_bracket(s, rho)


def twist_condition_triangular(rho, s):
    return twist_residual_triangular(rho, s).is_zero()


class TwistConditionError(DomainError):
    def __init__(self, residual):
        super().__init__("twist condition fails; residual has %d entries"
                         % len(residual.coeffs))
        self.residual = residual


def apply_twist(rho, s):
    """rho + s, guarded by the coboundary twist condition.

    When CYB(rho) = 0 the output is checked to satisfy the CYBE as well;
    a violation raises, it is never returned silently.
    """
    residual = twist_residual_triangular(rho, s)
    if not residual.is_zero():
        raise TwistConditionError(residual)
    out = rho + s
    if cyb(rho).is_zero() and not cyb(out).is_zero():
        raise DomainError("twisted tensor unexpectedly fails the CYBE")
    return out


def s_graph(s):
    """Graph of the map c -> (c @ 1)(s) inside g[eps].

    Rows are S(e_k) + e_k eps over the basis of g; always isotropic of
    dimension dim g, and a subalgebra exactly when s solves the CYBE.
    """
    if not is_skew(s):
        raise DomainError("graph tensor must be skew")
    g = s.algebra
    rows = []
    for k in range(g.dim):
        c = LieElement.basis(k)
        rows.append(_contract_first_leg(g, c, s).to_vector(g.dim)
                    + c.to_vector(g.dim))
    return span(2 * g.dim, rows)
