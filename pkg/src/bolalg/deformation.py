"""Infinitesimal and first-order deformations of a Bol algebra.

A pair (nu, omega) of binary/ternary maps on B deforms the operations to

    x *_t y       = x*y + t nu(x,y)
    [x, y, z]_t   = [x,y,z] + t omega(x,y,z)

and generates a t-parameter infinitesimal deformation exactly when

  (i)  (*, nu, omega) defines a Bol algebra of deformation type, and
  (ii) (nu, omega) is a (2,3)-cocycle for the adjoint representation.

"Deformation type" means: nu and mu antisymmetric, omega antisymmetric in
slots 1 and 2, the cyclic sum of omega vanishing, and

  (B2') omega(x1,x2,nu(y1,y2)) = nu(omega(x1,x2,y1),y2)
          + nu(y1,omega(x1,x2,y2)) + omega(y1,y2,nu(x1,x2))
          - nu(nu(y1,y2),mu(x1,x2)) - nu(mu(y1,y2),nu(x1,x2))
          - mu(nu(y1,y2),nu(x1,x2))
  (B3') omega(x1,x2,omega(y1,y2,y3)) = omega(omega(x1,x2,y1),y2,y3)
          + omega(y1,omega(x1,x2,y2),y3) + omega(y1,y2,omega(x1,x2,y3)).

Each deformed axiom is polynomial in t of degree at most 3, so the
predicate route can be cross-checked by substituting the four sample
values t in {1, 2, 3, 5} and running the full axiom verifier: vanishing
at four points forces a cubic to vanish identically.

A first-order formal deformation additionally satisfies the degree-2
closure equations -- which are (B2') and (B3') with mu = * -- and the
degree-3 condition o3: nu(nu(y1,y2), nu(x1,x2)) = 0.

Two first-order data are equivalent when a linear map phi: B -> B solves

  (F1' - F1)(x1,x2)    = x1*phi(x2) - x2*phi(x1) - phi(x1*x2)
  (G1' - G1)(x1,x2,x3) = [x1,x2,phi(x3)] + [phi(x1),x2,x3]
                         - [phi(x2),x1,x3] - phi([x1,x2,x3])

i.e. exactly when their difference is an adjoint coboundary with zero
companion.  The cochain route (coboundary with companion restricted to
the joint kernel of Delta) is computed alongside and must agree.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    AxiomReport,
    BolAlgebra,
    CheckReport,
    ConditionCheck,
    VerificationError,
    bilinear_eval,
    trilinear_eval,
    verify_bol,
)
from .cohomology import CochainPair, is_cocycle, solve_coboundary
from .linalg import Mat, Vec, is_zero_vec, vec_add, vec_sub
from .representation import PseudoderivationData, Representation, adjoint_representation

_ZERO = Fraction(0)

_SAMPLE_VALUES = (Fraction(1), Fraction(2), Fraction(3), Fraction(5))


@dataclass(frozen=True)
class DeformationTypeCandidate:
    """Raw (mu, nu, omega) tensors; is_deformation_type decides everything."""

    n: int
    mu: tuple     # mu[k][i][j]
    nu: tuple     # nu[k][i][j]
    omega: tuple  # omega[l][i][j][k]


@dataclass(frozen=True)
class DeformationDatum:
    """First-order data (F1, G1): a cochain pair with adjoint coefficients."""

    base: BolAlgebra
    pair: CochainPair

    def __post_init__(self):
        if self.pair.base != self.base:
            raise ValueError("deformation pair must live over its base algebra")
        if self.pair.m != self.base.n:
            raise ValueError("deformation coefficients must be adjoint (V = B)")


def _b2p_residual(d: DeformationTypeCandidate, x1, x2, y1, y2) -> Vec:
    n = d.n
    mu = lambda a, b: bilinear_eval(d.mu, a, b, n)
    nu = lambda a, b: bilinear_eval(d.nu, a, b, n)
    om = lambda a, b, c: trilinear_eval(d.omega, a, b, c, n)
    nu_y = nu(y1, y2)
    nu_x = nu(x1, x2)
    r = om(x1, x2, nu_y)
    r = vec_sub(r, nu(om(x1, x2, y1), y2))
    r = vec_sub(r, nu(y1, om(x1, x2, y2)))
    r = vec_sub(r, om(y1, y2, nu_x))
    r = vec_add(r, nu(nu_y, mu(x1, x2)))
    r = vec_add(r, nu(mu(y1, y2), nu_x))
    r = vec_add(r, mu(nu_y, nu_x))
    return r


def _b3p_residual(d: DeformationTypeCandidate, x1, x2, y1, y2, y3) -> Vec:
    n = d.n
    om = lambda a, b, c: trilinear_eval(d.omega, a, b, c, n)
    r = om(x1, x2, om(y1, y2, y3))
    r = vec_sub(r, om(om(x1, x2, y1), y2, y3))
    r = vec_sub(r, om(y1, om(x1, x2, y2), y3))
    r = vec_sub(r, om(y1, y2, om(x1, x2, y3)))
    return r


def is_deformation_type(d: DeformationTypeCandidate) -> CheckReport:
    """Check (B01')-(B03') tensor-wise and (B1'), (B2'), (B3') on basis tuples."""
    n = d.n
    rng = range(n)

    def scan(name, tuples, fn):
        for idx in tuples:
            r = fn(*idx)
            if not is_zero_vec(r):
                return ConditionCheck(name, False, tuple(idx), r)
        return ConditionCheck(name, True)

    nu = lambda i, j: tuple(d.nu[k][i][j] for k in range(n))
    mu = lambda i, j: tuple(d.mu[k][i][j] for k in range(n))
    om = lambda i, j, k: tuple(d.omega[l][i][j][k] for l in range(n))

    checks = (
        scan("B01'", itertools.product(rng, repeat=2),
             lambda i, j: vec_add(nu(i, j), nu(j, i))),
        scan("B02'", itertools.product(rng, repeat=2),
             lambda i, j: vec_add(mu(i, j), mu(j, i))),
        scan("B03'", itertools.product(rng, repeat=3),
             lambda i, j, k: vec_add(om(i, j, k), om(j, i, k))),
        scan("B1'", itertools.product(rng, repeat=3),
             lambda i, j, k: vec_add(om(i, j, k), om(j, k, i), om(k, i, j))),
        scan("B2'", itertools.product(rng, repeat=4),
             lambda a, b, c, e: _b2p_residual(d, a, b, c, e)),
        scan("B3'", itertools.product(rng, repeat=5),
             lambda a, b, c, e, f: _b3p_residual(d, a, b, c, e, f)),
    )
    return CheckReport(checks)


def deformed_algebra(d: DeformationDatum, t: Fraction) -> BolAlgebra:
    """The algebra B_t with operations *_t and [ , , ]_t at a sample t."""
    base, pair = d.base, d.pair
    n = base.n
    t = Fraction(t)
    c = tuple(
        tuple(tuple(base.c[k][i][j] + t * pair.nu[k][i][j] for j in range(n))
              for i in range(n))
        for k in range(n)
    )
    tt = tuple(
        tuple(
            tuple(tuple(base.t[l][i][j][k] + t * pair.omega[l][i][j][k]
                        for k in range(n))
                  for j in range(n))
            for i in range(n))
        for l in range(n)
    )
    return BolAlgebra(n, c, tt, base.basis_names)


@dataclass(frozen=True)
class InfinitesimalDeformationReport:
    """Predicate route, optional t-sampling route, and their agreement."""

    deformation_type: CheckReport
    cocycle: CheckReport
    sampling: tuple[tuple[Fraction, AxiomReport], ...] | None

    @property
    def passed(self) -> bool:
        return self.deformation_type.passed and self.cocycle.passed

    @property
    def sampling_passed(self) -> bool | None:
        if self.sampling is None:
            return None
        return all(rep.passed for _, rep in self.sampling)

    @property
    def routes_agree(self) -> bool:
        return self.sampling is None or self.passed == self.sampling_passed


def generates_infinitesimal_deformation(d: DeformationDatum,
                                        cross_check: bool = True
                                        ) -> InfinitesimalDeformationReport:
    """Decide whether (nu, omega) generates a t-parameter deformation.

    Predicate route: deformation type with mu = * plus the adjoint cocycle
    conditions.  With cross_check, also verifies B_t for t in {1,2,3,5};
    every deformed axiom has degree <= 3 in t, so the two routes must
    agree, and the report exposes both.
    """
    base, pair = d.base, d.pair
    base_report = verify_bol(base)
    if not base_report.passed:
        raise VerificationError("deformation base must be a Bol algebra", base_report)
    candidate = DeformationTypeCandidate(base.n, base.c, pair.nu, pair.omega)
    type_report = is_deformation_type(candidate)
    cocycle_report = is_cocycle(adjoint_representation(base), pair)
    sampling = None
    if cross_check:
        sampling = tuple(
            (t, verify_bol(deformed_algebra(d, t))) for t in _SAMPLE_VALUES
        )
    return InfinitesimalDeformationReport(type_report, cocycle_report, sampling)


def _o3_residual(d: DeformationDatum, x1, x2, y1, y2) -> Vec:
    n = d.base.n
    nu = lambda a, b: bilinear_eval(d.pair.nu, a, b, n)
    return nu(nu(y1, y2), nu(x1, x2))


def check_first_order_formal(d: DeformationDatum) -> CheckReport:
    """Closure equations for (f_t, g_t) = (* + F1 t, [,,] + G1 t).

    Degree 1 gives the adjoint cocycle conditions CC1-CC3, degree 2 gives
    (B2') and (B3') with mu = *, and degree 3 gives o3 = 0 with
    o3 = F1(F1(y1,y2), F1(x1,x2)).  Passing everything here implies
    generates_infinitesimal_deformation; the converse can fail.
    """
    base, pair = d.base, d.pair
    base_report = verify_bol(base)
    if not base_report.passed:
        raise VerificationError("deformation base must be a Bol algebra", base_report)
    n = base.n
    rng = range(n)
    cocycle_report = is_cocycle(adjoint_representation(base), pair)
    candidate = DeformationTypeCandidate(n, base.c, pair.nu, pair.omega)

    def scan(name, tuples, fn):
        for idx in tuples:
            r = fn(*idx)
            if not is_zero_vec(r):
                return ConditionCheck(name, False, tuple(idx), r)
        return ConditionCheck(name, True)

    checks = tuple(cocycle_report.checks) + (
        scan("B2'", itertools.product(rng, repeat=4),
             lambda a, b, c, e: _b2p_residual(candidate, a, b, c, e)),
        scan("B3'", itertools.product(rng, repeat=5),
             lambda a, b, c, e, f: _b3p_residual(candidate, a, b, c, e, f)),
        scan("o3", itertools.product(rng, repeat=4),
             lambda a, b, c, e: _o3_residual(d, a, b, c, e)),
    )
    return CheckReport(checks)


@dataclass(frozen=True)
class FirstOrderEquivalence:
    """Outcome of the first-order equivalence test with both routes."""

    equivalent: bool
    phi: Mat | None
    cochain_route: bool
    cochain_witness: PseudoderivationData | None

    @property
    def routes_agree(self) -> bool:
        return self.equivalent == self.cochain_route


def first_order_equivalent(base: BolAlgebra, d1: DeformationDatum,
                           d2: DeformationDatum) -> FirstOrderEquivalence:
    """Solve the linear system for phi; cross-check via the cochain route.

    The direct route solves the two displayed equations for the n^2
    entries of phi, which is the zero-companion coboundary system for the
    difference (F1'-F1, G1'-G1) over the adjoint representation.  The
    cochain route solves the same difference as a coboundary with
    companion constrained to the joint kernel of Delta; the two always
    agree mathematically, and any disagreement is surfaced rather than
    hidden.
    """
    if d1.base != base or d2.base != base:
        raise ValueError("both deformation data must live over the given base")
    base_report = verify_bol(base)
    if not base_report.passed:
        raise VerificationError("equivalence base must be a Bol algebra", base_report)
    R = adjoint_representation(base)
    diff = d2.pair - d1.pair
    direct = solve_coboundary(R, diff, companion="none")
    constrained = solve_coboundary(R, diff, companion="delta-kernel")
    phi = direct.f if direct is not None else None
    return FirstOrderEquivalence(
        equivalent=direct is not None,
        phi=phi,
        cochain_route=constrained is not None,
        cochain_witness=constrained,
    )
