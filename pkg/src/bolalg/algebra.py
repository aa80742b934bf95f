"""Bol and Maltsev algebras presented by exact rational structure constants.

A Bol algebra carries an antisymmetric binary product ``x*y`` and a
ternary product ``[x,y,z]`` antisymmetric in its first two slots, subject
to three compatibility axioms (B1, B2, B3 below).  A Maltsev algebra is an
anticommutative binary algebra satisfying Sagle's identity; every Maltsev
algebra induces a Bol algebra through

    [x, y, z] = (1/3) (x*(y*z) - y*(x*z) + 2 (x*y)*z).

Everything is stored as structure tensors over Q:

    c[k][i][j]    = coefficient of e_k in e_i * e_j
    t[l][i][j][k] = coefficient of e_l in [e_i, e_j, e_k]

Axioms are multilinear (and the Maltsev identity quadratic in one slot),
so each verifier decides them by exhaustive evaluation on basis tuples,
reporting the first failing tuple in lexicographic order as a witness.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .linalg import Vec, is_zero_vec, vec_add, vec_scale, vec_sub, zero_vec

_ZERO = Fraction(0)
_ONE = Fraction(1)

# A slot in a multilinear evaluation: either a basis index or a vector.
Elem = "int | Vec"


@dataclass(frozen=True)
class ConditionCheck:
    """Outcome of one identity check: pass, or first failure with evidence.

    ``witness`` is the first failing index tuple in lexicographic order
    (entries are basis indices, except the quadratic Maltsev slot which is
    a tuple of one or two indices standing for e_i or e_i + e_j), and
    ``residual`` is the exact LHS - RHS coordinate vector there.
    """

    name: str
    passed: bool
    witness: tuple | None = None
    residual: Vec | None = None


@dataclass(frozen=True)
class CheckReport:
    checks: tuple[ConditionCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> tuple[ConditionCheck, ...]:
        return tuple(c for c in self.checks if not c.passed)

    def first_failure(self) -> ConditionCheck | None:
        for c in self.checks:
            if not c.passed:
                return c
        return None

    def __getitem__(self, name: str) -> ConditionCheck:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)


# Axiom reports are plain check reports; the alias keeps call sites readable.
AxiomReport = CheckReport


class VerificationError(ValueError):
    """An operation's precondition failed; carries the offending report."""

    def __init__(self, message: str, report: CheckReport):
        super().__init__(message)
        self.report = report


def _freeze2(grid) -> tuple:
    return tuple(tuple(Fraction(x) for x in row) for row in grid)


def _freeze3(t3) -> tuple:
    return tuple(_freeze2(plane) for plane in t3)


def _freeze4(t4) -> tuple:
    return tuple(_freeze3(cube) for cube in t4)


def zero_binary_tensor(n: int) -> tuple:
    return tuple(
        tuple(tuple(_ZERO for _ in range(n)) for _ in range(n)) for _ in range(n)
    )


def zero_ternary_tensor(n: int) -> tuple:
    return tuple(
        tuple(tuple(tuple(_ZERO for _ in range(n)) for _ in range(n)) for _ in range(n))
        for _ in range(n)
    )


def binary_tensor_from_entries(
    n: int, entries: Iterable[tuple[tuple[int, int], Mapping[int, Fraction]]]
) -> tuple:
    """Build c[k][i][j] from entries {(i,j) with i<j: {k: coeff}}.

    Only i<j slots may be given; the j>i half is filled by antisymmetry, so
    the result always satisfies c[k][i][j] = -c[k][j][i].  Duplicate or
    diagonal argument pairs are rejected.
    """
    c = [[[_ZERO] * n for _ in range(n)] for _ in range(n)]
    seen = set()
    for (i, j), coeffs in entries:
        if not (0 <= i < n and 0 <= j < n):
            raise ValueError(f"binary entry args ({i},{j}) out of range for dimension {n}")
        if i == j:
            raise ValueError(f"diagonal binary entry ({i},{j})")
        if i > j:
            raise ValueError(f"binary entry args ({i},{j}) must satisfy i<j")
        if (i, j) in seen:
            raise ValueError(f"duplicate binary entry ({i},{j})")
        seen.add((i, j))
        for k, val in coeffs.items():
            if not 0 <= k < n:
                raise ValueError(f"binary entry ({i},{j}): index {k} out of range")
            val = Fraction(val)
            c[k][i][j] = val
            c[k][j][i] = -val
    return _freeze3(c)


def ternary_tensor_from_entries(
    n: int, entries: Iterable[tuple[tuple[int, int, int], Mapping[int, Fraction]]]
) -> tuple:
    """Build t[l][i][j][k] from entries {(i,j,k) with i<j: {l: coeff}}."""
    t = [[[[_ZERO] * n for _ in range(n)] for _ in range(n)] for _ in range(n)]
    seen = set()
    for (i, j, k), coeffs in entries:
        if not (0 <= i < n and 0 <= j < n and 0 <= k < n):
            raise ValueError(
                f"ternary entry args ({i},{j},{k}) out of range for dimension {n}"
            )
        if i == j:
            raise ValueError(f"diagonal ternary entry ({i},{j},{k})")
        if i > j:
            raise ValueError(f"ternary entry args ({i},{j},{k}) must satisfy i<j")
        if (i, j, k) in seen:
            raise ValueError(f"duplicate ternary entry ({i},{j},{k})")
        seen.add((i, j, k))
        for l, val in coeffs.items():
            if not 0 <= l < n:
                raise ValueError(f"ternary entry ({i},{j},{k}): index {l} out of range")
            val = Fraction(val)
            t[l][i][j][k] = val
            t[l][j][i][k] = -val
    return _freeze4(t)


def _coeffs(x, n: int):
    """Iterate (index, coefficient) over a slot value (basis index or Vec)."""
    if isinstance(x, int):
        yield x, _ONE
    else:
        if len(x) != n:
            raise ValueError(f"vector length {len(x)} != dimension {n}")
        for i, s in enumerate(x):
            if s:
                yield i, s


def bilinear_eval(c, x, y, n: int) -> Vec:
    """Multilinear extension of a binary tensor c[k][i][j] to x, y slots."""
    out = [_ZERO] * n
    for i, a in _coeffs(x, n):
        for j, b in _coeffs(y, n):
            ab = a * b
            for k in range(n):
                s = c[k][i][j]
                if s:
                    out[k] += ab * s
    return tuple(out)


def trilinear_eval(t, x, y, z, n: int) -> Vec:
    """Multilinear extension of a ternary tensor t[l][i][j][k]."""
    out = [_ZERO] * n
    for i, a in _coeffs(x, n):
        for j, b in _coeffs(y, n):
            ab = a * b
            for k, cz in _coeffs(z, n):
                abc = ab * cz
                for l in range(n):
                    s = t[l][i][j][k]
                    if s:
                        out[l] += abc * s
    return tuple(out)


@dataclass(frozen=True)
class MaltsevAlgebra:
    """Anticommutative algebra candidate; verify_maltsev decides the identity."""

    n: int
    c: tuple  # c[k][i][j]
    basis_names: tuple[str, ...] | None = None

    @classmethod
    def from_entries(cls, n, binary, basis_names=None) -> "MaltsevAlgebra":
        return cls(n, binary_tensor_from_entries(n, binary),
                   tuple(basis_names) if basis_names else None)

    def product(self, x, y) -> Vec:
        return bilinear_eval(self.c, x, y, self.n)

    @cached_property
    def _pair(self) -> tuple:
        n = self.n
        return tuple(
            tuple(tuple(self.c[k][i][j] for k in range(n)) for j in range(n))
            for i in range(n)
        )

    def basis_product(self, i: int, j: int) -> Vec:
        return self._pair[i][j]


@dataclass(frozen=True)
class BolAlgebra:
    """Binary + ternary structure constants; verify_bol decides the axioms."""

    n: int
    c: tuple  # c[k][i][j]
    t: tuple  # t[l][i][j][k]
    basis_names: tuple[str, ...] | None = None

    @classmethod
    def from_entries(cls, n, binary, ternary, basis_names=None) -> "BolAlgebra":
        return cls(
            n,
            binary_tensor_from_entries(n, binary),
            ternary_tensor_from_entries(n, ternary),
            tuple(basis_names) if basis_names else None,
        )

    @classmethod
    def zero(cls, n: int) -> "BolAlgebra":
        return cls(n, zero_binary_tensor(n), zero_ternary_tensor(n))

    def product(self, x, y) -> Vec:
        return bilinear_eval(self.c, x, y, self.n)

    def triple(self, x, y, z) -> Vec:
        return trilinear_eval(self.t, x, y, z, self.n)

    @cached_property
    def _pair(self) -> tuple:
        # _pair[i][j] = coordinates of e_i * e_j
        n = self.n
        return tuple(
            tuple(tuple(self.c[k][i][j] for k in range(n)) for j in range(n))
            for i in range(n)
        )

    def basis_product(self, i: int, j: int) -> Vec:
        return self._pair[i][j]

    def basis_triple(self, i: int, j: int, k: int) -> Vec:
        return tuple(self.t[l][i][j][k] for l in range(self.n))


def _scan(name: str, tuples, residual_fn) -> ConditionCheck:
    """First-failure scan over index tuples in the given (lexicographic) order."""
    for idx in tuples:
        r = residual_fn(*idx)
        if not is_zero_vec(r):
            return ConditionCheck(name, False, tuple(idx), r)
    return ConditionCheck(name, True)


def _b2_residual(B: BolAlgebra, x, y, u, v) -> Vec:
    # [x,y,u*v] - [x,y,u]*v - u*[x,y,v] - [u,v,x*y] + (u*v)*(x*y)
    uv = B.basis_product(u, v)
    xy = B.basis_product(x, y)
    r = B.triple(x, y, uv)
    r = vec_sub(r, B.product(B.basis_triple(x, y, u), v))
    r = vec_sub(r, B.product(u, B.basis_triple(x, y, v)))
    r = vec_sub(r, B.triple(u, v, xy))
    r = vec_add(r, B.product(uv, xy))
    return r


def _b3_residual(B: BolAlgebra, x, y, u, v, w) -> Vec:
    # [x,y,[u,v,w]] - [[x,y,u],v,w] - [u,[x,y,v],w] - [u,v,[x,y,w]]
    r = B.triple(x, y, B.basis_triple(u, v, w))
    r = vec_sub(r, B.triple(B.basis_triple(x, y, u), v, w))
    r = vec_sub(r, B.triple(u, B.basis_triple(x, y, v), w))
    r = vec_sub(r, B.triple(u, v, B.basis_triple(x, y, w)))
    return r


def verify_bol(B: BolAlgebra) -> AxiomReport:
    """Check B01, B02 tensor-wise and B1/B2/B3 on all basis tuples.

    Every axiom is multilinear, so exhaustive basis evaluation decides it.
    Failure is data, not an error: each condition records its first failing
    tuple and the exact residual.
    """
    n = B.n
    rng = range(n)
    checks = [
        _scan("B01", itertools.product(rng, repeat=2),
              lambda i, j: vec_add(B.basis_product(i, j), B.basis_product(j, i))),
        _scan("B02", itertools.product(rng, repeat=3),
              lambda i, j, k: vec_add(B.basis_triple(i, j, k), B.basis_triple(j, i, k))),
        _scan("B1", itertools.product(rng, repeat=3),
              lambda i, j, k: vec_add(B.basis_triple(i, j, k),
                                      B.basis_triple(j, k, i),
                                      B.basis_triple(k, i, j))),
        _scan("B2", itertools.product(rng, repeat=4),
              lambda x, y, u, v: _b2_residual(B, x, y, u, v)),
        _scan("B3", itertools.product(rng, repeat=5),
              lambda x, y, u, v, w: _b3_residual(B, x, y, u, v, w)),
    ]
    return AxiomReport(tuple(checks))


def _maltsev_residual(M: MaltsevAlgebra, x, y, z) -> Vec:
    # Sagle's identity: (x*y)*(x*z) = ((x*y)*z)*x + ((y*z)*x)*x + ((z*x)*x)*y
    p = M.product
    xy = p(x, y)
    xz = p(x, z)
    r = p(xy, xz)
    r = vec_sub(r, p(p(xy, z), x))
    r = vec_sub(r, p(p(p(y, z), x), x))
    r = vec_sub(r, p(p(p(z, x), x), y))
    return r


def verify_maltsev(M: MaltsevAlgebra) -> AxiomReport:
    """Check anticommutativity and the Maltsev identity.

    The identity is quadratic in the repeated slot x and linear in y, z;
    over Q it therefore vanishes identically iff it vanishes for x in
    {e_i} and {e_i + e_j : i < j} with y, z over the basis (polarization).
    """
    n = M.n
    rng = range(n)
    anti = _scan("anticommutativity", itertools.product(rng, repeat=2),
                 lambda i, j: vec_add(M.product(i, j), M.product(j, i)))

    def x_values():
        for i in rng:
            yield (i,), i
        for i in rng:
            for j in range(i + 1, n):
                xv = tuple(
                    _ONE if k in (i, j) else _ZERO for k in range(n)
                )
                yield (i, j), xv

    identity = ConditionCheck("maltsev-identity", True)
    done = False
    for x_spec, x in x_values():
        if done:
            break
        for y, z in itertools.product(rng, repeat=2):
            r = _maltsev_residual(M, x, y, z)
            if not is_zero_vec(r):
                identity = ConditionCheck("maltsev-identity", False, (x_spec, y, z), r)
                done = True
                break
    return AxiomReport((anti, identity))


def maltsev_to_bol(M: MaltsevAlgebra) -> BolAlgebra:
    """Bol algebra associated with a Maltsev algebra.

    Ternary product [x,y,z] = (1/3)(x*(y*z) - y*(x*z) + 2(x*y)*z), same
    binary product.  The input must pass verify_maltsev; otherwise the
    offending axiom report is raised.
    """
    report = verify_maltsev(M)
    if not report.passed:
        raise VerificationError("input is not a Maltsev algebra", report)
    n = M.n
    third = Fraction(1, 3)
    t = [[[[_ZERO] * n for _ in range(n)] for _ in range(n)] for _ in range(n)]
    for i, j, k in itertools.product(range(n), repeat=3):
        val = M.product(i, M.product(j, k))
        val = vec_sub(val, M.product(j, M.product(i, k)))
        val = vec_add(val, vec_scale(Fraction(2), M.product(M.product(i, j), k)))
        for l in range(n):
            t[l][i][j][k] = third * val[l]
    return BolAlgebra(n, M.c, _freeze4(t), M.basis_names)
