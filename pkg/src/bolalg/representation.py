"""Representations (rho, D, theta) of a Bol algebra on a module V.

A representation is a linear map rho: B -> End(V) together with bilinear
maps D, theta: B x B -> End(V) satisfying six conditions:

  (R1)  D(x1,x2) + theta(x1,x2) - theta(x2,x1) = 0
  (R21) [D(x1,x2), rho(y1)] = rho([x1,x2,y1]) - theta(y1, x1*x2)
                              + rho(x1*x2) rho(y1)
  (R22) theta(x1, y1*y2) = rho(y1) theta(x1,y2) - rho(y2) theta(x1,y1)
                           - (D(y1,y2) - rho(y1*y2)) rho(x1)
  (R31) [D(x1,x2), D(y1,y2)] = D([x1,x2,y1], y2) + D(y1, [x1,x2,y2])
  (R32) [D(x1,x2), theta(y1,y2)] = theta([x1,x2,y1], y2)
                                   + theta(y1, [x1,x2,y2])
  (R33) theta(x1, [y1,y2,y3]) = theta(y2,y3) theta(x1,y1)
                                - theta(y1,y3) theta(x1,y2)
                                + D(y1,y2) theta(x1,y3)

All conditions are multilinear, so they are decided on basis tuples.  The
operator Delta(u,v) = D(u,v) - rho(u*v) satisfies the commutator identity
checked by check_delta_identity, and drives the companion term of
pseudoderivations: a linear map f: B -> V with companion chi in V is a
pseudoderivation when

  f(x1*x2)      = rho(x1) f(x2) - rho(x2) f(x1) + Delta(x1,x2)(chi)
  f([x1,x2,x3]) = theta(x2,x3) f(x1) - theta(x1,x3) f(x2) + D(x1,x2) f(x3).
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
    MaltsevAlgebra,
    VerificationError,
    maltsev_to_bol,
    verify_bol,
)
from .linalg import Mat, Vec, commutator, vec, zero_vec

_ZERO = Fraction(0)
_ONE = Fraction(1)
_THIRD = Fraction(1, 3)


@dataclass(frozen=True)
class Representation:
    """Matrices of (rho, D, theta) with respect to fixed bases of B and V."""

    base: BolAlgebra
    m: int
    rho: tuple[Mat, ...]                 # rho[i] = matrix of rho(e_i)
    D: tuple[tuple[Mat, ...], ...]       # D[i][j] = matrix of D(e_i, e_j)
    theta: tuple[tuple[Mat, ...], ...]   # theta[i][j] = matrix of theta(e_i, e_j)

    def __post_init__(self):
        n, m = self.base.n, self.m
        if len(self.rho) != n or len(self.D) != n or len(self.theta) != n:
            raise ValueError("representation grids must have one slot per basis element")
        for mat in self.rho:
            if mat.shape != (m, m):
                raise ValueError(f"rho matrix shape {mat.shape} != ({m},{m})")
        for grid in (self.D, self.theta):
            for row in grid:
                if len(row) != n:
                    raise ValueError("D/theta grids must be n x n")
                for mat in row:
                    if mat.shape != (m, m):
                        raise ValueError(f"grid matrix shape {mat.shape} != ({m},{m})")

    # -- linear/bilinear extensions; slots take a basis index or a Vec ----

    def rho_of(self, x) -> Mat:
        if isinstance(x, int):
            return self.rho[x]
        acc = Mat.zeros(self.m, self.m)
        for i, s in enumerate(x):
            if s:
                acc = acc + s * self.rho[i]
        return acc

    def _grid_of(self, grid, x, y) -> Mat:
        if isinstance(x, int) and isinstance(y, int):
            return grid[x][y]
        acc = Mat.zeros(self.m, self.m)
        for i, a in _slot(x):
            for j, b in _slot(y):
                mat = grid[i][j]
                if not mat.is_zero():
                    acc = acc + (a * b) * mat
        return acc

    def D_of(self, x, y) -> Mat:
        return self._grid_of(self.D, x, y)

    def theta_of(self, x, y) -> Mat:
        return self._grid_of(self.theta, x, y)

    def delta(self, x, y) -> Mat:
        """Delta(x,y) = D(x,y) - rho(x*y), extended bilinearly."""
        B = self.base
        if isinstance(x, int) and isinstance(y, int):
            prod = B.basis_product(x, y)
        else:
            prod = B.product(x, y)
        return self.D_of(x, y) - self.rho_of(prod)

    @classmethod
    def zero(cls, base: BolAlgebra, m: int) -> "Representation":
        z = Mat.zeros(m, m)
        n = base.n
        return cls(base, m,
                   tuple(z for _ in range(n)),
                   tuple(tuple(z for _ in range(n)) for _ in range(n)),
                   tuple(tuple(z for _ in range(n)) for _ in range(n)))


def _slot(x):
    if isinstance(x, int):
        yield x, _ONE
    else:
        for i, s in enumerate(x):
            if s:
                yield i, s


def _mat_check(name, tuples, residual_fn) -> ConditionCheck:
    """First-failure scan where residuals are matrices (flattened in reports)."""
    for idx in tuples:
        r = residual_fn(*idx)
        if not r.is_zero():
            return ConditionCheck(name, False, tuple(idx), r.entries)
    return ConditionCheck(name, True)


def verify_representation(R: Representation) -> CheckReport:
    """Check (R1)-(R33) as exact matrix identities on basis tuples."""
    B = R.base
    n = B.n
    rng = range(n)

    def r1(i, j):
        return R.D[i][j] + R.theta[i][j] - R.theta[j][i]

    def r21(x1, x2, y1):
        xx = B.basis_product(x1, x2)
        res = commutator(R.D[x1][x2], R.rho[y1])
        res = res - R.rho_of(B.basis_triple(x1, x2, y1))
        res = res + R.theta_of(y1, xx)
        res = res - R.rho_of(xx) @ R.rho[y1]
        return res

    def r22(x1, y1, y2):
        yy = B.basis_product(y1, y2)
        res = R.theta_of(x1, yy)
        res = res - R.rho[y1] @ R.theta[x1][y2]
        res = res + R.rho[y2] @ R.theta[x1][y1]
        res = res + (R.D[y1][y2] - R.rho_of(yy)) @ R.rho[x1]
        return res

    def r31(x1, x2, y1, y2):
        res = commutator(R.D[x1][x2], R.D[y1][y2])
        res = res - R.D_of(B.basis_triple(x1, x2, y1), y2)
        res = res - R.D_of(y1, B.basis_triple(x1, x2, y2))
        return res

    def r32(x1, x2, y1, y2):
        res = commutator(R.D[x1][x2], R.theta[y1][y2])
        res = res - R.theta_of(B.basis_triple(x1, x2, y1), y2)
        res = res - R.theta_of(y1, B.basis_triple(x1, x2, y2))
        return res

    def r33(x1, y1, y2, y3):
        res = R.theta_of(x1, B.basis_triple(y1, y2, y3))
        res = res - R.theta[y2][y3] @ R.theta[x1][y1]
        res = res + R.theta[y1][y3] @ R.theta[x1][y2]
        res = res - R.D[y1][y2] @ R.theta[x1][y3]
        return res

    checks = (
        _mat_check("R1", itertools.product(rng, repeat=2), r1),
        _mat_check("R21", itertools.product(rng, repeat=3), r21),
        _mat_check("R22", itertools.product(rng, repeat=3), r22),
        _mat_check("R31", itertools.product(rng, repeat=4), r31),
        _mat_check("R32", itertools.product(rng, repeat=4), r32),
        _mat_check("R33", itertools.product(rng, repeat=4), r33),
    )
    return CheckReport(checks)


def adjoint_representation(B: BolAlgebra) -> Representation:
    """Adjoint module V = B: rho(u)v = u*v, D(u,v)w = [u,v,w], theta(u,v)w = [w,u,v]."""
    report = verify_bol(B)
    if not report.passed:
        raise VerificationError("adjoint representation needs a verified Bol algebra",
                                report)
    n = B.n
    rho = tuple(
        Mat.from_rows([[B.c[r][i][c] for c in range(n)] for r in range(n)])
        if n else Mat.zeros(0, 0)
        for i in range(n)
    )
    D = tuple(
        tuple(
            Mat.from_rows([[B.t[r][i][j][c] for c in range(n)] for r in range(n)])
            for j in range(n)
        )
        for i in range(n)
    )
    theta = tuple(
        tuple(
            Mat.from_rows([[B.t[r][c][i][j] for c in range(n)] for r in range(n)])
            for j in range(n)
        )
        for i in range(n)
    )
    return Representation(B, n, rho, D, theta)


def maltsev_action_report(M: MaltsevAlgebra, rho: tuple[Mat, ...]) -> CheckReport:
    """Check the Maltsev-representation condition [D1(x,y), rho(z)] = rho([x,y,z]_1).

    Here D1(x,y) = [rho(x), rho(y)] + rho(x*y) and
    [x,y,z]_1 = x*(y*z) - y*(x*z) + (x*y)*z.
    """
    n = M.n
    m = rho[0].rows if rho else 0

    def rho_of(v: Vec) -> Mat:
        acc = Mat.zeros(m, m)
        for i, s in enumerate(v):
            if s:
                acc = acc + s * rho[i]
        return acc

    def residual(x, y, z):
        d1 = commutator(rho[x], rho[y]) + rho_of(M.basis_product(x, y))
        bracket1 = M.product(x, M.basis_product(y, z))
        bracket1 = vec(a - b for a, b in zip(
            bracket1, M.product(y, M.basis_product(x, z))))
        bracket1 = vec(a + b for a, b in zip(
            bracket1, M.product(M.basis_product(x, y), z)))
        return commutator(d1, rho[z]) - rho_of(bracket1)

    check = _mat_check("maltsev-representation",
                       itertools.product(range(n), repeat=3), residual)
    return CheckReport((check,))


def maltsev_action_jordan_report(M: MaltsevAlgebra, rho: tuple[Mat, ...]) -> CheckReport:
    """Equivalent Maltsev-representation condition in Jordan-product form:

    rho(x*(y*z)) - rho(z){rho(x),rho(y)} + rho(y){rho(x),rho(z)}
      = {rho(x), rho(y*z)} - rho(z) rho(x*y) + rho(y) rho(x*z),

    with {a,b} = ab + ba.  Provided as a cross-check of maltsev_action_report.
    """
    n = M.n
    m = rho[0].rows if rho else 0

    def rho_of(v: Vec) -> Mat:
        acc = Mat.zeros(m, m)
        for i, s in enumerate(v):
            if s:
                acc = acc + s * rho[i]
        return acc

    def jordan(a: Mat, b: Mat) -> Mat:
        return a @ b + b @ a

    def residual(x, y, z):
        res = rho_of(M.product(x, M.basis_product(y, z)))
        res = res - rho[z] @ jordan(rho[x], rho[y])
        res = res + rho[y] @ jordan(rho[x], rho[z])
        res = res - jordan(rho[x], rho_of(M.basis_product(y, z)))
        res = res + rho[z] @ rho_of(M.basis_product(x, y))
        res = res - rho[y] @ rho_of(M.basis_product(x, z))
        return res

    check = _mat_check("maltsev-representation-jordan",
                       itertools.product(range(n), repeat=3), residual)
    return CheckReport((check,))


def induce_from_maltsev(M: MaltsevAlgebra, rho: tuple[Mat, ...],
                        cross_check: bool = True) -> Representation:
    """Representation of the associated Bol algebra induced by a Maltsev action.

    With theta_2(x,y) = rho(x)rho(y) + 2 rho(y)rho(x) - rho(x*y) and
    D_2(x,y) = [rho(x), rho(y)] + 2 rho(x*y), the induced maps are
    theta = (1/3) theta_2 and D = (1/3) D_2 over maltsev_to_bol(M).

    The action must satisfy the Maltsev-representation condition; it is
    rejected with the witness triple otherwise.
    """
    rho = tuple(rho)
    n = M.n
    if len(rho) != n:
        raise ValueError(f"expected {n} action matrices, got {len(rho)}")
    m = rho[0].rows if rho else 0
    for mat in rho:
        if mat.shape != (m, m):
            raise ValueError("action matrices must share one square shape")

    report = maltsev_action_report(M, rho)
    if not report.passed:
        raise VerificationError(
            "action does not satisfy the Maltsev representation condition", report)
    if cross_check:
        jordan = maltsev_action_jordan_report(M, rho)
        if not jordan.passed:
            raise VerificationError(
                "Maltsev representation cross-check disagrees", jordan)

    base = maltsev_to_bol(M)

    def rho_of(v: Vec) -> Mat:
        acc = Mat.zeros(m, m)
        for i, s in enumerate(v):
            if s:
                acc = acc + s * rho[i]
        return acc

    D = []
    theta = []
    for i in range(n):
        drow = []
        trow = []
        for j in range(n):
            rp = rho_of(M.basis_product(i, j))
            theta2 = rho[i] @ rho[j] + Fraction(2) * (rho[j] @ rho[i]) - rp
            d2 = commutator(rho[i], rho[j]) + Fraction(2) * rp
            trow.append(_THIRD * theta2)
            drow.append(_THIRD * d2)
        D.append(tuple(drow))
        theta.append(tuple(trow))
    return Representation(base, m, rho, tuple(D), tuple(theta))


def check_delta_identity(R: Representation) -> CheckReport:
    """Verify the Delta commutator identity on all basis quadruples:

    [Delta(x1,x2), Delta(y1,y2)] = Delta([x1,x2,y1], y2)
                                   + Delta(y1, [x1,x2,y2])
                                   - Delta(y1*y2, x1*x2).
    """
    B = R.base
    rng = range(B.n)

    def residual(x1, x2, y1, y2):
        res = commutator(R.delta(x1, x2), R.delta(y1, y2))
        res = res - R.delta(B.basis_triple(x1, x2, y1), _unit(B.n, y2))
        res = res - R.delta(_unit(B.n, y1), B.basis_triple(x1, x2, y2))
        res = res + R.delta(B.basis_product(y1, y2), B.basis_product(x1, x2))
        return res

    check = _mat_check("delta-identity", itertools.product(rng, repeat=4), residual)
    return CheckReport((check,))


def _unit(n: int, i: int) -> Vec:
    return tuple(_ONE if j == i else _ZERO for j in range(n))


@dataclass(frozen=True)
class PseudoderivationData:
    """A linear map f: B -> V (m x n matrix) with companion chi in V."""

    f: Mat
    chi: Vec

    @classmethod
    def zero(cls, n: int, m: int) -> "PseudoderivationData":
        return cls(Mat.zeros(m, n), zero_vec(m))


def coboundary_tensors(R: Representation, p: PseudoderivationData):
    """Raw (nu, omega) tensors of the coboundary generated by (f, chi):

    nu(x1,x2)       = rho(x1) f(x2) - rho(x2) f(x1)
                      + Delta(x1,x2)(chi) - f(x1*x2)
    omega(x1,x2,x3) = theta(x2,x3) f(x1) - theta(x1,x3) f(x2)
                      + D(x1,x2) f(x3) - f([x1,x2,x3])

    Returned as nu[a][i][j] and omega[a][i][j][k] nested tuples.
    """
    B = R.base
    n, m = B.n, R.m
    f, chi = p.f, p.chi
    if f.shape != (m, n):
        raise ValueError(f"pseudoderivation map must be {m}x{n}, got {f.shape}")
    if len(chi) != m:
        raise ValueError(f"companion must live in the {m}-dim module")
    fcols = [f.col(j) for j in range(n)]

    def f_of(v: Vec) -> Vec:
        return f.apply(v)

    nu = [[[_ZERO] * n for _ in range(n)] for _ in range(m)]
    for i in range(n):
        for j in range(n):
            val = R.rho[i].apply(fcols[j])
            val = tuple(a - b for a, b in zip(val, R.rho[j].apply(fcols[i])))
            val = tuple(a + b for a, b in zip(val, R.delta(i, j).apply(chi)))
            val = tuple(a - b for a, b in zip(val, f_of(B.basis_product(i, j))))
            for a in range(m):
                nu[a][i][j] = val[a]

    omega = [[[[_ZERO] * n for _ in range(n)] for _ in range(n)] for _ in range(m)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                val = R.theta[j][k].apply(fcols[i])
                val = tuple(a - b for a, b in zip(val, R.theta[i][k].apply(fcols[j])))
                val = tuple(a + b for a, b in zip(val, R.D[i][j].apply(fcols[k])))
                val = tuple(a - b for a, b in zip(val, f_of(B.basis_triple(i, j, k))))
                for a in range(m):
                    omega[a][i][j][k] = val[a]

    def freeze(x):
        return tuple(freeze(y) for y in x) if isinstance(x, list) else x

    return freeze(nu), freeze(omega)


def is_pseudoderivation(R: Representation, p: PseudoderivationData) -> bool:
    """True iff (f, chi) satisfies both pseudoderivation conditions exactly."""
    nu, omega = coboundary_tensors(R, p)
    flat = [x for plane in nu for row in plane for x in row]
    flat += [x for cube in omega for plane in cube for row in plane for x in row]
    return not any(flat)


def pseudoderivation_params(n: int, m: int) -> int:
    return n * m + m


def pack_params(p: PseudoderivationData) -> Vec:
    """Flatten (f, chi) to the canonical parameter vector: f columns, then chi."""
    m, n = p.f.shape
    out = []
    for j in range(n):
        out.extend(p.f.col(j))
    out.extend(p.chi)
    return tuple(out)


def unpack_params(n: int, m: int, params: Vec) -> PseudoderivationData:
    if len(params) != n * m + m:
        raise ValueError("parameter vector has wrong length")
    cols = [params[j * m:(j + 1) * m] for j in range(n)]
    f = Mat.from_cols(cols, rows=m) if n else Mat.zeros(m, 0)
    chi = tuple(params[n * m:])
    return PseudoderivationData(f, chi)


def pseudoderivation_space(R: Representation) -> list[PseudoderivationData]:
    """Deterministic basis of all (f, chi) with vanishing coboundary.

    This is the kernel of the linear map (f, chi) -> (nu, omega); the
    parameter order is f's columns (module coordinate innermost) followed
    by chi.
    """
    from .linalg import Mat as _Mat, kernel_basis

    B = R.base
    n, m = B.n, R.m
    nparams = pseudoderivation_params(n, m)
    cols = []
    for idx in range(nparams):
        params = tuple(_ONE if i == idx else _ZERO for i in range(nparams))
        nu, omega = coboundary_tensors(R, unpack_params(n, m, params))
        col = [x for plane in nu for row in plane for x in row]
        col += [x for cube in omega for plane in cube for row in plane for x in row]
        cols.append(col)
    rows = m * n * n + m * n * n * n
    matrix = _Mat.from_cols(cols, rows=rows)
    return [unpack_params(n, m, v) for v in kernel_basis(matrix)]
