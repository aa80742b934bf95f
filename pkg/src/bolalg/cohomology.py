"""(2,3)-cochains, cocycles, companion-carrying coboundaries, cohomology.

A cochain pair is an antisymmetric bilinear map nu: B x B -> V together
with a trilinear map omega: B x B x B -> V antisymmetric in its first two
slots.  The pair is a cocycle when

  (CC1)  cyclic sum of omega(x1,x2,x3) over x1,x2,x3 vanishes
  (CC2)  omega(x1,x2,y1*y2) + D(x1,x2) nu(y1,y2)
           = omega(y1,y2,x1*x2) + D(y1,y2) nu(x1,x2)
           + nu([x1,x2,y1],y2) + nu(y1,[x1,x2,y2])
           + rho(y1) omega(x1,x2,y2) - rho(y2) omega(x1,x2,y1)
           + rho(x1*x2) nu(y1,y2) - rho(y1*y2) nu(x1,x2)
           - nu(y1*y2, x1*x2)
  (CC3)  omega(x1,x2,[y1,y2,y3]) + D(x1,x2) omega(y1,y2,y3)
           = omega([x1,x2,y1],y2,y3) + omega(y1,[x1,x2,y2],y3)
           + omega(y1,y2,[x1,x2,y3]) + D(y1,y2) omega(x1,x2,y3)
           + theta(y2,y3) omega(x1,x2,y1) - theta(y1,y3) omega(x1,x2,y2)

and a coboundary when it arises from a pair (f, chi) via the equations of
``representation.coboundary_tensors``.  CC2 couples nu and omega, so the
cocycle space Z and the coboundary space B live inside the single coupled
coefficient space C^2 (+) C^3; dimensions and bases below always refer to
that coupled space, with the nu/omega split kept only for display.

Coordinates on the cochain space are fixed once and for all: all
nu[a][i][j] with i<j in lexicographic (i,j) order, module coordinate a
innermost, then all omega[a][i][j][k] with i<j in lexicographic (i,j,k)
order, a innermost.  Every basis this module returns is expressed in those
coordinates through the canonical reduced-row-echelon parametrizations of
``linalg``, so identical inputs give identical bases.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .algebra import BolAlgebra, CheckReport, ConditionCheck
from .linalg import Mat, Vec, is_zero_vec, kernel_basis, rref, solve, vec_add, vec_sub
from .representation import (
    PseudoderivationData,
    Representation,
    coboundary_tensors,
    pack_params,
    pseudoderivation_params,
    unpack_params,
)

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class CochainPair:
    """Coefficient tensors nu[a][i][j], omega[a][i][j][k] of a (2,3)-cochain."""

    base: BolAlgebra
    m: int
    nu: tuple
    omega: tuple

    def __post_init__(self):
        n, m = self.base.n, self.m
        if len(self.nu) != m or len(self.omega) != m:
            raise ValueError("cochain tensors must have one plane per module coordinate")
        for plane in self.nu:
            if len(plane) != n or any(len(row) != n for row in plane):
                raise ValueError("nu tensor must be m x n x n")
        for cube in self.omega:
            if len(cube) != n or any(
                len(plane) != n or any(len(row) != n for row in plane)
                for plane in cube
            ):
                raise ValueError("omega tensor must be m x n x n x n")
        for a in range(m):
            for i in range(n):
                for j in range(n):
                    if self.nu[a][i][j] != -self.nu[a][j][i]:
                        raise ValueError(
                            f"nu is not antisymmetric at a={a}, (i,j)=({i},{j})")
                    for k in range(n):
                        if self.omega[a][i][j][k] != -self.omega[a][j][i][k]:
                            raise ValueError(
                                "omega is not antisymmetric in its first two slots "
                                f"at a={a}, (i,j,k)=({i},{j},{k})")

    @property
    def n(self) -> int:
        return self.base.n

    @classmethod
    def zero(cls, base: BolAlgebra, m: int) -> "CochainPair":
        n = base.n
        nu = tuple(tuple((_ZERO,) * n for _ in range(n)) for _ in range(m))
        omega = tuple(
            tuple(tuple((_ZERO,) * n for _ in range(n)) for _ in range(n))
            for _ in range(m)
        )
        return cls(base, m, nu, omega)

    @classmethod
    def from_entries(cls, base: BolAlgebra, m: int, nu_entries, omega_entries
                     ) -> "CochainPair":
        """Build from sparse i<j entries {(i,j): {a: coeff}} / {(i,j,k): {a: coeff}}."""
        n = base.n
        nu = [[[_ZERO] * n for _ in range(n)] for _ in range(m)]
        seen = set()
        for (i, j), coeffs in nu_entries:
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"nu entry args ({i},{j}) out of range")
            if i == j:
                raise ValueError(f"diagonal nu entry ({i},{j})")
            if i > j:
                raise ValueError(f"nu entry args ({i},{j}) must satisfy i<j")
            if (i, j) in seen:
                raise ValueError(f"duplicate nu entry ({i},{j})")
            seen.add((i, j))
            for a, val in coeffs.items():
                if not 0 <= a < m:
                    raise ValueError(f"nu entry ({i},{j}): coordinate {a} out of range")
                val = Fraction(val)
                nu[a][i][j] = val
                nu[a][j][i] = -val
        omega = [[[[_ZERO] * n for _ in range(n)] for _ in range(n)] for _ in range(m)]
        seen = set()
        for (i, j, k), coeffs in omega_entries:
            if not (0 <= i < n and 0 <= j < n and 0 <= k < n):
                raise ValueError(f"omega entry args ({i},{j},{k}) out of range")
            if i == j:
                raise ValueError(f"diagonal omega entry ({i},{j},{k})")
            if i > j:
                raise ValueError(f"omega entry args ({i},{j},{k}) must satisfy i<j")
            if (i, j, k) in seen:
                raise ValueError(f"duplicate omega entry ({i},{j},{k})")
            seen.add((i, j, k))
            for a, val in coeffs.items():
                if not 0 <= a < m:
                    raise ValueError(
                        f"omega entry ({i},{j},{k}): coordinate {a} out of range")
                val = Fraction(val)
                omega[a][i][j][k] = val
                omega[a][j][i][k] = -val

        def freeze(x):
            return tuple(freeze(y) for y in x) if isinstance(x, list) else x

        return cls(base, m, freeze(nu), freeze(omega))

    # -- multilinear evaluation; slots take a basis index or a Vec over B --

    def nu_val(self, x, y) -> Vec:
        out = [_ZERO] * self.m
        for i, s in _slot(x):
            for j, u in _slot(y):
                su = s * u
                for a in range(self.m):
                    v = self.nu[a][i][j]
                    if v:
                        out[a] += su * v
        return tuple(out)

    def omega_val(self, x, y, z) -> Vec:
        out = [_ZERO] * self.m
        for i, s in _slot(x):
            for j, u in _slot(y):
                su = s * u
                for k, w in _slot(z):
                    suw = su * w
                    for a in range(self.m):
                        v = self.omega[a][i][j][k]
                        if v:
                            out[a] += suw * v
        return tuple(out)

    def __add__(self, other: "CochainPair") -> "CochainPair":
        self._check_compatible(other)
        return _tensor_map2(self, other, lambda a, b: a + b)

    def __sub__(self, other: "CochainPair") -> "CochainPair":
        self._check_compatible(other)
        return _tensor_map2(self, other, lambda a, b: a - b)

    def __rmul__(self, s) -> "CochainPair":
        s = Fraction(s)
        return _tensor_map1(self, lambda a: s * a)

    def is_zero(self) -> bool:
        return not any(self.coords())

    def _check_compatible(self, other: "CochainPair"):
        if self.base != other.base or self.m != other.m:
            raise ValueError("cochains live over different data")

    def coords(self) -> Vec:
        """Canonical coordinate vector (nu block then omega block)."""
        n, m = self.n, self.m
        out = []
        for i, j in _index_pairs(n):
            for a in range(m):
                out.append(self.nu[a][i][j])
        for i, j, k in _index_triples(n):
            for a in range(m):
                out.append(self.omega[a][i][j][k])
        return tuple(out)


def _slot(x):
    if isinstance(x, int):
        yield x, _ONE
    else:
        for i, s in enumerate(x):
            if s:
                yield i, s


def _tensor_map1(c: CochainPair, fn) -> CochainPair:
    nu = tuple(
        tuple(tuple(fn(x) for x in row) for row in plane) for plane in c.nu
    )
    omega = tuple(
        tuple(tuple(tuple(fn(x) for x in row) for row in plane) for plane in cube)
        for cube in c.omega
    )
    return CochainPair(c.base, c.m, nu, omega)


def _tensor_map2(c: CochainPair, d: CochainPair, fn) -> CochainPair:
    nu = tuple(
        tuple(tuple(fn(x, y) for x, y in zip(r1, r2)) for r1, r2 in zip(p1, p2))
        for p1, p2 in zip(c.nu, d.nu)
    )
    omega = tuple(
        tuple(
            tuple(tuple(fn(x, y) for x, y in zip(r1, r2)) for r1, r2 in zip(q1, q2))
            for q1, q2 in zip(c1, c2)
        )
        for c1, c2 in zip(c.omega, d.omega)
    )
    return CochainPair(c.base, c.m, nu, omega)


def _index_pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def _index_triples(n: int) -> list[tuple[int, int, int]]:
    return [(i, j, k) for i in range(n) for j in range(i + 1, n) for k in range(n)]


def cochain_dim(n: int, m: int) -> int:
    """Dimension of the coupled cochain space: n(n-1)/2 * m * (1 + n)."""
    pairs = n * (n - 1) // 2
    return pairs * m + pairs * n * m


def coords_to_cochain(base: BolAlgebra, m: int, coords: Vec) -> CochainPair:
    n = base.n
    if len(coords) != cochain_dim(n, m):
        raise ValueError("coordinate vector has wrong length")
    nu = [[[_ZERO] * n for _ in range(n)] for _ in range(m)]
    pos = 0
    for i, j in _index_pairs(n):
        for a in range(m):
            v = coords[pos]
            pos += 1
            nu[a][i][j] = v
            nu[a][j][i] = -v
    omega = [[[[_ZERO] * n for _ in range(n)] for _ in range(n)] for _ in range(m)]
    for i, j, k in _index_triples(n):
        for a in range(m):
            v = coords[pos]
            pos += 1
            omega[a][i][j][k] = v
            omega[a][j][i][k] = -v

    def freeze(x):
        return tuple(freeze(y) for y in x) if isinstance(x, list) else x

    return CochainPair(base, m, freeze(nu), freeze(omega))


# ---------------------------------------------------------------------------
# cocycle conditions


def _cc1_residual(c: CochainPair, x1, x2, x3) -> Vec:
    return vec_add(c.omega_val(x1, x2, x3),
                   c.omega_val(x2, x3, x1),
                   c.omega_val(x3, x1, x2))


def _cc2_residual(R: Representation, c: CochainPair, x1, x2, y1, y2) -> Vec:
    B = R.base
    xx = B.basis_product(x1, x2)
    yy = B.basis_product(y1, y2)
    r = c.omega_val(x1, x2, yy)
    r = vec_add(r, R.D[x1][x2].apply(c.nu_val(y1, y2)))
    r = vec_sub(r, c.omega_val(y1, y2, xx))
    r = vec_sub(r, R.D[y1][y2].apply(c.nu_val(x1, x2)))
    r = vec_sub(r, c.nu_val(B.basis_triple(x1, x2, y1), y2))
    r = vec_sub(r, c.nu_val(y1, B.basis_triple(x1, x2, y2)))
    r = vec_sub(r, R.rho[y1].apply(c.omega_val(x1, x2, y2)))
    r = vec_add(r, R.rho[y2].apply(c.omega_val(x1, x2, y1)))
    r = vec_sub(r, R.rho_of(xx).apply(c.nu_val(y1, y2)))
    r = vec_add(r, R.rho_of(yy).apply(c.nu_val(x1, x2)))
    r = vec_add(r, c.nu_val(yy, xx))
    return r


def _cc3_residual(R: Representation, c: CochainPair, x1, x2, y1, y2, y3) -> Vec:
    B = R.base
    r = c.omega_val(x1, x2, B.basis_triple(y1, y2, y3))
    r = vec_add(r, R.D[x1][x2].apply(c.omega_val(y1, y2, y3)))
    r = vec_sub(r, c.omega_val(B.basis_triple(x1, x2, y1), y2, y3))
    r = vec_sub(r, c.omega_val(y1, B.basis_triple(x1, x2, y2), y3))
    r = vec_sub(r, c.omega_val(y1, y2, B.basis_triple(x1, x2, y3)))
    r = vec_sub(r, R.D[y1][y2].apply(c.omega_val(x1, x2, y3)))
    r = vec_sub(r, R.theta[y2][y3].apply(c.omega_val(x1, x2, y1)))
    r = vec_add(r, R.theta[y1][y3].apply(c.omega_val(x1, x2, y2)))
    return r


def is_cocycle(R: Representation, c: CochainPair) -> CheckReport:
    """Check CC1/CC2/CC3 on all basis tuples; first witness per condition."""
    if c.base != R.base or c.m != R.m:
        raise ValueError("cochain does not match the representation's data")
    n = R.base.n
    rng = range(n)

    def scan(name, tuples, fn):
        for idx in tuples:
            r = fn(*idx)
            if not is_zero_vec(r):
                return ConditionCheck(name, False, tuple(idx), r)
        return ConditionCheck(name, True)

    checks = (
        scan("CC1", itertools.product(rng, repeat=3),
             lambda a, b, d: _cc1_residual(c, a, b, d)),
        scan("CC2", itertools.product(rng, repeat=4),
             lambda a, b, d, e: _cc2_residual(R, c, a, b, d, e)),
        scan("CC3", itertools.product(rng, repeat=5),
             lambda a, b, d, e, f: _cc3_residual(R, c, a, b, d, e, f)),
    )
    return CheckReport(checks)


def _cocycle_residual_vector(R: Representation, c: CochainPair) -> list[Fraction]:
    """All CC residual components, rows in the fixed deterministic order."""
    n = R.base.n
    rng = range(n)
    out: list[Fraction] = []
    for x1, x2, x3 in itertools.product(rng, repeat=3):
        out.extend(_cc1_residual(c, x1, x2, x3))
    for x1, x2, y1, y2 in itertools.product(rng, repeat=4):
        out.extend(_cc2_residual(R, c, x1, x2, y1, y2))
    for idx in itertools.product(rng, repeat=5):
        out.extend(_cc3_residual(R, c, *idx))
    return out


# ---------------------------------------------------------------------------
# coboundaries


def coboundary_of(R: Representation, p: PseudoderivationData) -> CochainPair:
    """Coboundary generated by (f, chi); chi enters only through Delta."""
    nu, omega = coboundary_tensors(R, p)
    return CochainPair(R.base, R.m, nu, omega)


def _coboundary_matrix(R: Representation) -> Mat:
    """Matrix of (f, chi) -> cochain coordinates, one column per parameter."""
    n, m = R.base.n, R.m
    nparams = pseudoderivation_params(n, m)
    cols = []
    for idx in range(nparams):
        params = tuple(_ONE if i == idx else _ZERO for i in range(nparams))
        image = coboundary_of(R, unpack_params(n, m, params))
        cols.append(image.coords())
    return Mat.from_cols(cols, rows=cochain_dim(n, m))


def solve_coboundary(R: Representation, c: CochainPair, companion: str = "free"
                     ) -> PseudoderivationData | None:
    """Find (f, chi) with coboundary_of(R, (f, chi)) = c, or None.

    companion:
      "free"         -- chi unrestricted (the coboundary predicate)
      "none"         -- chi forced to 0 (solve in f alone)
      "delta-kernel" -- chi restricted to the joint kernel of all
                        Delta(e_i, e_j)
    """
    if c.base != R.base or c.m != R.m:
        raise ValueError("cochain does not match the representation's data")
    n, m = R.base.n, R.m
    matrix = _coboundary_matrix(R)
    target = list(c.coords())

    if companion == "free":
        pass
    elif companion == "none":
        zero_rows = [
            [_ZERO] * (n * m) + list(row)
            for row in Mat.identity(m).to_rows()
        ]
        matrix = Mat.from_rows(matrix.to_rows() + zero_rows)
        target += [_ZERO] * m
    elif companion == "delta-kernel":
        extra = []
        for i in range(n):
            for j in range(n):
                delta = R.delta(i, j)
                for r in range(m):
                    extra.append([_ZERO] * (n * m) + list(delta.row(r)))
        matrix = Mat.from_rows(matrix.to_rows() + extra)
        target += [_ZERO] * (len(extra))
    else:
        raise ValueError(f"unknown companion mode {companion!r}")

    sol = solve(matrix, tuple(target))
    if sol is None:
        return None
    return unpack_params(n, m, sol)


def is_coboundary(R: Representation, c: CochainPair
                  ) -> tuple[bool, PseudoderivationData | None]:
    """Solve the inhomogeneous coboundary system; witness when solvable."""
    wit = solve_coboundary(R, c, companion="free")
    return (wit is not None), wit


# ---------------------------------------------------------------------------
# cohomology


@dataclass(frozen=True)
class CohomologyReport:
    """Dimensions and canonical bases of Z, B and H representatives."""

    n: int
    m: int
    dim_C: int
    dim_Z: int
    dim_B: int
    dim_H: int
    z_basis: tuple[CochainPair, ...]
    b_basis: tuple[CochainPair, ...]
    h_representatives: tuple[CochainPair, ...]


def cohomology(R: Representation) -> CohomologyReport:
    """Compute Z, B and H for the coupled (2,3)-cochain space.

    Z is the kernel of the assembled CC1-CC3 constraint matrix; B is the
    image of the coboundary map from (f, chi)-space; representatives of H
    are the Z-basis vectors that extend a basis of B inside Z, taken
    greedily in the canonical order.
    """
    B = R.base
    n, m = B.n, R.m
    dim_c = cochain_dim(n, m)

    # Constraint matrix, one column per cochain coordinate.  Dropping
    # repeated/zero rows changes neither the row space nor the kernel.
    columns = []
    for idx in range(dim_c):
        coords = tuple(_ONE if i == idx else _ZERO for i in range(dim_c))
        unit = coords_to_cochain(B, m, coords)
        columns.append(_cocycle_residual_vector(R, unit))
    nrows = len(columns[0]) if columns else 0
    seen = {}
    kept_rows = []
    for r in range(nrows):
        row = tuple(col[r] for col in columns)
        if any(row) and row not in seen:
            seen[row] = True
            kept_rows.append(list(row))
    constraint = (Mat.from_rows(kept_rows)
                  if kept_rows else Mat.zeros(0, dim_c))
    z_coords = kernel_basis(constraint)
    dim_z = len(z_coords)

    bmat = _coboundary_matrix(R)
    bres = rref(bmat.transpose())
    b_coords = [bres.reduced.row(r) for r in range(bres.rank)]
    dim_b = len(b_coords)

    # Companion parameters that change nothing are exactly the
    # pseudoderivations, so rank + kernel = parameter count.
    nparams = pseudoderivation_params(n, m)
    if dim_b + len(kernel_basis(bmat)) != nparams:
        raise AssertionError("coboundary rank/nullity bookkeeping is wrong")

    # Greedy extension of B to a basis of Z; the added vectors represent H.
    stack = [list(r) for r in b_coords]
    rank = dim_b
    reps = []
    for z in z_coords:
        trial = stack + [list(z)]
        trial_rank = rref(Mat.from_rows(trial)).rank if trial else 0
        if trial_rank > rank:
            stack = trial
            rank = trial_rank
            reps.append(z)
    if len(reps) != dim_z - dim_b:
        raise AssertionError(
            "coboundaries do not sit inside the cocycle space; "
            "is the representation verified?")

    to_cochain = lambda v: coords_to_cochain(B, m, v)
    return CohomologyReport(
        n=n, m=m,
        dim_C=dim_c, dim_Z=dim_z, dim_B=dim_b, dim_H=dim_z - dim_b,
        z_basis=tuple(to_cochain(v) for v in z_coords),
        b_basis=tuple(to_cochain(v) for v in b_coords),
        h_representatives=tuple(to_cochain(v) for v in reps),
    )
