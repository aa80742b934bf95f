"""Abelian split extensions of a Bol algebra by a module.

An extension bundle consists of a Bol algebra hat(B) of dimension n+m,
the base algebra B of dimension n, an injection i: V -> hat(B), a
projection p: hat(B) -> B with p o i = 0, and a section sigma with
p o sigma = id.  V sits inside hat(B) as an abelian ideal: products of
two i-images vanish, and so does every ternary product with at least two
arguments from i(V).

A verified representation (rho, D, theta) and a (2,3)-cocycle (nu, omega)
produce the twisted product hat(B) = B (+) V with

  (x1+u1) * (x2+u2)        = x1*x2 + nu(x1,x2) + rho(x1)u2 - rho(x2)u1
  [x1+u1, x2+u2, x3+u3]    = [x1,x2,x3] + omega(x1,x2,x3) + D(x1,x2)u3
                             - theta(x1,x3)u2 + theta(x2,x3)u1

which is again a Bol algebra; with nu = omega = 0 this is the semidirect
product.  Conversely every extension induces, through its section,

  rho(x)u        = sigma(x) * i(u)          (pulled back along i)
  D(x1,x2)u      = [sigma x1, sigma x2, i u]
  theta(x1,x2)u  = [i u, sigma x1, sigma x2]
  nu(x1,x2)      = sigma(x1)*sigma(x2) - sigma(x1*x2)
  omega(x1,x2,x3)= [sigma x1, sigma x2, sigma x3] - sigma([x1,x2,x3])

The representation does not depend on the section; the cocycle moves by a
zero-companion coboundary when the section moves.

Two extensions over identical induced representations are equivalent --
there is a homomorphism phi with phi o i1 = i2 and p2 o phi = p1 -- iff
the difference of their induced cocycles admits a coboundary witness with
companion zero; any such phi is forced to be (x+u) -> x + f(x) + u in
section coordinates.  When the difference is a coboundary only with a
nonzero companion that no pseudoderivation realizes, the extensions are
reported as cohomologous but without a certified equivalence map.
"""

from __future__ import annotations

import itertools
import weakref
from dataclasses import dataclass, replace
from fractions import Fraction

from .algebra import (
    BolAlgebra,
    CheckReport,
    ConditionCheck,
    VerificationError,
    verify_bol,
)
from .cohomology import CochainPair, coboundary_of, is_cocycle, solve_coboundary
from .linalg import Mat, Vec, hstack, image_rank, inverse, is_zero_vec
from .representation import Representation, verify_representation

_ZERO = Fraction(0)
_ONE = Fraction(1)


class InvalidExtensionError(ValueError):
    def __init__(self, message: str, report: CheckReport | None = None):
        super().__init__(message)
        self.report = report


@dataclass(frozen=True)
class AbelianExtension:
    base: BolAlgebra
    m: int
    hat: BolAlgebra
    i: Mat      # (n+m) x m
    p: Mat      # n x (n+m)
    sigma: Mat  # (n+m) x n

    def __post_init__(self):
        n, m, N = self.base.n, self.m, self.hat.n
        if N != n + m:
            raise InvalidExtensionError(
                f"hat dimension {N} != base {n} + fiber {m}")
        if self.i.shape != (N, m):
            raise InvalidExtensionError(f"injection must be {N}x{m}, got {self.i.shape}")
        if self.p.shape != (n, N):
            raise InvalidExtensionError(f"projection must be {n}x{N}, got {self.p.shape}")
        if self.sigma.shape != (N, n):
            raise InvalidExtensionError(f"section must be {N}x{n}, got {self.sigma.shape}")


def validate_extension(E: AbelianExtension) -> CheckReport:
    """Check all extension invariants; failure is data with a witness."""
    base, hat, m = E.base, E.hat, E.m
    n, N = base.n, hat.n
    checks: list[ConditionCheck] = []

    base_rep = verify_bol(base)
    fb = base_rep.first_failure()
    checks.append(ConditionCheck(
        "base-axioms", base_rep.passed,
        None if fb is None else (fb.name,) + fb.witness,
        None if fb is None else fb.residual))
    hat_rep = verify_bol(hat)
    fh = hat_rep.first_failure()
    checks.append(ConditionCheck(
        "hat-axioms", hat_rep.passed,
        None if fh is None else (fh.name,) + fh.witness,
        None if fh is None else fh.residual))

    pi = E.p @ E.i
    exact = pi.is_zero() and image_rank(E.i) == m and image_rank(E.p) == n
    checks.append(ConditionCheck("exactness", exact,
                                 None, None if exact else pi.entries))

    section_res = E.p @ E.sigma - Mat.identity(n)
    checks.append(ConditionCheck("section", section_res.is_zero(),
                                 None,
                                 None if section_res.is_zero() else section_res.entries))

    # i is a homomorphism from V with trivial operations: all products of
    # i-images must vanish in hat(B).
    i_cols = [E.i.col(a) for a in range(m)]
    ih: ConditionCheck | None = None
    for a, b in itertools.product(range(m), repeat=2):
        r = hat.product(i_cols[a], i_cols[b])
        if not is_zero_vec(r):
            ih = ConditionCheck("i-homomorphism", False, ("binary", a, b), r)
            break
    if ih is None:
        for a, b, c in itertools.product(range(m), repeat=3):
            r = hat.triple(i_cols[a], i_cols[b], i_cols[c])
            if not is_zero_vec(r):
                ih = ConditionCheck("i-homomorphism", False, ("ternary", a, b, c), r)
                break
    checks.append(ih or ConditionCheck("i-homomorphism", True))

    ph: ConditionCheck | None = None
    p_cols = [E.p.col(x) for x in range(N)]
    for x, y in itertools.product(range(N), repeat=2):
        r = tuple(u - v for u, v in zip(E.p.apply(hat.basis_product(x, y)),
                                        base.product(p_cols[x], p_cols[y])))
        if not is_zero_vec(r):
            ph = ConditionCheck("p-homomorphism", False, ("binary", x, y), r)
            break
    if ph is None:
        for x, y, z in itertools.product(range(N), repeat=3):
            r = tuple(u - v for u, v in zip(
                E.p.apply(hat.basis_triple(x, y, z)),
                base.triple(p_cols[x], p_cols[y], p_cols[z])))
            if not is_zero_vec(r):
                ph = ConditionCheck("p-homomorphism", False, ("ternary", x, y, z), r)
                break
    checks.append(ph or ConditionCheck("p-homomorphism", True))

    # abelian ideal: ternary products with two i-arguments vanish for any
    # third hat argument (the pure binary case sits in i-homomorphism).
    ab: ConditionCheck | None = None
    for a, b in itertools.product(range(m), repeat=2):
        if ab is not None:
            break
        u, v = i_cols[a], i_cols[b]
        for w in range(N):
            for name, r in (("[i,i,.]", hat.triple(u, v, w)),
                            ("[i,.,i]", hat.triple(u, w, v)),
                            ("[.,i,i]", hat.triple(w, u, v))):
                if not is_zero_vec(r):
                    ab = ConditionCheck("abelian-ideal", False, (name, a, b, w), r)
                    break
            if ab is not None:
                break
    checks.append(ab or ConditionCheck("abelian-ideal", True))

    return CheckReport(tuple(checks))


# validation of immutable bundles is idempotent; remember the survivors
_validated: "weakref.WeakSet[AbelianExtension]" = weakref.WeakSet()


def _require_valid(E: AbelianExtension) -> None:
    if E in _validated:
        return
    report = validate_extension(E)
    if not report.passed:
        raise InvalidExtensionError(
            f"invalid extension: {report.first_failure().name} fails", report)
    _validated.add(E)


def twisted_product(R: Representation, c: CochainPair) -> AbelianExtension:
    """The extension B (+)_(nu,omega) V with its canonical maps.

    Preconditions enforced: the representation verifies and the pair is a
    cocycle (rejected with the failing condition's witness otherwise).
    """
    rep_report = verify_representation(R)
    if not rep_report.passed:
        raise VerificationError("twisted product needs a verified representation",
                                rep_report)
    cc = is_cocycle(R, c)
    if not cc.passed:
        raise VerificationError("twisted product needs a cocycle", cc)

    B = R.base
    n, m = B.n, R.m
    N = n + m

    cgrid = [[[_ZERO] * N for _ in range(N)] for _ in range(N)]
    for i, j in itertools.product(range(n), repeat=2):
        prod = B.basis_product(i, j)
        for k in range(n):
            cgrid[k][i][j] = prod[k]
        for a in range(m):
            cgrid[n + a][i][j] = c.nu[a][i][j]
    for i in range(n):
        for b in range(m):
            col = R.rho[i].col(b)
            for a in range(m):
                cgrid[n + a][i][n + b] = col[a]
                cgrid[n + a][n + b][i] = -col[a]

    tgrid = [[[[_ZERO] * N for _ in range(N)] for _ in range(N)] for _ in range(N)]
    for i, j, k in itertools.product(range(n), repeat=3):
        trip = B.basis_triple(i, j, k)
        for l in range(n):
            tgrid[l][i][j][k] = trip[l]
        for a in range(m):
            tgrid[n + a][i][j][k] = c.omega[a][i][j][k]
    for i, j in itertools.product(range(n), repeat=2):
        dcol = R.D[i][j]
        tcol = R.theta[i][j]
        for b in range(m):
            dvals = dcol.col(b)
            tvals = tcol.col(b)
            for a in range(m):
                tgrid[n + a][i][j][n + b] = dvals[a]        # D(x1,x2)(u3)
                tgrid[n + a][i][n + b][j] = -tvals[a]       # -theta(x1,x3)(u2)
                tgrid[n + a][n + b][i][j] = tvals[a]        # +theta(x2,x3)(u1)

    def freeze(x):
        return tuple(freeze(y) for y in x) if isinstance(x, list) else x

    hat = BolAlgebra(N, freeze(cgrid), freeze(tgrid))
    inj = Mat.from_rows([[_ONE if (r - n) == a else _ZERO for a in range(m)]
                         for r in range(N)])
    proj = Mat.from_rows([[_ONE if r == x else _ZERO for x in range(N)]
                          for r in range(n)])
    sect = Mat.from_rows([[_ONE if r == x else _ZERO for x in range(n)]
                          for r in range(N)])
    return AbelianExtension(B, m, hat, inj, proj, sect)


def _splitting(E: AbelianExtension) -> Mat:
    """Inverse of [sigma | i]: rows give (base, fiber) coordinates in hat(B)."""
    T = hstack(E.sigma, E.i)
    try:
        return inverse(T)
    except ValueError as exc:
        raise InvalidExtensionError("section and injection do not split hat(B)") from exc


def _fiber_coords(Tinv: Mat, w: Vec, n: int, m: int, what: str) -> Vec:
    coords = Tinv.apply(w)
    if any(coords[:n]):
        raise InvalidExtensionError(
            f"{what} does not land in the fiber; extension data is inconsistent")
    return coords[n:]


def induced_representation(E: AbelianExtension) -> Representation:
    """(rho, D, theta) read off hat(B) through the section."""
    _require_valid(E)
    base, hat, m = E.base, E.hat, E.m
    n = base.n
    Tinv = _splitting(E)
    s_cols = [E.sigma.col(x) for x in range(n)]
    i_cols = [E.i.col(a) for a in range(m)]

    rho = tuple(
        Mat.from_cols([
            _fiber_coords(Tinv, hat.product(s_cols[x], i_cols[a]), n, m, "rho image")
            for a in range(m)
        ], rows=m)
        for x in range(n)
    )
    D = tuple(
        tuple(
            Mat.from_cols([
                _fiber_coords(Tinv, hat.triple(s_cols[x], s_cols[y], i_cols[a]),
                              n, m, "D image")
                for a in range(m)
            ], rows=m)
            for y in range(n)
        )
        for x in range(n)
    )
    theta = tuple(
        tuple(
            Mat.from_cols([
                _fiber_coords(Tinv, hat.triple(i_cols[a], s_cols[x], s_cols[y]),
                              n, m, "theta image")
                for a in range(m)
            ], rows=m)
            for y in range(n)
        )
        for x in range(n)
    )
    return Representation(base, m, rho, D, theta)


def induced_cocycle(E: AbelianExtension) -> CochainPair:
    """(nu, omega) read off hat(B) through the section."""
    _require_valid(E)
    base, hat, m = E.base, E.hat, E.m
    n = base.n
    Tinv = _splitting(E)
    s_cols = [E.sigma.col(x) for x in range(n)]

    nu = [[[_ZERO] * n for _ in range(n)] for _ in range(m)]
    for x, y in itertools.product(range(n), repeat=2):
        w = hat.product(s_cols[x], s_cols[y])
        w = tuple(a - b for a, b in zip(w, E.sigma.apply(base.basis_product(x, y))))
        coords = _fiber_coords(Tinv, w, n, m, "nu value")
        for a in range(m):
            nu[a][x][y] = coords[a]
    omega = [[[[_ZERO] * n for _ in range(n)] for _ in range(n)] for _ in range(m)]
    for x, y, z in itertools.product(range(n), repeat=3):
        w = hat.triple(s_cols[x], s_cols[y], s_cols[z])
        w = tuple(a - b for a, b in zip(w, E.sigma.apply(base.basis_triple(x, y, z))))
        coords = _fiber_coords(Tinv, w, n, m, "omega value")
        for a in range(m):
            omega[a][x][y][z] = coords[a]

    def freeze(x):
        return tuple(freeze(y) for y in x) if isinstance(x, list) else x

    return CochainPair(base, m, freeze(nu), freeze(omega))


@dataclass(frozen=True)
class ExtensionEquivalence:
    """Result of the equivalence test.

    status is one of:
      "equivalent"               -- phi constructed and verified
      "different-representation" -- induced representations disagree
      "not-cohomologous"         -- cocycle difference is no coboundary
      "cohomologous-uncertified" -- coboundary only with a companion that
                                    no pseudoderivation can absorb, so no
                                    equivalence map of the required shape
                                    exists
    """

    status: str
    cohomologous: bool
    phi: Mat | None

    @property
    def equivalent(self) -> bool:
        return self.status == "equivalent"


def _check_phi(E1: AbelianExtension, E2: AbelianExtension, phi: Mat) -> None:
    """phi must be a hat homomorphism commuting with both short sequences."""
    hat1, hat2 = E1.hat, E2.hat
    N = hat1.n
    cols = [phi.col(x) for x in range(N)]
    for x, y in itertools.product(range(N), repeat=2):
        lhs = phi.apply(hat1.basis_product(x, y))
        rhs = hat2.product(cols[x], cols[y])
        if lhs != rhs:
            raise AssertionError("constructed phi fails the binary homomorphism law")
    for x, y, z in itertools.product(range(N), repeat=3):
        lhs = phi.apply(hat1.basis_triple(x, y, z))
        rhs = hat2.triple(cols[x], cols[y], cols[z])
        if lhs != rhs:
            raise AssertionError("constructed phi fails the ternary homomorphism law")
    if phi @ E1.i != E2.i:
        raise AssertionError("constructed phi does not commute with the injections")
    if E2.p @ phi != E1.p:
        raise AssertionError("constructed phi does not commute with the projections")


def extensions_equivalent(E1: AbelianExtension, E2: AbelianExtension
                          ) -> ExtensionEquivalence:
    """Decide equivalence of two extensions of the same B by the same V.

    Both are normalized to twisted-product form through their sections;
    unequal induced representations settle the question immediately.
    Otherwise the difference of induced cocycles is tested: a witness with
    zero companion yields phi(x+u) = x + f(x) + u transported back to the
    original bases and verified on the nose.
    """
    if E1.base != E2.base:
        raise ValueError("extensions have different base algebras")
    if E1.m != E2.m:
        raise ValueError("extensions have different fiber dimensions")
    _require_valid(E1)
    _require_valid(E2)

    R1 = induced_representation(E1)
    R2 = induced_representation(E2)
    if R1 != R2:
        return ExtensionEquivalence("different-representation", False, None)

    c1 = induced_cocycle(E1)
    c2 = induced_cocycle(E2)
    diff = c1 - c2

    free_wit = solve_coboundary(R1, diff, companion="free")
    if free_wit is None:
        return ExtensionEquivalence("not-cohomologous", False, None)

    zero_wit = solve_coboundary(R1, diff, companion="none")
    if zero_wit is None:
        return ExtensionEquivalence("cohomologous-uncertified", True, None)

    n, m = E1.base.n, E1.m
    N = n + m
    ftilde = zero_wit.f
    phi_tw_rows = []
    for r in range(N):
        if r < n:
            row = [_ONE if x == r else _ZERO for x in range(n)] + [_ZERO] * m
        else:
            row = list(ftilde.row(r - n)) + [
                _ONE if a == r - n else _ZERO for a in range(m)]
        phi_tw_rows.append(row)
    phi_tw = Mat.from_rows(phi_tw_rows)
    phi = hstack(E2.sigma, E2.i) @ phi_tw @ _splitting(E1)
    _check_phi(E1, E2, phi)
    return ExtensionEquivalence("equivalent", True, phi)


def perturb_section(E: AbelianExtension, g: Mat) -> AbelianExtension:
    """Replace sigma by sigma + i o g for a linear map g: B -> V (m x n)."""
    if g.shape != (E.m, E.base.n):
        raise ValueError(f"section perturbation must be {E.m}x{E.base.n}")
    return replace(E, sigma=E.sigma + E.i @ g)


def semidirect_product(R: Representation) -> AbelianExtension:
    """Twisted product along the zero cocycle."""
    return twisted_product(R, CochainPair.zero(R.base, R.m))
