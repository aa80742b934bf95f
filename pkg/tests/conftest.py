"""Shared fixtures: the worked examples and a reproducible random corpus."""

import random
from fractions import Fraction as F
from pathlib import Path

import pytest

from bolalg.algebra import BolAlgebra, MaltsevAlgebra
from bolalg.linalg import Mat, inverse
from bolalg.representation import (
    Representation,
    adjoint_representation,
    induce_from_maltsev,
    verify_representation,
)

DATA = Path(__file__).resolve().parent.parent / "data"


def make_b2(lam) -> BolAlgebra:
    """Two-dimensional algebra: e0*e1 = -e1, [e0,e1,e0] = lam*e1."""
    return BolAlgebra.from_entries(
        2,
        binary=[((0, 1), {1: F(-1)})],
        ternary=[((0, 1, 0), {1: F(lam)})],
    )


def make_maltsev_dim4() -> MaltsevAlgebra:
    """The 4-dim Maltsev algebra: e0e1=-e1, e0e2=-e2, e0e3=e3, e1e2=2e3."""
    return MaltsevAlgebra.from_entries(4, binary=[
        ((0, 1), {1: F(-1)}),
        ((0, 2), {2: F(-1)}),
        ((0, 3), {3: F(1)}),
        ((1, 2), {3: F(2)}),
    ])


def make_m0() -> MaltsevAlgebra:
    """The subalgebra spanned by the first two basis vectors above."""
    return MaltsevAlgebra.from_entries(2, binary=[((0, 1), {1: F(-1)})])


def make_so3() -> MaltsevAlgebra:
    """so(3)-type constants: e0e1=e2, e1e2=e0, e2e0=e1."""
    return MaltsevAlgebra.from_entries(3, binary=[
        ((0, 1), {2: F(1)}),
        ((1, 2), {0: F(1)}),
        ((0, 2), {1: F(-1)}),
    ])


def m0_action() -> tuple[Mat, Mat]:
    """Action of the subalgebra on the complementary ideal V = span{e2,e3}."""
    M4 = make_maltsev_dim4()
    mats = []
    for i in range(2):
        cols = []
        for a in range(2, 4):
            prod = M4.product(i, a)
            assert prod[0] == 0 == prod[1]
            cols.append([prod[2], prod[3]])
        mats.append(Mat.from_cols(cols, rows=2))
    return tuple(mats)


def make_ex28_representation() -> Representation:
    return induce_from_maltsev(make_m0(), m0_action())


@pytest.fixture(scope="session")
def b2_1():
    return make_b2(1)


@pytest.fixture(scope="session")
def b2_m1():
    return make_b2(-1)


@pytest.fixture(scope="session")
def adj_1(b2_1):
    return adjoint_representation(b2_1)


@pytest.fixture(scope="session")
def adj_m1(b2_m1):
    return adjoint_representation(b2_m1)


@pytest.fixture(scope="session")
def ex28_rep():
    return make_ex28_representation()


# ---------------------------------------------------------------------------
# random corpus helpers


def random_fraction(rng: random.Random, span: int = 3) -> F:
    return F(rng.randint(-span, span), rng.choice([1, 1, 1, 2, 3]))


def random_invertible(rng: random.Random, m: int) -> Mat:
    while True:
        mat = Mat.from_rows([
            [random_fraction(rng) for _ in range(m)] for _ in range(m)
        ])
        try:
            inverse(mat)
            return mat
        except ValueError:
            continue


def conjugate_representation(R: Representation, T: Mat) -> Representation:
    """Change of basis on V: all three maps become T (.) T^{-1}."""
    Tinv = inverse(T)
    conj = lambda mat: T @ mat @ Tinv
    n = R.base.n
    return Representation(
        R.base, R.m,
        tuple(conj(R.rho[i]) for i in range(n)),
        tuple(tuple(conj(R.D[i][j]) for j in range(n)) for i in range(n)),
        tuple(tuple(conj(R.theta[i][j]) for j in range(n)) for i in range(n)),
    )


def direct_sum_representations(R1: Representation, R2: Representation
                               ) -> Representation:
    """Block-diagonal sum of two representations over the same base."""
    assert R1.base == R2.base
    m1, m2 = R1.m, R2.m
    m = m1 + m2

    def block(a: Mat, b: Mat) -> Mat:
        rows = []
        for r in range(m1):
            rows.append(list(a.row(r)) + [F(0)] * m2)
        for r in range(m2):
            rows.append([F(0)] * m1 + list(b.row(r)))
        return Mat.from_rows(rows)

    n = R1.base.n
    return Representation(
        R1.base, m,
        tuple(block(R1.rho[i], R2.rho[i]) for i in range(n)),
        tuple(tuple(block(R1.D[i][j], R2.D[i][j]) for j in range(n))
              for i in range(n)),
        tuple(tuple(block(R1.theta[i][j], R2.theta[i][j]) for j in range(n))
              for i in range(n)),
    )


def random_representation_corpus(seed: int = 20240817, count: int = 10
                                 ) -> list[Representation]:
    """Verified representations assembled from conjugates, sums, and zeros.

    Construction guarantees validity (conjugation and direct sums preserve
    every representation condition); each element is re-verified anyway.
    """
    rng = random.Random(seed)
    adj1 = adjoint_representation(make_b2(1))
    adj_m1 = adjoint_representation(make_b2(-1))
    ex28 = make_ex28_representation()
    # ternary-only (Lie-triple-system) base: vanishing binary product
    lts = BolAlgebra.from_entries(
        3, binary=[], ternary=[((0, 1, 0), {1: F(2)})])

    corpus = [
        conjugate_representation(adj1, random_invertible(rng, 2)),
        conjugate_representation(adj1, random_invertible(rng, 2)),
        conjugate_representation(ex28, random_invertible(rng, 2)),
        conjugate_representation(adj_m1, random_invertible(rng, 2)),
        Representation.zero(make_b2(F(5, 3)), rng.randint(1, 3)),
        Representation.zero(BolAlgebra.zero(3), 2),
        Representation.zero(lts, 1),
        direct_sum_representations(
            adj_m1, Representation.zero(make_b2(-1), 1)),
        direct_sum_representations(
            ex28, conjugate_representation(ex28, random_invertible(rng, 2))),
        conjugate_representation(
            direct_sum_representations(adj1, adj1), random_invertible(rng, 4)),
    ]
    corpus = corpus[:count]
    from bolalg.algebra import verify_bol

    for rep in corpus:
        assert verify_bol(rep.base).passed
        assert verify_representation(rep).passed
    return corpus
