"""Text file formats (JSON syntax) for algebras, representations,
cochains, and extension bundles.

Scalars are always strings "p" or "p/q" -- never JSON numbers -- so no
generic tool can silently coerce them to floats.  Basis indices are
0-based everywhere.  Binary/ternary entries are listed only for i < j
(first two slots); the other half is filled by antisymmetry, which makes
the antisymmetry axioms unviolatable by well-formed files.

Rendering is canonical: entries sorted by argument tuple, zero
coefficients omitted, scalars in lowest terms.  parse(render(x)) == x for
every in-memory object, and render(parse(text)) is the canonical form of
the file.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .algebra import BolAlgebra, MaltsevAlgebra
from .cohomology import CochainPair
from .extension import AbelianExtension
from .linalg import Mat
from .representation import Representation

_ZERO = Fraction(0)


class ParseError(ValueError):
    """Malformed input file; message carries a JSON-path diagnostic."""

    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}" if path else message)


# ---------------------------------------------------------------------------
# scalars


def parse_scalar(text, path: str = "value") -> Fraction:
    if not isinstance(text, str):
        raise ParseError(path, f"rational must be a string, got {type(text).__name__}")
    body = text[1:] if text.startswith("-") else text
    num, sep, den = body.partition("/")
    if not num.isdigit() or (sep and not den.isdigit()):
        raise ParseError(path, f"malformed rational {text!r}")
    if sep and int(den) == 0:
        raise ParseError(path, f"zero denominator in {text!r}")
    return Fraction(text)


def render_scalar(x: Fraction) -> str:
    return str(x)


# ---------------------------------------------------------------------------
# low-level helpers


def _loads(text: str) -> dict:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError("", f"invalid JSON at line {exc.lineno}, column {exc.colno}: "
                             f"{exc.msg}") from None
    if not isinstance(obj, dict):
        raise ParseError("", "top-level value must be an object")
    return obj


def _require(obj: dict, key: str, path: str):
    if key not in obj:
        raise ParseError(path, f"missing field {key!r}")
    return obj[key]


def _int_field(obj: dict, key: str, path: str, minimum: int = 0) -> int:
    val = _require(obj, key, path)
    if not isinstance(val, int) or isinstance(val, bool) or val < minimum:
        raise ParseError(f"{path}.{key}", f"must be an integer >= {minimum}")
    return val


def _parse_value_map(obj, dim: int, path: str) -> dict[int, Fraction]:
    if not isinstance(obj, dict):
        raise ParseError(path, "value must be an object mapping index to rational")
    out = {}
    for key, raw in obj.items():
        if not (isinstance(key, str) and key.lstrip("-").isdigit()):
            raise ParseError(f"{path}.{key}", "index key must be a decimal string")
        idx = int(key)
        if not 0 <= idx < dim:
            raise ParseError(f"{path}.{key}", f"index out of range [0, {dim})")
        out[idx] = parse_scalar(raw, f"{path}.{key}")
    return out


def _parse_entries(obj: dict, key: str, arity: int, dim: int, value_dim: int,
                   required: bool) -> list:
    if key not in obj:
        if required:
            raise ParseError("", f"missing field {key!r}")
        return []
    raw = obj[key]
    if not isinstance(raw, list):
        raise ParseError(key, "must be a list of entries")
    entries = []
    for pos, entry in enumerate(raw):
        path = f"{key}[{pos}]"
        if not isinstance(entry, dict):
            raise ParseError(path, "entry must be an object")
        args = _require(entry, "args", path)
        if (not isinstance(args, list) or len(args) != arity
                or not all(isinstance(a, int) and not isinstance(a, bool)
                           for a in args)):
            raise ParseError(f"{path}.args", f"must be a list of {arity} integers")
        for a in args:
            if not 0 <= a < dim:
                raise ParseError(f"{path}.args", f"index {a} out of range [0, {dim})")
        if args[0] == args[1]:
            raise ParseError(f"{path}.args",
                             f"diagonal {'binary' if arity == 2 else 'ternary'} entry "
                             f"{tuple(args)}")
        if args[0] > args[1]:
            raise ParseError(f"{path}.args",
                             f"args {tuple(args)} must satisfy i<j in the first two slots")
        value = _parse_value_map(_require(entry, "value", path), value_dim,
                                 f"{path}.value")
        entries.append((tuple(args), value))
    seen = set()
    for args, _ in entries:
        if args in seen:
            raise ParseError(key, f"duplicate entry {args}")
        seen.add(args)
    return entries


def _render_entries(tensor, arity: int, n: int, value_dim: int) -> list:
    """Sparse i<j entries of an antisymmetric tensor, canonically ordered."""
    out = []
    if arity == 2:
        index_tuples = [(i, j) for i in range(n) for j in range(i + 1, n)]
        get = lambda a, idx: tensor[a][idx[0]][idx[1]]
    else:
        index_tuples = [(i, j, k) for i in range(n) for j in range(i + 1, n)
                        for k in range(n)]
        get = lambda a, idx: tensor[a][idx[0]][idx[1]][idx[2]]
    for idx in index_tuples:
        value = {}
        for a in range(value_dim):
            coeff = get(a, idx)
            if coeff:
                value[str(a)] = render_scalar(coeff)
        if value:
            out.append({"args": list(idx), "value": value})
    return out


def _parse_matrix(obj, rows: int, cols: int, path: str) -> Mat:
    if not isinstance(obj, list) or len(obj) != rows:
        raise ParseError(path, f"matrix must have {rows} rows")
    grid = []
    for r, row in enumerate(obj):
        if not isinstance(row, list) or len(row) != cols:
            raise ParseError(f"{path}[{r}]", f"row must have {cols} entries")
        grid.append([parse_scalar(x, f"{path}[{r}][{c}]")
                     for c, x in enumerate(row)])
    return Mat.from_rows(grid) if rows else Mat.zeros(0, cols)


def _render_matrix(m: Mat) -> list:
    return [[render_scalar(x) for x in m.row(r)] for r in range(m.rows)]


def _dumps(obj: dict) -> str:
    return json.dumps(obj, indent=2) + "\n"


# ---------------------------------------------------------------------------
# algebras


def algebra_to_obj(A: BolAlgebra | MaltsevAlgebra) -> dict:
    obj = {
        "kind": "bol" if isinstance(A, BolAlgebra) else "maltsev",
        "dimension": A.n,
    }
    if A.basis_names:
        obj["basis_names"] = list(A.basis_names)
    obj["binary"] = _render_entries(A.c, 2, A.n, A.n)
    if isinstance(A, BolAlgebra):
        obj["ternary"] = _render_entries(A.t, 3, A.n, A.n)
    return obj


def obj_to_algebra(obj: dict, path: str = "") -> BolAlgebra | MaltsevAlgebra:
    prefix = f"{path}." if path else ""
    kind = _require(obj, "kind", path or "file")
    if kind not in ("bol", "maltsev"):
        raise ParseError(f"{prefix}kind", f"unknown kind {kind!r}")
    n = _int_field(obj, "dimension", path or "file")
    names = obj.get("basis_names")
    if names is not None:
        if (not isinstance(names, list) or len(names) != n
                or not all(isinstance(s, str) for s in names)):
            raise ParseError(f"{prefix}basis_names",
                             f"must be a list of {n} strings")
    binary = _parse_entries(obj, "binary", 2, n, n, required=True)
    if kind == "maltsev":
        if "ternary" in obj:
            raise ParseError(f"{prefix}ternary",
                             "a maltsev file must not carry a ternary block")
        return MaltsevAlgebra.from_entries(n, binary, names)
    ternary = _parse_entries(obj, "ternary", 3, n, n, required=True)
    return BolAlgebra.from_entries(n, binary, ternary, names)


def parse_algebra(text: str) -> BolAlgebra | MaltsevAlgebra:
    return obj_to_algebra(_loads(text))


def render_algebra(A: BolAlgebra | MaltsevAlgebra) -> str:
    return _dumps(algebra_to_obj(A))


# ---------------------------------------------------------------------------
# representations


def representation_to_obj(R: Representation) -> dict:
    n = R.base.n
    return {
        "module_dimension": R.m,
        "rho": [_render_matrix(R.rho[i]) for i in range(n)],
        "D": [[_render_matrix(R.D[i][j]) for j in range(n)] for i in range(n)],
        "theta": [[_render_matrix(R.theta[i][j]) for j in range(n)]
                  for i in range(n)],
    }


def _parse_mat_list(obj: dict, key: str, n: int, m: int) -> tuple[Mat, ...]:
    raw = _require(obj, key, "file")
    if not isinstance(raw, list) or len(raw) != n:
        raise ParseError(key, f"must list one {m}x{m} matrix per basis element ({n})")
    return tuple(_parse_matrix(raw[i], m, m, f"{key}[{i}]") for i in range(n))


def _parse_mat_grid(obj: dict, key: str, n: int, m: int) -> tuple:
    raw = _require(obj, key, "file")
    if not isinstance(raw, list) or len(raw) != n:
        raise ParseError(key, f"must be an {n}x{n} grid of matrices")
    grid = []
    for i, row in enumerate(raw):
        if not isinstance(row, list) or len(row) != n:
            raise ParseError(f"{key}[{i}]", f"must be a row of {n} matrices")
        grid.append(tuple(_parse_matrix(row[j], m, m, f"{key}[{i}][{j}]")
                          for j in range(n)))
    return tuple(grid)


def parse_representation(text: str, base: BolAlgebra) -> Representation:
    """Full representation file: rho list plus explicit D and theta grids.

    D and theta must both be listed even though condition (R1) makes one
    derivable from the other; the verifier checks their consistency, which
    catches transcription errors in inputs.
    """
    obj = _loads(text)
    m = _int_field(obj, "module_dimension", "file")
    rho = _parse_mat_list(obj, "rho", base.n, m)
    D = _parse_mat_grid(obj, "D", base.n, m)
    theta = _parse_mat_grid(obj, "theta", base.n, m)
    return Representation(base, m, rho, D, theta)


def parse_action(text: str, n: int) -> tuple[int, tuple[Mat, ...]]:
    """Action file for induce-rep: module_dimension and rho only."""
    obj = _loads(text)
    m = _int_field(obj, "module_dimension", "file")
    rho = _parse_mat_list(obj, "rho", n, m)
    return m, rho


def render_action(m: int, rho: tuple[Mat, ...]) -> str:
    return _dumps({
        "module_dimension": m,
        "rho": [_render_matrix(mat) for mat in rho],
    })


def render_representation(R: Representation) -> str:
    return _dumps(representation_to_obj(R))


# ---------------------------------------------------------------------------
# cochains


def cochain_to_obj(c: CochainPair) -> dict:
    return {
        "module_dimension": c.m,
        "nu": _render_entries(c.nu, 2, c.n, c.m),
        "omega": _render_entries(c.omega, 3, c.n, c.m),
    }


def obj_to_cochain(obj: dict, base: BolAlgebra) -> CochainPair:
    m = _int_field(obj, "module_dimension", "file")
    nu_entries = _parse_entries(obj, "nu", 2, base.n, m, required=True)
    omega_entries = _parse_entries(obj, "omega", 3, base.n, m, required=True)
    return CochainPair.from_entries(base, m, nu_entries, omega_entries)


def parse_cochain(text: str, base: BolAlgebra) -> CochainPair:
    return obj_to_cochain(_loads(text), base)


def render_cochain(c: CochainPair) -> str:
    return _dumps(cochain_to_obj(c))


# ---------------------------------------------------------------------------
# extension bundles


def extension_to_obj(E: AbelianExtension) -> dict:
    return {
        "base": algebra_to_obj(E.base),
        "fiber_dimension": E.m,
        "hat": algebra_to_obj(E.hat),
        "i": _render_matrix(E.i),
        "p": _render_matrix(E.p),
        "sigma": _render_matrix(E.sigma),
    }


def parse_extension(text: str) -> AbelianExtension:
    obj = _loads(text)
    base_obj = _require(obj, "base", "file")
    if not isinstance(base_obj, dict):
        raise ParseError("base", "must be an algebra object")
    base = obj_to_algebra(base_obj, "base")
    if not isinstance(base, BolAlgebra):
        raise ParseError("base.kind", "extension base must be a bol algebra")
    m = _int_field(obj, "fiber_dimension", "file")
    hat_obj = _require(obj, "hat", "file")
    if not isinstance(hat_obj, dict):
        raise ParseError("hat", "must be an algebra object")
    hat = obj_to_algebra(hat_obj, "hat")
    if not isinstance(hat, BolAlgebra):
        raise ParseError("hat.kind", "extension total space must be a bol algebra")
    N = base.n + m
    if hat.n != N:
        raise ParseError("hat.dimension",
                         f"must equal base dimension + fiber dimension = {N}")
    i = _parse_matrix(_require(obj, "i", "file"), N, m, "i")
    p = _parse_matrix(_require(obj, "p", "file"), base.n, N, "p")
    sigma = _parse_matrix(_require(obj, "sigma", "file"), N, base.n, "sigma")
    return AbelianExtension(base, m, hat, i, p, sigma)


def render_extension(E: AbelianExtension) -> str:
    return _dumps(extension_to_obj(E))
