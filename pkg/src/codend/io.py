"""JSON serialization of every structure kind the command line accepts.

Conventions shared by all kinds: 0-based indices, rationals as strings ``"p/q"``
or ``"p"`` (plain JSON integers are accepted, floats are not), and structure
maps as tuples ``[from, to_1, .., to_k, value]`` meaning
``f(e_from) += value * e_to_1 (x) .. (x) e_to_k``.  Emitted files list tuples in
sorted order so that equal structures serialize to equal bytes.
"""

from __future__ import annotations

import hashlib
import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence

from .coalg import AssocBicomodule, AssocCoalgebra
from .dendalg import DendAlgebra
from .dendcoalg import DendBicomodule, DendCoalgebra, DendCochain
from .deform import FormalIso, TruncDeformation
from .homotopy.ainf import AInfCoalgebra, RBOInf
from .homotopy.dendinf import DendInfCoalgebra
from .homotopy.graded import DegreeError, GradedMap, GradedSpace
from .linalg import DimensionError, LinearMap, format_rational, parse_rational
from .rota import RelRBO

__all__ = [
    "InputError",
    "load",
    "load_path",
    "dump",
    "dumps",
    "digest",
    "KINDS",
]

KINDS = (
    "coalgebra",
    "bicomodule",
    "dendriform_coalgebra",
    "dendriform_bicomodule",
    "dendriform_algebra",
    "rbo",
    "deformation",
    "formal_iso",
    "graded_space",
    "ainf_coalgebra",
    "dendinf_coalgebra",
    "rbo_inf",
)


class InputError(ValueError):
    """Malformed or inconsistent input; the command line maps it to exit code 2."""


# scalars and tuples

def _rational(x) -> Fraction:
    if isinstance(x, bool) or isinstance(x, float):
        raise InputError(f"rationals must be strings or integers, got {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return parse_rational(x)
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"malformed rational {x!r}: {exc}") from None
    raise InputError(f"rationals must be strings or integers, got {x!r}")


def _count(x, what: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int) or x < 0:
        raise InputError(f"{what} must be a non-negative integer, got {x!r}")
    return x


def _field(obj: dict, key: str):
    if not isinstance(obj, dict):
        raise InputError(f"expected an object, got {type(obj).__name__}")
    if key not in obj:
        raise InputError(f"missing field {key!r}")
    return obj[key]


def _map_from_tuples(rows, dom: int, cod_dims: Sequence[int], what: str) -> LinearMap:
    """Parse ``[[from, to_1, .., to_k, value], ...]`` into a map ``dom -> prod(cod_dims)``."""
    if not isinstance(rows, list):
        raise InputError(f"{what}: expected a list of tuples")
    k = len(cod_dims)
    cod = 1
    for x in cod_dims:
        cod *= x
    trip = []
    for row in rows:
        if not isinstance(row, list) or len(row) != k + 2:
            raise InputError(f"{what}: each entry needs {k + 2} fields, got {row!r}")
        src = row[0]
        if isinstance(src, bool) or not isinstance(src, int) or not 0 <= src < dom:
            raise InputError(f"{what}: source index {src!r} outside 0..{dom - 1}")
        flat = 0
        for idx, size in zip(row[1:-1], cod_dims):
            if isinstance(idx, bool) or not isinstance(idx, int) or not 0 <= idx < size:
                raise InputError(f"{what}: target index {idx!r} outside 0..{size - 1}")
            flat = flat * size + idx
        trip.append((src, flat, _rational(row[-1])))
    return LinearMap.from_triplets(dom, cod, trip)


def _tuples_from_map(f: LinearMap, cod_dims: Sequence[int]) -> list:
    out = []
    for j in range(f.dom_dim):
        for r, v in f.image(j).items():
            idx = []
            for size in reversed(cod_dims):
                r, x = divmod(r, size)
                idx.append(x)
            out.append([j, *reversed(idx), format_rational(v)])
    out.sort(key=lambda row: row[:-1])
    return out


def _algebra_map(rows, d: int, what: str) -> LinearMap:
    """``[[a, b, to, value], ...]`` meaning ``e_a * e_b += value * e_to``."""
    if not isinstance(rows, list):
        raise InputError(f"{what}: expected a list of tuples")
    trip = []
    for row in rows:
        if not isinstance(row, list) or len(row) != 4:
            raise InputError(f"{what}: each entry needs 4 fields, got {row!r}")
        for idx in row[:3]:
            if isinstance(idx, bool) or not isinstance(idx, int) or not 0 <= idx < d:
                raise InputError(f"{what}: index {idx!r} outside 0..{d - 1}")
        trip.append((row[0] * d + row[1], row[2], _rational(row[3])))
    return LinearMap.from_triplets(d * d, d, trip)


def _algebra_rows(f: LinearMap, d: int) -> list:
    out = []
    for j in range(f.dom_dim):
        a, b = divmod(j, d)
        for r, v in f.image(j).items():
            out.append([a, b, r, format_rational(v)])
    out.sort(key=lambda row: row[:-1])
    return out


# per-kind readers

def _kind(obj, expected: str | None = None) -> str:
    kind = _field(obj, "kind")
    if expected is not None and kind != expected:
        raise InputError(f"expected kind {expected!r}, got {kind!r}")
    if kind not in KINDS:
        raise InputError(f"unknown kind {kind!r}")
    return kind


def _read_coalgebra(obj) -> AssocCoalgebra:
    _kind(obj, "coalgebra")
    d = _count(_field(obj, "dim"), "dim")
    return AssocCoalgebra(d, _map_from_tuples(_field(obj, "delta"), d, (d, d), "delta"))


def _read_bicomodule(obj, base: AssocCoalgebra | None = None) -> AssocBicomodule:
    _kind(obj, "bicomodule")
    if "base" in obj:
        base = _read_coalgebra(obj["base"])
    if base is None:
        raise InputError("bicomodule needs a base coalgebra")
    m = _count(_field(obj, "dim"), "dim")
    d = base.dim
    return AssocBicomodule(m, base, _map_from_tuples(_field(obj, "delta_l"), m, (d, m), "delta_l"),
                           _map_from_tuples(_field(obj, "delta_r"), m, (m, d), "delta_r"))


def _read_dendriform(obj) -> DendCoalgebra:
    _kind(obj, "dendriform_coalgebra")
    d = _count(_field(obj, "dim"), "dim")
    return DendCoalgebra(d, _map_from_tuples(_field(obj, "prec"), d, (d, d), "prec"),
                         _map_from_tuples(_field(obj, "succ"), d, (d, d), "succ"))


def _read_dend_bicomodule(obj) -> DendBicomodule:
    _kind(obj, "dendriform_bicomodule")
    base = _read_dendriform(_field(obj, "base"))
    m = _count(_field(obj, "dim_m"), "dim_m")
    d = base.dim
    maps = {}
    for key in ("l_prec", "l_succ"):
        maps[key] = _map_from_tuples(_field(obj, key), m, (d, m), key)
    for key in ("r_prec", "r_succ"):
        maps[key] = _map_from_tuples(_field(obj, key), m, (m, d), key)
    return DendBicomodule(m, base, **maps)


def _read_dend_algebra(obj) -> DendAlgebra:
    _kind(obj, "dendriform_algebra")
    d = _count(_field(obj, "dim"), "dim")
    return DendAlgebra(d, _algebra_map(_field(obj, "prec"), d, "prec"), _algebra_map(_field(obj, "succ"), d, "succ"))


def _read_rbo(obj) -> RelRBO:
    _kind(obj, "rbo")
    C = _read_coalgebra(_field(obj, "coalgebra"))
    raw = obj.get("bicomodule", "self")
    if raw == "self":
        M = AssocBicomodule(C.dim, C, C.delta, C.delta)
    else:
        M = _read_bicomodule(raw, C)
        if M.base.delta != C.delta:
            raise InputError("bicomodule base differs from the coalgebra")
        M = AssocBicomodule(M.dim, C, M.delta_l, M.delta_r)
    return RelRBO(C, M, _map_from_tuples(_field(obj, "T"), C.dim, (M.dim,), "T"))


def _read_formal_iso(obj, d: int | None = None) -> FormalIso:
    _kind(obj, "formal_iso")
    N = _count(_field(obj, "order"), "order")
    terms = _field(obj, "terms")
    if not isinstance(terms, list) or len(terms) != N:
        raise InputError(f"formal_iso of order {N} needs {N} terms")
    if d is None:
        d = _count(_field(obj, "dim"), "dim")
    return FormalIso(N, tuple(_map_from_tuples(t, d, (d,), f"terms[{i}]") for i, t in enumerate(terms)))


def _read_deformation(obj) -> TruncDeformation:
    _kind(obj, "deformation")
    base = _read_dendriform(_field(obj, "base"))
    N = _count(_field(obj, "order"), "order")
    raw = _field(obj, "terms")
    if not isinstance(raw, list) or len(raw) != N:
        raise InputError(f"deformation of order {N} needs {N} terms")
    d = base.dim
    terms = []
    for i, t in enumerate(raw):
        terms.append(DendCochain(2, (_map_from_tuples(_field(t, "prec"), d, (d, d), f"terms[{i}].prec"),
                                     _map_from_tuples(_field(t, "succ"), d, (d, d), f"terms[{i}].succ"))))
    return TruncDeformation(base, N, tuple(terms))


def _read_space(obj) -> GradedSpace:
    if isinstance(obj, dict) and "kind" in obj:
        _kind(obj, "graded_space")
    support = _field(obj, "support")
    if not isinstance(support, list):
        raise InputError("support must be a list of [degree, dim] pairs")
    pairs = []
    for item in support:
        if not isinstance(item, list) or len(item) != 2 or not all(
                isinstance(x, int) and not isinstance(x, bool) for x in item):
            raise InputError(f"bad support entry {item!r}")
        pairs.append((item[0], _count(item[1], "dim")))
    try:
        return GradedSpace(pairs)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _read_graded_map(obj, space: GradedSpace, arity: int, what: str) -> GradedMap:
    shift = _field(obj, "shift")
    if isinstance(shift, bool) or not isinstance(shift, int):
        raise InputError(f"{what}: shift must be an integer")
    N = space.dim
    trip = []
    blocks = _field(obj, "blocks")
    if not isinstance(blocks, list):
        raise InputError(f"{what}: blocks must be a list")
    for block in blocks:
        if not isinstance(block, list) or len(block) != 2:
            raise InputError(f"{what}: each block is [degree, tuples]")
        deg, rows = block
        try:
            off = space.offset(deg)
        except KeyError as exc:
            raise InputError(f"{what}: {exc.args[0]}") from None
        size = dict(space.support)[deg]
        f = _map_from_tuples(rows, size, (N,) * arity, f"{what} degree {deg}")
        for j in range(size):
            for r, v in f.image(j).items():
                trip.append((off + j, r, v))
    try:
        return GradedMap(space, arity, shift, LinearMap.from_triplets(N, N**arity, trip))
    except DegreeError as exc:
        raise InputError(f"{what}: {exc}") from None


def _read_ainf(obj) -> AInfCoalgebra:
    _kind(obj, "ainf_coalgebra")
    space = _read_space(_field(obj, "space"))
    K = _count(_field(obj, "max_arity"), "max_arity")
    ops = {}
    for i, op in enumerate(_field(obj, "ops")):
        k = _count(_field(op, "arity"), "arity")
        ops[k] = _read_graded_map(op, space, k, f"ops[{i}]")
    try:
        return AInfCoalgebra(space, ops, K)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _read_dendinf(obj) -> DendInfCoalgebra:
    _kind(obj, "dendinf_coalgebra")
    space = _read_space(_field(obj, "space"))
    K = _count(_field(obj, "max_arity"), "max_arity")
    shifted = bool(obj.get("shifted", False))
    ops = {}
    for i, op in enumerate(_field(obj, "ops")):
        k = _count(_field(op, "arity"), "arity")
        r = _count(_field(op, "label"), "label")
        ops[(k, r)] = _read_graded_map(op, space, k, f"ops[{i}]")
    try:
        return DendInfCoalgebra(space, ops, K, shifted=shifted)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _read_rbo_inf(obj) -> RBOInf:
    _kind(obj, "rbo_inf")
    space = _read_space(_field(obj, "space"))
    try:
        return RBOInf(_read_graded_map(_field(obj, "R"), space, 1, "R"))
    except ValueError as exc:
        raise InputError(str(exc)) from None


_READERS = {
    "coalgebra": _read_coalgebra,
    "bicomodule": _read_bicomodule,
    "dendriform_coalgebra": _read_dendriform,
    "dendriform_bicomodule": _read_dend_bicomodule,
    "dendriform_algebra": _read_dend_algebra,
    "rbo": _read_rbo,
    "deformation": _read_deformation,
    "formal_iso": _read_formal_iso,
    "graded_space": _read_space,
    "ainf_coalgebra": _read_ainf,
    "dendinf_coalgebra": _read_dendinf,
    "rbo_inf": _read_rbo_inf,
}


def load(obj: Any) -> tuple[str, Any]:
    """``(kind, structure)`` for a parsed JSON object."""
    kind = _kind(obj)
    try:
        return kind, _READERS[kind](obj)
    except InputError:
        raise
    except (DimensionError, ValueError, TypeError, IndexError) as exc:
        raise InputError(f"{kind}: {exc}") from None


def _reject_float(x):
    raise InputError(f"floating-point number {x} is not allowed; write rationals as strings")


def load_path(path: str | Path) -> tuple[str, Any, str]:
    """``(kind, structure, digest)`` for a JSON file."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        obj = json.loads(text, parse_float=_reject_float)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None
    kind, value = load(obj)
    return kind, value, digest(obj)


# writers

def _space_obj(space: GradedSpace) -> dict:
    return {"kind": "graded_space", "support": [[deg, n] for deg, n in space.support]}


def _graded_map_obj(f: GradedMap) -> dict:
    N = f.space.dim
    blocks = []
    for deg, trip in f.blocks():
        size = dict(f.space.support)[deg]
        local = LinearMap.from_triplets(size, N**f.arity, trip)
        blocks.append([deg, _tuples_from_map(local, (N,) * f.arity)])
    return {"shift": f.shift, "blocks": blocks}


def dump(x) -> dict:
    """The canonical JSON object for a structure."""
    if isinstance(x, AssocCoalgebra):
        d = x.dim
        return {"kind": "coalgebra", "dim": d, "delta": _tuples_from_map(x.delta, (d, d))}
    if isinstance(x, AssocBicomodule):
        d, m = x.base.dim, x.dim
        return {"kind": "bicomodule", "dim": m, "base": dump(x.base),
                "delta_l": _tuples_from_map(x.delta_l, (d, m)), "delta_r": _tuples_from_map(x.delta_r, (m, d))}
    if isinstance(x, DendCoalgebra):
        d = x.dim
        return {"kind": "dendriform_coalgebra", "dim": d,
                "prec": _tuples_from_map(x.prec, (d, d)), "succ": _tuples_from_map(x.succ, (d, d))}
    if isinstance(x, DendBicomodule):
        d, m = x.base.dim, x.dim
        return {"kind": "dendriform_bicomodule", "base": dump(x.base), "dim_m": m,
                "l_prec": _tuples_from_map(x.l_prec, (d, m)), "l_succ": _tuples_from_map(x.l_succ, (d, m)),
                "r_prec": _tuples_from_map(x.r_prec, (m, d)), "r_succ": _tuples_from_map(x.r_succ, (m, d))}
    if isinstance(x, DendAlgebra):
        d = x.dim
        return {"kind": "dendriform_algebra", "dim": d,
                "prec": _algebra_rows(x.prec, d), "succ": _algebra_rows(x.succ, d)}
    if isinstance(x, RelRBO):
        self_case = (x.comodule.dim == x.base.dim and x.comodule.delta_l == x.base.delta
                     and x.comodule.delta_r == x.base.delta)
        bic = "self" if self_case else {k: v for k, v in dump(x.comodule).items() if k != "base"}
        return {"kind": "rbo", "coalgebra": dump(x.base), "bicomodule": bic,
                "T": _tuples_from_map(x.T, (x.m,))}
    if isinstance(x, TruncDeformation):
        d = x.dim
        return {"kind": "deformation", "base": dump(x.base), "order": x.order,
                "terms": [{"prec": _tuples_from_map(t.parts[0], (d, d)), "succ": _tuples_from_map(t.parts[1], (d, d))}
                          for t in x.terms]}
    if isinstance(x, FormalIso):
        d = x.terms[0].dom_dim if x.terms else 0
        return {"kind": "formal_iso", "dim": d, "order": x.order,
                "terms": [_tuples_from_map(t, (d,)) for t in x.terms]}
    if isinstance(x, GradedSpace):
        return _space_obj(x)
    if isinstance(x, AInfCoalgebra):
        ops = [dict(arity=k, **_graded_map_obj(x.ops[k])) for k in sorted(x.ops) if not x.ops[k].is_zero()]
        return {"kind": "ainf_coalgebra", "space": _space_obj(x.space), "max_arity": x.max_arity, "ops": ops}
    if isinstance(x, DendInfCoalgebra):
        ops = [dict(arity=k, label=r, **_graded_map_obj(x.ops[(k, r)]))
               for k, r in sorted(x.ops) if not x.ops[(k, r)].is_zero()]
        out = {"kind": "dendinf_coalgebra", "space": _space_obj(x.space), "max_arity": x.max_arity, "ops": ops}
        if x.shifted:
            out["shifted"] = True
        return out
    if isinstance(x, RBOInf):
        return {"kind": "rbo_inf", "space": _space_obj(x.R.space), "R": _graded_map_obj(x.R)}
    raise TypeError(f"cannot serialize {type(x).__name__}")


def _encode(x, indent: int) -> str:
    if isinstance(x, dict):
        if not x:
            return "{}"
        pad = "  " * (indent + 1)
        items = [f"{pad}{json.dumps(str(k))}: {_encode(x[k], indent + 1)}" for k in sorted(x)]
        return "{\n" + ",\n".join(items) + "\n" + "  " * indent + "}"
    if isinstance(x, (list, tuple)):
        if all(not isinstance(v, (dict, list, tuple)) for v in x):
            return json.dumps(list(x))
        pad = "  " * (indent + 1)
        return "[\n" + ",\n".join(pad + _encode(v, indent + 1) for v in x) + "\n" + "  " * indent + "]"
    if isinstance(x, float):
        raise TypeError("floats are never emitted")
    return json.dumps(x)


def dumps(obj: Any) -> str:
    """Canonical text: sorted keys, scalar lists on one line, trailing newline."""
    if not isinstance(obj, (dict, list)):
        obj = dump(obj)
    return _encode(obj, 0) + "\n"


def digest(obj: Any) -> str:
    return hashlib.sha256(json.dumps(obj, sort_keys=True, separators=(",", ":")).encode()).hexdigest()
