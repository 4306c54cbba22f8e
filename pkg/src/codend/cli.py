"""Command-line front end: ``codend <command> FILE ...``.

Every command prints one JSON report on standard output.  Exit codes: 0 when
every verdict passes, 1 when an identity fails (the report names it), 2 for
unreadable or inconsistent input.  Structures produced by ``induce``, ``dual``,
``extend`` and ``split`` go to ``--out`` when given and are embedded in the
report otherwise.
"""

from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path
from typing import Sequence

from . import __version__, io
from .coalg import (
    AssocBicomodule,
    AssocCoalgebra,
    CoHochCochain,
    CoHochCoboundary,
    bicomodule_defects as assoc_bicomodule_defects,
    cohoch_cohomology,
    coassociativity_defect,
    self_bicomodule as assoc_self,
)
from .dendalg import (
    LabeledEnd,
    alg_cohomology,
    algebra_defects,
    check_iso_compat,
    dualize,
)
from .dendcoalg import (
    DendBicomodule,
    DendCoalgebra,
    DendCoboundary,
    DendCochain,
    S_map,
    bicomodule_defects,
    dend_cohomology,
    dendriform_defects,
    self_bicomodule,
    total_bicomodule,
)
from .deform import (
    TruncDeformation,
    deformation_defects,
    extend,
    infinitesimal,
    obstruction,
)
from .homotopy.ainf import TRUNCATED, AInfCoalgebra, check_ainf, check_rbo_inf
from .homotopy.dendinf import (
    DendInfCoalgebra,
    check_dendinf,
    check_dendinf1,
    from_dendriform,
    induce_dendinf,
    shift_from_dendinf1,
    shift_to_dendinf1,
    split,
)
from .homotopy.diass import TruncationOverflow, check_D_squared
from .linalg import SparseMatrix, format_rational, kernel_basis, rank
from .operadcore import random_map
from .rota import (
    RelRBO,
    check_rbo,
    derived_bracket,
    induced_dendriform,
    rbo_coboundary,
    rbo_cohomology,
    theta_bracket_defect,
)

__all__ = ["main", "build_parser", "Report"]

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT = 0, 1, 2
RANDOM_SAMPLES = 20


class Report:
    """Ordered verdicts plus tables, notes and an optional output structure."""

    def __init__(self, command: str, seed: int):
        self.command = command
        self.seed = seed
        self.inputs: list[dict] = []
        self.verdicts: list[dict] = []
        self.tables: dict = {}
        self.notes: list[str] = []
        self.extra: dict = {}
        self.output = None

    def add_input(self, kind: str, digest: str, role: str = "input"):
        self.inputs.append({"role": role, "kind": kind, "sha256": digest})

    def verdict(self, name: str, status, **detail):
        if isinstance(status, bool):
            status = "pass" if status else "fail"
        self.verdicts.append({"identity": name, "status": status, **detail})
        return status == "pass"

    def defects(self, defects: dict, prefix: str = "") -> bool:
        ok = True
        for name in sorted(defects):
            ok &= self.verdict(prefix + name, defects[name].is_zero())
        return ok

    def identity_rows(self, report, fmt) -> bool:
        for n, label, status in report.entries:
            self.verdict(fmt(n, label), status)
        return report.ok

    @property
    def violations(self) -> list[str]:
        return [v["identity"] for v in self.verdicts if v["status"] == "fail"]

    def exit_code(self) -> int:
        return EXIT_VIOLATION if self.violations else EXIT_OK

    def as_dict(self) -> dict:
        out = {
            "command": self.command,
            "inputs": self.inputs,
            "seed": self.seed,
            "verdicts": self.verdicts,
            "violations": self.violations,
            "status": "fail" if self.violations else "pass",
            "version": __version__,
        }
        if self.tables:
            out["tables"] = self.tables
        if self.notes:
            out["notes"] = self.notes
        if self.output is not None:
            out["output"] = self.output
        out.update(self.extra)
        return out


# loading

def _load(rep: Report, path: str, kinds: Sequence[str] | None = None, role: str = "input"):
    kind, value, digest = io.load_path(path)
    if kinds is not None and kind not in kinds:
        raise io.InputError(f"{path}: expected {' or '.join(kinds)}, got {kind}")
    rep.add_input(kind, digest, role)
    return kind, value


def _emit(rep: Report, structure, out: str | None):
    text = io.dumps(structure)
    if out:
        try:
            Path(out).write_text(text)
        except OSError as exc:
            raise io.InputError(f"cannot write {out}: {exc.strerror}") from None
        rep.extra["written"] = {"kind": io.dump(structure)["kind"], "sha256": io.digest(io.dump(structure))}
    else:
        rep.output = io.dump(structure)


def _cochain_obj(x) -> list:
    """Components of a cochain as ``[from, to_flat, value]`` tuples, one list per component."""
    out = []
    for part in x.parts:
        rows = []
        for j in range(part.dom_dim):
            for r, v in sorted(part.image(j).items()):
                rows.append([j, r, format_rational(v)])
        out.append(rows)
    return out


# structure validation shared by commands

def _validate_coalgebra(rep: Report, C: AssocCoalgebra, prefix: str = "") -> bool:
    return rep.verdict(prefix + "coassociativity", coassociativity_defect(C).is_zero())


def _validate_assoc_bicomodule(rep: Report, M: AssocBicomodule) -> bool:
    ok = _validate_coalgebra(rep, M.base, "base ")
    return rep.defects(assoc_bicomodule_defects(M)) and ok


def _validate_dendriform(rep: Report, D: DendCoalgebra) -> bool:
    return rep.defects(dendriform_defects(D))


def _validate_dend_bicomodule(rep: Report, M: DendBicomodule) -> bool:
    ok = _validate_dendriform(rep, M.base)
    return rep.defects(bicomodule_defects(M)) and ok


def _validate_rbo(rep: Report, R: RelRBO) -> bool:
    ok = _validate_coalgebra(rep, R.base)
    if R.comodule.dim != R.base.dim or R.comodule.delta_l != R.base.delta or R.comodule.delta_r != R.base.delta:
        ok = rep.defects(assoc_bicomodule_defects(R.comodule)) and ok
    return rep.verdict("rbo", check_rbo(R)) and ok


def _validate_deformation(rep: Report, D: TruncDeformation) -> bool:
    if not _validate_dendriform(rep, D.base):
        rep.notes.append("base is not a dendriform coalgebra; deformation equations not checked")
        return False
    failing = {n: labels for n, labels in deformation_defects(D)}
    for n in range(1, D.order + 1):
        if n in failing:
            rep.verdict(f"order {n}", "fail", labels=[f"[{r}]" for r in failing[n]])
        else:
            rep.verdict(f"order {n}", "pass")
    return not failing


def _arity_name(n, label):
    return f"arity {n}" if label is None else f"arity {n} [{label}]"


def _ainf_rows(rep: Report, C: AInfCoalgebra, n_max: int) -> bool:
    report = check_ainf(C, n_max)
    if any(s == TRUNCATED for _, _, s in report.entries):
        rep.notes.append(f"identities beyond arity {C.max_arity} need cooperations past the truncation")
    return rep.identity_rows(report, _arity_name)


def _dendinf_rows(rep: Report, D: DendInfCoalgebra, n_max: int) -> bool:
    report = check_dendinf1(D, n_max) if D.shifted else check_dendinf(D, n_max)
    if any(s == TRUNCATED for _, _, s in report.entries):
        rep.notes.append(f"identities beyond arity {D.max_arity} need cooperations past the truncation")
    return rep.identity_rows(report, _arity_name)


# commands

def cmd_check(args, rep: Report) -> None:
    kind, x = _load(rep, args.file)
    if kind == "coalgebra":
        _validate_coalgebra(rep, x)
    elif kind == "bicomodule":
        _validate_assoc_bicomodule(rep, x)
    elif kind == "dendriform_coalgebra":
        _validate_dendriform(rep, x)
    elif kind == "dendriform_bicomodule":
        _validate_dend_bicomodule(rep, x)
    elif kind == "dendriform_algebra":
        rep.defects(algebra_defects(x))
    elif kind == "rbo":
        _validate_rbo(rep, x)
    elif kind == "deformation":
        _validate_deformation(rep, x)
    elif kind == "ainf_coalgebra":
        _ainf_rows(rep, x, args.max_arity)
    elif kind == "dendinf_coalgebra":
        _dendinf_rows(rep, x, args.max_arity)
    else:
        rep.notes.append(f"{kind} carries no identities beyond its shape, which parsed")


def _random_dend_cochain(M: DendBicomodule, n: int, rng: random.Random) -> DendCochain:
    d, m = M.base.dim, M.dim
    return DendCochain(n, [random_map(m, d**n, rng) for _ in range(n)])


def _compare_hochschild(rep: Report, M: DendBicomodule, max_degree: int, rng: random.Random):
    A = total_bicomodule(M)
    table = cohoch_cohomology(A, max_degree)
    rep.tables["cohochschild"] = table.as_rows()
    rep.verdict("rank-nullity cohochschild", table.rank_nullity_ok())
    dend, hoch = DendCoboundary(M), CoHochCoboundary(A)
    d, m = M.base.dim, M.dim
    rows = []
    for n in range(1, max_degree + 1):
        ok = True
        for _ in range(RANDOM_SAMPLES):
            s = _random_dend_cochain(M, n, rng)
            ok &= hoch(S_map(s)) == S_map(dend(s))
        rep.verdict(f"S chain map {n}", ok)
        # rank of S on cochains and on cohomology
        cols = []
        for j in range(dend.cochain_dim(n)):
            e = DendCochain.from_vector(n, n, m, d**n, {j: 1})
            cols.append(S_map(e).to_vector())
        S = SparseMatrix.from_columns(hoch.cochain_dim(n), cols)
        cycles = []
        for v in kernel_basis(dend.matrix(n)):
            cycles.append(S.apply({i: c for i, c in enumerate(v) if c}))
        bounds = list(hoch.matrix(n - 1).columns()) if n > 1 else []
        rows_h = hoch.cochain_dim(n)
        rb = rank(SparseMatrix.from_columns(rows_h, bounds)) if bounds else 0
        rz = rank(SparseMatrix.from_columns(rows_h, bounds + cycles)) if bounds or cycles else 0
        rows.append({"n": n, "dim_source": dend.cochain_dim(n), "dim_target": hoch.cochain_dim(n),
                     "rank_S": rank(S), "rank_H_S": rz - rb})
    rep.tables["S"] = rows


def cmd_cohomology(args, rep: Report) -> None:
    kind, x = _load(rep, args.file, ("dendriform_coalgebra", "coalgebra", "dendriform_algebra"))
    N = args.max_degree
    if kind == "dendriform_algebra":
        if args.module:
            raise io.InputError("--module is not supported for dendriform algebras")
        if not rep.defects(algebra_defects(x)):
            return
        table = alg_cohomology(x, N)
    elif kind == "coalgebra":
        if args.module:
            _, M = _load(rep, args.module, ("bicomodule",), role="module")
            if M.base.delta != x.delta:
                raise io.InputError("module is over a different coalgebra")
        else:
            M = assoc_self(x)
        if not _validate_assoc_bicomodule(rep, M):
            return
        table = cohoch_cohomology(M, N)
    else:
        if args.module:
            _, M = _load(rep, args.module, ("dendriform_bicomodule",), role="module")
            if M.base.prec != x.prec or M.base.succ != x.succ:
                raise io.InputError("module is over a different dendriform coalgebra")
        else:
            M = self_bicomodule(x)
        if not _validate_dend_bicomodule(rep, M):
            return
        table = dend_cohomology(M, N)
    rep.tables["cohomology"] = table.as_rows()
    rep.verdict("rank-nullity", table.rank_nullity_ok())
    if args.compare_hochschild:
        if kind != "dendriform_coalgebra":
            raise io.InputError("--compare-hochschild needs a dendriform coalgebra")
        _compare_hochschild(rep, M, N, random.Random(args.seed))


def cmd_rbo(args, rep: Report) -> None:
    _, R = _load(rep, args.file, ("rbo",))
    if not _validate_rbo(rep, R):
        return
    if args.action == "check":
        return
    if args.action == "induce":
        D = induced_dendriform(R, validate=False)
        _validate_dendriform(rep, D)
        _emit(rep, D, args.out)
        return
    table = rbo_cohomology(R, args.max_degree)
    rep.tables["cohomology"] = table.as_rows()
    rep.verdict("rank-nullity", table.rank_nullity_ok())
    rng = random.Random(args.seed)
    d, m = R.d, R.m
    T = CoHochCochain(1, R.T)
    rep.verdict("derived bracket [[T,T]]", derived_bracket(R, T, T).is_zero())
    for n in range(1, args.max_degree + 1):
        sign_ok = theta_ok = True
        for _ in range(RANDOM_SAMPLES):
            f = CoHochCochain(n, random_map(d, m**n, rng))
            lhs = derived_bracket(R, T, f)
            rhs = rbo_coboundary(R, f)
            sign_ok &= lhs == (rhs if n % 2 == 0 else -rhs)
            P = CoHochCochain(1, random_map(d, m, rng))
            theta_ok &= theta_bracket_defect(R, P, f).is_zero()
        rep.verdict(f"d_T = (-1)^n delta {n}", sign_ok)
        rep.verdict(f"theta bracket {n}", theta_ok)


def cmd_deform(args, rep: Report) -> None:
    _, D = _load(rep, args.file, ("deformation",))
    if not _validate_deformation(rep, D):
        return
    if args.action == "check":
        return
    if args.action == "infinitesimal":
        if D.order < 1:
            raise io.InputError("an order-0 deformation has no infinitesimal")
        x, is_cocycle = infinitesimal(D)
        rep.verdict("infinitesimal cocycle", is_cocycle)
        rep.extra["infinitesimal"] = _cochain_obj(x)
        if args.iso:
            _, Phi = _load(rep, args.iso, ("formal_iso",), role="iso")
            if Phi.order < 1 or Phi.terms[0].dom_dim != D.dim:
                raise io.InputError("formal isomorphism does not match the deformation")
            residual = x - DendCoboundary(self_bicomodule(D.base))(DendCochain(1, [Phi.terms[0]]))
            rep.extra["residual"] = _cochain_obj(residual)
            rep.verdict("infinitesimal = delta_c(Phi_1)", residual.is_zero())
        return
    if args.action == "obstruct":
        ob, is_cocycle = obstruction(D)
        rep.verdict("obstruction cocycle", is_cocycle)
        rep.extra["obstruction"] = _cochain_obj(ob)
        rep.extra["obstruction_zero"] = ob.is_zero()
        return
    out = extend(D)
    if out is None:
        rep.verdict(f"order {D.order + 1}", "fail")
        rep.notes.append("obstruction class is nonzero; no extension exists")
        return
    rep.verdict(f"order {D.order + 1}", "pass")
    _emit(rep, out, args.out)


def _as_dendinf(kind: str, x, max_arity: int) -> DendInfCoalgebra:
    return from_dendriform(x, max_arity) if kind == "dendriform_coalgebra" else x


def cmd_homotopy(args, rep: Report) -> None:
    action = args.action
    if action == "check-ainf":
        _, C = _load(rep, args.files[0], ("ainf_coalgebra",))
        _ainf_rows(rep, C, args.max_arity)
        if len(args.files) > 1:
            _, R = _load(rep, args.files[1], ("rbo_inf",), role="operator")
            if R.R.space != C.space:
                raise io.InputError("operator and coalgebra live on different spaces")
            rep.identity_rows(check_rbo_inf(C, R), lambda n, _: f"rbo arity {n}")
        return
    if action == "induce":
        if len(args.files) != 2:
            raise io.InputError("induce needs an ainf_coalgebra file and an rbo_inf file")
        _, C = _load(rep, args.files[0], ("ainf_coalgebra",))
        _, R = _load(rep, args.files[1], ("rbo_inf",), role="operator")
        if R.R.space != C.space:
            raise io.InputError("operator and coalgebra live on different spaces")
        ok = rep.identity_rows(check_rbo_inf(C, R), lambda n, _: f"rbo arity {n}")
        ok = _ainf_rows(rep, C, args.max_arity) and ok
        if ok:
            D = induce_dendinf(C, R)
            _dendinf_rows(rep, D, args.max_arity)
            _emit(rep, D, args.out)
        return
    kind, x = _load(rep, args.files[0], ("dendinf_coalgebra", "dendriform_coalgebra"))
    if len(args.files) > 1:
        raise io.InputError(f"{action} takes one file")
    if kind == "dendriform_coalgebra":
        # the labelled identities of a degree-0 structure are (c1)-(c3) at n = 3
        _validate_dendriform(rep, x)
    D = _as_dendinf(kind, x, args.max_arity)
    if action == "check-dendinf":
        _dendinf_rows(rep, D, args.max_arity)
        return
    if action == "split":
        if D.shifted:
            D = shift_from_dendinf1(D)
        if _dendinf_rows(rep, D, args.max_arity):
            S = split(D)
            _ainf_rows(rep, S, args.max_arity)
            _emit(rep, S, args.out)
        return
    # diass
    V = D if D.shifted else shift_to_dendinf1(D)
    L = args.trunc
    try:
        dd = check_D_squared(V, L, args.max_arity)
    except TruncationOverflow as exc:
        rep.verdict("truncation", "fail")
        rep.notes.append(str(exc))
        return
    rep.identity_rows(dd.identities, lambda n, lab: f"D^2 {_arity_name(n, lab)}")
    direct = check_dendinf1(V, min(args.max_arity, L)).verdicts()
    agree = all(direct.get(k) == s for k, s in dd.identities.verdicts().items() if s != TRUNCATED)
    rep.verdict("D^2 components = identity sums", dd.lemma_ok)
    rep.verdict("D^2 verdicts = direct verdicts", agree)
    if args.max_arity > L:
        rep.notes.append(f"word length truncated at L = {L}; longer components not checked")


def cmd_dual(args, rep: Report) -> None:
    _, A = _load(rep, args.file, ("dendriform_algebra",))
    if not rep.defects(algebra_defects(A)):
        return
    C = dualize(A)
    _validate_dendriform(rep, C)
    if args.compare_cohomology:
        N = args.max_degree
        a = alg_cohomology(A, N).h_dims
        c = dend_cohomology(self_bicomodule(C), N).h_dims
        rep.tables["algebra"] = a
        rep.tables["coalgebra"] = c
        rep.verdict("cohomology dimensions agree", a == c)
        rng = random.Random(args.seed)
        op = LabeledEnd(A.dim)
        ok = True
        for _ in range(RANDOM_SAMPLES):
            p, q = rng.randint(1, 3), rng.randint(1, 3)
            f, g = op.random_element(p, rng), op.random_element(q, rng)
            ok &= check_iso_compat(f, g, rng.randint(1, p))
        rep.verdict("operad isomorphism intertwines compositions", ok)
    _emit(rep, C, args.out)


# argument parsing

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="seed for randomized checks (default 0)")
    common.add_argument("--max-degree", type=int, default=3, help="top cohomological degree (default 3)")
    common.add_argument("--max-arity", type=int, default=4, help="top arity for homotopy identities (default 4)")
    common.add_argument("--out", help="write the produced structure here instead of embedding it")

    p = argparse.ArgumentParser(prog="codend", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"codend {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check", parents=[common], help="verify the identities of any structure file")
    s.add_argument("file")
    s.set_defaults(run=cmd_check)

    s = sub.add_parser("cohomology", parents=[common], help="cohomology dimension table")
    s.add_argument("file")
    s.add_argument("--module", help="bicomodule file (default: the structure itself)")
    s.add_argument("--compare-hochschild", action="store_true", help="add the coHochschild table and the map S")
    s.set_defaults(run=cmd_cohomology)

    s = sub.add_parser("rbo", parents=[common], help="relative Rota-Baxter operators")
    s.add_argument("action", choices=("check", "induce", "cohomology"))
    s.add_argument("file")
    s.set_defaults(run=cmd_rbo)

    s = sub.add_parser("deform", parents=[common], help="truncated formal deformations")
    s.add_argument("action", choices=("check", "infinitesimal", "obstruct", "extend"))
    s.add_argument("file")
    s.add_argument("--iso", help="formal isomorphism the deformation was transformed by")
    s.set_defaults(run=cmd_deform)

    s = sub.add_parser("homotopy", parents=[common], help="A-infinity and Dend-infinity coalgebras")
    s.add_argument("action", choices=("check-ainf", "check-dendinf", "split", "induce", "diass"))
    s.add_argument("files", nargs="+")
    s.add_argument("--trunc", type=int, default=4, help="word-length truncation L for diass (default 4)")
    s.set_defaults(run=cmd_homotopy)

    s = sub.add_parser("dual", parents=[common], help="dual dendriform coalgebra of an algebra")
    s.add_argument("file")
    s.add_argument("--compare-cohomology", action="store_true", help="compare both dimension lists")
    s.set_defaults(run=cmd_dual)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    if getattr(args, "max_degree", 1) < 1 or getattr(args, "max_arity", 1) < 1 or getattr(args, "trunc", 1) < 1:
        print("codend: --max-degree, --max-arity and --trunc must be positive", file=sys.stderr)
        return EXIT_INPUT
    name = args.command if not hasattr(args, "action") else f"{args.command} {args.action}"
    rep = Report(name, args.seed)
    try:
        args.run(args, rep)
    except io.InputError as exc:
        print(f"codend: {exc}", file=sys.stderr)
        return EXIT_INPUT
    sys.stdout.write(io.dumps(rep.as_dict()))
    return rep.exit_code()


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
