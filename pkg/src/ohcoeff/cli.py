"""Command line interface.

Machine mode (the default) prints one ``key: value`` line per field, with
lists and matrices in bracket notation; ``--human`` prints aligned tables.
Exit codes: 0 success, 1 parse/validation error, 2 resource cap hit,
3 self-verification mismatch.
"""

from __future__ import annotations

import argparse
import sys

from . import analysis, coefficients, contributors as contrib, hypergraph as hg, matrices
from .errors import OHError, ResourceLimitExceeded, ValidationError, VerificationError
from .io import load
from .limits import Limits
from .matrices import IntMatrix, IntPolynomial

EXIT_OK, EXIT_INVALID, EXIT_RESOURCE, EXIT_MISMATCH = 0, 1, 2, 3


class Report:
    def __init__(self):
        self.fields: list[tuple[str, object]] = []
        self.exit_code = EXIT_OK

    def add(self, key: str, value) -> None:
        self.fields.append((key, value))

    def render(self, human: bool) -> str:
        return _render_human(self.fields) if human else _render_machine(self.fields)


def _machine_value(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, IntMatrix):
        return str(value.tolist())
    if isinstance(value, IntPolynomial):
        return str(value.tolist())
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_machine_value(v) for v in value) + "]"
    return str(value)


def _render_machine(fields) -> str:
    return "".join(f"{k}: {_machine_value(v)}\n" for k, v in fields)


def _matrix_table(M: IntMatrix) -> list[str]:
    cells = [[""] + list(M.col_labels)] + [[lab] + [str(x) for x in row] for lab, row in zip(M.row_labels, M.rows)]
    widths = [max(len(r[c]) for r in cells) for c in range(len(cells[0]))]
    return ["  " + "  ".join(cell.rjust(w) for cell, w in zip(r, widths)) for r in cells]


def _render_human(fields) -> str:
    width = max((len(k) for k, _ in fields), default=0)
    out = []
    for k, v in fields:
        if isinstance(v, IntMatrix):
            out.append(f"{k}:")
            out.extend(_matrix_table(v))
        elif isinstance(v, IntPolynomial):
            out.append(f"{k.ljust(width)}  {v}")
        else:
            out.append(f"{k.ljust(width)}  {_machine_value(v)}")
    return "".join(line + "\n" for line in out)


def _limits(args) -> Limits:
    return Limits.from_env().replace(
        max_contributors=args.max_contributors,
        max_incidences_sweep=args.max_incidences_sweep,
        max_walk_length=args.max_walk_length,
    )


def cmd_validate(G: hg.OrientedHypergraph, args, limits: Limits) -> Report:
    r = Report()
    r.add("vertices", G.n_vertices)
    r.add("edges", G.n_edges)
    r.add("incidences", G.n_incidences)
    r.add("isolated_vertices", [G.vertices[v] for v in G.isolated_vertices()])
    r.add("empty_edges", [G.edges[e] for e in G.empty_edges()])
    r.add("orientation", hg.is_constant_orientation(G).value)
    return r


_MATRIX_BUILDERS = {
    "H": matrices.incidence_matrix,
    "A": matrices.adjacency_matrix,
    "D": matrices.degree_matrix,
    "L": matrices.laplacian,
}


def cmd_matrices(G, args, limits) -> Report:
    r = Report()
    which = "HADL" if args.which == "all" else args.which
    for name in which:
        r.add(name, _MATRIX_BUILDERS[name](G))
    return r


def _compare(r: Report, via_contributors, via_oracle, method: str) -> None:
    if method in ("contributor", "both"):
        r.add("contributor", via_contributors())
    if method in ("oracle", "both"):
        r.add("oracle", via_oracle())
    if method == "both":
        agree = r.fields[-1][1] == r.fields[-2][1]
        r.add("agree", agree)
        if not agree:
            r.exit_code = EXIT_MISMATCH


def cmd_charpoly(G, args, limits) -> Report:
    r = Report()
    r.add("matrix", args.matrix)
    r.add("kind", args.kind)
    _compare(
        r,
        lambda: coefficients.charpoly(G, args.matrix, args.kind, limits),
        lambda: coefficients.oracle_charpoly(G, args.matrix, args.kind, limits),
        args.method,
    )
    return r


def cmd_value(G, args, limits) -> Report:
    r = Report()
    r.add("matrix", args.matrix)
    r.add("kind", args.kind)
    _compare(
        r,
        lambda: coefficients.scalar(G, args.matrix, args.kind, limits),
        lambda: coefficients.oracle_scalar(G, args.matrix, args.kind, limits),
        args.method,
    )
    return r


def _parse_filter(text: str) -> tuple[str, int]:
    if text == "all":
        return "all", 0
    kind, _, k = text.partition(":")
    if kind not in ("eq", "geq") or not k.isdigit():
        raise ValidationError(f"bad filter {text!r}; use all, eq:K or geq:K")
    return kind, int(k)


def _ids(values) -> str:
    return ",".join("-" if x is None else str(x) for x in values)


def cmd_contributors(G, args, limits) -> Report:
    kind, k = _parse_filter(args.filter)
    if kind == "all":
        items = list(contrib.enumerate_contributors(G, limits))
    elif kind == "eq":
        items = contrib.enumerate_hat_eq(G, k, limits)
    else:
        items = contrib.enumerate_hat_geq(G, k, limits)
    r = Report()
    r.add("filter", args.filter)
    r.add("count", len(items))
    if args.mode == "census":
        for c in items:
            st = contrib.stats(G, c)
            r.add("contributor", (
                f"perm={contrib.cycle_notation(G, st)} tails={_ids(c.tails())} heads={_ids(c.heads())} "
                f"bs={st.bs} ec={st.ec} oc={st.oc} pc={st.pc} nc={st.nc}"
            ))
    elif args.mode == "classes":
        classes = contrib.group_by_permutomorphism(G, items)
        r.add("classes", len(classes))
        for members in classes.values():
            st = contrib.stats(G, members[0])
            r.add("class", f"perm={contrib.cycle_notation(G, st)} size={len(members)}")
    return r


def cmd_walks(G, args, limits) -> Report:
    walks = hg.enumerate_weak_walks(G, args.v, args.w, args.k, limits)
    r = Report()
    r.add("length", args.k)
    r.add("walks", len(walks))
    r.add("positive", sum(1 for W in walks if W.sign > 0))
    r.add("negative", sum(1 for W in walks if W.sign < 0))
    r.add("signed_count", sum(W.sign for W in walks))
    for W in walks:
        parts = [G.vertices[W.vertices[0]]]
        for h in range(W.length):
            parts.append(f"[{W.incidences[2 * h]}] {G.edges[W.edges[h]]} [{W.incidences[2 * h + 1]}]")
            parts.append(G.vertices[W.vertices[h + 1]])
        r.add("walk", f"{' '.join(parts)} sign={W.sign:+d}")
    return r


def cmd_bounds(G, args, limits) -> Report:
    rep = analysis.bounds_report(G, limits)
    r = Report()
    r.add("contributors", rep.contributor_count)
    r.add("perm_L", rep.perm_L)
    r.add("det_L", rep.det_L)
    r.add("bounds_hold", rep.bounds_hold)
    r.add("lower_strict", rep.lower_strict_ok)
    r.add("perm_upper_attained", rep.upper_perm_attained)
    r.add("det_upper_attained", rep.upper_det_attained)
    r.add("constant_orientation", rep.constant_orientation)
    r.add("bouquet_family", rep.bouquet_family)
    for note in rep.notes:
        r.add("note", note)
    return r


def cmd_sweep(G, args, limits) -> Report:
    res = analysis.orientation_sweep(G, args.objective, limits)
    r = Report()
    r.add("objective", res.objective)
    r.add("incidences", res.n_incidences)
    r.add("orientations", len(res.values))
    r.add("contributors", res.contributor_count)
    r.add("max", res.max_value)
    r.add("min", res.min_value)
    r.add("argmax", [res.mask_string(m) for m in res.argmax])
    r.add("values", list(res.values))
    return r


def cmd_sachs(G, args, limits) -> Report:
    r = Report()
    poly = analysis.sachs_coefficients(G)
    r.add("sachs", poly)
    if args.check:
        other = coefficients.charpoly(G, "A", "det", limits)
        r.add("contributor", other)
        r.add("agree", poly == other)
        if poly != other:
            r.exit_code = EXIT_MISMATCH
    return r


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--human", action="store_true", help="aligned tables instead of key: value lines")
    common.add_argument("--max-contributors", type=int, default=None)
    common.add_argument("--max-incidences-sweep", type=int, default=None)
    common.add_argument("--max-walk-length", type=int, default=None)

    p = argparse.ArgumentParser(prog="ohcoeff", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def command(name, func, help):
        sp = sub.add_parser(name, parents=[common], help=help)
        sp.add_argument("file", help="hypergraph file, or - for stdin")
        sp.set_defaults(func=func)
        return sp

    command("validate", cmd_validate, "parse and summarize a hypergraph")
    sp = command("matrices", cmd_matrices, "print H, A, D, L")
    sp.add_argument("--which", choices=["H", "A", "D", "L", "all"], default="all")
    for name, func, help in (
        ("charpoly", cmd_charpoly, "characteristic polynomial det/perm(xI - M)"),
        ("value", cmd_value, "det or perm of A or L"),
    ):
        sp = command(name, func, help)
        sp.add_argument("--matrix", choices=["A", "L"], default="L")
        sp.add_argument("--kind", choices=["det", "perm"], default="det")
        sp.add_argument("--method", choices=["contributor", "oracle", "both"], default="both")
    sp = command("contributors", cmd_contributors, "enumerate contributors or sub-contributors")
    sp.add_argument("--filter", default="all", help="all, eq:K or geq:K")
    sp.add_argument("--mode", choices=["count", "census", "classes"], default="count")
    sp = command("walks", cmd_walks, "weak walks between two vertices")
    sp.add_argument("v")
    sp.add_argument("w")
    sp.add_argument("k", type=int)
    command("bounds", cmd_bounds, "contributor bounds on perm(L) and det(L)")
    sp = command("sweep", cmd_sweep, "evaluate an objective over every orientation")
    sp.add_argument("--objective", choices=list(analysis.OBJECTIVES), default="perm_L")
    sp = command("sachs", cmd_sachs, "basic-figure coefficients of a plain graph")
    sp.add_argument("--check", action="store_true", help="compare against the contributor polynomial")
    return p


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        limits = _limits(args)
        G = load(args.file)
        report = args.func(G, args, limits)
    except (ValidationError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except ResourceLimitExceeded as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except OHError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    sys.stdout.write(report.render(args.human))
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
