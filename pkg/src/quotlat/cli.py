"""Command-line front end.

One global input (a regex or an automaton file) feeds subcommands that
print quotients, atoms, the atomaton, the quotient-atom matrix, the four
lattices, duality and identity verdicts, the pairing, and complexity
reports, as text, JSON, or DOT.  The ``report`` subcommand renders the
figures to files next to delimited CSV output.

Exit status: 0 on success, 1 on input errors, 2 when a verification
command finds a violated identity (which would falsify the theory and is
never expected, but the tool must be able to say so).
"""

from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import dataclass
from pathlib import Path

from .automata import (
    Alphabet,
    AlphabetMismatch,
    EmptyLanguage,
    Nfa,
)
from .complexity import complexity_report
from .decomposition import (
    LanguageDecomposition,
    decompose,
    left_atom_language,
    left_quotient_language,
    quotient_atom_matrix,
    right_atom_language,
    right_quotient_language,
    verify_quotient_atom_identities,
)
from .figures import hasse_figure, matrix_figure, save_figure
from .lattices import (
    ALL_KINDS,
    UNION_LEFT,
    LatticeKind,
    QuotientLattice,
    build_lattice,
    element_language,
    hasse_edges,
    is_distributive,
    psi,
    verify_duality,
)
from .pairing import PairingContext, orthogonal_complement
from .regex import ParseError, parse_regex, regex_symbols
from .serialize import (
    automaton_dot,
    automaton_to_dict,
    element_label,
    language_label,
    lattice_dot,
    lattice_to_dict,
    load_automaton,
    matrix_text,
    matrix_to_rows,
    to_json,
)

COMMANDS = (
    "quotients",
    "atoms",
    "atomaton",
    "matrix",
    "lattice",
    "duality",
    "pairing",
    "complexity",
    "all",
    "report",
)


@dataclass
class CliRequest:
    regex: str | None
    automaton_path: str | None
    alphabet: str | None
    command: str
    output_format: str = "text"
    word_bound: int | None = None
    lattice_kind: str | None = None
    distributive: bool = False
    which: str = "both"
    outdir: str | None = None
    dpi: int = 150


def _input_machine(request: CliRequest) -> Nfa:
    if (request.regex is None) == (request.automaton_path is None):
        raise ValueError("exactly one of --regex and --automaton is required")
    if request.automaton_path is not None:
        machine = load_automaton(request.automaton_path)
        if request.alphabet is not None and str(machine.alphabet) != request.alphabet:
            raise AlphabetMismatch(
                f"file alphabet {machine.alphabet} differs from --alphabet {request.alphabet}"
            )
        return machine
    if request.alphabet is not None:
        alphabet = Alphabet.of(request.alphabet)
    else:
        inferred = "".join(sorted(regex_symbols(request.regex)))
        if not inferred:
            raise ValueError(
                "cannot infer an alphabet from a symbol-free regex; pass --alphabet"
            )
        alphabet = Alphabet.of(inferred)
    return parse_regex(request.regex, alphabet)


def _bound(request: CliRequest, d: LanguageDecomposition) -> int:
    if request.word_bound is not None:
        return request.word_bound
    return 2 * (d.quotient_count + d.atom_count)


def _quotient_lines(d: LanguageDecomposition, bound: int) -> list[str]:
    lines = [f"left quotients ({d.quotient_count}):"]
    for j in range(d.quotient_count):
        label = language_label(left_quotient_language(d, j), bound)
        atoms = ",".join(str(i) for i in sorted(d.left_quotients[j]))
        lines.append(f"  L{j} atoms={{{atoms}}} {label}")
    lines.append(f"right quotients ({d.atom_count}):")
    for i in range(d.atom_count):
        label = language_label(right_quotient_language(d, i), bound)
        atoms = ",".join(str(j) for j in sorted(d.right_quotients[i]))
        lines.append(f"  R{i} atoms={{{atoms}}} {label}")
    return lines


def _atom_flags(d: LanguageDecomposition, i: int) -> str:
    flags = []
    if i in d.initial_left_atoms:
        flags.append("initial")
    if i == d.final_left_atom:
        flags.append("final")
    if i == d.negative_left_atom:
        flags.append("negative")
    return ",".join(flags) if flags else "-"


def _atom_lines(d: LanguageDecomposition, bound: int) -> list[str]:
    lines = [f"left atoms ({d.atom_count}):"]
    for i in range(d.atom_count):
        label = language_label(left_atom_language(d, i), bound)
        s = ",".join(str(j) for j in sorted(d.left_atom_sets[i]))
        lines.append(f"  A{i} S={{{s}}} [{_atom_flags(d, i)}] {label}")
    lines.append(f"right atoms ({d.quotient_count}):")
    for j in range(d.quotient_count):
        label = language_label(right_atom_language(d, j), bound)
        t = ",".join(str(i) for i in sorted(d.right_atom_sets[j]))
        lines.append(f"  B{j} S={{{t}}} {label}")
    return lines


def _quotients_json(d: LanguageDecomposition, bound: int) -> dict:
    return {
        "left": [
            {
                "index": j,
                "atoms": sorted(d.left_quotients[j]),
                "language": language_label(left_quotient_language(d, j), bound),
            }
            for j in range(d.quotient_count)
        ],
        "right": [
            {
                "index": i,
                "atoms": sorted(d.right_quotients[i]),
                "language": language_label(right_quotient_language(d, i), bound),
            }
            for i in range(d.atom_count)
        ],
    }


def _atoms_json(d: LanguageDecomposition, bound: int) -> dict:
    return {
        "left": [
            {
                "index": i,
                "defining_quotients": sorted(d.left_atom_sets[i]),
                "initial": i in d.initial_left_atoms,
                "final": i == d.final_left_atom,
                "negative": i == d.negative_left_atom,
                "language": language_label(left_atom_language(d, i), bound),
            }
            for i in range(d.atom_count)
        ],
        "right": [
            {
                "index": j,
                "defining_quotients": sorted(d.right_atom_sets[j]),
                "language": language_label(right_atom_language(d, j), bound),
            }
            for j in range(d.quotient_count)
        ],
    }


def _lattice_labels(
    d: LanguageDecomposition, lattice: QuotientLattice, bound: int
) -> list[str]:
    return [
        element_label(e.atoms, element_language(d, e), bound)
        for e in lattice.elements
    ]


def _emit_lattice(request: CliRequest, d: LanguageDecomposition, out) -> int:
    kind = LatticeKind.from_name(request.lattice_kind)
    lattice = build_lattice(d, kind)
    bound = _bound(request, d)
    labels = _lattice_labels(d, lattice, bound)
    if request.output_format == "dot":
        out.write(lattice_dot(lattice, labels))
    elif request.output_format == "json":
        data = lattice_to_dict(lattice, labels)
        if request.distributive:
            data["distributive"] = is_distributive(lattice)
        out.write(to_json(data))
    else:
        out.write(f"lattice {kind.name}: {len(lattice)} elements\n")
        for i, label in enumerate(labels):
            out.write(f"  n{i} {label}\n")
        out.write("cover edges:\n")
        for low, high in hasse_edges(lattice):
            out.write(f"  n{low} < n{high}\n")
        if request.distributive:
            verdict = "yes" if is_distributive(lattice) else "no"
            out.write(f"distributive: {verdict}\n")
    return 0


def _emit_duality(request: CliRequest, d: LanguageDecomposition, out) -> int:
    which = ("a", "b") if request.which == "both" else (request.which,)
    reports = [verify_duality(d, w) for w in which]
    if request.output_format == "json":
        out.write(
            to_json(
                [
                    {
                        "which": r.which,
                        "size": r.size,
                        "success": r.success,
                        "witnesses": list(r.witnesses),
                    }
                    for r in reports
                ]
            )
        )
    else:
        for r in reports:
            tag = "union" if r.which == "a" else "intersection"
            if r.success:
                out.write(
                    f"duality ({r.which}: {tag} lattices): "
                    f"dual isomorphism verified: {r.size} elements\n"
                )
            else:
                out.write(f"duality ({r.which}): VIOLATED\n")
                for witness in r.witnesses:
                    out.write(f"  {witness}\n")
    return 0 if all(r.success for r in reports) else 2


def _emit_pairing(request: CliRequest, d: LanguageDecomposition, out) -> int:
    ctx = PairingContext.from_decomposition(d)
    bound = _bound(request, d)
    complements = [
        sorted(orthogonal_complement(ctx, {i})) for i in range(ctx.right_atom_count)
    ]
    if request.output_format == "json":
        out.write(
            to_json(
                {
                    "pairing_matrix": matrix_to_rows(ctx.matrix),
                    "orthogonal_complements": [
                        {"right_atom": i, "left_atoms": complements[i]}
                        for i in range(ctx.right_atom_count)
                    ],
                }
            )
        )
        return 0
    out.write("pairing matrix (rows: right atoms, columns: left atoms):\n")
    out.write(matrix_text(ctx.matrix) + "\n")
    out.write("orthogonal complements of single right atoms:\n")
    for i in range(ctx.right_atom_count):
        label = language_label(right_atom_language(d, i), bound)
        atoms = ",".join(str(j) for j in complements[i])
        out.write(f"  B{i}^perp atoms={{{atoms}}} for B{i}={label}\n")
    return 0


def _emit_complexity(request: CliRequest, d: LanguageDecomposition, out) -> int:
    report = complexity_report(d)
    if request.output_format == "json":
        out.write(
            to_json(
                {
                    "quotient_count": report.quotient_count,
                    "union_count": report.union_count,
                    "intersection_count": report.intersection_count,
                    "union_maximal": report.union_maximal,
                    "intersection_maximal": report.intersection_maximal,
                    "singleton_atoms_present": list(report.singleton_atoms_present),
                    "cosingleton_atoms_present": list(
                        report.cosingleton_atoms_present
                    ),
                    "counts_enumerated": report.counts_enumerated,
                    "corollary_applies": report.corollary_applies,
                }
            )
        )
        return 0
    n = report.quotient_count
    out.write(f"quotients: {n} (2^n = {2**n})\n")
    out.write(
        f"union lattice:        count={report.union_count} "
        f"maximal={'yes' if report.union_maximal else 'no'}\n"
    )
    out.write(
        f"intersection lattice: count={report.intersection_count} "
        f"maximal={'yes' if report.intersection_maximal else 'no'}\n"
    )
    singles = " ".join(
        f"I{{{i}}}={'+' if present else '-'}"
        for i, present in enumerate(report.singleton_atoms_present)
    )
    cosingles = " ".join(
        f"Z{{{k}}}={'+' if present else '-'}"
        for k, present in enumerate(report.cosingleton_atoms_present)
    )
    out.write(f"singleton atoms:    {singles}\n")
    out.write(f"cosingleton atoms:  {cosingles}\n")
    if not report.counts_enumerated:
        out.write("counts not enumerated (too many quotients); verdicts predicted\n")
    if not report.corollary_applies:
        out.write("combined criterion not asserted (needs more than 2 quotients)\n")
    return 0


def _emit_all(request: CliRequest, d: LanguageDecomposition, out) -> int:
    bound = _bound(request, d)
    status = 0
    out.write("== quotients ==\n")
    out.write("\n".join(_quotient_lines(d, bound)) + "\n")
    out.write("== atoms ==\n")
    out.write("\n".join(_atom_lines(d, bound)) + "\n")
    out.write("== quotient-atom matrix ==\n")
    out.write(matrix_text(quotient_atom_matrix(d)) + "\n")
    for kind in ALL_KINDS:
        lattice = build_lattice(d, kind)
        out.write(f"== lattice {kind.name}: {len(lattice)} elements ==\n")
    out.write("== duality ==\n")
    sub = CliRequest(**{**request.__dict__, "which": "both", "output_format": "text"})
    if _emit_duality(sub, d, out) != 0:
        status = 2
    out.write("== identities ==\n")
    identity = verify_quotient_atom_identities(d)
    if identity.ok:
        scope = "all subsets" if identity.checked_all_subsets else "sampled subsets"
        out.write(f"quotient-atom identities verified ({scope})\n")
    else:
        status = 2
        for violation in identity.violations:
            out.write(f"  {violation}\n")
    out.write("== complexity ==\n")
    _emit_complexity(
        CliRequest(**{**request.__dict__, "output_format": "text"}), d, out
    )
    return status


def _write_report(request: CliRequest, d: LanguageDecomposition, out) -> int:
    outdir = Path(request.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    bound = _bound(request, d)

    with open(outdir / "quotients.csv", "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(["side", "index", "atom_indices", "language"])
        for j in range(d.quotient_count):
            writer.writerow(
                [
                    "left",
                    j,
                    " ".join(str(i) for i in sorted(d.left_quotients[j])),
                    language_label(left_quotient_language(d, j), bound),
                ]
            )
        for i in range(d.atom_count):
            writer.writerow(
                [
                    "right",
                    i,
                    " ".join(str(j) for j in sorted(d.right_quotients[i])),
                    language_label(right_quotient_language(d, i), bound),
                ]
            )

    with open(outdir / "atoms.csv", "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(["side", "index", "defining_quotients", "flags", "language"])
        for i in range(d.atom_count):
            writer.writerow(
                [
                    "left",
                    i,
                    " ".join(str(j) for j in sorted(d.left_atom_sets[i])),
                    _atom_flags(d, i),
                    language_label(left_atom_language(d, i), bound),
                ]
            )
        for j in range(d.quotient_count):
            writer.writerow(
                [
                    "right",
                    j,
                    " ".join(str(i) for i in sorted(d.right_atom_sets[j])),
                    "-",
                    language_label(right_atom_language(d, j), bound),
                ]
            )

    matrix = quotient_atom_matrix(d)
    with open(outdir / "matrix.csv", "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        for row in matrix.entries:
            writer.writerow(row)

    union_left = build_lattice(d, UNION_LEFT)
    with open(outdir / "psi_table.csv", "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(["element_atoms", "element", "image_atoms", "image"])
        for element in union_left.elements:
            image = psi(d, element)
            writer.writerow(
                [
                    " ".join(str(i) for i in sorted(element.atoms)),
                    language_label(element_language(d, element), bound),
                    " ".join(str(i) for i in sorted(image.atoms)),
                    language_label(element_language(d, image), bound),
                ]
            )

    reports = [verify_duality(d, w) for w in ("a", "b")]
    complexity = complexity_report(d)
    identity = verify_quotient_atom_identities(d)
    with open(outdir / "summary.csv", "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(["key", "value"])
        writer.writerow(["left_quotients", d.quotient_count])
        writer.writerow(["left_atoms", d.atom_count])
        for report in reports:
            writer.writerow([f"duality_{report.which}_size", report.size])
            writer.writerow([f"duality_{report.which}_success", report.success])
        writer.writerow(["identities_ok", identity.ok])
        writer.writerow(["union_count", complexity.union_count])
        writer.writerow(["intersection_count", complexity.intersection_count])
        writer.writerow(["union_maximal", complexity.union_maximal])
        writer.writerow(["intersection_maximal", complexity.intersection_maximal])

    (outdir / "minimal_dfa.dot").write_text(
        automaton_dot(d.dfa, "minimal_dfa"), encoding="utf-8"
    )
    (outdir / "atomaton.dot").write_text(
        automaton_dot(d.atomaton, "atomaton"), encoding="utf-8"
    )

    for kind in ALL_KINDS:
        lattice = build_lattice(d, kind)
        labels = _lattice_labels(d, lattice, min(bound, 6))
        fig = hasse_figure(lattice, labels, f"lattice {kind.name}")
        save_figure(fig, outdir / f"lattice_{kind.operation}_{kind.side}.png", request.dpi)
    fig = matrix_figure(
        matrix,
        "quotient-atom matrix",
        row_labels=[f"L{i}" for i in range(matrix.rows)],
        col_labels=[f"A{j}" for j in range(matrix.cols)],
    )
    save_figure(fig, outdir / "quotient_atom_matrix.png", request.dpi)

    written = sorted(p.name for p in outdir.iterdir())
    for name in written:
        out.write(f"wrote {outdir / name}\n")
    if not all(r.success for r in reports) or not identity.ok:
        return 2
    return 0


def run(request: CliRequest, out=None, err=None) -> int:
    """Execute a request end to end; returns the process exit status."""
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    try:
        machine = _input_machine(request)
        d = decompose(machine)
        bound = _bound(request, d)
        if request.command == "quotients":
            if request.output_format == "json":
                out.write(to_json(_quotients_json(d, bound)))
            else:
                out.write("\n".join(_quotient_lines(d, bound)) + "\n")
            return 0
        if request.command == "atoms":
            if request.output_format == "json":
                out.write(to_json(_atoms_json(d, bound)))
            else:
                out.write("\n".join(_atom_lines(d, bound)) + "\n")
            return 0
        if request.command == "atomaton":
            if request.output_format == "dot":
                out.write(automaton_dot(d.atomaton, "atomaton"))
            elif request.output_format == "json":
                out.write(to_json(automaton_to_dict(d.atomaton)))
            else:
                for p, sym, q in d.atomaton.edges():
                    out.write(f"  s{p} -{sym}-> s{q}\n")
                initials = ",".join(str(i) for i in sorted(d.atomaton.initial))
                out.write(f"initial: {{{initials}}} final: {{{d.final_left_atom}}}\n")
            return 0
        if request.command == "matrix":
            matrix = quotient_atom_matrix(d)
            if request.output_format == "json":
                out.write(to_json(matrix_to_rows(matrix)))
            else:
                out.write(matrix_text(matrix) + "\n")
            return 0
        if request.command == "lattice":
            return _emit_lattice(request, d, out)
        if request.command == "duality":
            return _emit_duality(request, d, out)
        if request.command == "pairing":
            return _emit_pairing(request, d, out)
        if request.command == "complexity":
            return _emit_complexity(request, d, out)
        if request.command == "all":
            return _emit_all(request, d, out)
        if request.command == "report":
            return _write_report(request, d, out)
        raise ValueError(f"unknown command {request.command!r}")
    except (ParseError, EmptyLanguage, AlphabetMismatch, ValueError, OSError) as exc:
        err.write(f"error: {exc}\n")
        return 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quotlat",
        description=(
            "Quotients, atoms, atomata, and the four quotient lattices of a "
            "regular language."
        ),
    )
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--regex", help="regular expression (symbols, _, @, |, *, parentheses)")
    source.add_argument("--automaton", help="path to an automaton JSON file")
    parser.add_argument("--alphabet", help="alphabet symbols in canonical order, e.g. 'ab'")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=("text", "json", "dot"),
        default="text",
        dest="output_format",
    )
    common.add_argument(
        "--word-bound",
        type=int,
        default=None,
        help="display truncation for word samples (default 2*(quotients+atoms))",
    )

    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("quotients", "atoms", "atomaton", "matrix", "pairing", "complexity", "all"):
        sub.add_parser(name, parents=[common])
    lattice = sub.add_parser("lattice", parents=[common])
    lattice.add_argument(
        "--kind",
        required=True,
        choices=tuple(k.name for k in ALL_KINDS),
    )
    lattice.add_argument(
        "--distributive",
        action="store_true",
        help="also report whether the lattice is distributive",
    )
    duality = sub.add_parser("duality", parents=[common])
    duality.add_argument("--which", choices=("a", "b", "both"), default="both")
    report = sub.add_parser("report", parents=[common])
    report.add_argument("--outdir", required=True)
    report.add_argument("--dpi", type=int, default=150)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1
    request = CliRequest(
        regex=args.regex,
        automaton_path=args.automaton,
        alphabet=args.alphabet,
        command=args.command,
        output_format=getattr(args, "output_format", "text"),
        word_bound=getattr(args, "word_bound", None),
        lattice_kind=getattr(args, "kind", None),
        distributive=getattr(args, "distributive", False),
        which=getattr(args, "which", "both"),
        outdir=getattr(args, "outdir", None),
        dpi=getattr(args, "dpi", 150),
    )
    return run(request)


if __name__ == "__main__":
    sys.exit(main())
