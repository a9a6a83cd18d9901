"""Command-line front end.

Word-list files carry one {'0','1'} word per line; '#' starts a comment,
blank lines are skipped, duplicates are rejected, and all words must have
one length.  Reports are JSON objects with a fixed field order (the only
run-dependent field is elapsed_ms).

Exit status: 0 verdict true / result produced, 1 verdict false,
2 usage or parse error, 3 budget exceeded.
"""

import argparse
import json
import random
import sys
import time

from . import constructions as cons
from . import core, mobility, symmetry
from .budget import BudgetExceededError, SearchBudget
from .core import Word, WordSet


class WordListError(ValueError):
    pass


# ---------------------------------------------------------------------------
# word-list files
# ---------------------------------------------------------------------------


def parse_word_list(text: str, source: str = "<input>") -> WordSet:
    words = []
    seen = set()
    n = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if any(c not in "01" for c in line):
            raise WordListError(f"{source}:{lineno}: not a binary word: {line!r}")
        if n is None:
            n = len(line)
        elif len(line) != n:
            raise WordListError(
                f"{source}:{lineno}: word length {len(line)} != {n}"
            )
        if line in seen:
            raise WordListError(f"{source}:{lineno}: duplicate word {line}")
        seen.add(line)
        words.append(Word.from_string(line))
    if n is None:
        raise WordListError(f"{source}: no words found")
    return WordSet(n, words)


def serialize_word_list(s: WordSet) -> str:
    lines = [f"# n={s.n} words={len(s)}"]
    lines += s.to_strings()
    return "\n".join(lines) + "\n"


def load_word_list(path: str) -> WordSet:
    with open(path, encoding="ascii") as fh:
        return parse_word_list(fh.read(), source=path)


def write_word_list(path: str, s: WordSet) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(serialize_word_list(s))


def _derived_path(path: str, tag: str) -> str:
    root, dot, ext = path.rpartition(".")
    if dot and "/" not in ext:
        return f"{root}.{tag}.{ext}"
    return f"{path}.{tag}"


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------


def _flatten(prefix: str, value, out: list[str]) -> None:
    if isinstance(value, dict):
        for k, v in value.items():
            _flatten(f"{prefix}.{k}" if prefix else str(k), v, out)
    else:
        out.append(f"{prefix}: {json.dumps(value)}")


def _emit(args, report: dict) -> None:
    if getattr(args, "json", False):
        print(json.dumps(report, indent=2))
        return
    lines: list[str] = []
    for k, v in report.items():
        _flatten(k, v, lines)
    print("\n".join(lines))


def _report(check: str, n: int | None, t0: float, **fields) -> dict:
    rep: dict = {"check": check, "n": n}
    rep.update(fields)
    rep["elapsed_ms"] = int((time.monotonic() - t0) * 1000)
    return rep


def _verdict_exit(verdict) -> int:
    return 0 if verdict else 1


def _maybe_figure(args, groups, dist=2, title=None) -> None:
    path = getattr(args, "figure", None)
    if path:
        from .figures import render_distance_graph

        render_distance_graph(groups, dist, path, title=title)


def _budget(args) -> SearchBudget | None:
    if getattr(args, "budget", None) is None:
        return None
    return SearchBudget(seconds=args.budget)


def _require(args, *names) -> None:
    for name in names:
        if getattr(args, name, None) is None:
            raise WordListError(f"--{name.replace('_', '-')} is required for this kind")


# ---------------------------------------------------------------------------
# construct
# ---------------------------------------------------------------------------


def _construct_sets(args) -> list[tuple[str, WordSet]]:
    kind = args.kind
    if kind == "linear":
        _require(args, "m")
        m, alt = cons.linear_ms(args.m)
        return [("set", m), ("alt", alt)]
    if kind == "linear-ems":
        _require(args, "m")
        pair = cons._linear_ems_iterated_pair(args.m)
        return [("set", pair[0]), ("alt", pair[1])]
    if kind == "standard":
        _require(args, "k")
        if args.index is not None:
            if not 0 <= args.index <= 2:
                raise WordListError("--index must be 0, 1 or 2 for standard")
            return [("set", cons.standard_partition(args.k)[args.index])]
        vecs = cons.standard_vectors(args.k)
        return [("set", WordSet(4 * args.k, (sv.word for sv in vecs)))]
    if kind == "theorem":
        _require(args, "k")
        return [("set", cons.theorem_ms(args.k))]
    if kind == "hamming":
        _require(args, "r")
        return [("set", cons.hamming_code(args.r))]
    if kind == "grid36":
        m, alt = cons.grid36()
        return [("set", m), ("alt", alt)]
    if kind == "extend":
        _require(args, "input")
        odd = args.index if args.index is not None else 0
        if odd not in (0, 1):
            raise WordListError("--index (parity bit) must be 0 or 1 for extend")
        return [("set", core.extend(load_word_list(args.input), odd))]
    if kind == "puncture":
        _require(args, "input")
        return [("set", core.puncture(load_word_list(args.input), args.coord))]
    if kind == "lift":
        _require(args, "input", "alt")
        r, r_alt = cons.linear_extension(
            load_word_list(args.input), load_word_list(args.alt)
        )
        return [("set", r), ("alt", r_alt)]
    if kind == "icomp-build":
        _require(args, "input", "alt")
        return [
            (
                "set",
                cons.icomponent_from_pair(
                    load_word_list(args.input), load_word_list(args.alt)
                ),
            )
        ]
    if kind == "icomp-split":
        _require(args, "input")
        parts = cons.pair_from_icomponent(load_word_list(args.input))
        return [(f"m{a}{b}", parts[(a, b)]) for a in (0, 1) for b in (0, 1)]
    raise WordListError(f"unknown construct kind: {kind}")


def _cmd_construct(args) -> int:
    sets = _construct_sets(args)
    for idx, (tag, s) in enumerate(sets):
        if args.output:
            path = args.output if idx == 0 else _derived_path(args.output, tag)
            write_word_list(path, s)
            print(f"{tag}: n={s.n} words={len(s)} -> {path}")
        else:
            print(f"# {tag}")
            sys.stdout.write(serialize_word_list(s))
    _maybe_figure(args, sets, title=f"construct {args.kind}")
    return 0


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def _cmd_verify(args) -> int:
    t0 = time.monotonic()
    kind = args.kind
    if kind == "onecode":
        _require(args, "input")
        s = load_word_list(args.input)
        verdict = core.is_one_code(s)
        _emit(args, _report(
            "verify.onecode", s.n, t0,
            inputs={"input": {"path": args.input, "cardinality": len(s)}},
            verdict=verdict,
        ))
        _maybe_figure(args, [("set", s)], dist=2)
        return _verdict_exit(verdict)

    if kind == "pair":
        _require(args, "input", "alt")
        m = load_word_list(args.input)
        alt = load_word_list(args.alt)
        verdict = mobility.is_mobile_pair(m, alt)
        _emit(args, _report(
            "verify.pair", m.n, t0,
            inputs={
                "input": {"path": args.input, "cardinality": len(m)},
                "alt": {"path": args.alt, "cardinality": len(alt)},
            },
            verdict=verdict,
        ))
        _maybe_figure(args, [("set", m), ("alt", alt)])
        return _verdict_exit(verdict)

    if kind == "ems-pair":
        _require(args, "input", "alt")
        m = load_word_list(args.input)
        alt = load_word_list(args.alt)
        rep = mobility.ems_conditions(m, alt, args.coord)
        verdict = rep.all_ok
        _emit(args, _report(
            "verify.ems-pair", m.n, t0,
            inputs={
                "input": {"path": args.input, "cardinality": len(m)},
                "alt": {"path": args.alt, "cardinality": len(alt)},
            },
            verdict=verdict,
            details={
                "hypotheses_ok": rep.hypotheses_ok,
                "cond_a": rep.cond_a,
                "cond_b": rep.cond_b,
                "cond_c": rep.cond_c,
            },
        ))
        _maybe_figure(args, [("set", m), ("alt", alt)])
        return _verdict_exit(verdict)

    if kind == "icomp":
        _require(args, "input")
        m = load_word_list(args.input)
        coord = args.coord if args.coord is not None else m.n - 1
        verdict = mobility.is_icomponent(m, coord)
        _emit(args, _report(
            "verify.icomp", m.n, t0,
            inputs={"input": {"path": args.input, "cardinality": len(m)}},
            params={"coord": coord},
            verdict=verdict,
        ))
        _maybe_figure(
            args,
            [("punctured", core.puncture(m, coord))],
            title=f"distance-2 graph after dropping coordinate {coord}",
        )
        return _verdict_exit(verdict)

    if kind == "claim1":
        _require(args, "k")
        parts = cons.standard_partition(args.k)
        deg = 2 * args.k
        details = {}
        verdict = True
        for i in range(3):
            g = core.distance_graph(parts[i], 2)
            edgeless = all(not nb for nb in g.adjacency.values())
            details[f"s{i}_edgeless"] = edgeless
            verdict &= edgeless
        for i in range(3):
            for j in range(i + 1, 3):
                g = core.distance_graph(parts[i] | parts[j], 2)
                ok = core.is_bipartite(g) and core.is_regular(g, deg)
                cross = all(
                    nb <= parts[j].bits for v, nb in g.adjacency.items()
                    if v in parts[i].bits
                )
                details[f"s{i}s{j}_bipartite_{deg}_regular"] = ok and cross
                verdict &= ok and cross
        _emit(args, _report(
            "verify.claim1", 4 * args.k, t0,
            params={"k": args.k},
            verdict=verdict,
            details=details,
        ))
        _maybe_figure(
            args,
            [("s0", parts[0]), ("s1", parts[1]), ("s2", parts[2])],
            title=f"standard vector classes, k={args.k}",
        )
        return _verdict_exit(verdict)

    if kind == "lemma1":
        n = args.n if args.n is not None else 6
        samples = args.cap if args.cap is not None else 1000
        seed = args.seed if args.seed is not None else 1729
        rng = random.Random(seed)
        agree = 0
        true_cases = 0
        for _ in range(samples):
            m, alt = mobility.random_parity_pair(rng, n)
            rep = mobility.ems_conditions(m, alt)
            if rep.cond_a == rep.cond_b == rep.cond_c:
                agree += 1
                true_cases += rep.cond_c
        verdict = agree == samples
        _emit(args, _report(
            "verify.lemma1", n, t0,
            params={"samples": samples, "seed": seed},
            verdict=verdict,
            counts={"agreeing": agree, "equivalent_true": true_cases},
        ))
        return _verdict_exit(verdict)

    raise WordListError(f"unknown verify kind: {kind}")


# ---------------------------------------------------------------------------
# analyze
# ---------------------------------------------------------------------------


def _cmd_analyze(args) -> int:
    t0 = time.monotonic()
    kind = args.kind
    cap = args.cap if args.cap is not None else 1000

    if kind == "min-ems":
        _require(args, "n")
        if args.cap is None:
            raise WordListError("--cap is required for min-ems")
        result = mobility.min_ems_cardinality(args.n, args.cap)
        _emit(args, _report(
            "analyze.min-ems", args.n, t0,
            params={"cap": args.cap},
            result=result,
        ))
        return 0

    _require(args, "input")
    m = load_word_list(args.input)
    inputs = {"input": {"path": args.input, "cardinality": len(m)}}

    if kind == "rank":
        result = core.affine_rank(m)
        _emit(args, _report(
            "analyze.rank", m.n, t0, inputs=inputs, result=result,
            details={"full_rank": result == m.n},
        ))
        _maybe_figure(args, [("set", m)])
        return 0

    if kind == "alternative":
        # ball-neighborhood alternatives make sense only in odd dimension;
        # in even dimension the sphere-neighborhood (extended) search runs
        if m.n % 2:
            found = mobility.find_alternative_ms(m, cap)
            mode = "ball"
        else:
            found = mobility.find_alternative_ems(m, cap)
            mode = "sphere"
        paths = []
        if args.output:
            for idx, alt in enumerate(found, 1):
                path = _derived_path(args.output, f"alt{idx}")
                write_word_list(path, alt)
                paths.append(path)
        _emit(args, _report(
            "analyze.alternative", m.n, t0,
            inputs=inputs,
            params={"cap": cap, "mode": mode},
            verdict=bool(found),
            counts={"solutions": len(found)},
            witnesses={
                "files": paths,
                "first": found[0].to_strings() if found else [],
            },
        ))
        return _verdict_exit(found)

    if kind == "splittable":
        res = mobility.split_search(m, _budget(args))
        if res.split is None and not res.exhausted:
            raise BudgetExceededError("splittability search", res.ems_checks, res.elapsed)
        verdict = res.split is not None
        witnesses = {}
        if res.split:
            witnesses = {
                "part1": res.split[0].to_strings(),
                "part2": res.split[1].to_strings(),
            }
            if args.output:
                for idx, part in enumerate(res.split, 1):
                    path = _derived_path(args.output, f"part{idx}")
                    write_word_list(path, part)
                    witnesses[f"file{idx}"] = path
        _emit(args, _report(
            "analyze.splittable", m.n, t0,
            inputs=inputs,
            verdict=verdict,
            counts={"pairs_tested": res.pairs_tested, "ems_checks": res.ems_checks},
            witnesses=witnesses,
        ))
        groups = (
            [("part1", res.split[0]), ("part2", res.split[1])]
            if res.split
            else [("set", m)]
        )
        _maybe_figure(args, groups)
        return _verdict_exit(verdict)

    if kind == "reducible":
        wits = mobility.reducibility_witnesses(m)
        verdict = any(w.valid_split for w in wits)
        _emit(args, _report(
            "analyze.reducible", m.n, t0,
            inputs=inputs,
            verdict=verdict,
            counts={
                "witnesses": len(wits),
                "valid": sum(w.valid_split for w in wits),
                "valid_degenerate": sum(w.valid_split and w.degenerate for w in wits),
            },
            witnesses={
                "pairs": [
                    {"i": w.i, "j": w.j, "c": w.c,
                     "valid": w.valid_split, "degenerate": w.degenerate}
                    for w in wits
                ]
            },
        ))
        return _verdict_exit(verdict)

    if kind == "transitive":
        verdict = symmetry.is_transitive(m, _budget(args))
        _emit(args, _report(
            "analyze.transitive", m.n, t0, inputs=inputs, verdict=verdict,
        ))
        return _verdict_exit(verdict)

    raise WordListError(f"unknown analyze kind: {kind}")


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

_CONSTRUCT_KINDS = [
    "linear", "linear-ems", "standard", "theorem", "hamming", "grid36",
    "extend", "puncture", "lift", "icomp-build", "icomp-split",
]
_VERIFY_KINDS = ["onecode", "pair", "ems-pair", "icomp", "claim1", "lemma1"]
_ANALYZE_KINDS = ["rank", "alternative", "splittable", "reducible",
                  "transitive", "min-ems"]


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--k", type=int, help="quadruple count for standard/theorem/claim1")
    p.add_argument("--m", type=int, help="parameter of the linear constructions")
    p.add_argument("--r", type=int, help="Hamming code parameter (n = 2^r - 1)")
    p.add_argument("--n", type=int, help="dimension for min-ems / lemma1")
    p.add_argument("--index", type=int, help="class index (standard) or parity bit (extend)")
    p.add_argument("--coord", type=int, help="coordinate for puncture/icomp/ems-pair")
    p.add_argument("--input", help="word-list file (primary input)")
    p.add_argument("--alt", help="word-list file (second input)")
    p.add_argument("--output", help="output path; derived names get suffix tags")
    p.add_argument("--cap", type=int, help="solution/size cap (or sample count)")
    p.add_argument("--budget", type=float, help="wall-clock budget in seconds")
    p.add_argument("--seed", type=int, help="seed for randomized harnesses")
    p.add_argument("--json", action="store_true", help="emit the JSON report")
    p.add_argument("--figure", help="render the relevant distance graph to this file")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mobiset",
        description="Construct, verify and analyze mobile sets in the binary hypercube.",
    )
    sub = parser.add_subparsers(dest="command")
    for name, kinds, handler in (
        ("construct", _CONSTRUCT_KINDS, _cmd_construct),
        ("verify", _VERIFY_KINDS, _cmd_verify),
        ("analyze", _ANALYZE_KINDS, _cmd_analyze),
    ):
        p = sub.add_parser(name)
        p.add_argument("kind", choices=kinds)
        _add_common(p)
        p.set_defaults(handler=handler)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if not hasattr(args, "handler"):
        parser.print_help(sys.stderr)
        return 2
    try:
        return args.handler(args)
    except BudgetExceededError as exc:
        print(f"mobiset: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError) as exc:
        print(f"mobiset: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
