"""Command line front end.

Every subcommand prints (or writes with ``--out``) a JSON report with sorted
keys; only the ``timing`` field changes between identical runs.  Exit codes:
0 all verdicts pass, 1 some verdict fails, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from math import gcd
from pathlib import Path

from . import __version__
from .dims import cd_set, fp_dims
from .groups import FiniteAbelianGroup
from .isomorphism import ring_isomorphic
from .nising import (InducedBraiding, NIsingSpec, build_cm, build_ising, build_nising,
                     degeneracy_criterion, induced_center, ising_pairing, twist_obstruction,
                     verify_fact_cm, verify_nofact, verify_prime)
from .pointed import (QuadraticForm, classify_center, enumerate_braidings,
                      enumerate_quadratic_forms, is_quadratic)
from .ring import FusionRing, deligne_product, is_isomorphism, load_ring, pointed_ring, validate_ring
from .roots import ONE, MINUS_ONE, RootOfUnity, parse_root
from .structure import decompose_gty, fermionic_moore_read_ring
from .subrings import gty_structure, invertibles, subring_lattice, universal_grading

FAMILIES = ("ising", "cm", "nising", "pointed", "product", "moore-read")
THEOREMS = ("fact-cm", "nofact", "prime", "braiding-count", "gty", "degeneracy", "family", "twist")


class UsageError(Exception):
    pass


def _group_arg(text: str) -> tuple[int, ...]:
    try:
        moduli = tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad group {text!r}; expected e.g. 2,4")
    if any(m < 1 for m in moduli):
        raise argparse.ArgumentTypeError("group moduli must be positive")
    return moduli


def _root_arg(text: str) -> RootOfUnity:
    try:
        return parse_root(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False)


def _emit(report: dict, out: str | None) -> None:
    text = _dump(report)
    if out:
        Path(out).write_text(text + "\n", encoding="utf-8")
    else:
        print(text)


# -- ring sources -------------------------------------------------------------

def _family_ring(args) -> FusionRing:
    fam = args.family
    if fam == "ising":
        return build_ising()
    if fam == "cm":
        if args.M is None:
            raise UsageError("--family cm needs --M")
        return build_cm(args.M)[0]
    if fam == "nising":
        if args.N is None:
            raise UsageError("--family nising needs --N")
        return build_nising(NIsingSpec(args.N, args.zeta or ONE)).ring
    if fam == "pointed":
        if args.group is None:
            raise UsageError("--family pointed needs --group")
        return pointed_ring(args.group)
    if fam == "moore-read":
        return fermionic_moore_read_ring()
    if fam == "product":
        if not args.left or not args.right:
            raise UsageError("--family product needs --left and --right ring files")
        return deligne_product(load_ring(args.left), load_ring(args.right))
    raise UsageError(f"unknown family {fam!r}")


def _ring_from(args) -> FusionRing:
    if getattr(args, "ring", None):
        return load_ring(args.ring)
    if getattr(args, "family", None):
        return _family_ring(args)
    raise UsageError("give a ring file or --family")


def _add_family_opts(p, with_file=True):
    if with_file:
        p.add_argument("ring", nargs="?", help="ring file (.fring.json)")
    p.add_argument("--family", choices=FAMILIES)
    p.add_argument("--M", type=int)
    p.add_argument("--N", type=int)
    p.add_argument("--zeta", type=_root_arg, help="1, -1, i, -i or exponent p/q")
    p.add_argument("--group", type=_group_arg, help="moduli, e.g. 2,4")
    p.add_argument("--left")
    p.add_argument("--right")


# -- subcommands ----------------------------------------------------------------

def cmd_construct(args):
    ring = _family_ring(args)
    text = json.dumps(ring.to_json(), indent=1, sort_keys=True, ensure_ascii=False) + "\n"
    if not args.out:
        return text, True
    out = Path(args.out)
    out.write_text(text, encoding="utf-8")
    args.out = None  # ring written; the report goes to stdout
    return {"wrote": str(out), "rank": ring.rank, "metadata": ring.metadata}, True


def _verify_fact_cm(args):
    if args.M is None:
        raise UsageError("fact-cm needs --M")
    f = verify_fact_cm(args.M)
    return {"M": f.M, "N": f.N, "m": f.m, "witness": f.witness}, True


def _verify_nofact(args):
    if args.N is None:
        raise UsageError("nofact needs --N")
    rep = verify_nofact(args.N)
    return {"N": rep.N, "subrings": rep.subring_count, "proper_pointed": rep.proper_pointed,
            "noninvertibles_faithful": rep.noninvertibles_faithful,
            "counterexamples": rep.offending}, rep.holds


def _verify_prime(args):
    if args.N is None:
        raise UsageError("prime needs --N")
    rep = verify_prime(args.N)
    return {"N": rep.N, "braidings_checked": rep.checked_braidings,
            "violations": rep.violations}, rep.prime


def _verify_braiding_count(args):
    if args.M is None:
        raise UsageError("braiding-count needs --M")
    M = args.M
    plus, minus = len(enumerate_braidings(M, ONE)), len(enumerate_braidings(M, MINUS_ONE))
    total = len(enumerate_braidings(M))
    forms = len(enumerate_quadratic_forms(FiniteAbelianGroup.cyclic(M)))
    expected = (M, M if M % 2 == 0 else 0)
    ok = (plus, minus) == expected and total == gcd(M * M, 2 * M) == forms
    return {"M": M, "counts": [plus, minus], "total": total, "quadratic_forms": forms,
            "expected_counts": list(expected)}, ok


def _verify_gty(args):
    ring = _ring_from(args)
    rep = gty_structure(ring)
    return {"is_gty": rep.is_gty, "n": rep.n, "invertibles": rep.invertible_count,
            "adjoint_rank": rep.adjoint_rank, "universal_order": rep.universal_order,
            "transitive": rep.transitive, "z2_normal": rep.z2_normal,
            "failures": rep.failures}, rep.passes


def _verify_degeneracy(args):
    if args.N is None:
        raise UsageError("degeneracy needs --N")
    body, ok = _degeneracy_body(args.N, args.zeta or MINUS_ONE)
    return body, ok


def _verify_family(args):
    if args.N is None:
        raise UsageError("family needs --N")
    N = args.N
    ring = build_nising(NIsingSpec(N)).ring
    d = fp_dims(ring)
    inv = invertibles(ring)
    U = universal_grading(ring)
    non = [str(x) for x in d.dims if str(x) != "1"]
    want_inv = FiniteAbelianGroup((2, 2 ** (N - 1))).invariant_factors
    ok = (str(d.total) == str(2 ** (N + 1)) and non == ["√2"] * 2 ** (N - 1)
          and inv.invariant_factors == want_inv and U.group.invariant_factors == (2 ** N,))
    return {"N": N, "fpdim": str(d.total), "noninvertible_dims": non,
            "invertibles": list(inv.invariant_factors or ()),
            "universal_grading": list(U.group.invariant_factors)}, ok


def _verify_twist(args):
    if args.N is None:
        raise UsageError("twist needs --N")
    v = twist_obstruction(NIsingSpec(args.N, args.zeta or ONE))
    return {"N": args.N, "zeta": str(args.zeta or ONE), "status": v.status.value,
            "reason": v.reason}, True


_VERIFIERS = {"fact-cm": _verify_fact_cm, "nofact": _verify_nofact, "prime": _verify_prime,
              "braiding-count": _verify_braiding_count, "gty": _verify_gty,
              "degeneracy": _verify_degeneracy, "family": _verify_family,
              "twist": _verify_twist}


def cmd_verify(args) -> tuple[dict, bool]:
    body, ok = _VERIFIERS[args.theorem](args)
    return {"theorem": args.theorem, "verdict": "pass" if ok else "fail", "result": body}, ok


def lattice_dot(ring: FusionRing) -> str:
    lat = subring_lattice(ring)
    dims = fp_dims(ring)
    lines = ["digraph subrings {", "  rankdir=BT;"]
    for i, s in enumerate(lat.subrings):
        total = sum((dims[x] * dims[x] for x in s.simples), start=type(dims.total)(0))
        kind = "pointed" if s.is_pointed() else "non-pointed"
        names = ", ".join(s.labels())
        lines.append(f'  s{i} [label="rank {s.rank}\\nFPdim {total}\\n{kind}\\n{{{names}}}"'
                     f'{", shape=box" if not s.is_pointed() else ""}];')
    for i, j in sorted(lat.covers()):
        lines.append(f"  s{i} -> s{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_lattice(args) -> tuple[str, bool]:
    return lattice_dot(_ring_from(args)), True


def cmd_braidings(args) -> tuple[dict, bool]:
    bs = enumerate_braidings(args.M, args.zeta)
    rows = [{"xi": str(b.xi), "zeta": str(b.zeta)} for b in bs]
    return {"M": args.M, "zeta": None if args.zeta is None else str(args.zeta),
            "count": len(rows), "braidings": rows}, True


def cmd_center(args) -> tuple[dict, bool]:
    br = InducedBraiding(ising_pairing(), args.xi)
    rep = induced_center(args.N, br)
    return {"N": args.N, "xi": str(args.xi), "zeta": str(args.xi ** (2 ** args.N)),
            "center": rep.center_labels, "verdict": rep.verdict.value,
            "witness": rep.witness_label,
            "q": {k: str(v) for k, v in rep.q_values.items()}}, True


def _degeneracy_body(N, zeta):
    t = degeneracy_criterion(N, zeta)
    rows = [{"xi": str(r.xi), "verdict": r.verdict.value,
             "slightly_degenerate": r.slightly_degenerate,
             "pointed_nondegenerate": r.pointed_nondegenerate} for r in t.rows]
    return {"N": N, "zeta": str(zeta), "asserted": t.asserted,
            "equivalence_holds": t.equivalence_holds, "rows": rows}, t.holds


def cmd_degeneracy(args) -> tuple[dict, bool]:
    return _degeneracy_body(args.N, args.zeta)


def cmd_decompose(args) -> tuple[dict, bool]:
    ring = load_ring(args.ring)
    res = decompose_gty(ring)
    trace = res.trace.to_json()
    if args.trace:
        Path(args.trace).write_text(_dump(trace) + "\n", encoding="utf-8")
    if res.ok:
        body = {"verdict": "Decomposed", "N": res.N, "B_invariant_factors": list(res.B_factors),
                "B_order": res.B_order}
    else:
        body = {"verdict": "NotDecomposable", "step": res.step, "reason": res.reason}
    if not args.trace:
        body["trace"] = trace
    return body, res.ok


def cmd_isomorphic(args) -> tuple[dict, bool]:
    r1, r2 = load_ring(args.first), load_ring(args.second)
    phi = ring_isomorphic(r1, r2)
    ok = phi is not None and is_isomorphism(r1, r2, phi)
    return {"isomorphic": ok, "witness": phi,
            "mapping": None if phi is None else {r1.labels[i]: r2.labels[j] for i, j in enumerate(phi)}}, ok


def cmd_classify(args) -> tuple[dict, bool]:
    data = json.loads(Path(args.premetric).read_text(encoding="utf-8"))
    q = QuadraticForm.from_json(data)
    if not is_quadratic(q):
        return {"valid": False, "verdict": None}, False
    c = classify_center(q)
    return {"valid": True, "verdict": c.verdict.value,
            "radical": [list(g) for g in c.support],
            "witness": None if c.witness is None else list(c.witness)}, True


def cmd_info(args) -> tuple[dict, bool]:
    ring = _ring_from(args)
    rep = validate_ring(ring)
    body = {"rank": ring.rank, "labels": list(ring.labels), "valid": rep.ok,
            "violations": rep.malformed + rep.violations}
    if rep.ok:
        d = fp_dims(ring)
        body["dims"] = [str(x) for x in d.dims]
        body["fpdim"] = str(d.total)
        body["cd"] = sorted(str(x) for x in cd_set(ring))
        inv = invertibles(ring)
        body["invertibles"] = None if inv.invariant_factors is None else list(inv.invariant_factors)
        body["universal_grading"] = list(universal_grading(ring).group.invariant_factors)
    return body, rep.ok


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fusionkit", description="Exact fusion-ring and pointed braided computations.")
    p.add_argument("--version", action="version", version=f"fusionkit {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build a family ring and write it as JSON")
    _add_family_opts(c, with_file=False)
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="run a named theorem check")
    v.add_argument("--theorem", required=True, choices=THEOREMS)
    _add_family_opts(v)
    v.set_defaults(func=cmd_verify)

    lt = sub.add_parser("lattice", help="subring lattice as a DOT graph")
    _add_family_opts(lt)
    lt.set_defaults(func=cmd_lattice)

    b = sub.add_parser("braidings", help="braidings xi of vect_{Z_M}^zeta")
    b.add_argument("--M", type=int, required=True)
    b.add_argument("--zeta", type=_root_arg)
    b.set_defaults(func=cmd_braidings)

    ce = sub.add_parser("center", help="Mueger centre of I_N under an induced braiding")
    ce.add_argument("--N", type=int, required=True)
    ce.add_argument("--xi", type=_root_arg, required=True)
    ce.set_defaults(func=cmd_center)

    dt = sub.add_parser("degeneracy-table", help="slightly degenerate vs non-degenerate table over xi")
    dt.add_argument("--N", type=int, required=True)
    dt.add_argument("--zeta", type=_root_arg, default=MINUS_ONE)
    dt.set_defaults(func=cmd_degeneracy)

    de = sub.add_parser("decompose", help="split a GTY ring as I_N x B")
    de.add_argument("ring")
    de.add_argument("--trace", help="write the decomposition trace to this file")
    de.set_defaults(func=cmd_decompose)

    iso = sub.add_parser("isomorphic", help="based-ring isomorphism between two ring files")
    iso.add_argument("first")
    iso.add_argument("second")
    iso.set_defaults(func=cmd_isomorphic)

    cl = sub.add_parser("classify", help="classify the radical of a premetric group file")
    cl.add_argument("premetric")
    cl.set_defaults(func=cmd_classify)

    inf = sub.add_parser("info", help="dimensions, groups and validity of a ring")
    _add_family_opts(inf)
    inf.set_defaults(func=cmd_info)

    for sp in sub.choices.values():
        if "--out" not in sp._option_string_actions:
            sp.add_argument("--out", help="write output here instead of stdout")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        result, ok = args.func(args)
    except UsageError as exc:
        print(f"fusionkit: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError, KeyError, json.JSONDecodeError) as exc:
        print(f"fusionkit: error: {exc}", file=sys.stderr)
        return 2
    if isinstance(result, str):
        if args.out:
            Path(args.out).write_text(result, encoding="utf-8")
        else:
            sys.stdout.write(result)
        return 0 if ok else 1
    report = {"command": args.command,
              "inputs": {k: _plain(v) for k, v in sorted(vars(args).items())
                         if k not in ("func", "command") and v is not None},
              "result": result, "ok": ok,
              "timing": {"seconds": round(time.perf_counter() - start, 6)}}
    _emit(report, args.out)
    return 0 if ok else 1


def _plain(v):
    if isinstance(v, RootOfUnity):
        return str(v)
    if isinstance(v, tuple):
        return list(v)
    return v


if __name__ == "__main__":
    sys.exit(main())
