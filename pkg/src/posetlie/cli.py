"""Command-line front end: table rendering, series export, invariant suites.

Every command is deterministic for fixed inputs (block merges are ordered by
weight, so --jobs never changes the bytes emitted).  Exit status is 0 iff all
requested checks pass, 1 on a failed check, 2 on bad usage.
"""

from __future__ import annotations

import argparse
import io
import csv
import json
import random
import sys
from dataclasses import dataclass

from . import poset as P
from . import families as F
from . import subgraphs as SG
from . import cup as CUP
from .liealg import PosetLieAlgebra, REFLEXIVE, STRICT
from . import chevalley
from .chevalley import p_complex, p_complex_nonempty, weight_blocks
from . import homology as H
from . import morse


PRIMES = (2, 3, 5, 7)


def _is_prime(q):
    return q >= 2 and all(q % d for d in range(2, int(q ** 0.5) + 1))


def _usage(msg):
    print(f"error: {msg}", file=sys.stderr)
    return SystemExit(2)


@dataclass
class RunConfig:
    command: str
    poset_src: str          # "family:NAME:PARAMS" or "file:PATH"
    mode: str               # "reflexive" | "strict"
    coeff: str              # "Z" | "Q" | "Zp:P"
    char: int | None        # None = integral, 0 = Q, p = F_p
    max_degree: int | None
    jobs: int
    fmt: str                # "text" | "json" | "csv"
    out: str | None

    @classmethod
    def from_args(cls, args):
        coeff = getattr(args, "coeff", "Z")
        if coeff == "Z":
            char = None
        elif coeff == "Q":
            char = 0
        elif coeff.startswith("Zp:"):
            char = int(coeff[3:])
            if not _is_prime(char):
                raise _usage(f"Zp wants a prime, got {char}")
        else:
            raise _usage(f"bad --coeff {coeff!r} (Z, Q, or Zp:P)")
        fam = getattr(args, "family", None)
        path = getattr(args, "poset", None)
        if fam and path:
            raise _usage("give --family or --poset, not both")
        src = f"family:{fam}" if fam else (f"file:{path}" if path else "")
        return cls(
            command=args.command,
            poset_src=src,
            mode=getattr(args, "mode", "reflexive"),
            coeff=coeff,
            char=char,
            max_degree=getattr(args, "max_degree", None),
            jobs=getattr(args, "jobs", 1),
            fmt=getattr(args, "format", None) or _DEFAULT_FMT[args.command],
            out=getattr(args, "out", None),
        )

    def poset(self):
        if self.poset_src.startswith("family:"):
            return P.family(self.poset_src[7:])
        if self.poset_src.startswith("file:"):
            return P.load(self.poset_src[5:])
        raise _usage("need --family NAME:PARAMS or --poset PATH")

    def algebra(self):
        mode = REFLEXIVE if self.mode == "reflexive" else STRICT
        return PosetLieAlgebra(self.poset(), mode)

    def family_parts(self):
        """(name, [params]) when the source is a builtin family, else None."""
        if not self.poset_src.startswith("family:"):
            return None
        name, _, rest = self.poset_src[7:].partition(":")
        params = [int(x) for x in rest.split(",")] if rest else []
        return name, params


_DEFAULT_FMT = {
    "homology": "text",
    "hp": "csv",
    "verify": "text",
    "subgraphs": "csv",
    "cup": "json",
}


def _emit(cfg, text):
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
        if text and not text.endswith("\n"):
            sys.stdout.write("\n")


# -- homology -------------------------------------------------------------


def cmd_homology(cfg):
    g = cfg.algebra()
    if cfg.char is None:
        table = H.poset_homology_Z(g, jobs=cfg.jobs, max_degree=cfg.max_degree)
        if cfg.fmt == "text":
            out = table.text() + "\n"
        elif cfg.fmt == "json":
            out = table.to_json() + "\n"
        else:
            buf = io.StringIO()
            w = csv.writer(buf)
            w.writerow(["degree", "free_rank", "invariant_factors"])
            for k, grp in enumerate(table.groups):
                w.writerow([k, grp.free, ";".join(map(str, grp.torsion))])
            out = buf.getvalue()
        _emit(cfg, out)
        return 0
    dims = H.poset_homology_field(g, cfg.char, jobs=cfg.jobs,
                                  max_degree=cfg.max_degree)
    label = "Q" if cfg.char == 0 else f"Z_{cfg.char}"
    if cfg.fmt == "text":
        out = "".join(f"dim H_{k}({label}) = {d}\n" for k, d in enumerate(dims))
    elif cfg.fmt == "json":
        out = json.dumps({"char": cfg.char, "dims": dims}) + "\n"
    else:
        out = F.HPSeries(dims).to_csv() if any(dims) else "degree,coefficient\n"
    _emit(cfg, out)
    return 0


# -- hp: closed forms vs engine --------------------------------------------


def _formula_for(name, params, char):
    """Closed-form reflexive-mode series for (family, characteristic)."""
    if char == 0:
        sizes = {"chain": lambda n: n, "antichain": lambda n: n,
                 "cycle": lambda n: 2 * n,
                 "complete-bipartite": lambda m, n: m + n,
                 "fork": lambda n: 2 * n + 1, "umbrella": lambda n: n + 2,
                 "diamond": lambda n: n + 2}
        return F.hp_reflexive_char0(sizes[name](*params))
    if name == "antichain":
        return F.HPSeries.one_plus_t_pow(params[0])
    if name == "cycle":
        n, = params
        return F.hp_cycle_Z2(n) if char == 2 else F.hp_cycle_Zp(n, char)
    if name == "complete-bipartite":
        m, n = params
        if char == 2:
            return F.hp_complete_bipartite_Z2_stanley(m, n)
        if m == char:
            return F.hp_complete_bipartite_pnp(m, n)
        if n == char:
            return F.hp_complete_bipartite_pnp(n, m)
        raise KeyError
    if name == "fork":
        n, = params
        return F.hp_fork_Z2(n) if char == 2 else F.hp_fork_Zp(n, char)
    if name == "umbrella":
        n, = params
        return F.hp_umbrella_Z2(n) if char == 2 else F.HPSeries.one_plus_t_pow(n + 2)
    if name == "diamond":
        n, = params
        if char == 2:
            return F.hp_diamond_Z2(n)
        if char == 3:
            return F.hp_diamond_Z3(n)
        raise KeyError
    raise KeyError


def cmd_hp(cfg, source, normalized):
    if cfg.char is None:
        raise _usage("hp emits field dimensions; use --coeff Q or Zp:P")
    if cfg.mode != "reflexive":
        raise _usage("the closed forms cover the reflexive algebra")
    series = engine = None
    if source in ("formula", "both"):
        parts = cfg.family_parts()
        if parts is None:
            raise _usage("--source formula needs a builtin --family")
        try:
            series = _formula_for(parts[0], parts[1], cfg.char)
        except KeyError:
            raise _usage(
                f"no closed form for {parts[0]} over char {cfg.char}")
    if source in ("engine", "both"):
        dims = H.poset_homology_field(cfg.algebra(), cfg.char, jobs=cfg.jobs,
                                      max_degree=cfg.max_degree)
        engine = F.HPSeries(dims)
    if source == "both":
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["degree", "formula", "engine", "diff"])
        top = max(series.degree, engine.degree)
        bad = 0
        for k in range(top + 1):
            a, b = series.coefficient(k), engine.coefficient(k)
            w.writerow([k, a, b, a - b])
            bad += a != b
        _emit(cfg, buf.getvalue())
        return 0 if bad == 0 else 1
    f = series if source == "formula" else engine
    _emit(cfg, f.normalized_csv() if normalized else f.to_csv())
    return 0


# -- verify suites ----------------------------------------------------------


class Report:
    def __init__(self, fmt):
        self.rows = []
        self.fmt = fmt

    def add(self, ok, name, detail=""):
        self.rows.append({"ok": bool(ok), "check": name, "detail": detail})

    def render(self):
        if self.fmt == "json":
            return json.dumps(self.rows, indent=1) + "\n"
        lines = []
        for r in self.rows:
            tag = "PASS" if r["ok"] else "FAIL"
            tail = f"  [{r['detail']}]" if r["detail"] else ""
            lines.append(f"{tag}  {r['check']}{tail}")
        n_bad = sum(not r["ok"] for r in self.rows)
        lines.append(f"{len(self.rows) - n_bad}/{len(self.rows)} checks passed")
        return "\n".join(lines) + "\n"

    @property
    def ok(self):
        return all(r["ok"] for r in self.rows)


def suite_duality(rep, args):
    """Strict-mode integral tables are Poincare dual for connected posets."""
    for n in range(1, args.max_n + 1):
        for p in P.connected_posets(n):
            g = PosetLieAlgebra(p, STRICT)
            table = H.poset_homology_Z(g, jobs=args.jobs)
            if not H.verify_poincare_duality(table, g.dim):
                rep.add(False, f"duality strict {p!r}")
    rep.add(True, f"duality holds on all connected strict algebras, n <= {args.max_n}")
    # negative control: the reflexive chain must break the symmetry
    g = PosetLieAlgebra(P.chain(3), REFLEXIVE)
    table = H.poset_homology_Z(g)
    bad = H.verify_poincare_duality(table, g.dim)
    rep.add(not bad, "duality fails on reflexive chain:3 (expected negative)")


def suite_recursion(rep, args):
    for n in range(2, args.max_n + 1):
        for char in (0, 2):
            ok = H.verify_nil_recursion(n, char)
            rep.add(ok, f"two-step recursion, strict chain:{n}, char {char}")


def suite_torsion_scan(rep, args):
    posets = [q for n in range(1, args.max_n + 1) for q in P.connected_posets(n)]
    rows = H.torsion_scan(posets, jobs=args.jobs)
    bad = [r for r in rows
           if not r["interval_divisors_ok"] or not r.get("bounded_primes_ok", True)]
    for r in bad:
        rep.add(False, f"torsion scan {r['poset']!r}",
                f"missing divisors {r['missing_divisors']}")
    rep.add(not bad, f"interval/bounded torsion predictions, "
            f"{len(rows)} connected posets, n <= {args.max_n}")


def suite_conjecture(rep, args):
    """Empirical scan only: seeing p-torsion, look for every smaller prime.

    A clean pass is evidence, not a proof; the report says so explicitly.
    """
    counterexamples = []
    scanned = 0
    for n in range(1, args.max_n + 1):
        for p in P.connected_posets(n):
            g = PosetLieAlgebra(p, REFLEXIVE)
            primes = H.poset_homology_Z(g, jobs=args.jobs).torsion_primes()
            scanned += 1
            for q in primes:
                missing = [r for r in range(2, q) if _is_prime(r) and r not in primes]
                if missing:
                    counterexamples.append((p, q, missing))
    for p, q, missing in counterexamples:
        rep.add(False, f"downward torsion closure {p!r}",
                f"has {q}-torsion, missing {missing}")
    rep.add(not counterexamples,
            f"downward torsion closure, {scanned} connected posets, "
            f"n <= {args.max_n} (EMPIRICAL scan, not a proof)")


def suite_stanley_konvalinka(rep, args):
    top = args.max_n
    for m in range(1, top + 1):
        for n in range(1, top + 1):
            a = F.hp_complete_bipartite_Z2_stanley(m, n)
            b = F.hp_complete_bipartite_Z2_konvalinka(m, n)
            c = (F.HPSeries.one_plus_t_pow(m + n)
                 * SG.enumerate_even_matrices(m, n, 2))
            rep.add(a == b, f"two closed forms agree, bipartite {m},{n}")
            rep.add(a == c, f"closed form = even-matrix enumeration, {m},{n}")


def suite_formulas(rep, args):
    for n in range(2, 4):
        eng = F.HPSeries(H.poset_homology_field(
            PosetLieAlgebra(P.cycle_poset(n), REFLEXIVE), 2, jobs=args.jobs))
        rep.add(F.hp_cycle_Z2(n) == eng, f"crown series, char 2, cycle:{n}")
    for p_ in (2, 3):
        for n in range(1, 8 - p_ + 1):
            pos = P.complete_bipartite(p_, n)
            if p_ + n <= 6:
                eng = F.HPSeries(H.poset_homology_field(
                    PosetLieAlgebra(pos, REFLEXIVE), p_, jobs=args.jobs))
            else:
                eng = F.HPSeries(H.reflexive_field_dims_factored(pos, p_))
            rep.add(F.hp_complete_bipartite_pnp(p_, n) == eng,
                    f"bipartite side=char series, char {p_}, {p_},{n}")
    for n in range(1, 4):
        eng = F.HPSeries(H.poset_homology_field(
            PosetLieAlgebra(P.fork(n), REFLEXIVE), 2, jobs=args.jobs))
        rep.add(F.hp_fork_Z2(n) == eng, f"fork series, char 2, fork:{n}")
    for n in range(1, 5):
        eng = F.HPSeries(H.poset_homology_field(
            PosetLieAlgebra(P.umbrella(n), REFLEXIVE), 2, jobs=args.jobs))
        rep.add(F.hp_umbrella_Z2(n) == eng, f"umbrella series, char 2, umbrella:{n}")
    for n in range(1, 6):
        eng = F.HPSeries(H.poset_homology_field(
            PosetLieAlgebra(P.diamond(n), REFLEXIVE), 2, jobs=args.jobs))
        rep.add(F.hp_diamond_Z2(n) == eng, f"diamond series, char 2, diamond:{n}")
    for n in range(1, 5):
        eng = F.HPSeries(H.poset_homology_field(
            PosetLieAlgebra(P.diamond(n), REFLEXIVE), 3, jobs=args.jobs))
        rep.add(F.hp_diamond_Z3(n) == eng, f"diamond series, char 3, diamond:{n}")


def suite_morse(rep, args):
    for n in range(3, 8):
        block, matching, marked = morse.nil_matching(n)
        if not morse.verify_matching(block, matching):
            rep.add(False, f"nil matching invalid, chain:{n}")
            continue
        red = morse.reduce_complex(block, matching)
        db = red.boundary_of(marked["alpha"])
        ok = set(db) == {marked["beta"]} and abs(db[marked["beta"]]) == n - 2
        rep.add(ok, f"reduced boundary alpha -> (n-2) beta, chain:{n}")
    g = PosetLieAlgebra(P.chain(4), REFLEXIVE)
    block, matching, marked = morse.interval_matching(g, 1, 4, [2])
    red = morse.reduce_complex(block, matching)
    m = marked["m"]
    flows = [red.boundary_of(u).get(marked["v"], 0)
             for u in marked["critical_primed"]]
    ok = (morse.verify_matching(block, matching)
          and H.homology_over_Z(block) == H.homology_over_Z(red)
          and H.homology_over_Z(block).has_exact_summand(m)
          and flows and all(abs(x) == m for x in flows))
    rep.add(ok, f"interval matching flows critical cells to +-{m}v, chain:4")
    rng = random.Random(args.seed)
    trials = 0
    for _ in range(args.trials):
        n = rng.randint(2, 4)
        posets = P.connected_posets(n)
        p = posets[rng.randrange(len(posets))]
        g = PosetLieAlgebra(p, STRICT)
        blocks = [b for b in weight_blocks(g).values()
                  if b.total_cells() and max(b.dim(k) for k in b.cells) <= 12]
        if not blocks:
            continue
        c = blocks[rng.randrange(len(blocks))]
        m = morse.greedy_matching(c, rng)
        red = morse.reduce_complex(c, m)
        if H.homology_over_Z(c) != H.homology_over_Z(red):
            rep.add(False, f"greedy reduction changed homology on {p!r}")
        trials += 1
    rep.add(True, f"greedy Morse reductions preserve SNF homology, "
            f"{trials} random blocks, seed {args.seed}")


def suite_propagation(rep, args):
    """Nonempty p-divisible subcomplex propagates to every smaller prime."""
    bad = 0
    total = 0
    for n in range(1, args.max_n + 1):
        for p in P.all_posets(n):
            g = PosetLieAlgebra(p, STRICT)
            flags = {q: p_complex_nonempty(g, q) for q in PRIMES}
            total += 1
            for i, q in enumerate(PRIMES):
                for r in PRIMES[:i]:
                    if flags[q] and not flags[r]:
                        bad += 1
                        rep.add(False, f"propagation {p!r}", f"{q} but not {r}")
    rep.add(bad == 0, f"divisible-subcomplex propagation, all {total} posets, "
            f"n <= {args.max_n}, primes {list(PRIMES)}")


SUITES = {
    "duality": (suite_duality, 5),
    "recursion": (suite_recursion, 5),
    "torsion-scan": (suite_torsion_scan, 4),
    "conjecture": (suite_conjecture, 4),
    "stanley-konvalinka": (suite_stanley_konvalinka, 4),
    "formulas": (suite_formulas, None),
    "morse": (suite_morse, None),
    "propagation": (suite_propagation, 5),
}


def cmd_verify(cfg, args):
    fn, default_n = SUITES[args.suite]
    if args.max_n is None:
        args.max_n = default_n
    rep = Report(cfg.fmt)
    fn(rep, args)
    _emit(cfg, rep.render())
    return 0 if rep.ok else 1


# -- subgraphs / cup ---------------------------------------------------------


def cmd_subgraphs(cfg, args):
    p = cfg.poset()
    q = args.prime
    if args.action == "enumerate":
        series = SG.enumerate_p_plus_regular(p, q)
        out = SG.counts_csv(series)
    elif args.action == "eulerian":
        out = SG.counts_csv(SG.count_eulerian_by_size(p))
    elif args.action == "matrices":
        parts = cfg.family_parts()
        if not parts or parts[0] != "complete-bipartite":
            raise _usage("matrices wants --family complete-bipartite:m,n")
        m, n = parts[1]
        out = SG.counts_csv(SG.enumerate_even_matrices(m, n, q))
    elif args.action == "witness":
        cert = SG.full_nondiagonal_torsion_witness(p, q)
        out = json.dumps(cert, indent=1, sort_keys=True) + "\n"
        _emit(cfg, out)
        return 0 if cert["ok"] else 1
    _emit(cfg, out)
    return 0


def _cup_basis(cfg):
    parts = cfg.family_parts()
    char = cfg.char if cfg.char is not None else 2
    if parts and parts[0] == "umbrella":
        return CUP.umbrella_basis(parts[1][0], char), parts
    if parts and parts[0] == "diamond":
        return CUP.diamond_basis(parts[1][0], char), parts
    return CUP.height1_basis(cfg.poset(), char), parts


def cmd_cup(cfg, args):
    basis, parts = _cup_basis(cfg)
    table = CUP.wedge_basis_cup(basis)
    if args.action == "table":
        out = (table.to_json() + "\n" if cfg.fmt == "json"
               else _cup_text(table))
        _emit(cfg, out)
        return 0
    if args.action == "probe":
        k = CUP.minimal_generator_probe(table)
        _emit(cfg, json.dumps({"minimal_generators": k}) + "\n")
        return 0
    # relations
    if not parts or parts[0] not in ("umbrella", "diamond"):
        raise _usage("relation suites exist for umbrella and diamond")
    rel = (CUP.umbrella_relations if parts[0] == "umbrella"
           else CUP.diamond_relations)(parts[1][0])
    report = CUP.verify_presentation(table, rel)
    out = json.dumps(report, indent=1, sort_keys=True) + "\n"
    _emit(cfg, out)
    return 0 if report["ok"] else 1


def _cup_text(table):
    lines = []
    for (a, b), chain in sorted(table.products.items()):
        rhs = " + ".join(f"{c}*{name}" if c != 1 else name
                         for name, c in sorted(chain.items())) or "0"
        lines.append(f"{a} . {b} = {rhs}")
    return "\n".join(lines) + "\n"


# -- argument plumbing -------------------------------------------------------


def _add_common(sp, with_coeff=True):
    sp.add_argument("--family", help="builtin family, NAME:PARAMS")
    sp.add_argument("--poset", help="poset file (text or JSON)")
    sp.add_argument("--mode", choices=["reflexive", "strict"],
                    default="reflexive")
    if with_coeff:
        sp.add_argument("--coeff", default="Z", help="Z, Q, or Zp:P")
    sp.add_argument("--max-degree", type=int, dest="max_degree")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--format", choices=["text", "json", "csv"])
    sp.add_argument("--out")


def build_parser():
    ap = argparse.ArgumentParser(
        prog="posetlie",
        description="Exact homology of Lie algebras built from finite posets")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("homology", help="integral or field homology table")
    _add_common(sp)

    sp = sub.add_parser("hp", help="Hilbert-Poincare series over a field")
    _add_common(sp)
    sp.add_argument("--source", choices=["formula", "engine", "both"],
                    default="formula")
    sp.add_argument("--normalized", action="store_true",
                    help="divide by the largest coefficient")

    sp = sub.add_parser("verify", help="run an invariant suite")
    sp.add_argument("--suite", choices=sorted(SUITES), required=True)
    sp.add_argument("--max-n", "--max", type=int, dest="max_n")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--trials", type=int, default=25)
    sp.add_argument("--format", choices=["text", "json"])
    sp.add_argument("--out")

    sp = sub.add_parser("subgraphs", help="regular edge-subset combinatorics")
    _add_common(sp, with_coeff=False)
    sp.add_argument("--prime", type=int, default=2)
    sp.add_argument("--action", default="enumerate",
                    choices=["enumerate", "eulerian", "matrices", "witness"])

    sp = sub.add_parser("cup", help="cup-product tables and relation suites")
    _add_common(sp)
    sp.add_argument("--action", default="table",
                    choices=["table", "relations", "probe"])
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    cfg = RunConfig.from_args(args)
    try:
        if cfg.command == "homology":
            return cmd_homology(cfg)
        if cfg.command == "hp":
            return cmd_hp(cfg, args.source, args.normalized)
        if cfg.command == "verify":
            return cmd_verify(cfg, args)
        if cfg.command == "subgraphs":
            return cmd_subgraphs(cfg, args)
        if cfg.command == "cup":
            return cmd_cup(cfg, args)
    except (ValueError, OSError) as exc:
        raise _usage(str(exc))
    raise AssertionError(cfg.command)


if __name__ == "__main__":
    sys.exit(main())
