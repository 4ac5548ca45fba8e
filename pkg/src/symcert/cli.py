"""Command-line front end: ``symcert <subcommand> [options]``.

Every invocation produces one report object with the fields
``command``, ``config``, ``inputs``, ``result``, ``certificate`` and ``timing``
(plus ``error`` on failure).  ``--format structured`` prints it as JSON;
``--format human`` prints a short readable summary.

Exit codes: 0 success/confirmed, 1 negative or inconclusive result,
2 usage error, 3 resource ceiling reached.
"""

from __future__ import annotations

import argparse
import json
import math
import re
import sys
import time
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass
from pathlib import Path

from . import _kernels, cyclotomic, lefschetz, primecert, symmetric
from .groebner import (
    Budget,
    IdealSpec,
    NonHomogeneousError,
    NotArtinianError,
    ResourceCeilingExceeded,
    groebner_basis,
    ideal_equal,
    initial_ideal,
    krull_dimension,
    radical_is_irrelevant_maximal,
    spolynomials_reduce_to_zero,
)
from .polycore import (
    MonomialOrder,
    Polynomial,
    PolynomialSyntaxError,
    PolyRingContext,
    RingMismatchError,
    UnknownVariableError,
    arith,
    coefficient,
)

__all__ = ["main", "run_subcommand", "run_fixture_suite", "run_scan", "expand_generator",
           "parse_generators", "RunConfig", "FIXTURE_SCHEMA", "DEFAULT_CORPUS"]

OK, NEGATIVE, USAGE, CEILING = 0, 1, 2, 3
FIXTURE_SCHEMA = "symcert-fixtures/1"
DEFAULT_CORPUS = Path(__file__).with_name("fixtures")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


# --- configuration -------------------------------------------------------

@dataclass(frozen=True)
class RunConfig:
    ring_dim: int | None
    names: tuple
    order: MonomialOrder | None
    budget_spairs: int
    budget_enum: int
    fmt: str
    seed: int
    timing: bool

    def __post_init__(self):
        if self.budget_spairs < 1 or self.budget_enum < 1:
            raise UsageError("budgets must be positive")

    @classmethod
    def from_args(cls, args) -> "RunConfig":
        names = tuple(s.strip() for s in args.vars.split(",")) if args.vars else ()
        order = MonomialOrder.parse(args.order) if args.order else None
        n = args.n
        if names and n is not None and len(names) != n:
            raise UsageError(f"--vars names {len(names)} variables but --n is {n}")
        if names and n is None:
            n = len(names)
        return cls(n, names, order, args.budget_spairs, args.budget_enum, args.format,
                   args.seed, args.timing)

    def ctx(self, default_n: int | None = None, order: MonomialOrder | None = None) -> PolyRingContext:
        n = self.ring_dim if self.ring_dim is not None else default_n
        if n is None:
            raise UsageError("this subcommand needs --n")
        if n < 1:
            raise UsageError("--n must be positive")
        return PolyRingContext(n, self.names, order or self.order or MonomialOrder.DEGREVLEX)

    @property
    def budget(self) -> Budget:
        return Budget(max_spairs=self.budget_spairs)

    def as_dict(self) -> dict:
        return {"ring_dim": self.ring_dim, "variables": list(self.names) or None,
                "order": self.order.value if self.order else None,
                "budget_spairs": self.budget_spairs, "budget_enum": self.budget_enum,
                "seed": self.seed, "backend": _kernels.BACKEND}


# --- generator shorthand -------------------------------------------------

_FAMILY = re.compile(r"^([phe])(\d+)$")
_SCHUR = re.compile(r"^s\[\s*(\d+(?:\s*,\s*\d+)*)?\s*\]$")


def split_top_level(text: str) -> list:
    """Split on commas that are not inside brackets or parentheses."""
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch in "[(":
            depth += 1
        elif ch in "])":
            depth -= 1
            if depth < 0:
                raise UsageError(f"unbalanced brackets in {text!r}")
        if ch == "," and depth == 0:
            parts.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    if depth:
        raise UsageError(f"unbalanced brackets in {text!r}")
    parts.append("".join(cur).strip())
    if parts == [""]:
        return []
    if "" in parts:
        raise UsageError(f"empty entry in comma list {text!r}")
    return parts


def expand_generator(token: str, ctx: PolyRingContext) -> Polynomial:
    """p<k>, h<k>, e<k>, s[l1,l2,...] or raw polynomial text.

    A ring variable with the same name as a shorthand takes precedence.
    """
    token = token.strip()
    m = _FAMILY.match(token)
    if m and token not in ctx.names:
        fam, k = m.group(1), int(m.group(2))
        if fam == "p":
            return symmetric.power_sum(ctx, k)
        if fam == "h":
            return symmetric.complete_homogeneous(ctx, k)
        return symmetric.elementary(ctx, k)
    m = _SCHUR.match(token)
    if m:
        lam = [int(x) for x in m.group(1).split(",")] if m.group(1) else []
        return symmetric.schur_jacobi_trudi(ctx, lam)
    return ctx.parse(token)


def parse_generators(text: str, ctx: PolyRingContext) -> list:
    return [expand_generator(tok, ctx) for tok in split_top_level(text or "")]


def _ideal(text: str | None, ctx: PolyRingContext, what: str = "--gens",
           allow_empty: bool = False) -> IdealSpec:
    if text is None:
        raise UsageError(f"this subcommand needs {what}")
    gens = parse_generators(text, ctx)
    if not gens and not allow_empty:
        raise UsageError(f"{what} is empty")
    if any(g.is_zero() for g in gens):
        raise UsageError(f"{what} contains a zero generator")
    return IdealSpec(ctx, tuple(gens))


def _poly(text: str | None, ctx: PolyRingContext, what: str) -> Polynomial:
    if text is None:
        raise UsageError(f"this subcommand needs {what}")
    return expand_generator(text, ctx)


def _int_list(text: str) -> list:
    try:
        return [int(x) for x in split_top_level(text)]
    except ValueError:
        raise UsageError(f"expected a comma-separated integer list, got {text!r}") from None


def _ideal_inputs(I: IdealSpec) -> dict:
    return {"ring_dim": I.ring_dim, "variables": list(I.ctx.names), "generators": I.formatted()}


# --- subcommands -----------------------------------------------------------
# each handler returns (exit code, inputs, result, certificate)

def _cmd_gen(args, cfg):
    ctx = cfg.ctx()
    f = _poly(args.expr, ctx, "--expr")
    result = {"polynomial": ctx.format(f), "degree": f.degree(), "terms": len(f.terms),
              "symmetric": _is_symmetric(f)}
    code = OK
    m = _SCHUR.match(args.expr.strip())
    if m:
        lam = [int(x) for x in m.group(1).split(",")] if m.group(1) else []
        jt = symmetric.schur_jacobi_trudi(ctx, lam)
        bi = symmetric.schur_bialternant(ctx, lam)
        result["jacobi_trudi_equals_bialternant"] = jt == bi
        parts = [x for x in lam if x]
        if len(parts) == 2 and parts[1] == 1:
            a = parts[0]
            h = lambda k: symmetric.complete_homogeneous(ctx, k)
            result["hook_identity"] = jt == h(1) * h(a) - h(a + 1)
        if not all(v for k, v in result.items() if k in ("jacobi_trudi_equals_bialternant",
                                                           "hook_identity")):
            code = NEGATIVE
    return code, {"expr": args.expr}, result, None


def _is_symmetric(f: Polynomial) -> bool:
    n = f.ring_dim
    if n == 1:
        return True
    swap = list(range(n))
    swap[0], swap[1] = 1, 0
    cycle = list(range(1, n)) + [0]
    return f.permute(swap) == f and f.permute(cycle) == f


def _cmd_arith(args, cfg):
    ctx = cfg.ctx()
    f = _poly(args.f, ctx, "--f")
    if args.op in ("pow", "scale"):
        if args.g is None:
            raise UsageError(f"--op {args.op} needs --g (an integer or rational)")
        other = int(args.g) if args.op == "pow" else coefficient(args.g)
        if args.op == "pow" and other < 0:
            raise UsageError("negative powers are not polynomials")
    else:
        other = _poly(args.g, ctx, "--g")
    out = arith(args.op, f, other)
    return OK, {"op": args.op, "f": ctx.format(f), "g": str(args.g)}, \
        {"polynomial": ctx.format(out), "degree": out.degree(), "terms": len(out.terms)}, None


def _cmd_derive(args, cfg):
    if args.identities:
        ctx = cfg.ctx()
        defects = symmetric.derivative_identity_defects(ctx, args.identities, args.a)
        ok = all(d.is_zero() for d in defects)
        return (OK if ok else NEGATIVE), {"family": args.identities, "a": args.a}, \
            {"holds": ok, "defects": [ctx.format(d) for d in defects]}, None
    if args.newton:
        ctx = cfg.ctx()
        d = symmetric.newton_identity_defect(ctx, args.newton, args.index)
        return (OK if d.is_zero() else NEGATIVE), {"identity": args.newton, "index": args.index}, \
            {"holds": d.is_zero(), "defect": ctx.format(d)}, None
    if args.residue_p is not None:
        ctx = cfg.ctx()
        res = symmetric.residue_p_mod_initial(ctx, args.residue_p)
        return OK, {"c": args.residue_p, "modulo": [f"p{i}" for i in range(1, ctx.ring_dim)]}, \
            {**res.as_dict(), "representative": ctx.format(res.polynomial(ctx))}, None
    if args.residue_h is not None:
        ctx = cfg.ctx(default_n=3)
        if ctx.ring_dim != 3:
            raise UsageError("the h-residue table is for three variables")
        res = symmetric.residue_h_mod_h1h4(args.residue_h)
        return OK, {"c": args.residue_h, "modulo": ["h1", "h4"]}, \
            {**res.as_dict(), "representative": ctx.format(res.polynomial(ctx))}, None
    ctx = cfg.ctx()
    f = _poly(args.f, ctx, "--f")
    if args.euler:
        total = sum((ctx.var(i) * f.derivative(i) for i in range(1, ctx.ring_dim + 1)),
                    Polynomial.zero(ctx.ring_dim))
        ok = f.is_homogeneous() and total == f.scale(f.degree() if not f.is_zero() else 0)
        return (OK if ok else NEGATIVE), {"f": ctx.format(f)}, \
            {"euler_identity": ok, "sum_x_i_df_dx_i": ctx.format(total)}, None
    if args.var is None:
        raise UsageError("derive needs --var, --euler, --identities, --newton or a residue option")
    i = int(args.var) if args.var.isdigit() else ctx.index_of(args.var) + 1
    if not 1 <= i <= ctx.ring_dim:
        raise UsageError(f"variable index {i} out of range")
    d = f.derivative(i)
    return OK, {"f": ctx.format(f), "var": ctx.names[i - 1]}, {"polynomial": ctx.format(d)}, None


def _cmd_gb(args, cfg):
    ctx = cfg.ctx()
    I = _ideal(args.gens, ctx)
    G = groebner_basis(I, ctx.order, cfg.budget)
    result = {"order": G.order.value, "basis": [ctx.format(g) for g in G.basis],
              "leading_monomials": [ctx.format(Polynomial.monomial(m)) for m in G.leading_monomials()],
              "is_unit": G.is_unit()}
    if args.verify:
        result["spolynomials_reduce_to_zero"] = spolynomials_reduce_to_zero(G)
    return OK, _ideal_inputs(I), result, None


def _cmd_member(args, cfg):
    ctx = cfg.ctx()
    I = _ideal(args.ideal or args.gens, ctx, "--ideal")
    f = _poly(args.f, ctx, "--f")
    G = groebner_basis(I, ctx.order, cfg.budget)
    nf = G.normal_form(f, cfg.budget)
    return (OK if nf.is_zero() else NEGATIVE), {**_ideal_inputs(I), "f": ctx.format(f)}, \
        {"member": nf.is_zero(), "normal_form": ctx.format(nf)}, None


def _cmd_equal(args, cfg):
    ctx = cfg.ctx()
    texts = list(args.ideal or [])
    if args.gens:
        texts.insert(0, args.gens)
    if len(texts) < 2:
        raise UsageError("equal needs at least two ideals (repeat --ideal)")
    ideals = [_ideal(t, ctx, "--ideal") for t in texts]
    pairs = []
    for j in range(1, len(ideals)):
        pairs.append({"left": 0, "right": j,
                      "equal": ideal_equal(ideals[0], ideals[j], ctx.order, cfg.budget)})
    ok = all(p["equal"] for p in pairs)
    return (OK if ok else NEGATIVE), {"ideals": [I.formatted() for I in ideals], "ring_dim": ctx.ring_dim}, \
        {"all_equal": ok, "comparisons": pairs}, None


def _cmd_dim(args, cfg):
    ctx = cfg.ctx()
    I = _ideal(args.gens, ctx)
    rep = krull_dimension(I, cfg.budget)
    return OK, _ideal_inputs(I), {**rep.as_dict(),
                                  "radical_irrelevant": radical_is_irrelevant_maximal(I, cfg.budget)}, None


def _cmd_regseq(args, cfg):
    ctx = cfg.ctx()
    I = _ideal(args.gens, ctx)
    rep = krull_dimension(I, cfg.budget)
    regular = primecert.is_regular_sequence(I, cfg.budget)
    return (OK if regular else NEGATIVE), _ideal_inputs(I), \
        {"regular_sequence": regular, "height": rep.height, "generators": len(I)}, None


def _cmd_jacobian(args, cfg):
    ctx = cfg.ctx()
    if args.partials:
        f = _poly(args.partials, ctx, "--partials")
        P = primecert.partials_ideal(f, ctx)
        rep = krull_dimension(P, cfg.budget)
        irr = radical_is_irrelevant_maximal(P, cfg.budget)
        ok = rep.height == ctx.ring_dim and irr
        return (OK if ok else NEGATIVE), {"f": ctx.format(f), "ring_dim": ctx.ring_dim}, \
            {"partials": P.formatted(), "height": rep.height,
             "complete_intersection": rep.height == ctx.ring_dim == len(P),
             "radical_irrelevant": irr, "smooth_cone": irr}, None
    I = _ideal(args.gens, ctx)
    J = primecert.jacobian(I, normalize=not args.raw)
    result = {"shape": list(J.shape), "scalar_normalized": J.scalar_normalized,
              "rows": [[ctx.format(p) for p in row] for row in J.rows]}
    size = args.minors if args.minors is not None else len(I)
    if 1 <= size <= min(J.shape):
        M = primecert.minor_ideal(J, size, ctx)
        result["minor_size"] = size
        result["minors"] = M.formatted()
        if M.generators:
            result["height_minors"] = krull_dimension(M, cfg.budget).height
            result["height_I_plus_minors"] = krull_dimension(I.plus(M), cfg.budget).height
    return OK, _ideal_inputs(I), result, None


def _cmd_prime(args, cfg):
    ctx = cfg.ctx()
    I = _ideal(args.gens, ctx)
    cert = primecert.certify_prime(I, cfg.budget)
    result = {"verdict": cert.verdict.value}
    if cert.verdict is primecert.Verdict.PRIME:
        result["replayed"] = primecert.replay_certificate(cert, cfg.budget)
    if args.precheck:
        a, b = _int_list(args.precheck)
        result["arithmetic_precheck"] = primecert.arithmetic_precheck(ctx.ring_dim, a, b).as_dict()
    code = OK if cert.verdict is primecert.Verdict.PRIME else NEGATIVE
    return code, _ideal_inputs(I), result, cert.as_dict()


def _cmd_combine(args, cfg):
    ctx1 = cfg.ctx()
    n2 = args.n2 if args.n2 is not None else ctx1.ring_dim
    ctx2 = PolyRingContext(n2, tuple(f"y{i}" for i in range(1, n2 + 1)), ctx1.order)
    I1 = _ideal(args.gens, ctx1, allow_empty=True)
    I2 = _ideal(args.gens2, ctx2, "--gens2", allow_empty=True)
    c1 = primecert.certify_prime(I1, cfg.budget)
    c2 = primecert.certify_prime(I2, cfg.budget)
    try:
        cert = primecert.combine_disjoint_primes(c1, c2)
    except primecert.CombinationError as exc:
        return NEGATIVE, {"first": _ideal_inputs(I1), "second": _ideal_inputs(I2)}, \
            {"verdict": None, "error": str(exc), "first_verdict": c1.verdict.value,
             "second_verdict": c2.verdict.value}, None
    return OK, {"first": _ideal_inputs(I1), "second": _ideal_inputs(I2)}, \
        {"verdict": cert.verdict.value, "ring_dim": cert.ideal.ring_dim,
         "replayed": primecert.replay_certificate(cert, cfg.budget)}, cert.as_dict()


def _cmd_weights(args, cfg):
    rep = cyclotomic.weight_set(args.m, args.k, args.bound, cfg.budget_enum)
    result = rep.as_dict(with_witnesses=args.witnesses)
    return (OK if rep.agreement else NEGATIVE), {"m": args.m, "k": args.k, "bound": args.bound}, \
        result, None


def _cmd_vanish(args, cfg):
    if args.sweep:
        mm, kk, nn = _int_list(args.sweep)
        rep = cyclotomic.soundness_sweep(mm, kk, nn, cfg.budget_enum)
        return (OK if not rep.counterexamples else NEGATIVE), {"sweep": [mm, kk, nn]}, rep.as_dict(), None
    if args.m is None:
        raise UsageError("vanish needs --m")
    if args.search is not None:
        witness, nodes = cyclotomic.find_vanishing(cyclotomic.reduced_modulus(args.m, args.k),
                                                   args.search, cfg.budget_enum)
        result = {"weight": args.search, "found": witness is not None,
                  "witness": list(witness) if witness is not None else None,
                  "reduced_modulus": cyclotomic.reduced_modulus(args.m, args.k),
                  "guarantee_no_vanishing": cyclotomic.no_vanish_guarantee(args.m, args.search, args.k)
                  if args.m >= 2 and args.search >= 1 else None}
        return (OK if witness is not None else NEGATIVE), {"m": args.m, "k": args.k}, result, None
    if args.exps is None:
        raise UsageError("vanish needs --exps, --search or --sweep")
    spec = cyclotomic.RootSumSpec(args.m, tuple(_int_list(args.exps)), args.k)
    ok = cyclotomic.vanishes(spec)
    mag = abs(cyclotomic.numeric_sum(spec.m, spec.exponents, spec.k))
    return (OK if ok else NEGATIVE), {"m": spec.m, "k": spec.k, "exponents": list(spec.exponents)}, \
        {"vanishes": ok, "weight": spec.weight, "numeric_magnitude_below_1e-9": mag < 1e-9}, None


def _cmd_slp(args, cfg):
    ctx = cfg.ctx()
    I = _ideal(args.gens, ctx)
    if args.ell and args.random_ell:
        raise UsageError("give either --ell or --random-ell")
    if args.random_ell:
        ell = lefschetz.random_linear_form(ctx.ring_dim, cfg.seed)
    elif args.ell:
        ell = _poly(args.ell, ctx, "--ell")
    else:
        ell = None
    rep = lefschetz.slp_check(I, ell, cfg.budget)
    return (OK if rep.verdict else NEGATIVE), _ideal_inputs(I), rep.as_dict(ctx), None


def _cmd_hilbert(args, cfg):
    ctx = cfg.ctx()
    I = _ideal(args.gens, ctx)
    A = lefschetz.artinian_presentation(I, budget=cfg.budget)
    result = {"hilbert": list(A.hilbert), "socle_degree": A.socle_degree, "dimension": len(A.basis)}
    if args.basis:
        result["basis"] = [ctx.format(Polynomial.monomial(m)) for m in A.basis]
    return OK, _ideal_inputs(I), result, None


def _cmd_initial(args, cfg):
    order = cfg.order or MonomialOrder.LEX
    ctx = cfg.ctx(order=order)
    I = _ideal(args.gens, ctx)
    ini = initial_ideal(I, order, cfg.budget)
    result = {"order": order.value, "monomials": ini.formatted()}
    code = OK
    if args.compare:
        other = _ideal(args.compare, ctx, "--compare")
        same = ideal_equal(ini, other, order, cfg.budget)
        result["matches_expected"] = same
        code = OK if same else NEGATIVE
    return code, _ideal_inputs(I), result, None


# --- scans -------------------------------------------------------------------

def _scan_rows(kind: str, n: int, max_v: int, explicit: list | None) -> list:
    if kind == "h1-even":
        ms = explicit or list(range(1, max_v + 1))
        return [(f"m={m}", (m,)) for m in ms]
    if explicit:
        triples = [tuple(t) for t in explicit]
    else:
        triples = [(a, b, c) for a in range(1, max_v + 1) for b in range(a + 1, max_v + 1)
                   for c in range(b + 1, max_v + 1)]
    if kind == "ckw3":
        triples = [t for t in triples if math.gcd(*t) == 1]
    return [(",".join(map(str, t)), t) for t in triples]


def _scan_row(kind: str, n: int, params: tuple, spairs: int) -> dict:
    budget = Budget(max_spairs=spairs)
    ctx = PolyRingContext.standard(n)
    try:
        if kind == "ckw3":
            a, b, c = params
            I = IdealSpec(ctx, tuple(symmetric.power_sum(ctx, x) for x in params))
            regular = primecert.is_regular_sequence(I, budget)
            predicted = (a * b * c) % 6 == 0
            return {"status": "ok", "regular": regular, "conjectured": predicted,
                    "agree": regular == predicted, "necessary_violation": regular and not predicted}
        if kind == "pab-regularity":
            a, b, c = params
            pa, pb, pc = (symmetric.power_sum(ctx, x) for x in params)
            pair = IdealSpec(ctx, (pa, pb))
            pair_verdict = primecert.certify_prime(pair, budget).verdict.value
            G = groebner_basis(pair, budget=budget)
            in_pair = G.normal_form(pc, budget).is_zero()
            regular = primecert.is_regular_sequence(pair.plus([pc]), budget)
            exception = (b, c) == (2 * a, 5 * a)
            applies = pair_verdict == "Prime" and not in_pair
            predicted = (not exception) if applies else None
            return {"status": "ok", "pair_verdict": pair_verdict, "c_in_pair_ideal": in_pair,
                    "regular": regular, "exception_family": exception, "conjectured": predicted,
                    "agree": None if predicted is None else regular == predicted}
        (m,) = params
        I = IdealSpec(ctx, (symmetric.complete_homogeneous(ctx, 1),
                            symmetric.complete_homogeneous(ctx, 2 * m)))
        verdict = primecert.certify_prime(I, budget).verdict.value
        return {"status": "ok", "verdict": verdict, "conjectured": "Prime",
                "agree": verdict == "Prime"}
    except ResourceCeilingExceeded as exc:
        return {"status": "ceiling", "detail": str(exc), "agree": None}


def _load_jsonl(path: Path) -> dict:
    done = {}
    if path.exists():
        for line in path.read_text(encoding="utf-8").splitlines():
            line = line.strip()
            if not line:
                continue
            try:
                row = json.loads(line)
            except json.JSONDecodeError:
                continue        # a torn final line from an interrupted run
            done[row["id"]] = row
    return done


def run_scan(kind: str, n: int, max_v: int, explicit: list | None = None,
             out: Path | None = None, jobs: int = 1, spairs: int = Budget().max_spairs) -> dict:
    """Evaluate every row, reusing rows already recorded in ``out``; rows keep their order."""
    rows = _scan_rows(kind, n, max_v, explicit)
    done = _load_jsonl(out) if out else {}
    key = {"kind": kind, "n": n}
    done = {k: v for k, v in done.items() if v.get("kind") == kind and v.get("n") == n}
    todo = [(rid, p) for rid, p in rows if rid not in done or done[rid].get("status") != "ok"]
    sink = open(out, "a", encoding="utf-8") if out else None
    try:
        def record(rid, params, res):
            row = {"id": rid, **key, "params": list(params), **res}
            done[rid] = row
            if sink:
                sink.write(json.dumps(row, sort_keys=True) + "\n")
                sink.flush()

        if jobs > 1 and len(todo) > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                futs = {pool.submit(_scan_row, kind, n, p, spairs): (rid, p) for rid, p in todo}
                for fut in as_completed(futs):
                    rid, p = futs[fut]
                    record(rid, p, fut.result())
        else:
            for rid, p in todo:
                record(rid, p, _scan_row(kind, n, p, spairs))
    finally:
        if sink:
            sink.close()
    table = [done[rid] for rid, _ in rows]
    summary = {
        "rows": len(table),
        "agreements": sum(1 for r in table if r.get("agree") is True),
        "disagreements": [r["id"] for r in table if r.get("agree") is False],
        "not_applicable": [r["id"] for r in table if r.get("agree") is None and r["status"] == "ok"],
        "ceiling": [r["id"] for r in table if r["status"] == "ceiling"],
    }
    if kind == "ckw3":
        summary["necessary_violations"] = [r["id"] for r in table if r.get("necessary_violation")]
    return {"kind": kind, "n": n, "summary": summary, "table": table,
            "resumed_rows": len(rows) - len(todo)}


def _cmd_scan(args, cfg):
    defaults = {"ckw3": (3, 7), "pab-regularity": (4, 6), "h1-even": (4, 2)}
    n0, max0 = defaults[args.kind]
    n = cfg.ring_dim or n0
    max_v = args.max if args.max is not None else max0
    explicit = None
    if args.rows:
        explicit = [_int_list(r) for r in split_top_level(args.rows.replace(";", ","))] \
            if args.kind == "h1-even" else [_int_list(t) for t in args.rows.split(";")]
        if args.kind == "h1-even":
            explicit = [x for group in explicit for x in group]
        elif any(len(t) != 3 for t in explicit):
            raise UsageError("--rows takes ';'-separated triples like '1,2,5;1,2,3'")
    if args.jobs < 1:
        raise UsageError("--jobs must be positive")
    rep = run_scan(args.kind, n, max_v, explicit, Path(args.out) if args.out else None,
                   args.jobs, cfg.budget_spairs)
    s = rep["summary"]
    code = OK if not s["disagreements"] and not s["ceiling"] else NEGATIVE
    return code, {"kind": args.kind, "n": n, "max": max_v, "rows": args.rows}, rep, None


# --- fixtures ----------------------------------------------------------------

class CorpusError(ValueError):
    pass


def _load_corpus(paths: list) -> list:
    files = []
    for p in paths:
        p = Path(p)
        if p.is_dir():
            files.extend(sorted(p.glob("*.json")))
        elif p.exists():
            files.append(p)
        else:
            raise CorpusError(f"no such corpus path: {p}")
    cases, seen = [], set()
    for f in files:
        try:
            doc = json.loads(f.read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise CorpusError(f"{f}: {exc}") from None
        if not isinstance(doc, dict) or doc.get("schema") != FIXTURE_SCHEMA:
            raise CorpusError(f"{f}: expected an object with schema {FIXTURE_SCHEMA!r}")
        for case in doc.get("cases", []):
            for fld in ("id", "provenance", "argv", "expect"):
                if fld not in case:
                    raise CorpusError(f"{f}: case missing field {fld!r}")
            if not case["provenance"]:
                raise CorpusError(f"{f}: case {case['id']} has empty provenance")
            if case["id"] in seen:
                raise CorpusError(f"{f}: duplicate case id {case['id']!r}")
            seen.add(case["id"])
            cases.append(case)
    return cases


def _matches(expected, actual, path="result") -> list:
    """Paths where actual differs from expected.

    Dicts are matched on the expected keys only; equal-length lists element by element.
    """
    if isinstance(expected, dict):
        if not isinstance(actual, dict):
            return [f"{path}: expected an object, got {actual!r}"]
        out = []
        for k, v in expected.items():
            if k not in actual:
                out.append(f"{path}.{k}: missing")
            else:
                out.extend(_matches(v, actual[k], f"{path}.{k}"))
        return out
    if isinstance(expected, list) and isinstance(actual, list) and len(expected) == len(actual):
        out = []
        for i, (e, a) in enumerate(zip(expected, actual)):
            out.extend(_matches(e, a, f"{path}[{i}]"))
        return out
    return [] if expected == actual else [f"{path}: expected {expected!r}, got {actual!r}"]


def run_fixture_suite(paths: list | str | Path | None = None) -> tuple:
    """Run every case; returns (exit code, summary)."""
    if paths is None:
        paths = [DEFAULT_CORPUS]
    elif isinstance(paths, (str, Path)):
        paths = [paths]
    cases = _load_corpus(paths)
    table = []
    for case in cases:
        code, report = run_subcommand(list(case["argv"]))
        exp = case["expect"]
        problems = []
        if "exit" in exp and code != exp["exit"]:
            problems.append(f"exit: expected {exp['exit']}, got {code}")
        for section in ("result", "certificate"):
            if section in exp:
                problems.extend(_matches(exp[section], report.get(section), section))
        table.append({"id": case["id"], "provenance": case["provenance"],
                      "status": "pass" if not problems else "fail", "problems": problems})
    failed = [r["id"] for r in table if r["status"] == "fail"]
    summary = {"total": len(table), "passed": len(table) - len(failed), "failed": failed,
               "cases": table}
    return (OK if not failed else NEGATIVE), summary


def _cmd_fixtures(args, cfg):
    paths = args.corpus or [str(DEFAULT_CORPUS)]
    try:
        code, summary = run_fixture_suite(paths)
    except CorpusError as exc:
        raise UsageError(f"corpus error: {exc}") from None
    return code, {"corpus": [str(p) for p in paths]}, summary, None


# --- parser --------------------------------------------------------------------

def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group("common options")
    g.add_argument("--n", type=int, help="number of variables")
    g.add_argument("--vars", help="comma-separated variable names (default x1..xn)")
    g.add_argument("--order", choices=["lex", "degrevlex"], help="monomial order")
    g.add_argument("--gens", help="comma-separated generators: p<k>, h<k>, e<k>, s[...], or text")
    g.add_argument("--budget-spairs", type=int, default=Budget().max_spairs,
                   help="S-pair budget for Groebner computations")
    g.add_argument("--budget-enum", type=int, default=cyclotomic.DEFAULT_ENUM_BUDGET,
                   help="node budget for root-of-unity enumeration")
    g.add_argument("--format", choices=["human", "structured"], default="human")
    g.add_argument("--seed", type=int, default=0, help="seed for randomized choices")
    g.add_argument("--timing", action="store_true", help="include wall-clock timing in the report")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="symcert", description="Exact certificates for symmetric-polynomial ideals.")
    sub = parser.add_subparsers(dest="command", metavar="<subcommand>", parser_class=_Parser)
    sub.required = True

    def add(name, help_):
        return sub.add_parser(name, parents=[common], help=help_, description=help_)

    p = add("gen", "emit a symmetric polynomial (p<k>, h<k>, e<k>, s[...])")
    p.add_argument("--expr", required=True)
    p = add("arith", "add, subtract, multiply, power or scale polynomials")
    p.add_argument("--op", required=True, choices=["add", "sub", "mul", "pow", "scale"])
    p.add_argument("--f", required=True)
    p.add_argument("--g")
    p = add("derive", "partial derivatives and derivative/Newton identities")
    p.add_argument("--f")
    p.add_argument("--var", help="variable name or 1-based index")
    p.add_argument("--euler", action="store_true", help="check sum x_i df/dx_i = deg(f) f")
    p.add_argument("--identities", choices=["h", "e", "p"], help="check the derivative identities")
    p.add_argument("--a", type=int, default=1)
    p.add_argument("--newton", choices=["eq1", "eq2", "eq3"])
    p.add_argument("--index", type=int, default=1)
    p.add_argument("--residue-p", type=int, metavar="C", help="class of p_C mod p_1..p_{n-1}")
    p.add_argument("--residue-h", type=int, metavar="C", help="class of h_C mod h_1, h_4 (n=3)")
    p = add("gb", "reduced Groebner basis")
    p.add_argument("--verify", action="store_true", help="also check all S-polynomials reduce to 0")
    p = add("member", "ideal membership")
    p.add_argument("--f", required=True)
    p.add_argument("--ideal")
    p = add("equal", "ideal equality (repeat --ideal)")
    p.add_argument("--ideal", action="append")
    add("dim", "Krull dimension and height")
    add("regseq", "regular sequence test")
    p = add("jacobian", "Jacobian matrix, minor ideal, or ideal of partials")
    p.add_argument("--minors", type=int, help="minor size (default: number of generators)")
    p.add_argument("--raw", action="store_true", help="do not strip row contents")
    p.add_argument("--partials", metavar="F", help="analyze the ideal of all partials of F")
    p = add("prime", "primality certificate")
    p.add_argument("--precheck", metavar="A,B", help="also report the arithmetic precheck for (a, b)")
    p = add("combine", "combine prime ideals in disjoint variables")
    p.add_argument("--gens2", required=True)
    p.add_argument("--n2", type=int)
    p = add("weights", "weights of vanishing sums of roots of unity")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--witnesses", action="store_true")
    p = add("vanish", "vanishing test, witness search, or guarantee sweep")
    p.add_argument("--m", type=int)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--exps", help="comma-separated exponents")
    p.add_argument("--search", type=int, metavar="N", help="look for a vanishing sum of weight N")
    p.add_argument("--sweep", metavar="M,K,N", help="check the no-vanishing guarantee up to M, K, N")
    p = add("slp", "strong Lefschetz check")
    p.add_argument("--ell", help="linear form (default: sum of the variables)")
    p.add_argument("--random-ell", action="store_true", help="seeded random linear form")
    p = add("hilbert", "Hilbert function of an Artinian quotient")
    p.add_argument("--basis", action="store_true")
    p = add("initial", "initial ideal (default order lex)")
    p.add_argument("--compare", metavar="GENS", help="expected minimal monomial generators")
    p = add("scan", "conjecture scans")
    p.add_argument("kind", choices=["ckw3", "pab-regularity", "h1-even"])
    p.add_argument("--max", type=int, help="largest exponent (or m for h1-even)")
    p.add_argument("--rows", help="explicit rows: 'a,b,c;a,b,c' or 'm1,m2'")
    p.add_argument("--out", help="jsonl file for incremental, resumable results")
    p.add_argument("--jobs", type=int, default=1)
    p = add("fixtures", "run the fixture corpus")
    p.add_argument("--corpus", action="append", help="corpus file or directory (repeatable)")
    return parser


_HANDLERS = {
    "gen": _cmd_gen, "arith": _cmd_arith, "derive": _cmd_derive, "gb": _cmd_gb,
    "member": _cmd_member, "equal": _cmd_equal, "dim": _cmd_dim, "regseq": _cmd_regseq,
    "jacobian": _cmd_jacobian, "prime": _cmd_prime, "combine": _cmd_combine,
    "weights": _cmd_weights, "vanish": _cmd_vanish, "slp": _cmd_slp, "hilbert": _cmd_hilbert,
    "initial": _cmd_initial, "scan": _cmd_scan, "fixtures": _cmd_fixtures,
}

_INPUT_ERRORS = (UsageError, PolynomialSyntaxError, UnknownVariableError, RingMismatchError,
                 NonHomogeneousError, NotArtinianError, symmetric.ResidueShapeError, ValueError,
                 OverflowError)
_CEILINGS = (ResourceCeilingExceeded, cyclotomic.EnumerationBudgetExceeded)


def run_subcommand(argv: list) -> tuple:
    """Parse and run one invocation; returns (exit code, report dict). Never prints."""
    report = {"command": argv[0] if argv else None, "config": None, "inputs": None,
              "result": None, "certificate": None, "timing": None}
    try:
        args = build_parser().parse_args(argv)
        report["command"] = args.command
        cfg = RunConfig.from_args(args)
        report["config"] = cfg.as_dict()
        report["format"] = cfg.fmt
        start = time.perf_counter()
        code, inputs, result, cert = _HANDLERS[args.command](args, cfg)
        report.update(inputs=inputs, result=result, certificate=cert)
        if cfg.timing:
            report["timing"] = {"seconds": round(time.perf_counter() - start, 6)}
        return code, report
    except _CEILINGS as exc:
        report["error"] = {"type": "resource_ceiling", "message": str(exc)}
        return CEILING, report
    except _INPUT_ERRORS as exc:
        report["error"] = {"type": "usage", "message": str(exc)}
        return USAGE, report


def render(report: dict, fmt: str = "human") -> str:
    body = {k: v for k, v in report.items() if k != "format"}
    if fmt == "structured":
        return json.dumps(body, sort_keys=True, indent=2, ensure_ascii=False)
    lines = []
    if report.get("error"):
        lines.append(f"error ({report['error']['type']}): {report['error']['message']}")
        return "\n".join(lines)
    lines.append(f"symcert {report['command']}")
    for section in ("inputs", "result"):
        val = report.get(section)
        if isinstance(val, dict):
            for k, v in val.items():
                if k in ("table", "cases") and isinstance(v, list):
                    lines.append(f"  {k}:")
                    lines.extend(f"    {json.dumps(row, sort_keys=True)}" for row in v)
                else:
                    lines.append(f"  {k}: {json.dumps(v, sort_keys=True) if not isinstance(v, str) else v}")
    cert = report.get("certificate")
    if cert:
        lines.append(f"  verdict: {cert['verdict']}")
        lines.extend(f"    - {s}" for s in cert.get("steps", []))
        lines.append(f"  note: {cert['ground_field_note']}")
    if report.get("timing"):
        lines.append(f"  time: {report['timing']['seconds']:.3f}s")
    return "\n".join(lines)


def main(argv: list | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if not argv or argv[0] in ("-h", "--help") or "-h" in argv or "--help" in argv:
        try:
            build_parser().parse_args(argv or ["--help"])
        except SystemExit as exc:
            return int(exc.code or 0)
        except UsageError as exc:
            print(exc, file=sys.stderr)
            return USAGE
    code, report = run_subcommand(argv)
    fmt = report.get("format") or ("structured" if "structured" in argv else "human")
    out = render(report, fmt)
    stream = sys.stderr if report.get("error") and fmt == "human" else sys.stdout
    print(out, file=stream)
    return code


if __name__ == "__main__":
    sys.exit(main())
