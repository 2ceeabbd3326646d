"""Mechanical checking of the category laws over a finite cell sample.

The engine works against a small structural interface (cells / level_of /
source / target / identity / compose / normalize / render) so the same
code exercises every category in the package.  It is a reporter: law
failures are collected as witnesses, never raised, so one broken axiom
cannot hide another.

Axiom ids:
  globular-ss          s(s(x)) = s(t(x))
  globular-ts          t(s(x)) = t(t(x))
  comp-st              boundaries of a composite
  id-st                boundaries of an identity
  assoc                E o (C o A) = (E o C) o A
  unit                 identity towers absorb on both sides
  binary-interchange   (H o_p E) o_q (C o_p A) = (H o_q C) o_p (E o_q A), q < p
  nullary-interchange  1_C o_p 1_A = 1_{C o_p A}

Equality everywhere is equality of normalized cells; for the strict
categories normalize is the identity and the laws hold literally.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .errors import InvalidArguments, NCatError

__all__ = [
    "AxiomFailure",
    "AxiomEntry",
    "AxiomReport",
    "composable",
    "check_globularity",
    "check_axioms",
]

AXIOM_IDS = (
    "globular-ss",
    "globular-ts",
    "comp-st",
    "id-st",
    "assoc",
    "unit",
    "binary-interchange",
    "nullary-interchange",
)


@dataclass(frozen=True)
class AxiomFailure:
    axiom: str
    detail: str

    def to_dict(self):
        return {"axiom": self.axiom, "detail": self.detail}


@dataclass(frozen=True)
class AxiomEntry:
    axiom: str
    checked: int
    failures: tuple[AxiomFailure, ...] = ()

    @property
    def verdict(self) -> str:
        return "pass" if not self.failures else "fail"

    def to_dict(self):
        return {
            "axiom": self.axiom,
            "checked": self.checked,
            "failures": [f.to_dict() for f in self.failures],
            "verdict": self.verdict,
        }


@dataclass(frozen=True)
class AxiomReport:
    entries: tuple[AxiomEntry, ...]

    @property
    def passed(self) -> bool:
        return all(e.verdict == "pass" for e in self.entries)

    def entry(self, axiom: str) -> AxiomEntry:
        for e in self.entries:
            if e.axiom == axiom:
                return e
        raise KeyError(axiom)

    def merged(self, other: "AxiomReport") -> "AxiomReport":
        return AxiomReport(self.entries + other.entries)

    def to_dict(self):
        return {"entries": [e.to_dict() for e in self.entries], "passed": self.passed}


def _chain(cat, cell, step, k):
    for _ in range(k):
        cell = step(cell)
    return cat.normalize(cell)


def composable(cat, p: int, a, c) -> bool:
    """True iff ``c o_p a`` is defined: the depth-p target chain of the
    inner cell meets the depth-p source chain of the outer one."""
    la, lc = cat.level_of(a), cat.level_of(c)
    if la != lc:
        raise InvalidArguments(f"levels differ: {la} vs {lc}")
    if not 0 <= p < la:
        raise InvalidArguments(f"depth p={p} out of range for level {la}")
    k = la - p
    return _chain(cat, a, cat.target, k) == _chain(cat, c, cat.source, k)


class _Run:
    """One checking run: sampled cells per level plus memoized pair sets."""

    def __init__(self, cat, sample, seed, samples, levels):
        self.cat = cat
        self.cap = samples
        if levels is None:
            levels = range(cat.max_level + 1)
        self.levels = list(levels)
        rng = random.Random(seed)
        self.cells = {}
        for l in self.levels:
            cells = list(sample[l]) if sample is not None else list(cat.cells(l))
            if len(cells) > samples:
                keep = sorted(rng.sample(range(len(cells)), samples))
                cells = [cells[i] for i in keep]
            self.cells[l] = cells
        self._pairs = {}

    def pairs(self, l: int, p: int) -> list:
        """Ordered composable pairs (inner, outer) among the level-l sample."""
        key = (l, p)
        if key not in self._pairs:
            cat = self.cat
            k = l - p
            by_src = {}
            for c in self.cells[l]:
                by_src.setdefault(_chain(cat, c, cat.source, k), []).append(c)
            out = []
            for a in self.cells[l]:
                out.extend((a, c) for c in by_src.get(_chain(cat, a, cat.target, k), []))
                if len(out) >= self.cap:
                    out = out[: self.cap]
                    break
            self._pairs[key] = out
        return self._pairs[key]

    def eq(self, x, y) -> bool:
        return self.cat.normalize(x) == self.cat.normalize(y)


def check_globularity(cat, levels=None, sample=None) -> AxiomReport:
    """The two globular identities, checked on every cell of level >= 2."""
    if levels is None:
        levels = range(cat.max_level + 1)
    ss = []
    ts = []
    checked = 0
    for l in levels:
        if l < 2:
            continue
        cells = sample[l] if sample is not None else cat.cells(l)
        for x in cells:
            checked += 1
            s, t = cat.source(x), cat.target(x)
            if cat.normalize(cat.source(s)) != cat.normalize(cat.source(t)):
                ss.append(AxiomFailure("globular-ss", f"level {l}: x={cat.render(x)}"))
            if cat.normalize(cat.target(s)) != cat.normalize(cat.target(t)):
                ts.append(AxiomFailure("globular-ts", f"level {l}: x={cat.render(x)}"))
    return AxiomReport(
        (
            AxiomEntry("globular-ss", checked, tuple(ss)),
            AxiomEntry("globular-ts", checked, tuple(ts)),
        )
    )


def check_axioms(cat, sample=None, *, seed=0, samples=1000, levels=None) -> AxiomReport:
    """Run the six composition laws over the sample and report witnesses.

    ``sample`` maps level -> list of cells; by default cat.cells(l) for
    every level up to cat.max_level.  Oversized levels are subsampled with
    the given seed; everything else is deterministic in the sample order.
    """
    run = _Run(cat, sample, seed, samples, levels)
    cat_n = cat.max_level
    entries = [
        _comp_st(run),
        _id_st(run, cat_n),
        _assoc(run),
        _unit(run),
        _binary_interchange(run),
        _nullary_interchange(run, cat_n),
    ]
    return AxiomReport(tuple(entries))


def _guarded(run, fails, axiom, fn, context):
    """Evaluate fn(); a raised NCatError is itself an axiom failure."""
    try:
        return fn()
    except NCatError as e:
        fails.append(AxiomFailure(axiom, f"{context}: raised {e}"))
        return None


def _comp_st(run) -> AxiomEntry:
    cat = run.cat
    fails = []
    checked = 0
    for l in run.levels:
        for p in range(l):
            for a, c in run.pairs(l, p):
                ctx = f"l={l} p={p} A={cat.render(a)} C={cat.render(c)}"
                ac = _guarded(run, fails, "comp-st", lambda: cat.compose(p, a, c), ctx)
                if ac is None:
                    continue
                checked += 1
                if p == l - 1:
                    want_s, want_t = cat.source(a), cat.target(c)
                else:
                    want_s = cat.compose(p, cat.source(a), cat.source(c))
                    want_t = cat.compose(p, cat.target(a), cat.target(c))
                if not run.eq(cat.source(ac), want_s):
                    fails.append(
                        AxiomFailure(
                            "comp-st",
                            f"{ctx}: s(CoA)={cat.render(cat.source(ac))} != {cat.render(want_s)}",
                        )
                    )
                if not run.eq(cat.target(ac), want_t):
                    fails.append(
                        AxiomFailure(
                            "comp-st",
                            f"{ctx}: t(CoA)={cat.render(cat.target(ac))} != {cat.render(want_t)}",
                        )
                    )
    return AxiomEntry("comp-st", checked, tuple(fails))


def _id_st(run, cat_n) -> AxiomEntry:
    cat = run.cat
    fails = []
    checked = 0
    for l in run.levels:
        if l >= cat_n:
            continue
        for a in run.cells[l]:
            checked += 1
            one = cat.identity(a)
            if not (run.eq(cat.source(one), a) and run.eq(cat.target(one), a)):
                fails.append(AxiomFailure("id-st", f"level {l}: A={cat.render(a)}"))
    return AxiomEntry("id-st", checked, tuple(fails))


def _assoc(run) -> AxiomEntry:
    cat = run.cat
    fails = []
    checked = 0
    for l in run.levels:
        for p in range(l):
            pairs = run.pairs(l, p)
            firsts = {}
            for a, c in pairs:
                firsts.setdefault(c, []).append(a)
            count = 0
            for c, e in pairs:  # (c, e): e after c
                for a in firsts.get(c, ()):  # (a, c): a before c
                    if count >= run.cap:
                        break
                    count += 1
                    checked += 1
                    ctx = f"l={l} p={p} A={cat.render(a)} C={cat.render(c)} E={cat.render(e)}"
                    lhs = _guarded(
                        run, fails, "assoc",
                        lambda: cat.compose(p, cat.compose(p, a, c), e), ctx,
                    )
                    rhs = _guarded(
                        run, fails, "assoc",
                        lambda: cat.compose(p, a, cat.compose(p, c, e)), ctx,
                    )
                    if lhs is None or rhs is None:
                        continue
                    if not run.eq(lhs, rhs):
                        fails.append(
                            AxiomFailure(
                                "assoc",
                                f"{ctx}: {cat.render(lhs)} != {cat.render(rhs)}",
                            )
                        )
    return AxiomEntry("assoc", checked, tuple(fails))


def _tower(cat, cell, k):
    for _ in range(k):
        cell = cat.identity(cell)
    return cell


def _unit(run) -> AxiomEntry:
    cat = run.cat
    fails = []
    checked = 0
    for l in run.levels:
        if l == 0:
            continue
        for a in run.cells[l]:
            for p in range(l):
                k = l - p
                checked += 1
                ctx = f"l={l} p={p} A={cat.render(a)}"
                right = _tower(cat, _chain(cat, a, cat.target, k), k)
                left = _tower(cat, _chain(cat, a, cat.source, k), k)
                lhs = _guarded(run, fails, "unit", lambda: cat.compose(p, a, right), ctx)
                rhs = _guarded(run, fails, "unit", lambda: cat.compose(p, left, a), ctx)
                if lhs is not None and not run.eq(lhs, a):
                    fails.append(
                        AxiomFailure("unit", f"{ctx}: 1-tower o_p A = {cat.render(lhs)} != A")
                    )
                if rhs is not None and not run.eq(rhs, a):
                    fails.append(
                        AxiomFailure("unit", f"{ctx}: A o_p 1-tower = {cat.render(rhs)} != A")
                    )
    return AxiomEntry("unit", checked, tuple(fails))


def _binary_interchange(run) -> AxiomEntry:
    cat = run.cat
    fails = []
    checked = 0
    for l in run.levels:
        for p in range(1, l):
            pairs_p = run.pairs(l, p)
            for q in range(p):
                set_q = set(run.pairs(l, q))
                count = 0
                for a, c in pairs_p:
                    for e, h in pairs_p:
                        if (a, e) not in set_q or (c, h) not in set_q:
                            continue
                        if count >= run.cap:
                            break
                        count += 1
                        checked += 1
                        ctx = (
                            f"l={l} p={p} q={q} A={cat.render(a)} C={cat.render(c)} "
                            f"E={cat.render(e)} H={cat.render(h)}"
                        )
                        lhs = _guarded(
                            run, fails, "binary-interchange",
                            lambda: cat.compose(q, cat.compose(p, a, c), cat.compose(p, e, h)),
                            ctx,
                        )
                        rhs = _guarded(
                            run, fails, "binary-interchange",
                            lambda: cat.compose(p, cat.compose(q, a, e), cat.compose(q, c, h)),
                            ctx,
                        )
                        if lhs is None or rhs is None:
                            continue
                        if not run.eq(lhs, rhs):
                            fails.append(
                                AxiomFailure(
                                    "binary-interchange",
                                    f"{ctx}: {cat.render(lhs)} != {cat.render(rhs)}",
                                )
                            )
    return AxiomEntry("binary-interchange", checked, tuple(fails))


def _nullary_interchange(run, cat_n) -> AxiomEntry:
    cat = run.cat
    fails = []
    checked = 0
    for l in run.levels:
        if l >= cat_n:
            continue
        for p in range(l):
            for a, c in run.pairs(l, p):
                checked += 1
                ctx = f"l={l} p={p} A={cat.render(a)} C={cat.render(c)}"
                lhs = _guarded(
                    run, fails, "nullary-interchange",
                    lambda: cat.compose(p, cat.identity(a), cat.identity(c)), ctx,
                )
                rhs = _guarded(
                    run, fails, "nullary-interchange",
                    lambda: cat.identity(cat.compose(p, a, c)), ctx,
                )
                if lhs is None or rhs is None:
                    continue
                if not run.eq(lhs, rhs):
                    fails.append(
                        AxiomFailure(
                            "nullary-interchange",
                            f"{ctx}: {cat.render(lhs)} != {cat.render(rhs)}",
                        )
                    )
    return AxiomEntry("nullary-interchange", checked, tuple(fails))
