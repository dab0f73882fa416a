"""The relation-replacement lemmas, checked on finite windows.

Letters are p_k (k in a window), a, b and q.  Both relation sets of each
lemma are instantiated, out-of-window p's are supplied by the recursion
p_{k+1} p_{k+2}^-1 p_k^-1, and consequence is tested with finite-quotient
probes in each direction plus bounded derivation search.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .derivation import derivation_search, replay
from .presentation import relator_from_text
from .probe import ProbeSpec, probe_consequence, replay_witness
from .words import WordError

LEMMA_PROBES = (ProbeSpec(3), ProbeSpec(4), ProbeSpec(5, "random", 10_000))
LEMMA_IDS = ("3.1", "3.2", "3.3")


def _p(k):
    return f"p{k}"


def _pow(x, e):
    return f"{x}^{e}" if e != 1 else x


@dataclass
class LemmaSets:
    names: tuple
    first: dict  # label -> relator text
    second: dict
    p_range: tuple
    forward_label: str  # direction first => second
    backward_label: str

    def words(self, rels: dict) -> dict:
        return {k: relator_from_text(v, self.names) for k, v in rels.items()}


def _recursion(lo, hi) -> dict:
    return {f"p-rec[{k}]": f"{_p(k + 1)} {_p(k + 2)}^-1 {_p(k)}^-1" for k in range(lo, hi - 1)}


def _lemma_31(klo, khi) -> LemmaSets:
    lo, hi = min(klo, 0), max(khi + 2, 2)
    names = tuple(_p(k) for k in range(lo, hi + 1)) + ("a", "b")
    rec = _recursion(lo, hi)
    first = dict(rec)
    for k in range(klo, khi + 1):
        first[f"twist[{k}]"] = f"{_p(k)} a {_p(k + 2)} a^-1 {_p(k + 1)}^-1 a^-1"
    first["b-def"] = "b = p0 a p0^-1"
    second = dict(rec)
    second.update({
        "p0-a": "p0 a p0^-1 = b",
        "p0-b": "p0 b p0^-1 = b^2 a^-1 b",
        "p1-a": "p1 a p1^-1 = a^-1 b",
        "p1-b": "p1 b p1^-1 = a^-1 b a^-1 b a^-1 b a^-2 b",
    })
    return LemmaSets(names, first, second, (lo, hi), "twist set implies conjugation set",
                     "conjugation set implies twist set")


def _lemma_32(klo, khi) -> LemmaSets:
    lo, hi = min(klo, 0), max(khi + 1, 2)
    names = tuple(_p(k) for k in range(lo, hi + 1)) + ("q",)
    rec = _recursion(lo, hi)
    first = dict(rec)
    for k in range(klo, khi + 1):
        first[f"shift[{k}]"] = f"{_p(k)} q = q {_p(k + 1)}"
    second = dict(rec)
    second.update({"p0-q": "p0 q = q p1", "p1-q": "p1 q = q p0^-1 p1"})
    return LemmaSets(names, first, second, (lo, hi), "shift set implies two relations",
                     "two relations imply shift set")


def _word_power(base: str, e: int) -> str:
    """Text for (base)^e with base a word."""
    if e == 0:
        return ""
    toks = base.split()
    if e < 0:
        inv = []
        for t in reversed(toks):
            name, _, exp = t.partition("^")
            inv.append(f"{name}^{-int(exp) if exp else -1}")
        toks = inv
    return " ".join(toks * abs(e))


def lemma_33_relations(k: int) -> dict:
    """The four conjugation formulas at index k (with a^-k b in the first)."""
    ak = _pow("a", -k) if k else ""
    first = f"{_p(k)} a {_p(k)}^-1 = {ak} b"
    second = (f"{_p(k)} b {_p(k)}^-1 = {_word_power(f'{ak} b', k + 2)} "
              f"{_pow('a', -(k + 1)) if k + 1 else ''} b")
    third = f"{_p(k)}^-1 a {_p(k)} = a b^-1 {_pow('a', k + 2) if k + 2 else ''}"
    fourth = f"{_p(k)}^-1 b {_p(k)} = {_word_power('a b^-1 ' + (_pow('a', k + 2) if k + 2 else ''), k)} a"
    return {f"conj-a[{k}]": first, f"conj-b[{k}]": second,
            f"inv-conj-a[{k}]": third, f"inv-conj-b[{k}]": fourth}


def _lemma_33(klo, khi) -> LemmaSets:
    lo, hi = min(klo, 0), max(khi, 2)
    names = tuple(_p(k) for k in range(lo, hi + 1)) + ("a", "b")
    rec = _recursion(lo, hi)
    first = dict(rec)
    first.update({
        "p0-a": "p0 a p0^-1 = b",
        "p0-b": "p0 b p0^-1 = b^2 a^-1 b",
        "p1-a": "p1 a p1^-1 = a^-1 b",
        "p1-b": "p1 b p1^-1 = a^-1 b a^-1 b a^-1 b a^-2 b",
    })
    second = dict(rec)
    for k in range(klo, khi + 1):
        second.update(lemma_33_relations(k))
    return LemmaSets(names, first, second, (lo, hi), "conjugation set implies indexed formulas",
                     "indexed formulas imply conjugation set")


def lemma_sets(lemma: str, window=(-2, 2)) -> LemmaSets:
    klo, khi = window
    if lemma == "3.1":
        return _lemma_31(klo, khi)
    if lemma == "3.2":
        return _lemma_32(klo, khi)
    if lemma == "3.3":
        return _lemma_33(klo, khi)
    raise ValueError(f"unknown lemma {lemma!r}; expected one of {', '.join(LEMMA_IDS)}")


@dataclass
class Certificate:
    label: str
    steps: list | None
    replays: bool = False

    def to_json(self):
        return {"target": self.label, "found": self.steps is not None,
                "steps": None if self.steps is None else [s.to_json() for s in self.steps],
                "replays": self.replays}


@dataclass
class LemmaReport:
    lemma: str
    window: tuple
    directions: list = field(default_factory=list)  # (label, ProbeResult)
    certificates: list = field(default_factory=list)

    @property
    def consistent(self) -> bool:
        return all(r.consistent for _, r in self.directions)

    @property
    def certified(self) -> list:
        return [c for c in self.certificates if c.steps is not None and c.replays]

    def to_json(self):
        return {
            "status": "consistent" if self.consistent else "violation",
            "lemma": self.lemma,
            "window": list(self.window),
            "directions": [{"direction": d, **r.to_json()} for d, r in self.directions],
            "missing": [], "extra": [], "droppedRelators": 0,
            "certificates": [c.to_json() for c in self.certificates],
        }


def certificate_targets(lemma: str, window, sets: LemmaSets) -> tuple:
    """(base, targets) for the derivation certificates of a lemma."""
    if lemma == "3.2":
        base = sets.words(sets.second)
        lo, hi = sets.p_range
        targets = {}
        for k in range(window[0], window[1] + 1):
            if lo <= k and k + 1 <= hi:
                targets[f"shift[{k}]"] = relator_from_text(f"{_p(k)} q = q {_p(k + 1)}", sets.names)
        return base, targets
    if lemma == "3.1":
        first = sets.words(sets.first)
        base = {k: v for k, v in first.items() if k.startswith("p-rec") or k in ("twist[0]", "b-def")}
        second = sets.words(sets.second)
        targets = {k: second[k] for k in ("p0-a", "p1-a")}
        return base, targets
    return {}, {}


def verify_lemma(lemma: str, window=(-2, 2), probes=LEMMA_PROBES, seed: int = 0,
                 certificates: bool = True, cert_window=None, alter: dict | None = None) -> LemmaReport:
    """Probe both directions of a lemma and collect derivation certificates.

    ``alter`` replaces relations of the second set by label (text form), for
    negative controls.
    """
    sets = lemma_sets(lemma, window)
    if alter:
        for k in alter:
            if k not in sets.second:
                raise WordError(f"unknown relation label {k!r}")
        sets.second.update(alter)
    first = sets.words(sets.first)
    second = sets.words(sets.second)
    n = len(sets.names)
    report = LemmaReport(lemma, tuple(window))
    for label, base, targets in ((sets.forward_label, first, second), (sets.backward_label, second, first)):
        res = probe_consequence(list(base.values()), list(targets.values()), n, probes, seed, list(sets.names))
        if res.witness is not None:
            deg = int(res.witness["group"][1:])
            res.witness["replays"] = replay_witness(list(base.values()), list(targets.values()), res.witness, deg)
        report.directions.append((label, res))
    if certificates:
        cw = cert_window or ((-3, 3) if lemma == "3.2" else window)
        csets = lemma_sets(lemma, cw) if cw != tuple(window) else sets
        base, targets = certificate_targets(lemma, cw, csets)
        blist = list(base.values())
        for label, t in targets.items():
            steps = derivation_search(blist, t)
            report.certificates.append(Certificate(label, steps, steps is not None and replay(t, blist, steps)))
    return report
