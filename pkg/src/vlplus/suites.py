"""Verification suites producing serializable reports."""
from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from . import closed_forms as cf
from .checks import run_commutator_suite, twisted_heisenberg_samples, twisted_virasoro_samples
from .lattice import E_m, build_generators, module_catalog
from .structure import (
    G_BASIS,
    ROW_NAMES,
    ee_closed_form,
    fit_structure_polynomials,
    verify_relations,
    weight_k6_check,
    zhu_basis_certificate,
)
from .zhu import certify_in_OV, character, ov_residue, poly_star, star

SCHEMA_VERSION = 1
STATUSES = ("pass", "fail", "inconclusive")
SUITES = ("relations", "lemma51", "estare", "commutators", "twisted", "basis")

__all__ = ["Entry", "Report", "SCHEMA_VERSION", "SUITES", "run_suite", "table_report",
           "certify_report", "fmt"]


def fmt(x) -> str:
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, tuple):
        return "(" + ", ".join(fmt(y) for y in x) + ")"
    return str(x)


@dataclass
class Entry:
    name: str
    status: str
    expected: str = ""
    actual: str = ""
    source: str = "computed"

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"bad status {self.status!r}")


@dataclass
class Report:
    k: int
    suite: str
    entries: list[Entry] = field(default_factory=list)
    timing: float = 0.0
    schema_version: int = SCHEMA_VERSION

    @property
    def all_pass(self) -> bool:
        return all(e.status != "fail" for e in self.entries)

    def add(self, name, ok, expected="", actual="", source="computed"):
        status = ok if isinstance(ok, str) else ("pass" if ok else "fail")
        self.entries.append(Entry(name, status, fmt(expected), fmt(actual), source))

    def to_dict(self) -> dict:
        d = asdict(self)
        d["all_pass"] = self.all_pass
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_dict(cls, d: dict) -> "Report":
        if d.get("schema_version") != SCHEMA_VERSION:
            raise ValueError(f"unsupported schema_version {d.get('schema_version')!r}")
        return cls(k=d["k"], suite=d["suite"], entries=[Entry(**e) for e in d["entries"]],
                   timing=d["timing"], schema_version=d["schema_version"])

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls.from_dict(json.loads(text))


# ---------------------------------------------------------------------------


def _relations(k, rep, **_):
    rr = verify_relations(k)
    for c in rr.checks:
        rep.add(c.name, c.passed, c.expected, c.actual,
                "closed form" if "closed form" in c.name else "computed")


def _lemma51(k, rep, **_):
    chk = weight_k6_check(k)
    rep.add("vectors lie in the span of g1..g11", chk.in_span, True, chk.in_span)
    for i, name in enumerate(ROW_NAMES):
        rep.add(f"row {name}", chk.matrix.row(i) == chk.expected.row(i),
                tuple(chk.expected.row(i)), tuple(chk.matrix.row(i)), "closed form")
    rep.add("det", chk.det == chk.expected_det, Fraction(chk.expected_det), chk.det, "closed form")
    assert len(G_BASIS) == 11


def _estare(k, rep, **_):
    g = build_generators(k)
    ee = star(g.E, g.E)
    rep.add("E*E = sum_j binom(k,j) q_{2k-j}(alpha)1", ee == ee_closed_form(k),
            "closed form", "match" if ee == ee_closed_form(k) else "mismatch", "closed form")
    rest = ov_residue(g.E, g.E, 2 * k - 1) - E_m(2, k)
    ok = all(r == 0 for r in rest.labels()) and all(len(m) % 2 == 0 for (m, _), _ in rest)
    rep.add("ov_residue(E, E, 2k-1) - E^2 lies in M(1)^+", ok, True, ok)


def _commutators(k, rep, samples=100, **_):
    for res in run_commutator_suite(k, samples, twisted=False):
        rep.add(f"{res.name} ({res.total} samples)", res.passed, 0, len(res.failures), "sampled")


def _twisted(k, rep, samples=100, **_):
    expected = cf.twisted_table(k)
    mods = {m.id: m for m in module_catalog(k)}
    for mid, triple in expected.items():
        for name, e, a in zip(("omega", "E", "J"), triple, mods[mid].character):
            rep.add(f"{mid} {name}", e == a, e, a, "closed form")
    for res in (twisted_heisenberg_samples(k, samples), twisted_virasoro_samples(k, max(samples // 2, 1))):
        rep.add(f"{res.name} ({res.total} samples)", res.passed, 0, len(res.failures), "sampled")
    g = build_generators(k)
    gens = {"omega": g.omega, "J": g.J, "E": g.E}
    bad = []
    for un, u in gens.items():
        for vn, v in gens.items():
            uv = star(u, v)
            for mid in ("T1+", "T1-", "T2+", "T2-"):
                if character(uv, mid) != character(u, mid) * character(v, mid):
                    bad.append(f"{un}*{vn}@{mid}")
    rep.add("o(u*v) = o(u)o(v) on twisted tops", not bad, "all", ",".join(bad) or "all")


def _basis(k, rep, **_):
    cert = zhu_basis_certificate(k)
    rep.add(f"basis ({cert.square_class})", len(cert.basis) == k + 7, k + 7, len(cert.basis))
    rep.add("evaluation matrix nonsingular", cert.det != 0, "nonzero", cert.det)
    triples = [m.character for m in module_catalog(k)]
    rep.add("distinct characters", len(set(triples)) == k + 7, k + 7, len(set(triples)))
    rep.add("dim A(V_L^+)", cert.passed, k + 7, k + 7 if cert.passed else "undetermined")


_RUNNERS = {
    "relations": _relations,
    "lemma51": _lemma51,
    "estare": _estare,
    "commutators": _commutators,
    "twisted": _twisted,
    "basis": _basis,
}


def run_suite(k: int, suite: str, samples: int = 100) -> Report:
    if suite == "all":
        rep = Report(k, "all")
        t0 = time.perf_counter()
        for name in SUITES:
            part = run_suite(k, name, samples)
            for e in part.entries:
                rep.entries.append(Entry(f"{name}: {e.name}", e.status, e.expected, e.actual, e.source))
        rep.timing = time.perf_counter() - t0
        return rep
    if suite not in _RUNNERS:
        raise ValueError(f"unknown suite {suite!r}")
    rep = Report(k, suite)
    t0 = time.perf_counter()
    _RUNNERS[suite](k, rep, samples=samples)
    rep.timing = time.perf_counter() - t0
    return rep


def table_report(k: int) -> tuple[Report, list]:
    """Computed top-level scalars compared with their closed forms."""
    t0 = time.perf_counter()
    rep = Report(k, "table")
    catalog = module_catalog(k)
    expected = {**cf.untwisted_table(k), **cf.twisted_table(k)}
    for m in catalog:
        rep.add(m.id, m.character == expected[m.id], expected[m.id], m.character, "closed form")
    r = fit_structure_polynomials(k, catalog).r
    half = next(m for m in catalog if m.id == "VLhalf+")
    rep.add("lambda_J(VLhalf) = r(k/4)", r(Fraction(k, 4)) == half.J == cf.r_closed(k)(Fraction(k, 4)),
            cf.r_closed(k)(Fraction(k, 4)), half.J, "closed form")
    rep.timing = time.perf_counter() - t0
    return rep, catalog


def certify_report(k: int, relation: str, cutoff: int) -> Report:
    t0 = time.perf_counter()
    g = build_generators(k)
    polys = fit_structure_polynomials(k)
    if relation == "L1":
        target = star(g.J, g.E) - poly_star(polys.r, g.E)
    elif relation == "L2":
        target = poly_star(polys.t, g.E)
    else:
        raise ValueError(f"unknown relation {relation!r}")
    rep = Report(k, f"certify-{relation}")
    chars = {m.id: character(target, m) for m in module_catalog(k)}
    bad = [mid for mid, v in chars.items() if v != 0]
    rep.add("characters vanish on all modules", not bad, 0, ",".join(bad) or 0)
    top = max(target.weights()) if target else 0
    if cutoff < top:
        raise ValueError(f"cutoff {cutoff} is below the target's top weight {top}")
    cert = certify_in_OV(target, cutoff)
    if cert is None:
        rep.add(f"O(V) certificate at cutoff {cutoff}", "inconclusive", "certificate", "none found")
    else:
        ok = cert.verify()
        rep.add(f"O(V) certificate at cutoff {cutoff}", ok, "replays exactly",
                f"{len(cert.entries)} generators" if ok else "replay mismatch")
    rep.timing = time.perf_counter() - t0
    return rep
