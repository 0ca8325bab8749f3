"""Structure of A(V_L^+): fitted polynomials, relation checks, bases, classification."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from . import closed_forms as cf
from .exact import Matrix, Poly, determinant, linear_solve, poly_gcd_bezout
from .fock import monomial, q_state
from .lattice import (
    K1Notice,
    LatticeState,
    ModuleDescriptor,
    build_generators,
    from_fock,
    module_catalog,
    state,
    vertex_mode,
)
from .zhu import star

__all__ = [
    "ZhuPolynomials",
    "fit_structure_polynomials",
    "Check",
    "RelationReport",
    "verify_relations",
    "WeightK6Check",
    "weight_k6_check",
    "lemma51_check",
    "BasisCertificate",
    "basis_monomials",
    "zhu_basis_certificate",
    "Classification",
    "classify",
    "ee_closed_form",
]

X = Poly.x()


def _by_id(catalog) -> dict:
    return {m.id: m for m in catalog}


# ---------------------------------------------------------------------------
# structure polynomials


@dataclass(frozen=True)
class ZhuPolynomials:
    k: int
    p: Poly
    q: Poly
    r: Poly
    s: Poly
    t: Poly
    a: Poly
    b: Poly
    phi: Poly
    a0: Fraction


def fit_structure_polynomials(k: int, catalog=None) -> ZhuPolynomials:
    """Fit r and s from top-level characters; assemble the remaining polynomials."""
    if k < 2:
        raise ValueError("structure polynomials need k >= 2")
    mods = _by_id(catalog or module_catalog(k))

    # J*E = r(omega)*E on the three modules where E acts nontrivially with distinct omega
    rows, rhs = [], []
    for mid in ("VLhalf+", "T1+", "T1-"):
        m = mods[mid]
        rows.append([Fraction(1), m.omega, m.omega ** 2])
        rhs.append(m.J)
    r = Poly(linear_solve(Matrix.from_rows(rows), rhs))

    roots = [Fraction(i * i, 4 * k) for i in range(k)]
    monic_a = Poly.from_roots(roots)
    a0 = 1 / monic_a(Fraction(k, 4))
    a = monic_a * a0

    # E^2 = a(omega) + s(omega)(J + omega - 4 omega^2)
    pts = []
    for mid in ("VL-", "T1+", "T1-"):
        m = mods[mid]
        g = m.J + m.omega - 4 * m.omega ** 2
        if not g:
            raise ValueError(f"degenerate fit point {mid}")
        pts.append((m.omega, (m.E ** 2 - a(m.omega)) / g))
    s = Poly.interpolate(pts)

    p, q = cf.P_POLY, cf.Q_POLY
    b = a + (q - r + X - X * X * 4) * s
    phi = Poly.from_roots([Fraction(1), Fraction(1, 16), Fraction(9, 16), Fraction(k, 4)]) * a
    return ZhuPolynomials(k, p, q, r, s, cf.t_poly(k), a, b, phi, a0)


# ---------------------------------------------------------------------------
# relation report


@dataclass
class Check:
    name: str
    passed: bool
    expected: str = ""
    actual: str = ""


@dataclass
class RelationReport:
    k: int
    checks: list[Check] = field(default_factory=list)
    residuals: dict = field(default_factory=dict)

    @property
    def all_pass(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name, passed, expected="", actual=""):
        self.checks.append(Check(name, bool(passed), str(expected), str(actual)))


def ee_closed_form(k: int) -> LatticeState:
    total = LatticeState({}, k)
    for j in range(k + 1):
        total = total + from_fock(q_state(2 * k - j, 1, k)) * comb(k, j)
    return total


def relation_residuals(k: int, polys: ZhuPolynomials, catalog) -> dict:
    """Per-module residuals of (B1), (B2), (L1), (L2), the E^2 relation and phi."""
    out = {}
    for m in catalog:
        w, e, j = m.omega, m.E, m.J
        out[m.id] = {
            "B1": j * j - polys.p(w) - polys.q(w) * j,
            "B2": (w - 1) * (w - Fraction(1, 16)) * (w - Fraction(9, 16)) * (j + w - 4 * w * w),
            "L1": (j - polys.r(w)) * e,
            "L2": polys.t(w) * e,
            "E2": e * e - polys.a(w) - polys.s(w) * (j + w - 4 * w * w),
            "phi": polys.phi(w),
        }
    return out


def trichotomy(k: int, polys: ZhuPolynomials) -> tuple[bool, bool, bool]:
    """Vanishing pattern of b at 1, 1/16, 9/16."""
    return tuple(polys.b(x) == 0 for x in (Fraction(1), Fraction(1, 16), Fraction(9, 16)))


EXPECTED_TRICHOTOMY = {
    "nonsquare": (False, False, False),
    "even_square": (True, True, True),
    "odd_square": (True, False, False),
}


def verify_relations(k: int, include_ee: bool = True) -> RelationReport:
    """Exact checks of the defining relations and polynomial identities for one k."""
    if k < 2:
        raise K1Notice() if k == 1 else ValueError("k must be >= 2")
    catalog = module_catalog(k)
    polys = fit_structure_polynomials(k, catalog)
    rep = RelationReport(k)

    res = relation_residuals(k, polys, catalog)
    rep.residuals = res
    for rel in ("B1", "B2", "L1", "L2", "E2", "phi"):
        bad = [mid for mid, d in res.items() if d[rel] != 0]
        rep.add(f"{rel} on all characters", not bad, "0 on all modules",
                "0 on all modules" if not bad else f"nonzero on {','.join(bad)}")

    ids = [m.id for m in catalog]
    triples = [m.character for m in catalog]
    rep.add("distinct characters", len(set(triples)) == len(triples) == k + 7, k + 7, len(set(triples)))
    rep.add("module count", len(ids) == k + 7, k + 7, len(ids))

    rep.add("r closed form", polys.r == cf.r_closed(k), cf.r_closed(k), polys.r)
    rep.add("r(k/4) equals lambda_J on VLhalf", polys.r(Fraction(k, 4)) == _by_id(catalog)["VLhalf+"].J,
            _by_id(catalog)["VLhalf+"].J, polys.r(Fraction(k, 4)))
    rep.add("a0 closed form", polys.a0 == cf.a0_closed(k), cf.a0_closed(k), polys.a0)
    rep.add("deg a = k", polys.a.degree == k, k, polys.a.degree)
    rep.add("deg s <= 2", polys.s.degree <= 2, "<= 2", polys.s.degree)

    quartic = X * X * 4 - X
    ident = -polys.p - polys.q * quartic + quartic * quartic
    rep.add("-p - q(4x^2-x) + (4x^2-x)^2 = 0", ident.is_zero(), "0", ident)
    diff = polys.q - polys.r + X - X * X * 4
    rep.add("q - r + x - 4x^2 closed form", diff == cf.qr_difference_closed(k),
            cf.qr_difference_closed(k), diff)
    b1 = cf.b1_ratio_closed(k) * polys.a(1)
    rep.add("b(1) closed form", polys.b(1) == b1, b1, polys.b(1))
    shift = polys.r - X * X * 4 + X
    rep.add("r - 4x^2 + x closed form", shift == cf.r_shift_closed(k), cf.r_shift_closed(k), shift)

    x0 = Fraction(3 * k - 3, 32 * k - 12)
    val = polys.phi(x0)
    rep.add("phi((3k-3)/(32k-12)) != 0", val != 0, "nonzero", val)
    g, _, _ = poly_gcd_bezout(X - x0, polys.phi)
    rep.add("x - (3k-3)/(32k-12) coprime to phi", g == Poly.const(1), "1", g)

    cls = cf.square_class(k)
    got = trichotomy(k, polys)
    rep.add(f"b trichotomy ({cls})", got == EXPECTED_TRICHOTOMY[cls], EXPECTED_TRICHOTOMY[cls], got)
    if cls == "nonsquare":
        g, u, v = poly_gcd_bezout(
            Poly.from_roots([Fraction(1), Fraction(1, 16), Fraction(9, 16)]), polys.b)
        rep.add("(x-1)(x-1/16)(x-9/16) coprime to b", g == Poly.const(1), "1", g)

    if include_ee:
        g = build_generators(k)
        ee = star(g.E, g.E)
        rep.add("E*E closed form", ee == ee_closed_form(k), "sum binom(k,j) q_{2k-j}", "match"
                if ee == ee_closed_form(k) else "mismatch")
    return rep


# ---------------------------------------------------------------------------
# the weight (k+6) sector of V_L^+(1)


G_BASIS = [(6,), (5, 1), (4, 2), (4, 1, 1), (3, 3), (3, 2, 1), (3, 1, 1, 1),
           (2, 2, 2), (2, 2, 1, 1), (2, 1, 1, 1, 1), (1, 1, 1, 1, 1, 1)]
F_LIST = [(5,), (4, 1), (3, 2), (3, 1, 1), (2, 2, 1), (2, 1, 1, 1), (1, 1, 1, 1, 1)]
H_LIST = [(3,), (2, 1), (1, 1, 1)]
ROW_NAMES = [f"L(-1)f{i}" for i in range(1, 8)] + [f"2kL(-3)h{j}" for j in range(1, 4)] + ["v"]


def _dress(mono, k):
    """``mono ⊗ E`` for even length, ``mono ⊗ F`` for odd length."""
    sign = -1 if len(mono) % 2 else 1
    return state(mono, 1, k) + state(mono, -1, k, sign)


@dataclass
class WeightK6Check:
    k: int
    matrix: Matrix
    expected: Matrix
    det: Fraction
    expected_det: int
    in_span: bool

    @property
    def passed(self) -> bool:
        return self.in_span and self.matrix == self.expected and self.det == self.expected_det


def weight_k6_vectors(k: int) -> list[LatticeState]:
    g = build_generators(k)
    w = g.omega
    rows = [vertex_mode(w, 0, _dress(f, k)) for f in F_LIST]
    rows += [vertex_mode(w, -2, _dress(h, k)) * (2 * k) for h in H_LIST]
    rows.append(vertex_mode(from_fock(monomial((1, 1, 1, 1), k)), -3, g.E))
    return rows


def weight_k6_check(k: int) -> WeightK6Check:
    """Coordinates of L(-1)f_i, 2k L(-3)h_j and (alpha(-1)^4 1)_{-3} E in the g-basis."""
    if k < 1:
        raise ValueError("k must be positive")
    vecs = weight_k6_vectors(k)
    entries, in_span = [], True
    for vec in vecs:
        span = sum((_dress(gm, k) * vec.coefficient((gm, Fraction(1))) for gm in G_BASIS),
                   LatticeState({}, k))
        in_span &= span == vec
        entries.append([vec.coefficient((gm, Fraction(1))) for gm in G_BASIS])
    M = Matrix.from_rows(entries)
    return WeightK6Check(k, M, Matrix.from_rows(cf.weight_k6_table(k)), determinant(M),
                         cf.weight_k6_det(k), in_span)


lemma51_check = weight_k6_check


# ---------------------------------------------------------------------------
# bases and classification


def basis_monomials(k: int) -> list[tuple[int, int, int]]:
    """Exponents (s, t, u) of the basis classes omega^s J^t E^u for this k."""
    cls = cf.square_class(k)
    if k == 1:
        raise K1Notice()
    if cls == "nonsquare":
        out = [(s, 0, 0) for s in range(k + 4)]
    elif cls == "even_square":
        out = [(s, 0, 0) for s in range(k + 1)] + [(s, 1, 0) for s in range(3)]
    else:
        out = [(s, 0, 0) for s in range(k + 3)] + [(0, 1, 0)]
    return out + [(s, 0, 1) for s in range(3)]


def monomial_label(stu) -> str:
    s, t, u = stu
    parts = []
    if s:
        parts.append("omega" if s == 1 else f"omega^{s}")
    if t:
        parts.append("J")
    if u:
        parts.append("E")
    return "*".join(parts) or "1"


@dataclass
class BasisCertificate:
    k: int
    square_class: str
    basis: list[str]
    modules: list[str]
    matrix: Matrix
    det: Fraction

    @property
    def passed(self) -> bool:
        return self.det != 0 and len(self.basis) == self.k + 7


def zhu_basis_certificate(k: int, catalog=None) -> BasisCertificate:
    """Evaluate the candidate basis on every character; nonzero determinant proves independence."""
    if k == 1:
        raise K1Notice()
    if k < 1:
        raise ValueError("k must be positive")
    catalog = catalog or module_catalog(k)
    monos = basis_monomials(k)
    rows = [[m.omega ** s * m.J ** t * m.E ** u for (s, t, u) in monos] for m in catalog]
    M = Matrix.from_rows(rows)
    return BasisCertificate(k, cf.square_class(k), [monomial_label(x) for x in monos],
                            [m.id for m in catalog], M, determinant(M))


@dataclass
class Classification:
    k: int
    modules: list[ModuleDescriptor]
    basis: list[str]
    dim: int
    commutative_semisimple: bool
    notice: str = ""
    module_count: int = 0


def classify(k: int) -> Classification:
    if k < 1:
        raise ValueError("k must be a positive integer")
    if k == 1:
        n = K1Notice()
        return Classification(1, [], [], 0, True, notice=str(n), module_count=n.module_count)
    catalog = module_catalog(k)
    cert = zhu_basis_certificate(k, catalog)
    distinct = len({m.character for m in catalog}) == len(catalog)
    ok = cert.passed and distinct
    dim = len(cert.basis) if ok else cert.matrix.rows
    return Classification(k, catalog, cert.basis, dim, ok, module_count=len(catalog))
