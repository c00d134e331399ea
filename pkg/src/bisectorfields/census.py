"""Finite-field census of standard-form bisector fields.

Every triple (h, k, mu) with mu != 0 is classified; well-centered cubic
triples are grouped into affine classes by the square class of mu, and the
grouping is validated with explicit witness maps checked on brute-force
bisector sets.
"""
from __future__ import annotations

import logging
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from math import comb

from .core import CUBIC, LINEAR, QUADRATIC, field_polynomials
from .errors import FieldTooLarge, UnrealizableField
from .fields import GF, Field, FieldElement
from .kernels import (
    BACKEND,
    affine_ints,
    bisector_mask,
    dual_mask,
    mask_to_lines,
    side_ints,
    slope_counts,
    transport_mask,
)
from .plane import Line, Quadrilateral
from .standard import (
    StandardFormField,
    equivalence_witness,
    quadrilateral_from_triple,
    standardize,
    well_centered,
)

log = logging.getLogger(__name__)

SOFT_BOUND = 13
HARD_CAP = 31
WELL_CENTERED_ONLY, FULL = "well-centered-only", "full"


def brute_force_mask(q: Quadrilateral, bound: int = SOFT_BOUND) -> bytearray:
    p = q.field.p
    if p > HARD_CAP or p > bound:
        raise FieldTooLarge(f"p = {p} exceeds the bound {min(bound, HARD_CAP)}")
    return bisector_mask(p, side_ints(q))


def brute_force_bisectors(q: Quadrilateral, bound: int = SOFT_BOUND) -> set[Line]:
    """Every line of GF(p)^2 that bisects ``q`` by the midpoint definition."""
    return mask_to_lines(q.field, brute_force_mask(q, bound))


def dual_curve_mask(q: Quadrilateral) -> bytearray:
    fp = field_polynomials(q)
    return dual_mask(q.field.p, [c.value for c in fp.Phi.coeffs], [c.value for c in fp.Psi.coeffs])


def pencil_count(p: int, mask) -> int:
    """Number of slopes all of whose p lines are in the set."""
    return sum(1 for c in slope_counts(p, mask) if c == p)


def dickson_check(h: FieldElement, k: FieldElement, mu: FieldElement) -> bool:
    """True iff -108 mu (h^2 mu - k^2)^2 is a non-square, which forces a root."""
    d = -108 * mu * (h * h * mu - k * k) ** 2
    return bool(d) and not d.is_square()


@dataclass
class TripleRow:
    h: int
    k: int
    mu: int
    kind: str
    well_centered: bool
    square_mu: bool
    realizable: bool = True


@dataclass
class CensusReport:
    p: int
    mode: str
    triples_scanned: int = 0
    class_histogram: dict = field(default_factory=lambda: {LINEAR: 0, QUADRATIC: 0, CUBIC: 0})
    well_centered_cubic: int = 0
    not_well_centered_cubic: int = 0
    well_centered_classes: int = 0
    class_representatives: list = field(default_factory=list)
    undecided_pairs: int = 0
    unrealizable_triples: list = field(default_factory=list)
    dickson: dict = field(default_factory=dict)
    three_mu_rule: dict = field(default_factory=dict)
    oracle: dict = field(default_factory=dict)
    pencil_law_violations: int = 0
    standardize_mismatches: int = 0
    witnesses: dict = field(default_factory=dict)
    backend: str = BACKEND
    wall_time_s: float | None = None
    rows: list = field(default_factory=list, repr=False)

    @property
    def invariant_ok(self) -> bool:
        ok = self.well_centered_classes == 2
        ok = ok and self.dickson.get("violations", 0) == 0
        ok = ok and self.three_mu_rule.get("corrected_violations", 0) == 0
        ok = ok and self.witnesses.get("failed", 0) == 0
        ok = ok and self.witnesses.get("validated", 0) >= min(10, self.witnesses.get("available", 0))
        if self.mode == FULL:
            ok = ok and self.oracle.get("mismatches", 0) == 0
            ok = ok and self.pencil_law_violations == 0 and self.standardize_mismatches == 0
        return ok

    def to_dict(self, timing: bool = False) -> dict:
        d = asdict(self)
        d.pop("rows")
        if not timing:
            d.pop("wall_time_s")
        d["invariant_ok"] = self.invariant_ok
        return d

    def csv_rows(self) -> list[list]:
        header = ["p", "h", "k", "mu", "class", "well_centered", "square_mu", "realizable"]
        body = [[self.p, r.h, r.k, r.mu, r.kind, int(r.well_centered), int(r.square_mu), int(r.realizable)]
                for r in self.rows]
        return [header] + body


def _scan_chunk(args):
    """Scan all triples with the given h values; returns plain data for merging."""
    p, hs, mode = args
    fld = GF(p)
    rows = []
    oracle_lines = oracle_mismatch = pencil_bad = std_bad = quads = 0
    dickson_checked = dickson_bad = 0
    three_mu = {"literal_checked": 0, "literal_not_well_centered": 0,
            "corrected_checked": 0, "corrected_violations": 0}
    three_square = fld(3).is_square()
    for hv in hs:
        h = fld(hv)
        for kv in range(p):
            k = fld(kv)
            for mv in range(1, p):
                mu = fld(mv)
                f = StandardFormField(h, k, mu)
                wc = well_centered(f)
                sq = mu.is_square()
                realizable = True
                try:
                    q = quadrilateral_from_triple(f)
                except UnrealizableField:
                    q = None
                    realizable = False
                if f.kind == CUBIC:
                    if dickson_check(h, k, mu):
                        dickson_checked += 1
                        if not wc:
                            dickson_bad += 1
                    if h and k and h * h * mu != k * k:
                        # stated hypothesis: 3*mu is a non-square
                        if three_square != sq:
                            three_mu["literal_checked"] += 1
                            three_mu["literal_not_well_centered"] += not wc
                        # what the discriminant actually needs: -3*mu a non-square
                        if not (-3 * mu).is_square():
                            three_mu["corrected_checked"] += 1
                            three_mu["corrected_violations"] += not wc
                if mode == FULL and q is not None:
                    quads += 1
                    brute = bisector_mask(p, side_ints(q))
                    dual = dual_mask(p, *_poly_ints(q))
                    oracle_lines += len(brute)  # every line is compared
                    oracle_mismatch += sum(1 for a, b in zip(brute, dual) if a != b)
                    fp = field_polynomials(q)
                    if pencil_count(p, brute) != 3 - fp.F_degree or fp.kind != f.kind:
                        pencil_bad += 1
                    _, g = standardize(q)
                    if f.kind != LINEAR and g.triple() != f.triple():
                        std_bad += 1
                rows.append((hv, kv, mv, f.kind, wc, sq, realizable))
    return {
        "rows": rows,
        "oracle_lines": oracle_lines,
        "oracle_mismatch": oracle_mismatch,
        "quads": quads,
        "pencil_bad": pencil_bad,
        "std_bad": std_bad,
        "dickson_checked": dickson_checked,
        "dickson_bad": dickson_bad,
        "three_mu": three_mu,
    }


def _poly_ints(q: Quadrilateral):
    fp = field_polynomials(q)
    return [c.value for c in fp.Phi.coeffs], [c.value for c in fp.Psi.coeffs]


def validate_witness(f1: StandardFormField, f2: StandardFormField) -> bool:
    """Build a witness map and check it carries one brute-force bisector set onto the other."""
    m = equivalence_witness(f1, f2)
    if m is None:
        return False
    q1, q2 = quadrilateral_from_triple(f1), quadrilateral_from_triple(f2)
    p = f1.field.p
    image = transport_mask(p, bisector_mask(p, side_ints(q1)), *affine_ints(m))
    return bytes(image) == bytes(bisector_mask(p, side_ints(q2)))


def run_census(p: int, mode: str = WELL_CENTERED_ONLY, workers: int = 1, samples: int = 10,
               seed: int = 0, bound: int = HARD_CAP) -> CensusReport:
    if mode not in (WELL_CENTERED_ONLY, FULL):
        raise ValueError(f"unknown census mode {mode!r}")
    if p > min(bound, HARD_CAP):
        raise FieldTooLarge(f"p = {p} exceeds the cap {min(bound, HARD_CAP)}")
    fld = GF(p)
    start = time.perf_counter()
    chunks = [(p, list(range(i, p, max(1, workers))), mode) for i in range(max(1, workers))]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            parts = list(ex.map(_scan_chunk, chunks))
    else:
        parts = [_scan_chunk(c) for c in chunks]

    rep = CensusReport(p=p, mode=mode)
    rows = sorted((r for part in parts for r in part["rows"]), key=lambda r: r[:3])
    rep.rows = [TripleRow(*r) for r in rows]
    rep.triples_scanned = len(rows)
    for r in rep.rows:
        rep.class_histogram[r.kind] += 1
        if not r.realizable:
            rep.unrealizable_triples.append([r.h, r.k, r.mu])
    cubic = [r for r in rep.rows if r.kind == CUBIC]
    wc = [r for r in cubic if r.well_centered]
    rep.well_centered_cubic = len(wc)
    rep.not_well_centered_cubic = len(cubic) - len(wc)
    groups = {}
    for r in wc:
        groups.setdefault(r.square_mu, []).append(r)
    rep.well_centered_classes = len(groups)
    rep.class_representatives = [
        {"square_mu": s, "h": g[0].h, "k": g[0].k, "mu": g[0].mu, "size": len(g)}
        for s, g in sorted(groups.items(), reverse=True)
    ]
    rep.undecided_pairs = sum(
        comb(sum(1 for r in cubic if not r.well_centered and r.square_mu == s), 2) for s in (True, False)
    )
    rep.dickson = {
        "conclusive": sum(x["dickson_checked"] for x in parts),
        "violations": sum(x["dickson_bad"] for x in parts),
    }
    rep.three_mu_rule = {"three_is_square": fld(3).is_square(), "minus_one_is_square": (-fld.one).is_square()}
    for key in parts[0]["three_mu"]:
        rep.three_mu_rule[key] = sum(x["three_mu"][key] for x in parts)
    if rep.three_mu_rule["literal_not_well_centered"]:
        log.warning("p = %d: %d triples meet the 3*mu non-square hypothesis yet are not well centered",
                    p, rep.three_mu_rule["literal_not_well_centered"])
    if mode == FULL:
        lines = sum(x["oracle_lines"] for x in parts)
        mism = sum(x["oracle_mismatch"] for x in parts)
        rep.oracle = {
            "quadrilaterals": sum(x["quads"] for x in parts),
            "lines_checked": lines,
            "mismatches": mism,
            "agreement": 1.0 if not lines else (lines - mism) / lines,
        }
        rep.pencil_law_violations = sum(x["pencil_bad"] for x in parts)
        rep.standardize_mismatches = sum(x["std_bad"] for x in parts)
    rep.witnesses = _sample_witnesses(fld, wc, samples, seed)
    rep.wall_time_s = round(time.perf_counter() - start, 3)
    if not rep.invariant_ok:
        log.error("census invariant failed for p = %d: %s", p, rep.to_dict())
    return rep


def _sample_witnesses(fld: Field, wc_rows, samples: int, seed: int) -> dict:
    real = [r for r in wc_rows if r.realizable]
    pairs = [(a, b) for i, a in enumerate(real) for b in real[i + 1:] if a.square_mu == b.square_mu]
    rng = random.Random(seed)
    chosen = rng.sample(pairs, min(samples, len(pairs)))
    ok = bad = 0
    examples = []
    for a, b in chosen:
        f1 = StandardFormField.of(fld, a.h, a.k, a.mu)
        f2 = StandardFormField.of(fld, b.h, b.k, b.mu)
        if validate_witness(f1, f2):
            ok += 1
        else:
            bad += 1
        if len(examples) < 3:
            examples.append([[a.h, a.k, a.mu], [b.h, b.k, b.mu]])
    return {"available": len(pairs), "sampled": len(chosen), "validated": ok, "failed": bad,
            "examples": examples}
