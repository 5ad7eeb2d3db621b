"""Named, self-checking counterexamples, runnable as a regression suite.

Expected outcomes live in a data file, not in code, so a classifier
regression surfaces as a diff against recorded labels rather than a silent
behavior change.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from .elements import FinVec
from .errors import EmptyRegistry, UnknownCase
from .homs import IdentityHom
from .homspaces import classify
from .spaces import (
    Multiplication,
    Space,
    TopologyId,
    check_f_ring,
    matrix2_mul,
    meet,
)

_E11 = FinVec.of(1, 0, 0, 0)
_E21 = FinVec.of(0, 0, 1, 0)


def _render_nbhd(nbhd) -> dict | None:
    return None if nbhd is None else nbhd.render()


def _classify_case(domain: Space, codomain: Space) -> dict:
    label = classify(IdentityHom.on(domain), domain, codomain)
    return {
        "flags": label.flags(),
        "nr_group_refuting": _render_nbhd(label.nr.group.refuting),
        "continuity_witness": _render_nbhd(label.continuity_witness),
    }


def _case_a() -> dict:
    space = Space.evseq(TopologyId.EVSEQ_PRODUCT)
    return _classify_case(space, space)


def _case_b() -> dict:
    space = Space.evseq(TopologyId.EVSEQ_PRODUCT, Multiplication.ZERO)
    return _classify_case(space, space)


def _case_c() -> dict:
    domain = Space.evseq(TopologyId.EVSEQ_PRODUCT)
    codomain = Space.evseq(TopologyId.EVSEQ_SUPNORM)
    return _classify_case(domain, codomain)


def _case_d() -> dict:
    space = Space.qn(4)
    a, b, c = _E11, _E21, _E21
    verdict = check_f_ring(space, [(a, b, c)], mul=matrix2_mul)
    ca = matrix2_mul(c, a)
    ac = matrix2_mul(a, c)
    zero = space.zero()
    return {
        "f_ring_holds": verdict.holds,
        "witness_is_planted_triple": verdict.witness == (a, b, c),
        "ca_equals_b": ca == b,
        "ca_meet_b_nonzero": meet(space, ca, b) != zero,
        "ac_meet_b_zero": meet(space, ac, b) == zero,
    }


@dataclass(frozen=True)
class CaseRecord:
    case_id: str
    narrative: str
    compute: object  # () -> dict of recorded facts


_REGISTRY: dict[str, CaseRecord] = {
    "A_product_identity": CaseRecord(
        "A_product_identity",
        "On eventually constant rational sequences with the product topology and "
        "pointwise multiplication, the identity map carries order intervals into "
        "order intervals, yet the image of every base neighborhood leaves all but "
        "finitely many coordinates unconstrained, so none of those images is bounded.",
        _case_a,
    ),
    "B_zero_mult_identity": CaseRecord(
        "B_zero_mult_identity",
        "Replacing pointwise multiplication with the zero product makes every set "
        "multiplicatively bounded, trivializing that reading; under the "
        "multiple-of-a-neighborhood reading the identity map is bounded in neither "
        "sense, while remaining order bounded.",
        _case_b,
    ),
    "C_linfty_product_vs_norm": CaseRecord(
        "C_linfty_product_vs_norm",
        "Between the product topology and the sup-norm topology on the same "
        "sequences, the identity map is order bounded but not continuous: a "
        "sup-norm ball constrains every coordinate and no product-base "
        "neighborhood does.",
        _case_c,
    ),
    "D_fring_failure_matrix": CaseRecord(
        "D_fring_failure_matrix",
        "Flattened 2x2 rational matrices under the entrywise order form a lattice "
        "ring that fails the disjointness axiom: with a the (1,1) unit and b = c "
        "the (2,1) unit, a and b are disjoint and c is positive, yet c*a equals b, "
        "so (c*a) meet b is nonzero.",
        _case_d,
    ),
}

CASE_IDS = tuple(_REGISTRY)


def load_expected() -> dict:
    text = resources.files("latring").joinpath("data/gallery_expected.json").read_text()
    return json.loads(text)


@dataclass(frozen=True)
class CaseReport:
    case_id: str
    passed: bool
    expected: dict
    actual: dict
    diffs: tuple[str, ...]
    narrative: str

    def render(self) -> dict:
        return {
            "case": self.case_id,
            "status": "PASS" if self.passed else "FAIL",
            "expected": self.expected,
            "actual": self.actual,
            "diffs": list(self.diffs),
            "summary": self.narrative,
        }


def _flatten(doc: dict, prefix: str = "") -> dict:
    flat = {}
    for key, value in doc.items():
        path = f"{prefix}.{key}" if prefix else key
        if isinstance(value, dict):
            flat.update(_flatten(value, path))
        else:
            flat[path] = value
    return flat


def run_case(case_id: str, expected: dict | None = None) -> CaseReport:
    """Re-derive one case and diff it against the recorded expectation."""
    if case_id not in _REGISTRY:
        raise UnknownCase(f"no case named {case_id!r}; known: {', '.join(CASE_IDS)}")
    record = _REGISTRY[case_id]
    expected_all = expected if expected is not None else load_expected()
    want = dict(expected_all[case_id])
    want.pop("headline", None)
    got = record.compute()
    flat_want, flat_got = _flatten(want), _flatten(got)
    diffs = []
    for key in sorted(set(flat_want) | set(flat_got)):
        if flat_want.get(key) != flat_got.get(key):
            diffs.append(f"{key}: expected {flat_want.get(key)!r}, got {flat_got.get(key)!r}")
    return CaseReport(case_id, not diffs, want, got, tuple(diffs), record.narrative)


def run_cases(expected: dict | None = None, registry: dict | None = None) -> list[CaseReport]:
    reg = registry if registry is not None else _REGISTRY
    if not reg:
        raise EmptyRegistry("no cases registered")
    return [run_case(case_id, expected) for case_id in reg]


@dataclass(frozen=True)
class SuiteReport:
    cases: tuple[CaseReport, ...]
    law_results: tuple
    passed: bool

    def render(self) -> dict:
        return {
            "cases": [c.render() for c in self.cases],
            "laws": [r.render() for r in self.law_results],
            "passed": self.passed,
        }


def run_all(seed: int = 0, cases: int = 1000, registry: dict | None = None) -> SuiteReport:
    """All named cases plus the randomized law suites of every module."""
    from .audits import all_suites  # local import: audits drives gallery cases too

    case_reports = run_cases(registry=registry)
    laws = all_suites(seed=seed, cases=cases)
    passed = all(c.passed for c in case_reports) and all(r.passed for r in laws)
    return SuiteReport(tuple(case_reports), tuple(laws), passed)
