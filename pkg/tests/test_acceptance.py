"""Acceptance run: one PASS/FAIL line per criterion.

    python -m tests.test_acceptance      # from the repository root
    pytest tests/test_acceptance.py -s   # same checks as pytest items
"""

from __future__ import annotations

import contextlib
import io
import json
import sys
import tempfile
import time
from fractions import Fraction
from pathlib import Path

from aosrm.cli import main as cli
from aosrm.metrics import MetricValue, format_value, ratio
from aosrm.pipeline import analyze

from . import test_properties
from .conftest import AJ_FIXTURES, J_FIXTURES, LEGALITY, write_tree
from .corpus_gen import synthetic_corpus

# Values published for the original application, row by row
# (AdIF, PIF, AttIF, AIF, CMIF, CIF).
REFERENCE_AJ = [
    ("UAS AJ 1.0", ["0.0", "0.0", "0.0", "0.0", "0.785", "0.857"]),
    ("UAS AJ 1.1", ["0.5", "0.25", "0.0", "0.5", "0.357", "0.714"]),
    ("UAS AJ 1.2", ["0.625", "0.333", "0.019", "0.625", "0.212", "0.5"]),
    ("UAS AJ 1.3", ["0.7", "0.411", "0.016", "0.666", "0.184", "0.388"]),
    ("UAS AJ 1.4", ["0.75", "0.473", "0.015", "0.692", "0.209", "0.347"]),
]
REFERENCE_J = [
    ("UAS J 1.0", ["NA", "NA", "0.0", "NA", "0.785", "0.857"]),
    ("UAS J 1.1", ["NA", "NA", "0.0", "NA", "0.785", "0.857"]),
    ("UAS J 1.2", ["NA", "NA", "0.035", "NA", "0.555", "0.588"]),
    ("UAS J 1.3", ["NA", "NA", "0.029", "NA", "0.555", "0.588"]),
    ("UAS J 1.4", ["NA", "NA", "0.026", "NA", "0.454", "0.434"]),
]
LEGALITY_CASES = {
    "extends-concrete-aspect": "ExtendsConcreteAspect",
    "class-extends-aspect": "ClassExtendsAspect",
    "concrete-pointcut-override": "OverridesConcretePointcut",
    "cycle": "InheritanceCycle",
}
MIN_CASES = 1000


def run_cli(*argv) -> tuple[int, str]:
    out = io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(io.StringIO()):
        code = cli([str(a) for a in argv])
    return code, out.getvalue()


def _table(roots, reference):
    labels = ",".join(label for label, _ in reference)
    start = time.perf_counter()
    code, out = run_cli("compare", *roots, "--labels", labels, "--format", "csv", "--verify")
    elapsed = time.perf_counter() - start
    rows = [line.split(",") for line in out.splitlines()[1:]]
    got = {r[0]: r[1:] for r in rows}
    bad = [
        f"{label}/{col}: {got.get(label, ['?'] * 6)[i]!r} != {want[i]!r}"
        for label, want in reference
        for i, col in enumerate(("AdIF", "PIF", "AttIF", "AIF", "CMIF", "CIF"))
        if got.get(label, [None] * 6)[i] != want[i]
    ]
    matched = 6 * len(reference) - len(bad)
    ok = not bad and code == 0 and elapsed < 1.0
    detail = f"{matched}/{6 * len(reference)} cells equal, --verify exit {code}, {elapsed:.2f}s"
    if bad:
        detail += "; " + "; ".join(bad[:3])
    return ok, detail


def check_aspectj_table():
    return _table(AJ_FIXTURES, REFERENCE_AJ)


def check_java_table():
    return _table(J_FIXTURES, REFERENCE_J)


def check_oracle():
    mismatches = []
    for root in AJ_FIXTURES + J_FIXTURES:
        want = json.loads((root / "manifest.json").read_text())["counts"]
        got = analyze(root).report.tally.as_dict()
        mismatches += [f"{root.name}.{k}={got[k]} (hand {want[k]})" for k in want if got[k] != want[k]]
        if set(want) != set(got):
            mismatches.append(f"{root.name}: manifest lists {sorted(want)}")
    n = 12 * len(AJ_FIXTURES + J_FIXTURES)
    return not mismatches, f"{n - len(mismatches)}/{n} counters equal hand counts" + ("; " + "; ".join(mismatches) if mismatches else "")


def check_legality():
    notes, ok = [], True
    for case, kind in LEGALITY_CASES.items():
        code, out = run_cli("analyze", LEGALITY / case, "--format", "machine")
        doc = json.loads(out) if out else {}
        kinds = [v["kind"] for v in doc.get("violations", [])]
        emitted = len(doc.get("metrics", {})) == 6
        good = code == 2 and kinds == [kind] and emitted
        ok &= good
        notes.append(f"{case}: exit {code} {kinds}{'' if emitted else ' (no metrics)'}")
    return ok, "; ".join(notes)


def check_properties():
    test_properties.CALLS.clear()
    failures = []
    tests = [getattr(test_properties, n) for n in dir(test_properties) if n.startswith("test_")]
    for t in tests:
        try:
            t()
        except Exception as exc:  # noqa: BLE001 - report any falsified property
            failures.append(f"{t.__name__}: {type(exc).__name__}")
    counts = {n: test_properties.CALLS[n] for n in (t.__name__ for t in tests)}
    few = [n for n, c in counts.items() if c < MIN_CASES]
    ok = not failures and not few
    detail = f"{len(tests)} properties, min {min(counts.values())} cases each, {test_properties.CALLS['adif_insertions']} advice insertions"
    if failures or few:
        detail += "; " + "; ".join(failures + [f"{n}: only {counts[n]} cases" for n in few])
    return ok, detail


def check_formatting():
    cases = [(ratio(2, 3), "0.666"), (ratio(9, 19), "0.473"), (MetricValue("NA"), "NA"), (ratio(0, 0), "NA")]
    got = [format_value(v) for v, _ in cases]
    want = [w for _, w in cases]
    return got == want, f"got {got}"


def check_trend():
    series = {n: [] for n in ("AdIF", "PIF", "AIF", "CIF")}
    for root in AJ_FIXTURES:
        metrics = analyze(root).report.metrics
        for n in series:
            series[n].append(metrics[n].value)
    rising = all(s == sorted(s) for n, s in series.items() if n != "CIF")
    falling = series["CIF"] == sorted(series["CIF"], reverse=True)
    text = ", ".join(f"{n} " + " ".join(str(Fraction(v).limit_denominator()) for v in s) for n, s in series.items())
    return rising and falling, text


def check_performance():
    with tempfile.TemporaryDirectory() as tmp:
        root = write_tree(Path(tmp) / "corpus", synthetic_corpus(200, seed=11))
        n_files = len(list(root.rglob("*.java"))) + len(list(root.rglob("*.aj")))
        times, outputs = [], []
        for i in range(3):
            log = Path(tmp) / f"run{i}.log"
            start = time.perf_counter()
            code, out = run_cli("analyze", root, "--format", "machine", "--log", log)
            times.append(time.perf_counter() - start)
            outputs.append((code, out, log.read_bytes()))
    same = outputs[0] == outputs[1] == outputs[2]
    ok = n_files == 200 and max(times) < 1.0 and same and outputs[0][0] in (0, 2)
    return ok, f"{n_files} files, slowest {max(times):.3f}s, identical outputs: {same}"


CRITERIA = [
    ("AspectJ version table (30 cells)", check_aspectj_table),
    ("Java version table (30 cells)", check_java_table),
    ("Oracle equivalence (12 counters x 10 fixtures)", check_oracle),
    ("Legality suite", check_legality),
    ("Property suites (>=1000 cases each)", check_properties),
    ("Formatting contract", check_formatting),
    ("Qualitative trend", check_trend),
    ("Performance floor (200 files < 1 s, deterministic)", check_performance),
]


def report_line(name, check) -> tuple[bool, str]:
    ok, detail = check()
    line = f"{'PASS' if ok else 'FAIL'}  {name}: {detail}"
    print(line)
    return ok, line


def test_aspectj_table():
    assert report_line(*CRITERIA[0])[0]


def test_java_table():
    assert report_line(*CRITERIA[1])[0]


def test_oracle_equivalence():
    assert report_line(*CRITERIA[2])[0]


def test_legality_suite():
    assert report_line(*CRITERIA[3])[0]


def test_property_suites():
    assert report_line(*CRITERIA[4])[0]


def test_formatting_contract():
    assert report_line(*CRITERIA[5])[0]


def test_trend():
    assert report_line(*CRITERIA[6])[0]


def test_performance_floor():
    assert report_line(*CRITERIA[7])[0]


def main() -> int:
    results = [report_line(name, check)[0] for name, check in CRITERIA]
    print(f"{sum(results)}/{len(results)} criteria passed")
    return 0 if all(results) else 1


if __name__ == "__main__":
    sys.exit(main())
