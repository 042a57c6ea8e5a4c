from collections import Counter
from fractions import Fraction

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from aosrm.inheritance import build_graph
from aosrm.metrics import METRIC_NAMES, compute_metrics, ratio
from aosrm.model import ASPECT
from aosrm.pipeline import analyze_units
from aosrm.redefinition import RedefinitionTally, classify_aspects, detect, tally

from .conftest import units
from .corpus_gen import AdviceSpec, AspectSpec, corpus_specs, render

CASES = settings(max_examples=1000, deadline=None, suppress_health_check=[HealthCheck.too_slow])

# cases executed per property, reported by the acceptance run
CALLS: Counter = Counter()

PAIRS = [("A_r", "A_a"), ("P_r", "P_a"), ("Att_r", "Att_a"), ("M_r", "M_a"), ("TCA", "TAA"), ("TEC", "TAC")]


def measure(files):
    _, marks, report = analyze_units(units(files), "gen")
    return report


@CASES
@given(corpus_specs())
def test_metrics_bounded_and_counters_consistent(spec):
    CALLS["test_metrics_bounded_and_counters_consistent"] += 1
    report = measure(render(spec))
    counts = report.tally.as_dict()
    for r, a in PAIRS:
        assert 0 <= counts[r] <= counts[a]
    for name in METRIC_NAMES:
        v = report.metrics[name]
        assert v.is_na or 0 <= v.value <= 1
    assert report.verify() == []


@CASES
@given(corpus_specs())
def test_noc_sums_to_edge_count(spec):
    CALLS["test_noc_sums_to_edge_count"] += 1
    graph, _ = build_graph(units(render(spec)))
    assert sum(graph.noc(n) for n in graph.nodes) == len(graph.extends_edges)
    for child, parent in graph.extends_edges:
        if graph.nodes[child].kind != "interface":
            assert graph.dit(child) == graph.dit(parent) + 1


@CASES
@given(corpus_specs())
def test_aif_complement(spec):
    CALLS["test_aif_complement"] += 1
    graph, _ = build_graph(units(render(spec)))
    concrete, abstract = classify_aspects(graph)
    taa = len(graph.of_kind(ASPECT))
    assert concrete | abstract == set(graph.nodes) & (concrete | abstract)
    assert not concrete & abstract and len(concrete) + len(abstract) == taa
    if taa:
        aif = compute_metrics(tally(graph, detect(graph)[0]))["AIF"].value
        assert aif + Fraction(len(abstract), taa) == 1


@CASES
@given(corpus_specs(allow_cycles=True), st.randoms(use_true_random=False))
def test_input_order_invariance(spec, rnd):
    CALLS["test_input_order_invariance"] += 1
    parsed = units(render(spec))
    shuffled = parsed[:]
    rnd.shuffle(shuffled)
    _, m1, r1 = analyze_units(parsed, "x")
    _, m2, r2 = analyze_units(shuffled, "x")
    assert m1 == m2
    assert (r1.tally, r1.metrics, r1.per_type, r1.violations, r1.warnings) == (r2.tally, r2.metrics, r2.per_type, r2.violations, r2.warnings)


@CASES
@given(corpus_specs(), st.integers(0, 2**32))
def test_layout_and_comments_do_not_change_structure(spec, seed):
    CALLS["test_layout_and_comments_do_not_change_structure"] += 1
    plain = units(render(spec))
    noisy = units(render(spec, style_seed=seed))
    assert [u.structure() for u in plain] == [u.structure() for u in noisy]


def _add_pair(spec):
    """Append an abstract parent aspect and a concrete child extending it.

    The parent carries an advice on its own pointcut, which is never
    redefined, so the corpus always has A_r < A_a afterwards.
    """
    parent = len(spec.aspects)
    spec.aspects.append(AspectSpec("XP", None, True, [("hook", True)], [AdviceSpec("before", "hook", [])], [], []))
    spec.aspects.append(AspectSpec("XC", parent, False, [("hook", False)], [], [], []))
    return spec.aspects[-1]


@CASES
@given(corpus_specs(allow_cycles=False))
def test_redefined_advice_insertion_raises_adif(spec):
    CALLS["test_redefined_advice_insertion_raises_adif"] += 1
    child = _add_pair(spec)
    before = measure(render(spec))
    child.advices.append(AdviceSpec("after", "hook", []))
    after = measure(render(spec))
    t0, t1 = before.tally, after.tally
    assert (t1.A_r, t1.A_a) == (t0.A_r + 1, t0.A_a + 1)
    assert t0.A_r < t0.A_a
    CALLS["adif_insertions"] += 1
    assert after.metrics["AdIF"].value > before.metrics["AdIF"].value


@CASES
@given(st.tuples(*[st.integers(0, 50)] * 12))
def test_tally_level_monotonicity(raw):
    CALLS["test_tally_level_monotonicity"] += 1
    counts = dict(zip(["A_a", "P_a", "Att_a", "M_a", "TAA", "TAC"], raw[:6]))
    reds = {}
    for (r, a), k in zip(PAIRS, raw[6:]):
        reds[r] = min(k, counts[a])
    t = RedefinitionTally(**counts, **reds)
    base = compute_metrics(t)
    for r, a in PAIRS[:4]:
        d = t.as_dict()
        if d[r] >= d[a]:
            continue
        d[r] += 1
        d[a] += 1
        bumped = compute_metrics(RedefinitionTally(**d))
        name = {"A_r": "AdIF", "P_r": "PIF", "Att_r": "AttIF", "M_r": "CMIF"}[r]
        assert bumped[name].value > base[name].value


@CASES
@given(st.integers(0, 10**6), st.integers(1, 10**6))
def test_ratio_exact(num, den):
    CALLS["test_ratio_exact"] += 1
    num = num % (den + 1)
    v = ratio(num, den)
    assert v.value == Fraction(num, den)
