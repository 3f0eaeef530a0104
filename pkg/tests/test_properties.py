"""Property-based checks over randomly drawn networks.

Strategies draw a spanning tree first so every network is connected, then
sprinkle extra chords. Weights come from a small rational pool to keep the
exact arithmetic quick.
"""

import math
from fractions import Fraction

from hypothesis import given, settings, strategies as st

from resnet import (
    ResistorNetwork,
    apply_step,
    delta_y,
    greedy_reduce,
    network_spectrum,
    parallel_reduce,
    parse_network,
    render_network,
    resistance_exact,
    resistance_matrix_exact,
    resistance_spectral,
    series_reduce,
    terminal_table,
)
from resnet.errors import ReductionError

from _oracles import WEIGHT_POOL

weights = st.sampled_from(WEIGHT_POOL)


@st.composite
def connected_networks(draw, max_n=7, max_extra=4):
    n = draw(st.integers(min_value=2, max_value=max_n))
    edges = []
    for i in range(1, n):
        parent = draw(st.integers(min_value=0, max_value=i - 1))
        edges.append((parent, i, draw(weights)))
    extra = draw(st.integers(min_value=0, max_value=max_extra))
    for _ in range(extra):
        a = draw(st.integers(min_value=0, max_value=n - 1))
        b = draw(st.integers(min_value=0, max_value=n - 1))
        if a != b:
            edges.append((a, b, draw(weights)))
    return ResistorNetwork.build(n, edges)


@st.composite
def networks_with_pairs(draw):
    net = draw(connected_networks())
    u = draw(st.integers(min_value=0, max_value=net.n - 1))
    v = draw(st.integers(min_value=0, max_value=net.n - 1))
    return net, u, v


# --- metric axioms ---

@given(networks_with_pairs())
def test_resistance_is_a_metric_pointwise(case):
    net, u, v = case
    r = resistance_exact(net, u, v)
    assert r >= 0
    assert (r == 0) == (u == v)
    assert r == resistance_exact(net, v, u)


@given(connected_networks(max_n=6))
@settings(max_examples=40)
def test_triangle_inequality(net):
    table = resistance_matrix_exact(net)
    verts = net.vertices
    for a in verts:
        for b in verts:
            for c in verts:
                assert table[a, c] <= table[a, b] + table[b, c]


# --- ground independence ---

@given(networks_with_pairs())
@settings(max_examples=40)
def test_every_ground_gives_the_same_answer(case):
    net, u, v = case
    if u == v:
        return
    values = {resistance_exact(net, u, v, ground=g) for g in net.vertices}
    assert len(values) == 1


# --- Rayleigh monotonicity ---

@given(networks_with_pairs(), st.integers(min_value=0, max_value=10**6))
@settings(max_examples=40)
def test_raising_one_resistance_never_lowers_any(case, pick):
    net, u, v = case
    if u == v:
        return
    idx = pick % len(net.edges)
    bumped = list(net.edges)
    e = bumped[idx]
    bumped[idx] = (e.u, e.v, e.r * 2)
    worse = ResistorNetwork.build(net.n, bumped)
    assert resistance_exact(worse, u, v) >= resistance_exact(net, u, v)


# --- spectral agreement ---

@given(networks_with_pairs())
@settings(max_examples=40)
def test_spectral_tracks_exact(case):
    net, u, v = case
    spec = network_spectrum(net)
    want = float(resistance_exact(net, u, v))
    got = resistance_spectral(spec, u, v)
    assert math.isclose(got, want, rel_tol=0, abs_tol=1e-9)


# --- rewrites preserve terminal tables ---

@given(connected_networks(), st.randoms(use_true_random=False))
@settings(max_examples=60)
def test_random_applicable_rewrite_preserves_terminals(net, rng):
    step = None
    doubled = sorted(
        {(e.u, e.v) for e in net.edges if len(net.edges_between(e.u, e.v)) > 1}
    )
    deg2 = [v for v in net.vertices if net.degree(v) == 2]
    tried = []
    if doubled:
        tried.append(lambda: parallel_reduce(net, *rng.choice(doubled)))
    if deg2:
        tried.append(lambda: series_reduce(net, rng.choice(deg2)))
    triangles = [
        (u, v, w)
        for u in net.vertices
        for v in net.neighbors(u)
        if v > u
        for w in net.neighbors(v)
        if w > v and net.edges_between(u, w)
    ]
    if triangles:
        tried.append(lambda: delta_y(net, rng.choice(triangles)))
    rng.shuffle(tried)
    for attempt in tried:
        try:
            step = attempt()
            break
        except ReductionError:
            continue
    if step is None:
        return
    survivors = set(net.vertices) - set(step.removed_vertices)
    terminals = tuple(sorted(survivors))[:4]
    before = terminal_table(net, terminals)
    after = terminal_table(apply_step(net, step), terminals)
    assert before == after


@given(connected_networks(max_n=6))
@settings(max_examples=30)
def test_greedy_reduce_two_terminals_certified(net):
    terminals = {net.vertices[0], net.vertices[-1]}
    trace = greedy_reduce(net, terminals, use_delta_y=True, certify=True)
    assert len(set(map(str, trace.certificates))) == 1
    assert trace.replay() == trace.final


# --- serialization round trip ---

@given(connected_networks())
@settings(max_examples=40)
def test_render_parse_round_trip(net):
    assert parse_network(render_network(net)) == net


# --- Foster's identity ---

@given(connected_networks())
@settings(max_examples=40)
def test_foster_sum(net):
    table = resistance_matrix_exact(net)
    assert sum(table[e.u, e.v] / e.r for e in net.edges) == net.n - 1
