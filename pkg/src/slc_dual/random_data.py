"""Seeded generators of valid gluing data, for sweeps and property tests."""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .slc_data import SlcGluingData


@dataclass(frozen=True)
class RandomConfig:
    max_components: int = 6
    max_curves: int = 12
    max_points: int = 12
    # chance that a curve is glued to itself instead of to another curve
    self_match: float = 0.3
    # chance that a self-glued curve leaves an incidence fixed
    fixed_incidence: float = 0.3
    max_steps: int = 40


@dataclass(frozen=True)
class SncConfig:
    max_components: int = 6
    max_double_curves: int = 8
    max_triple_points: int = 4


def _pair_up(rng, items, fixed_prob):
    """Random involution on ``items``, as a list of pairs (fixed points as self-pairs)."""
    items = list(items)
    rng.shuffle(items)
    pairs = []
    while items:
        a = items.pop()
        if not items or rng.random() < fixed_prob:
            pairs.append((a, a))
        else:
            pairs.append((a, items.pop()))
    return pairs


def _curve_layout(rng, cfg):
    n_comp = rng.randint(1, cfg.max_components)
    components = [f"D{i}" for i in range(n_comp)]
    n_curves = rng.randint(0, cfg.max_curves)
    curves = [(f"c{i}", rng.choice(components)) for i in range(n_curves)]
    ids = [c for c, _ in curves]
    rng.shuffle(ids)
    partner = {}
    while ids:
        a = ids.pop()
        if not ids or rng.random() < cfg.self_match:
            partner[a] = a
        else:
            b = ids.pop()
            partner[a], partner[b] = b, a
    return components, curves, partner


def _balanced_points(rng, curves, partner, cfg):
    """Place points until every curve carries as many incidences as its partner.

    Each point adds one incidence to two curves of one component; whenever a
    curve runs ahead of its partner, the next point goes on the partner.
    Returns None if the walk gets stuck or runs past the limits.
    """
    owner = dict(curves)
    on_comp = {}
    for c, d in curves:
        on_comp.setdefault(d, []).append(c)
    count = {c: 0 for c in owner}
    points = []

    def deficit():
        return sorted(c for c in owner if partner[c] != c and count[c] < count[partner[c]])

    target = rng.randint(0, cfg.max_points)
    steps = 0
    while steps < cfg.max_steps:
        steps += 1
        short = deficit()
        if short:
            d = rng.choice(short)
        elif len(points) < target:
            d = rng.choice(sorted(owner)) if owner else None
        else:
            return points
        if d is None:
            return points
        others = [e for e in on_comp[owner[d]] if e != d]
        if not others:
            if short:
                return None
            continue
        # prefer a second curve that does not open a new deficit
        calm = [e for e in others if partner[e] == e or count[e] < count[partner[e]]]
        e = rng.choice(calm if calm and rng.random() < 0.7 else others)
        points.append((f"p{len(points)}", owner[d], tuple(sorted((d, e)))))
        count[d] += 1
        count[e] += 1
        if len(points) > cfg.max_points:
            return None
    return None if deficit() else points


def random_dataset(rng: random.Random, cfg: RandomConfig = RandomConfig()) -> SlcGluingData:
    """A random valid dataset: curve matching first, then balanced points, then an incidence involution."""
    while True:
        components, curves, partner = _curve_layout(rng, cfg)
        points = _balanced_points(rng, curves, partner, cfg)
        if points is not None:
            break
    on_curve = {c: [] for c, _ in curves}
    for p, _, cs in points:
        for c in cs:
            on_curve[c].append((p, c))
    curve_pairs, incidence_pairs = [], []
    for a in sorted(partner):
        b = partner[a]
        if a > b:
            continue
        curve_pairs.append((a, b))
        if a == b:
            incidence_pairs += _pair_up(rng, on_curve[a], cfg.fixed_incidence)
        else:
            image = list(on_curve[b])
            rng.shuffle(image)
            incidence_pairs += list(zip(on_curve[a], image))
    return SlcGluingData.build(components, curves, points, curve_pairs, incidence_pairs)


def random_snc_dataset(rng: random.Random, cfg: SncConfig = SncConfig()) -> SlcGluingData:
    """Gluing data whose dual complex is a random two-dimensional Delta-complex.

    Components are the vertices.  Each double curve joins two distinct
    components and each triple point spans three distinct double curves on
    three distinct components.
    """
    n = rng.randint(2, cfg.max_components)
    components = [f"D{i}" for i in range(n)]
    pairs = list(combinations(range(n), 2))
    double = [rng.choice(pairs) for _ in range(rng.randint(1, cfg.max_double_curves))]
    if n >= 3 and rng.random() < 0.8:
        # seed one triangle so that most samples have triple points
        double += list(combinations(sorted(rng.sample(range(n), 3)), 2))
    by_pair = {}
    for k, pair in enumerate(double):
        by_pair.setdefault(pair, []).append(k)
    triples = [t for t in combinations(range(n), 3) if all(p in by_pair for p in combinations(t, 2))]

    curves, curve_pairs = [], []
    for k, (i, j) in enumerate(double):
        curves += [(f"e{k}d{i}", f"D{i}"), (f"e{k}d{j}", f"D{j}")]
        curve_pairs.append((f"e{k}d{i}", f"e{k}d{j}"))

    points, incidence_pairs = [], []
    for z in range(rng.randint(0, cfg.max_triple_points) if triples else 0):
        a, b, c = rng.choice(triples)
        side = {p: rng.choice(by_pair[p]) for p in ((a, b), (b, c), (a, c))}
        corner = {}
        for v in (a, b, c):
            ks = [side[p] for p in side if v in p]
            pid = f"z{z}d{v}"
            corner[v] = pid
            points.append((pid, f"D{v}", tuple(sorted(f"e{k}d{v}" for k in ks))))
        for (i, j), k in side.items():
            incidence_pairs.append(((corner[i], f"e{k}d{i}"), (corner[j], f"e{k}d{j}")))
    return SlcGluingData.build(components, curves, points, curve_pairs, incidence_pairs)
