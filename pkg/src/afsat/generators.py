"""Random framework generators and benchmark suites.

Randomness comes from numpy's PCG64, a named 64-bit generator whose streams
are stable across platforms and numpy releases, so a (spec, seed) pair
pins a framework byte for byte. Two attack models are provided:

* probability: one independent uniform draw per ordered argument pair in
  row-major order, the pair attacking iff the draw is <= p_att;
* count: exactly n_att distinct ordered pairs, drawn exactly uniformly by a
  partial Fisher-Yates pass over the flattened k*k pair space; n_att may
  itself be drawn uniformly from {0..k^2}.

Both models include self-attacks in the pair space (the suite manifest
records this). Fixed extremes (no attacks / every pair attacking) round
out benchmark suites. Generated arguments are named a1..ak.
"""

import json
import os

import numpy as np

from .core import ArgumentationFramework
from .fileformats import serialize_apx

METHOD_PROBABILITY = "probability"
METHOD_COUNT = "count"
METHOD_EMPTY = "empty"
METHOD_FULL = "full"

MANIFEST_FORMAT = "afsat-suite-1"
MANIFEST_NAME = "manifest.json"

# Paper-scale suite shape: 8 sizes x 3 densities x 50 probability-model
# instances, 8 sizes x 200 count-model instances, plus the 16 extremes.
SUITE_K_VALUES = (25, 50, 75, 100, 125, 150, 175, 200)
SUITE_P_VALUES = (0.25, 0.5, 0.75)
SUITE_PROB_PER_CLASS = 50
SUITE_COUNT_PER_CLASS = 200


def _names(k):
    return [f"a{i}" for i in range(1, k + 1)]


def _rng(seed):
    return np.random.Generator(np.random.PCG64(seed))


def gen_probability(k, p_att, seed):
    """Framework with each of the k*k ordered pairs attacking independently
    with probability p_att."""
    if k < 1:
        raise ValueError("k must be positive")
    if not 0.0 <= p_att <= 1.0:
        raise ValueError(f"p_att out of [0,1]: {p_att}")
    draws = _rng(seed).random(k * k)
    attacks = []
    for idx in range(k * k):
        if draws[idx] <= p_att:
            i, j = divmod(idx, k)
            attacks.append((i + 1, j + 1))
    return ArgumentationFramework(_names(k), attacks)


def gen_count(k, n_att, seed):
    """Framework with exactly n_att distinct ordered attack pairs, exactly
    uniform over all such attack relations. n_att=None draws the count
    uniformly from {0..k^2} first."""
    if k < 1:
        raise ValueError("k must be positive")
    k2 = k * k
    rng = _rng(seed)
    if n_att is None:
        n_att = int(rng.integers(0, k2 + 1))
    if not 0 <= n_att <= k2:
        raise ValueError(f"n_att out of [0,{k2}]: {n_att}")
    # partial Fisher-Yates over the flattened pair space, positions realized
    # lazily so large k stays cheap
    repl = {}
    attacks = []
    for t in range(n_att):
        r = int(rng.integers(t, k2))
        idx = repl.get(r, r)
        repl[r] = repl.get(t, t)
        i, j = divmod(idx, k)
        attacks.append((i + 1, j + 1))
    return ArgumentationFramework(_names(k), attacks)


def gen_empty(k):
    """Framework with no attacks at all."""
    return ArgumentationFramework(_names(k))


def gen_full(k):
    """Framework where every ordered pair (self-attacks included) attacks."""
    return ArgumentationFramework(
        _names(k), [(i, j) for i in range(1, k + 1) for j in range(1, k + 1)])


def generate(method, k, param=None, seed=0):
    """Dispatch a single generation by method name."""
    if method == METHOD_PROBABILITY:
        return gen_probability(k, param, seed)
    if method == METHOD_COUNT:
        return gen_count(k, param, seed)
    if method == METHOD_EMPTY:
        return gen_empty(k)
    if method == METHOD_FULL:
        return gen_full(k)
    raise ValueError(f"unknown generation method: {method!r}")


def _scaled(count, scale):
    return max(1, round(count * scale))


def suite_classes(scale=1.0, k_values=SUITE_K_VALUES, p_values=SUITE_P_VALUES,
                  prob_per_class=SUITE_PROB_PER_CLASS,
                  count_per_class=SUITE_COUNT_PER_CLASS,
                  include_count=True, include_extremes=True):
    """Instance-class plan: list of (class_id, method, k, param, n_instances).

    The default plan at scale 1.0 is 24 probability classes of 50, 8
    count classes of 200, and 16 extreme singletons (2816 instances).
    Scaling multiplies the per-class instance counts, never below 1;
    extremes stay singletons.
    """
    classes = []
    for k in k_values:
        for p in p_values:
            classes.append((f"prob-k{k:03d}-p{p}", METHOD_PROBABILITY, k, p,
                            _scaled(prob_per_class, scale)))
    if include_count:
        for k in k_values:
            classes.append((f"count-k{k:03d}", METHOD_COUNT, k, None,
                            _scaled(count_per_class, scale)))
    if include_extremes:
        for k in k_values:
            classes.append((f"empty-k{k:03d}", METHOD_EMPTY, k, None, 1))
            classes.append((f"full-k{k:03d}", METHOD_FULL, k, None, 1))
    return classes


def _derive_seed(base_seed, class_index, instance_index):
    ss = np.random.SeedSequence([int(base_seed), class_index, instance_index])
    return int(ss.generate_state(1, np.uint64)[0])


def build_suite(out_dir, scale=1.0, base_seed=0, classes=None):
    """Materialize a suite: one APX file per instance plus a manifest.

    Per-instance seeds derive deterministically from (base_seed, class
    index, instance index) via numpy's SeedSequence, so any instance can be
    regenerated alone from its manifest row. Returns the manifest dict;
    writes ``manifest.json`` into out_dir.
    """
    if classes is None:
        classes = suite_classes(scale)
    os.makedirs(out_dir, exist_ok=True)
    instances = []
    for class_index, (class_id, method, k, param, count) in enumerate(classes):
        for inst_index in range(count):
            seed = _derive_seed(base_seed, class_index, inst_index)
            af = generate(method, k, param, seed)
            instance_id = f"{class_id}-{inst_index:03d}"
            path = f"{instance_id}.apx"
            with open(os.path.join(out_dir, path), "w") as fh:
                fh.write(serialize_apx(af))
            row = {"id": instance_id, "class_id": class_id, "k": k,
                   "method": method, "param": param, "seed": seed,
                   "path": path}
            if method == METHOD_COUNT and param is None:
                row["realized_n_att"] = len(af.attacks)
            instances.append(row)
    manifest = {"format": MANIFEST_FORMAT,
                "base_seed": base_seed,
                "scale": scale,
                "count_method_includes_self_attacks": True,
                "instances": instances}
    with open(os.path.join(out_dir, MANIFEST_NAME), "w") as fh:
        json.dump(manifest, fh, indent=2, sort_keys=True)
        fh.write("\n")
    return manifest


def load_manifest(path):
    """Read a suite manifest; accepts the directory or the file path."""
    if os.path.isdir(path):
        path = os.path.join(path, MANIFEST_NAME)
    with open(path) as fh:
        manifest = json.load(fh)
    if manifest.get("format") != MANIFEST_FORMAT:
        raise ValueError(f"not a suite manifest: {path}")
    manifest["_dir"] = os.path.dirname(os.path.abspath(path))
    return manifest


def instance_path(manifest, row):
    return os.path.join(manifest["_dir"], row["path"])
