"""Seeded property runs for the closure theorems.

Each run draws random instances, checks one claim on each, and keeps a
serializable bundle for every failure so it can be replayed exactly.

Theorem identifiers:

``Thm4_8``
    products of bounded fuzzy lattices under zero-divisor-free t-norms
    certify, with coordinatewise meets, joins and bounds.
``Lemma4_2``
    products of fuzzy posets under zero-divisor-free t-norms are fuzzy posets.
``Thm4_4``
    Lukasiewicz products of fuzzy posets can lose transitivity; the run fails
    if no intransitive product is found at all.  Trial 0 uses the two
    reference lattices shipped with the package.
``Thm5_6``
    distributive implies modular, and the two distributive identities agree.
``ThmProd5_6``
    products of distributive (resp. modular) factors are distributive
    (resp. modular); products of distributive factors are also modular.
``Lemma4_11``
    zero-divisor and nilpotent grid searches agree with each other and with
    the declared status.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from .core import (
    FuzzyRelationFrame,
    check_antisymmetric,
    check_reflexive,
    find_intransitive_triple,
    is_fuzzy_poset,
)
from .gen import GenConfig, gen_bounded_fuzzy_lattice, gen_fuzzy_poset
from .laws import check_distributive, check_modular
from .order import LatticeCertError, certify_lattice
from .product import CoordinatewiseMismatch, certify_product, direct_product, relation_product
from .tnorm import ZeroDivisorStatus, builtin, find_nilpotent, find_zero_divisor

__all__ = ["THEOREMS", "VerifyConfig", "VerificationRun", "verify_theorem", "replay_bundle"]

THEOREMS = ("Thm4_8", "Lemma4_2", "Thm4_4", "Thm5_6", "ThmProd5_6", "Lemma4_11")

DISTRIBUTIVE_KINDS = {"chain": 2.0, "boolean": 1.0, "grid": 1.0}
MODULAR_KINDS = {"chain": 1.0, "boolean": 1.0, "grid": 1.0, "M3": 2.0}
GRID_STEPS = (0.1, 0.05, 0.2, 0.125, 0.25, 0.02)


def _default_tnorms(theorem: str) -> tuple[str, ...]:
    if theorem == "Thm4_4":
        return ("lukasiewicz",)
    if theorem == "Lemma4_11":
        return ("minimum", "algebraic", "lukasiewicz", "hamacher")
    return ("minimum", "algebraic", "hamacher")


@dataclass(frozen=True)
class VerifyConfig:
    trials: int = 200
    seed: int = 42
    size_range: tuple[int, int] = (2, 6)
    factor_range: tuple[int, int] = (2, 3)
    tnorms: tuple[str, ...] | None = None
    grade_range: tuple[float, float] = (0.01, 0.99)
    variant: str = "both"  # ThmProd5_6: "distributive", "modular" or "both"
    max_n: int = 64  # Lemma4_11 fold length

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be positive")
        lo, hi = self.factor_range
        if not 1 <= lo <= hi:
            raise ValueError(f"bad factor_range {self.factor_range}")
        if self.variant not in ("distributive", "modular", "both"):
            raise ValueError(f"unknown variant {self.variant!r}")
        for name in self.tnorms or ():
            builtin(name)


@dataclass
class VerificationRun:
    theorem: str
    trials: int
    seed: int
    failures: list[dict] = field(default_factory=list)
    observations: dict = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "trials": self.trials,
            "seed": self.seed,
            "passed": self.passed,
            "failures": self.failures,
            "observations": self.observations,
            "elapsed": round(self.elapsed, 3),
        }


def _frame_doc(f) -> dict:
    frame = f.frame if hasattr(f, "frame") else f
    return {"elements": list(frame.elements), "mu": frame.mu.tolist()}


def _bundle(theorem, trial, seed, tnorm, factors, error, witness=None, **extra) -> dict:
    b = {
        "theorem": theorem,
        "trial": trial,
        "seed": seed,
        "tnorm": tnorm,
        "factors": [_frame_doc(f) for f in factors],
        "error": error,
        "witness": witness,
    }
    b.update(extra)
    return b


def _rng(cfg: VerifyConfig, trial: int) -> np.random.Generator:
    return np.random.default_rng(cfg.seed + trial)


def _gen_cfg(cfg: VerifyConfig, weights=None) -> GenConfig:
    kw = {"seed": cfg.seed, "size_range": cfg.size_range, "grade_range": cfg.grade_range}
    if weights is not None:
        kw["catalog_weights"] = weights
    return GenConfig(**kw)


def _n_factors(cfg, rng) -> int:
    lo, hi = cfg.factor_range
    return int(rng.integers(lo, hi + 1))


def _require_zero_divisor_free(names):
    for name in names:
        if builtin(name).status is not ZeroDivisorStatus.NO_ZERO_DIVISORS:
            raise ValueError(f"t-norm {name!r} is not declared zero-divisor free; the claim does not apply")


# individual claims; each returns None on success or (error, witness)

def _check_thm4_8(factors, tname):
    p = direct_product(factors, tname)
    try:
        certify_product(p)
    except LatticeCertError as e:
        return f"{e.kind}: {e}", list(e.detail)
    except CoordinatewiseMismatch as e:
        return str(e), list(e.detail)
    return None


def _check_thm4_4(factors, tname):
    """Return (found_witness, failure) for one product of fuzzy posets."""
    frame = _poset_product(factors, tname)
    for check in (check_reflexive, check_antisymmetric):
        v = check(frame)
        if not v.holds:
            return None, (f"product broke {v.name}, only transitivity may fail", list(v.witnesses[0]))
    return find_intransitive_triple(frame), None


def _poset_product(factors, tname) -> FuzzyRelationFrame:
    return relation_product(factors, tname)[0]


def _check_thm5_6(lat):
    dist = check_distributive(lat)
    d1, d2 = dist["MeetJoinDistributive"], dist["JoinMeetDistributive"]
    if d1.holds != d2.holds:
        w = (d1.witnesses or d2.witnesses)[0]
        return "distributive identities disagree", list(w)
    if dist.passed:
        mod = check_modular(lat)
        if not mod.holds:
            return "distributive lattice is not modular", list(mod.witnesses[0])
    return None


def _check_prod5_6(factors, tname, law):
    for f in factors:
        premise = check_distributive(f).passed if law == "distributive" else check_modular(f).holds
        if not premise:
            return f"generated factor is not {law}", None
    p = direct_product(factors, tname)
    try:
        lat = certify_product(p)
    except (LatticeCertError, CoordinatewiseMismatch) as e:
        return f"product failed to certify: {e}", None
    if law == "distributive":
        rep = check_distributive(lat)
        if not rep.passed:
            return "product is not distributive", list(rep.failures()[0].witnesses[0])
    mod = check_modular(lat)
    if not mod.holds:
        return "product is not modular", list(mod.witnesses[0])
    return None


def _check_lemma4_11(tname, step, max_n):
    t = builtin(tname)
    zd = find_zero_divisor(t, step)
    nil = find_nilpotent(t, step, max_n)
    if (zd is None) != (nil is None):
        return "zero-divisor and nilpotent searches disagree", [repr(zd), repr(nil)]
    if zd is not None and t.status is ZeroDivisorStatus.NO_ZERO_DIVISORS:
        return "witness found for an operator declared zero-divisor free", [zd.a, zd.b]
    return None


def _reference_pair():
    from .io import fixture

    return [certify_lattice(fixture("table1_x1")), certify_lattice(fixture("table1_x2"))]


def verify_theorem(theorem: str, config: VerifyConfig | None = None) -> VerificationRun:
    cfg = config or VerifyConfig()
    if theorem not in THEOREMS:
        raise ValueError(f"unknown theorem {theorem!r}; expected one of {', '.join(THEOREMS)}")
    tnorms = tuple(cfg.tnorms or _default_tnorms(theorem))
    run = VerificationRun(theorem, cfg.trials, cfg.seed)
    start = time.perf_counter()

    if theorem in ("Thm4_8", "Lemma4_2", "ThmProd5_6"):
        _require_zero_divisor_free(tnorms)

    if theorem == "Thm4_8":
        gcfg = _gen_cfg(cfg)
        sizes = []
        for trial in range(cfg.trials):
            rng = _rng(cfg, trial)
            factors = [gen_bounded_fuzzy_lattice(gcfg, rng) for _ in range(_n_factors(cfg, rng))]
            sizes.append(int(np.prod([len(f) for f in factors])))
            for tname in tnorms:
                bad = _check_thm4_8(factors, tname)
                if bad:
                    run.failures.append(_bundle(theorem, trial, cfg.seed + trial, tname, factors, *bad))
        run.observations = {"products": cfg.trials * len(tnorms), "max_product_size": max(sizes)}

    elif theorem == "Lemma4_2":
        gcfg = _gen_cfg(cfg)
        for trial in range(cfg.trials):
            rng = _rng(cfg, trial)
            factors = [gen_fuzzy_poset(gcfg, rng) for _ in range(_n_factors(cfg, rng))]
            for tname in tnorms:
                frame = _poset_product(factors, tname)
                rep = is_fuzzy_poset(frame)
                if not rep.passed:
                    v = rep.failures()[0]
                    run.failures.append(_bundle(
                        theorem, trial, cfg.seed + trial, tname, factors,
                        f"product is not a fuzzy poset: {v.name}", list(v.witnesses[0]),
                    ))

    elif theorem == "Thm4_4":
        gcfg = _gen_cfg(cfg)
        found = []
        for trial in range(cfg.trials):
            rng = _rng(cfg, trial)
            if trial == 0:
                factors = [lat.frame for lat in _reference_pair()]
            else:
                factors = [gen_fuzzy_poset(gcfg, rng) for _ in range(_n_factors(cfg, rng))]
            for tname in tnorms:
                witness, bad = _check_thm4_4(factors, tname)
                if bad:
                    run.failures.append(_bundle(theorem, trial, cfg.seed + trial, tname, factors, *bad))
                elif witness is not None:
                    labels = _poset_product(factors, tname).elements
                    found.append({"trial": trial, "tnorm": tname, "witness": [labels[k] for k in witness]})
        run.observations = {
            "intransitive_products": len(found),
            "products": cfg.trials * len(tnorms),
            "examples": found[:10],
        }
        if not found:
            run.failures.append({"theorem": theorem, "error": "no intransitive product found", "seed": cfg.seed})

    elif theorem == "Thm5_6":
        gcfg = _gen_cfg(cfg)
        counts = {"distributive": 0, "modular_only": 0, "neither": 0}
        for trial in range(cfg.trials):
            lat = gen_bounded_fuzzy_lattice(gcfg, _rng(cfg, trial))
            bad = _check_thm5_6(lat)
            if bad:
                run.failures.append(_bundle(theorem, trial, cfg.seed + trial, None, [lat], *bad))
                continue
            if check_distributive(lat).passed:
                counts["distributive"] += 1
            elif check_modular(lat).holds:
                counts["modular_only"] += 1
            else:
                counts["neither"] += 1
        run.observations = counts

    elif theorem == "ThmProd5_6":
        laws = ("distributive", "modular") if cfg.variant == "both" else (cfg.variant,)
        m3_products = 0
        for law in laws:
            gcfg = _gen_cfg(cfg, DISTRIBUTIVE_KINDS if law == "distributive" else MODULAR_KINDS)
            for trial in range(cfg.trials):
                rng = _rng(cfg, trial)
                factors = [gen_bounded_fuzzy_lattice(gcfg, rng) for _ in range(_n_factors(cfg, rng))]
                if law == "modular" and not check_distributive(factors[0]).passed:
                    m3_products += 1
                for tname in tnorms:
                    bad = _check_prod5_6(factors, tname, law)
                    if bad:
                        run.failures.append(_bundle(
                            theorem, trial, cfg.seed + trial, tname, factors, *bad, law=law,
                        ))
        run.observations = {"laws": list(laws), "modular_trials_with_nondistributive_first_factor": m3_products}

    elif theorem == "Lemma4_11":
        for trial in range(cfg.trials):
            step = GRID_STEPS[trial % len(GRID_STEPS)]
            for tname in tnorms:
                bad = _check_lemma4_11(tname, step, cfg.max_n)
                if bad:
                    run.failures.append({
                        "theorem": theorem, "trial": trial, "seed": cfg.seed, "tnorm": tname,
                        "grid_step": step, "max_n": cfg.max_n, "error": bad[0], "witness": bad[1],
                    })

    run.elapsed = time.perf_counter() - start
    return run


def replay_bundle(bundle: dict):
    """Re-run the check recorded in a failure bundle; returns ``(error, witness)`` or None."""
    theorem = bundle["theorem"]
    if theorem == "Lemma4_11":
        return _check_lemma4_11(bundle["tnorm"], bundle["grid_step"], bundle["max_n"])
    frames = [FuzzyRelationFrame(d["elements"], d["mu"]) for d in bundle["factors"]]
    tname = bundle.get("tnorm")
    if theorem == "Thm4_8":
        return _check_thm4_8([certify_lattice(f) for f in frames], tname)
    if theorem == "Lemma4_2":
        rep = is_fuzzy_poset(_poset_product(frames, tname))
        if rep.passed:
            return None
        v = rep.failures()[0]
        return f"product is not a fuzzy poset: {v.name}", list(v.witnesses[0])
    if theorem == "Thm4_4":
        return _check_thm4_4(frames, tname)[1]
    if theorem == "Thm5_6":
        return _check_thm5_6(certify_lattice(frames[0]))
    if theorem == "ThmProd5_6":
        return _check_prod5_6([certify_lattice(f) for f in frames], tname, bundle["law"])
    raise ValueError(f"cannot replay bundle for {theorem!r}")

