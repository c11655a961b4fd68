"""Replicated simulation experiments over parameter grids.

Configurations are flat ``key = value`` files ('#' starts a comment, lists
are comma-separated)::

    family  = shifted-ar1
    params  = 0.1, 0.5, 0.9      # scalar rho, or a:b pairs like 0.7:-0.7
    methods = kendall, opd
    n       = 100, 300, 500
    h       = 1, 2, 3
    reps    = 1000
    seed    = 20260811
    # optional: kendall_reps, subsample_pairs, opd_normalization, threads

Every grid cell (family, param, n, h) runs ``reps`` independent paths; all
methods of a cell reuse the same path per replication, and each replication
seed derives from the cell key and the replication index alone, so cells are
independent of grid order and reports are byte-reproducible for a fixed
config.

Reproduction conventions (matching the reference simulation study):

* estimators use overlapping windows of the simulated path;
* the OPD plug-in divides indicator counts by the series length
  (``opd_normalization = length``);
* the block-multinormal scenario concatenates the three coordinates of each
  vector into scalar series of length 3n, with cross-covariance between
  matching coordinates only, i.e. the paired streams are i.i.d. bivariate
  normal with correlation rho.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from ordpat import _rng
from ordpat._backend import active_backend_name
from ordpat._version import __version__
from ordpat.errors import InsufficientData, InvalidConfig, OrdpatError
from ordpat.kendall import kendall_tau
from ordpat.opd import opd_from_series
from ordpat.pearson import pearson_mv
from ordpat.procgen import (
    FAMILIES,
    gen_biv_ar1,
    gen_biv_ar2,
    gen_block_multinormal,
    gen_iid_ar1_pair,
    gen_shifted_ar1,
)

METHODS = ("opd", "kendall", "pearson")

REPORT_COLUMNS = ("method", "family", "param", "n", "h", "mean", "sd", "median", "iqr", "reps")


@dataclass(frozen=True)
class ExperimentConfig:
    family: str
    params: tuple[str, ...]
    methods: tuple[str, ...]
    n_grid: tuple[int, ...]
    h_grid: tuple[int, ...]
    reps: int
    base_seed: int
    kendall_reps: int | None = None
    subsample_pairs: int | None = None
    opd_normalization: str = "length"
    kendall_normalization: str = "pairs"

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InvalidConfig(f"family: unknown value {self.family!r}")
        if not self.params or not self.n_grid or not self.h_grid:
            raise InvalidConfig("params, n and h grids must be nonempty")
        for m in self.methods:
            if m not in METHODS:
                raise InvalidConfig(f"methods: unknown method {m!r}")
        if self.reps < 1:
            raise InvalidConfig(f"reps: must be >= 1, got {self.reps}")
        if self.opd_normalization not in ("length", "windows"):
            raise InvalidConfig(
                f"opd_normalization: expected length or windows, got {self.opd_normalization!r}"
            )
        if self.kendall_normalization not in ("pairs", "length"):
            raise InvalidConfig(
                f"kendall_normalization: expected pairs or length, "
                f"got {self.kendall_normalization!r}"
            )
        for p in self.params:
            _parse_param(self.family, p)


@dataclass(frozen=True)
class ReportRow:
    method: str
    family: str
    param: str
    n: int
    h: int
    mean: float | None
    sd: float | None
    median: float | None
    iqr: float | None
    reps: int


@dataclass
class ExperimentReport:
    rows: list[ReportRow] = field(default_factory=list)
    metadata: dict[str, str] = field(default_factory=dict)

    def to_csv_text(self) -> str:
        lines = [",".join(REPORT_COLUMNS)]
        for r in self.rows:
            lines.append(
                ",".join(
                    [
                        r.method,
                        r.family,
                        r.param,
                        str(r.n),
                        str(r.h),
                        _fmt(r.mean),
                        _fmt(r.sd),
                        _fmt(r.median),
                        _fmt(r.iqr),
                        str(r.reps),
                    ]
                )
            )
        return "\n".join(lines) + "\n"

    def write(self, path: str) -> str:
        """Write the CSV report plus a '<path>.meta' sidecar; returns the sidecar path."""
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(self.to_csv_text())
        sidecar = path + ".meta"
        with open(sidecar, "w", encoding="utf-8", newline="\n") as fh:
            for key in sorted(self.metadata):
                fh.write(f"{key} = {self.metadata[key]}\n")
        return sidecar

    def cell(self, method: str, param: str, n: int, h: int) -> ReportRow:
        for r in self.rows:
            if (r.method, r.param, r.n, r.h) == (method, param, n, h):
                return r
        raise KeyError((method, param, n, h))


def _fmt(v: float | None) -> str:
    return "" if v is None else format(v, ".6g")


def summarize(samples) -> tuple[float, float, float, float]:
    """(mean, sd, median, iqr) of a sample; sd uses denominator reps - 1.

    Median and quartiles use linear interpolation between order statistics
    (quantile type 7, the numpy default); a single observation has sd 0.
    """
    arr = np.asarray(samples, dtype=np.float64)
    if arr.size == 0:
        raise InsufficientData("cannot summarize an empty sample")
    sd = float(np.std(arr, ddof=1)) if arr.size > 1 else 0.0
    q25, q75 = np.percentile(arr, [25.0, 75.0])
    return float(np.mean(arr)), sd, float(np.median(arr)), float(q75 - q25)


def _parse_param(family: str, text: str) -> dict:
    try:
        if family in ("biv-ar1", "biv-ar1-rotation", "biv-ar2"):
            a_txt, b_txt = text.split(":")
            return {"a": float(a_txt), "b": float(b_txt)}
        return {"rho": float(text)}
    except ValueError as exc:
        raise InvalidConfig(f"params: cannot parse cell {text!r} for {family}") from exc


def _scenario_path(family: str, param: dict, n: int, seed: int):
    if family == "iid-ar1-pair":
        return gen_iid_ar1_pair(param["rho"], n, seed)
    if family == "shifted-ar1":
        return gen_shifted_ar1(param["rho"], n, seed)
    if family == "biv-ar1":
        return gen_biv_ar1(param["a"], param["b"], n, seed)
    if family == "biv-ar1-rotation":
        return gen_biv_ar1(param["a"], param["b"], n, seed, rotation=True)
    if family == "biv-ar2":
        return gen_biv_ar2(param["a"], param["b"], n, seed)
    # block-multinormal: concatenate coordinates into scalar streams of length 3n
    xv, yv = gen_block_multinormal(param["rho"], n, seed, cross="diagonal")
    return xv.reshape(-1), yv.reshape(-1)


def run_experiment(config: ExperimentConfig, threads: int = 1) -> ExperimentReport:
    """Run the full grid and aggregate mean/sd/median/IQR per (method, cell)."""
    report = ExperimentReport()
    report.metadata = {
        "rng": _rng.GENERATOR_NAME,
        "seed": str(config.base_seed),
        "seed_policy": "sha256(base_seed|family|param|n|h|rep), 64-bit",
        "threads": str(threads),
        "version": f"ordpat {__version__}",
        "backend": active_backend_name(),
        "windows": "overlapping",
        "opd_normalization": config.opd_normalization,
        "kendall_normalization": config.kendall_normalization,
    }
    method_reps = {}
    for m in config.methods:
        r = config.reps
        if m == "kendall" and config.kendall_reps is not None:
            r = min(r, config.kendall_reps)
        method_reps[m] = r
    max_reps = max(method_reps.values())

    for param_text in config.params:
        param = _parse_param(config.family, param_text)
        for n in config.n_grid:
            for h in config.h_grid:
                try:
                    values = _run_cell(
                        config, param, param_text, n, h, method_reps, max_reps, threads
                    )
                except OrdpatError as exc:
                    report.metadata[f"error[{param_text},{n},{h}]"] = type(exc).__name__
                    for m in config.methods:
                        report.rows.append(
                            ReportRow(m, config.family, param_text, n, h, None, None, None, None, 0)
                        )
                    continue
                for m in config.methods:
                    mean, sd, median, iqr = summarize(values[m])
                    report.rows.append(
                        ReportRow(
                            m, config.family, param_text, n, h, mean, sd, median, iqr,
                            method_reps[m],
                        )
                    )
    return report


def _run_cell(config, param, param_text, n, h, method_reps, max_reps, threads):
    values = {m: np.empty(method_reps[m]) for m in config.methods}

    def one_rep(rep: int):
        seed = _rng.derive_seed(config.base_seed, config.family, param_text, n, h, rep)
        x, y = _scenario_path(config.family, param, n, seed)
        out = {}
        for m in config.methods:
            if rep >= method_reps[m]:
                continue
            if m == "opd":
                out[m] = opd_from_series(
                    x, y, h, normalization=config.opd_normalization
                ).value
            elif m == "kendall":
                out[m] = kendall_tau(
                    x, y, h,
                    subsample_pairs=config.subsample_pairs,
                    seed=seed,
                    normalization=config.kendall_normalization,
                ).value
            else:
                # simulated families are zero-mean: raw second moments avoid
                # the centering bias that dominates near-unit-root cells
                out[m] = pearson_mv(x, y, h, center=False).value
        return rep, out

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(one_rep, range(max_reps)))
    else:
        results = map(one_rep, range(max_reps))
    for rep, out in results:
        for m, v in out.items():
            values[m][rep] = v
    return values


def parse_config(text: str) -> ExperimentConfig:
    """Parse the flat key = value format; ORDPAT_SEED overrides the seed key."""
    raw = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.split("#", 1)[0].strip()
        if not stripped:
            continue
        if "=" not in stripped:
            raise InvalidConfig(f"line {lineno}: expected 'key = value'")
        key, value = (part.strip() for part in stripped.split("=", 1))
        if key in raw:
            raise InvalidConfig(f"line {lineno}: duplicate key {key!r}")
        raw[key] = value

    known = {
        "family", "params", "methods", "n", "h", "reps", "seed",
        "kendall_reps", "subsample_pairs", "opd_normalization",
        "kendall_normalization",
    }
    for key in raw:
        if key not in known:
            raise InvalidConfig(f"unknown config key {key!r}")
    for key in ("family", "params", "methods", "n", "h", "reps", "seed"):
        if key not in raw:
            raise InvalidConfig(f"missing config key {key!r}")

    def ints(key):
        try:
            return tuple(int(tok.strip()) for tok in raw[key].split(","))
        except ValueError as exc:
            raise InvalidConfig(f"{key}: expected comma-separated integers") from exc

    seed_text = os.environ.get("ORDPAT_SEED", raw["seed"])
    try:
        seed = int(seed_text)
    except ValueError as exc:
        raise InvalidConfig(f"seed: expected an integer, got {seed_text!r}") from exc

    return ExperimentConfig(
        family=raw["family"],
        params=tuple(tok.strip() for tok in raw["params"].split(",")),
        methods=tuple(tok.strip() for tok in raw["methods"].split(",")),
        n_grid=ints("n"),
        h_grid=ints("h"),
        reps=int(raw["reps"]),
        base_seed=seed,
        kendall_reps=int(raw["kendall_reps"]) if "kendall_reps" in raw else None,
        subsample_pairs=int(raw["subsample_pairs"]) if "subsample_pairs" in raw else None,
        opd_normalization=raw.get("opd_normalization", "length"),
        kendall_normalization=raw.get("kendall_normalization", "pairs"),
    )


def load_config(path: str) -> ExperimentConfig:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_config(fh.read())
