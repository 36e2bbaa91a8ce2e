"""Benchmark harness: seeded noise runs over images and detectors.

For every (image, noise, detector) triple the harness computes the edge
map of the clean image (X) and of the noisy image (Y) with identical
parameters, then reports PSNR(X, Y) and both SSIM variants together with
the achieved SNR of the corruption.  Results are written as CSV rows in
configuration order plus a human-readable table grouped by metric.

The JSON configuration schema::

    {
      "output_dir": "bench_out",
      "nms_threshold": 0.1,
      "edge_threshold": 0.1,
      "canny": {"sigma": 1.4, "low": 0.08, "high": 0.2},
      "detectors": ["proposed", "idz", "sobel", "prewitt", "canny"],
      "noises": [
        {"kind": "gaussian", "variance": 0.01, "seed": 101},
        {"kind": "poisson", "seed": 102},
        {"kind": "salt-pepper", "density": 0.05, "seed": 103},
        {"kind": "speckle", "variance": 0.05, "seed": 104}
      ],
      "images": [
        {"id": "lena", "path": "images/lena.png",
         "params": {"gaussian": {"s1": 7.0, "s2": 7.0, "s": 3.5}, ...}}
      ]
    }

Per-image, per-noise ``params`` carry the filter decay for the proposed
detector; the optional ``"s"`` entry is the scale used by external
phase-congruence detectors and is retained in the schema for provenance
but not consumed here.

Everything is deterministic given the seeds; the wall-time column is the
only field excluded from that guarantee.  Rows may be computed in
parallel (``QHF_THREADS`` caps the worker count) but are always emitted
in configuration order.
"""

from __future__ import annotations

import csv
import io
import json
import math
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import baselines
from .imgio import load_color
from .metrics import psnr, ssim, ssim_windowed
from .noise import NoiseSpec, corrupt, snr
from .pipeline import PipelineConfig, detect, edge_map_to_gray

DETECTORS = ("proposed", "idz", "sobel", "prewitt", "canny")

CSV_COLUMNS = ("image", "noise", "detector", "snr_db", "psnr_db",
               "ssim_global", "ssim_windowed", "parameters", "seed", "wall_ms")


@dataclass(frozen=True)
class CannyParams:
    sigma: float = 1.4
    low: float = 0.08
    high: float = 0.2


@dataclass(frozen=True)
class ImageCase:
    image_id: str
    path: str
    params: dict = field(default_factory=dict)  # noise kind -> {"s1", "s2", ["s"]}


@dataclass(frozen=True)
class BenchmarkConfig:
    images: tuple[ImageCase, ...]
    noises: tuple[NoiseSpec, ...]
    detectors: tuple[str, ...]
    output_dir: str = "bench_out"
    nms_threshold: float = 0.1
    edge_threshold: float = 0.1
    canny: CannyParams = CannyParams()


@dataclass(frozen=True)
class BenchmarkRow:
    image: str
    noise: str
    detector: str
    snr_db: float
    psnr_db: float
    ssim_global: float
    ssim_windowed: float
    parameters: dict
    seed: int
    wall_ms: float


def parse_config(raw: dict) -> BenchmarkConfig:
    """Build a config from parsed JSON, enumerating every problem at once."""
    errors: list[str] = []

    detectors = tuple(raw.get("detectors", ()))
    for name in detectors:
        if name not in DETECTORS:
            errors.append(f"unknown detector {name!r} (expected one of {DETECTORS})")
    if not detectors:
        errors.append("no detectors listed")

    noises: list[NoiseSpec] = []
    for entry in raw.get("noises", ()):
        try:
            noises.append(NoiseSpec(kind=entry.get("kind", ""),
                                    variance=entry.get("variance"),
                                    density=entry.get("density"),
                                    seed=int(entry.get("seed", 0))))
        except (ValueError, TypeError) as exc:
            errors.append(f"bad noise entry {entry!r}: {exc}")
    if not noises:
        errors.append("no noises listed")

    images: list[ImageCase] = []
    for entry in raw.get("images", ()):
        image_id = entry.get("id", "")
        path = entry.get("path", "")
        params = entry.get("params", {})
        if not image_id:
            errors.append(f"image entry missing id: {entry!r}")
        if not Path(path).is_file():
            errors.append(f"image file not found: {path!r} (id {image_id!r})")
        if "proposed" in detectors:
            for spec in noises:
                cell = params.get(spec.kind)
                if not cell or "s1" not in cell or "s2" not in cell:
                    errors.append(f"image {image_id!r} lacks s1/s2 parameters "
                                  f"for noise {spec.kind!r}")
        images.append(ImageCase(image_id, path, params))
    if not images:
        errors.append("no images listed")

    nms_threshold = float(raw.get("nms_threshold", 0.1))
    edge_threshold = float(raw.get("edge_threshold", 0.1))
    for label, value in (("nms_threshold", nms_threshold),
                         ("edge_threshold", edge_threshold)):
        if not 0.0 <= value <= 1.0:
            errors.append(f"{label} must lie in [0, 1], got {value}")
    canny_raw = raw.get("canny", {})
    canny = CannyParams(sigma=float(canny_raw.get("sigma", 1.4)),
                        low=float(canny_raw.get("low", 0.08)),
                        high=float(canny_raw.get("high", 0.2)))

    if errors:
        raise ValueError("invalid benchmark config:\n  " + "\n  ".join(errors))
    return BenchmarkConfig(images=tuple(images), noises=tuple(noises),
                           detectors=detectors,
                           output_dir=str(raw.get("output_dir", "bench_out")),
                           nms_threshold=nms_threshold,
                           edge_threshold=edge_threshold, canny=canny)


def config_to_dict(config: BenchmarkConfig) -> dict:
    """Inverse of :func:`parse_config` up to field defaults."""
    return {
        "output_dir": config.output_dir,
        "nms_threshold": config.nms_threshold,
        "edge_threshold": config.edge_threshold,
        "canny": {"sigma": config.canny.sigma, "low": config.canny.low,
                  "high": config.canny.high},
        "detectors": list(config.detectors),
        "noises": [spec.params() for spec in config.noises],
        "images": [{"id": case.image_id, "path": case.path, "params": case.params}
                   for case in config.images],
    }


def load_config(path: str | Path) -> BenchmarkConfig:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_config(json.load(handle))


def _detect_with(detector: str, img: np.ndarray, params: dict,
                 config: BenchmarkConfig) -> np.ndarray:
    if detector == "proposed":
        cfg = PipelineConfig(s1=float(params["s1"]), s2=float(params["s2"]),
                             threshold=config.nms_threshold)
        return detect(img, cfg)
    if detector == "idz":
        return baselines.idz_direct(img, config.nms_threshold)
    gray = baselines.to_gray(img)
    if detector == "sobel":
        return baselines.sobel(gray, config.edge_threshold)
    if detector == "prewitt":
        return baselines.prewitt(gray, config.edge_threshold)
    return baselines.canny(gray, config.canny.low, config.canny.high,
                           config.canny.sigma)


def _row_parameters(detector: str, params: dict, config: BenchmarkConfig) -> dict:
    if detector == "proposed":
        out = {"s1": float(params["s1"]), "s2": float(params["s2"]),
               "t": config.nms_threshold}
        if "s" in params:
            out["s"] = float(params["s"])
        return out
    if detector == "idz":
        return {"t": config.nms_threshold}
    if detector in ("sobel", "prewitt"):
        return {"t": config.edge_threshold}
    return {"sigma": config.canny.sigma, "low": config.canny.low,
            "high": config.canny.high}


def run_benchmark(config: BenchmarkConfig) -> list[BenchmarkRow]:
    """Execute every (image, noise, detector) cell in configuration order."""
    loaded = {case.image_id: load_color(case.path) for case in config.images}

    def one_cell(case: ImageCase, spec: NoiseSpec, detector: str) -> BenchmarkRow:
        img = loaded[case.image_id]
        params = case.params.get(spec.kind, {})
        clean_map = _detect_with(detector, img, params, config)
        noisy = corrupt(img, spec)
        started = time.perf_counter()
        noisy_map = _detect_with(detector, noisy, params, config)
        wall_ms = (time.perf_counter() - started) * 1000.0
        x = edge_map_to_gray(clean_map)
        y = edge_map_to_gray(noisy_map)
        return BenchmarkRow(image=case.image_id, noise=spec.kind,
                            detector=detector, snr_db=snr(img, noisy),
                            psnr_db=psnr(x, y), ssim_global=ssim(x, y),
                            ssim_windowed=ssim_windowed(x, y),
                            parameters=_row_parameters(detector, params, config),
                            seed=spec.seed, wall_ms=wall_ms)

    cells = [(case, spec, detector) for case in config.images
             for spec in config.noises for detector in config.detectors]
    workers = _worker_count()
    if workers == 1:
        return [one_cell(*cell) for cell in cells]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(one_cell, *cell) for cell in cells]
        return [future.result() for future in futures]


def _worker_count() -> int:
    raw = os.environ.get("QHF_THREADS", "")
    if raw:
        count = int(raw)
        if count < 1:
            raise ValueError(f"QHF_THREADS must be a positive integer, got {raw!r}")
        return count
    return min(4, os.cpu_count() or 1)


def _fmt(value: float) -> str:
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return f"{value:.6g}"


def rows_to_csv(rows: list[BenchmarkRow]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow([
            row.image, row.noise, row.detector, _fmt(row.snr_db),
            _fmt(row.psnr_db), _fmt(row.ssim_global), _fmt(row.ssim_windowed),
            json.dumps(row.parameters, sort_keys=True), row.seed,
            _fmt(row.wall_ms),
        ])
    return buffer.getvalue()


def rows_to_table(rows: list[BenchmarkRow]) -> str:
    """Fixed-width PSNR and SSIM summaries, one line per (image, noise)."""
    detectors = list(dict.fromkeys(row.detector for row in rows))
    pairs = list(dict.fromkeys((row.image, row.noise) for row in rows))
    cell = {(row.image, row.noise, row.detector): row for row in rows}
    blocks = []
    for title, getter in (("PSNR (dB)", lambda r: r.psnr_db),
                          ("SSIM (global)", lambda r: r.ssim_global)):
        lines = [title]
        header = f"{'image':<12} {'noise':<12}" + "".join(
            f" {name:>12}" for name in detectors)
        lines.append(header)
        lines.append("-" * len(header))
        for image, noise in pairs:
            entries = "".join(
                f" {_fmt(getter(cell[(image, noise, name)])) if (image, noise, name) in cell else '-':>12}"
                for name in detectors)
            lines.append(f"{image:<12} {noise:<12}" + entries)
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n"


def write_outputs(config: BenchmarkConfig, rows: list[BenchmarkRow]) -> tuple[Path, Path]:
    out_dir = Path(config.output_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    csv_path = out_dir / "results.csv"
    table_path = out_dir / "results.txt"
    csv_path.write_text(rows_to_csv(rows), encoding="utf-8")
    table_path.write_text(rows_to_table(rows), encoding="utf-8")
    return csv_path, table_path
