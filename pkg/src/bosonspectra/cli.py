"""Command-line front end: JSON experiment configs in, JSON results out.

Config schema (complex numbers are [re, im] pairs; bare numbers are
taken as real)::

    {
      "network": {"preset": "beamsplitter"}
                 | {"preset": "dft", "modes": 4}
                 | {"preset": "random", "modes": 5, "seed": 42}
                 | {"unitary": [[[re, im], ...], ...]},
      "photons": [
        {"gaussian": {"mu": 0.0, "sigma": 1.0, "tau": 0.0}},
        {"coefficients": [[re, im], ...]},
        {"mixture": [{"probability": 0.5, "gaussian": {...}}, ...]}
      ],
      "input_modes": [1, 2],            # optional, default 1..n
      "detector": "nonresolved",        # or "resolved"
      "query": "distribution"           # or {"signature": [...]}
                                        # or {"resolved": [[...], ...]}
      "eps": 0.0                        # optional enumeration threshold
    }

Results documents echo the fully resolved config (defaults
materialized), carry engine metadata, and list outcomes with
probabilities printed to 15 significant digits. Exit codes: 0 success,
2 input error, 3 capacity error, 4 verification failure.
"""

import argparse
import json
import math
import sys
from dataclasses import dataclass

import numpy as np

from . import __version__
from .errors import BosonSpectraError, CapacityError, ConfigurationError
from .network import (
    Interferometer,
    make_beamsplitter_50_50,
    make_dft,
    make_random_unitary,
)
from .oracle import fock_evolve, oracle_probability
from .permanent import permanent_ryser
from .sampling import (
    DISTRIBUTION_OUTCOME_CAP,
    MixedPhotonSource,
    _occupations,
    distribution_nonresolved,
    distribution_resolved,
    mixture_tuples,
    probability_mixed,
    probability_nonresolved,
    probability_resolved,
)
from .spectra import (
    CoefficientSpectrum,
    GaussianWavepacket,
    LambdaMatrix,
    enumerate_configurations,
    lambda_from_photons,
)

EXIT_OK = 0
EXIT_INPUT_ERROR = 2
EXIT_CAPACITY_ERROR = 3
EXIT_VERIFY_FAILURE = 4

VERIFY_TOLERANCE = 1e-9
DEFAULT_RANDOM_SEED = 0


def _sig15(x: float) -> float:
    """Round to 15 significant digits, the document's probability precision."""
    return float(f"{float(x):.15g}")


def _parse_complex(entry, where: str) -> complex:
    if isinstance(entry, (int, float)) and not isinstance(entry, bool):
        return complex(float(entry), 0.0)
    if isinstance(entry, list) and len(entry) == 2 and all(
        isinstance(x, (int, float)) and not isinstance(x, bool) for x in entry
    ):
        return complex(float(entry[0]), float(entry[1]))
    raise ConfigurationError(f"{where}: expected a number or [re, im] pair, got {entry!r}")


def _complex_pair(z: complex) -> list:
    # + 0.0 folds negative zero so documents never print -0.0
    return [float(z.real) + 0.0, float(z.imag) + 0.0]


def _parse_matrix(data, where: str) -> np.ndarray:
    if not isinstance(data, list) or not data or not all(isinstance(r, list) for r in data):
        raise ConfigurationError(f"{where}: expected a nested array of rows")
    rows = [[_parse_complex(e, where) for e in r] for r in data]
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise ConfigurationError(f"{where}: rows have unequal lengths")
    return np.array(rows, dtype=np.complex128)


def _parse_network(data, seed_flag) -> tuple[Interferometer, dict]:
    if not isinstance(data, dict):
        raise ConfigurationError("config 'network' must be an object")
    if "unitary" in data:
        u = Interferometer(_parse_matrix(data["unitary"], "network.unitary"))
        echo = {
            "unitary": [[_complex_pair(z) for z in row] for row in u.matrix],
            "modes": u.m,
        }
        return u, echo
    preset = data.get("preset")
    if preset == "beamsplitter":
        u = make_beamsplitter_50_50()
        return u, {"preset": "beamsplitter", "modes": 2}
    if preset == "dft":
        if "modes" not in data:
            raise ConfigurationError("network preset 'dft' needs 'modes'")
        u = make_dft(int(data["modes"]))
        return u, {"preset": "dft", "modes": u.m}
    if preset == "random":
        if "modes" not in data:
            raise ConfigurationError("network preset 'random' needs 'modes'")
        seed = data.get("seed", seed_flag)
        if seed is None:
            seed = DEFAULT_RANDOM_SEED
        u = make_random_unitary(int(data["modes"]), int(seed))
        return u, {"preset": "random", "modes": u.m, "seed": int(seed)}
    raise ConfigurationError(
        f"network needs 'unitary' or a preset in ('beamsplitter', 'dft', 'random'), got {data!r}"
    )


def _parse_pure_spec(data, where: str):
    if not isinstance(data, dict):
        raise ConfigurationError(f"{where}: photon spec must be an object")
    if "gaussian" in data:
        g = data["gaussian"]
        if not isinstance(g, dict) or "mu" not in g or "sigma" not in g:
            raise ConfigurationError(f"{where}: gaussian spec needs 'mu' and 'sigma'")
        spec = GaussianWavepacket(float(g["mu"]), float(g["sigma"]), float(g.get("tau", 0.0)))
        echo = {"gaussian": {"mu": spec.mu, "sigma": spec.sigma, "tau": spec.tau}}
        return spec, echo
    if "coefficients" in data:
        coeffs = [_parse_complex(e, f"{where}.coefficients") for e in data["coefficients"]]
        spec = CoefficientSpectrum(np.array(coeffs))
        echo = {"coefficients": [_complex_pair(z) for z in spec.coefficients]}
        return spec, echo
    raise ConfigurationError(f"{where}: photon spec needs 'gaussian' or 'coefficients'")


def _parse_photon(data, where: str):
    if isinstance(data, dict) and "mixture" in data:
        comps = data["mixture"]
        if not isinstance(comps, list) or not comps:
            raise ConfigurationError(f"{where}: 'mixture' must be a non-empty list")
        parsed = []
        echoes = []
        for ci, comp in enumerate(comps):
            if not isinstance(comp, dict) or "probability" not in comp:
                raise ConfigurationError(f"{where}.mixture[{ci}]: needs 'probability'")
            spec, echo = _parse_pure_spec(comp, f"{where}.mixture[{ci}]")
            p = float(comp["probability"])
            parsed.append((p, spec))
            echoes.append({"probability": p, **echo})
        return MixedPhotonSource(tuple(parsed)), {"mixture": echoes}
    return _parse_pure_spec(data, where)


def _parse_query(data, n: int, m: int, detector: str):
    if data is None or data == "distribution":
        return ("distribution", None), "distribution"
    if isinstance(data, dict) and "signature" in data:
        if detector != "nonresolved":
            raise ConfigurationError("signature queries need detector 'nonresolved'")
        sig = tuple(int(c) for c in data["signature"])
        if len(sig) != m or any(c < 0 for c in sig) or sum(sig) != n:
            raise ConfigurationError(
                f"signature must hold {n} photons over {m} modes, got {list(sig)}"
            )
        return ("signature", sig), {"signature": list(sig)}
    if isinstance(data, dict) and "resolved" in data:
        if detector != "resolved":
            raise ConfigurationError("resolved-outcome queries need detector 'resolved'")
        parts = tuple(tuple(int(c) for c in part) for part in data["resolved"])
        if any(len(p) != m for p in parts) or sum(sum(p) for p in parts) != n:
            raise ConfigurationError(
                f"resolved outcome must hold {n} photons over {m} modes per spectral part"
            )
        return ("resolved", parts), {"resolved": [list(p) for p in parts]}
    raise ConfigurationError(
        f"query must be 'distribution', {{'signature': [...]}} or {{'resolved': [...]}}, got {data!r}"
    )


@dataclass
class ExperimentConfig:
    interferometer: Interferometer
    photons: list
    input_modes: tuple
    detector: str
    query: tuple
    eps: float
    mixed: bool
    echo: dict


def load_config(path: str, eps_flag=None, seed_flag=None) -> ExperimentConfig:
    """Parse and validate an experiment config file, materializing defaults."""
    with open(path, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ConfigurationError(f"{path}: invalid JSON ({exc})") from exc
    if not isinstance(data, dict):
        raise ConfigurationError(f"{path}: top-level config must be an object")
    unknown = set(data) - {"network", "photons", "input_modes", "detector", "query", "eps"}
    if unknown:
        raise ConfigurationError(f"unknown config keys: {sorted(unknown)}")

    if "network" not in data or "photons" not in data:
        raise ConfigurationError("config needs 'network' and 'photons'")
    interferometer, network_echo = _parse_network(data["network"], seed_flag)
    m = interferometer.m

    if not isinstance(data["photons"], list) or not data["photons"]:
        raise ConfigurationError("config 'photons' must be a non-empty list")
    photons = []
    photons_echo = []
    for pi, pdata in enumerate(data["photons"]):
        spec, echo = _parse_photon(pdata, f"photons[{pi}]")
        photons.append(spec)
        photons_echo.append(echo)
    n = len(photons)

    input_modes = data.get("input_modes")
    if input_modes is None:
        if n > m:
            raise ConfigurationError(f"{n} photons do not fit the default modes 1..{m}")
        input_modes = list(range(1, n + 1))
    input_modes = tuple(int(x) for x in input_modes)

    detector = data.get("detector", "nonresolved")
    if detector not in ("resolved", "nonresolved"):
        raise ConfigurationError(f"detector must be 'resolved' or 'nonresolved', got {detector!r}")

    query, query_echo = _parse_query(data.get("query"), n, m, detector)

    eps = float(data.get("eps", 0.0)) if eps_flag is None else float(eps_flag)
    if eps < 0:
        raise ConfigurationError(f"eps must be >= 0, got {eps}")

    mixed = any(isinstance(p, MixedPhotonSource) for p in photons)
    echo = {
        "network": network_echo,
        "photons": photons_echo,
        "input_modes": list(input_modes),
        "detector": detector,
        "query": query_echo,
        "eps": eps,
    }
    return ExperimentConfig(
        interferometer=interferometer,
        photons=photons,
        input_modes=input_modes,
        detector=detector,
        query=query,
        eps=eps,
        mixed=mixed,
        echo=echo,
    )


def _outcome_json(outcome):
    if outcome and isinstance(outcome[0], tuple):
        return [list(part) for part in outcome]
    return list(outcome)


def _count_configurations(cfg: ExperimentConfig) -> tuple[int, int]:
    """(total spectral configurations visited, mixture combinations)."""
    total = 0
    terms = 0
    for _, specs in mixture_tuples(cfg.photons):
        lam = lambda_from_photons(specs)
        total += sum(1 for _ in enumerate_configurations(lam, cfg.eps))
        terms += 1
    return total, terms


def _metadata(cfg: ExperimentConfig) -> dict:
    visited, terms = _count_configurations(cfg)
    return {
        "engine": f"bosonspectra {__version__}",
        "eps": cfg.eps,
        "spectral_configurations": visited,
        "mixture_terms": terms,
    }


def _signature_space(n: int, m: int):
    count = math.comb(n + m - 1, n)
    if count > DISTRIBUTION_OUTCOME_CAP:
        raise CapacityError(f"{count} output signatures exceed cap {DISTRIBUTION_OUTCOME_CAP}")
    return _occupations(n, (n,) * m)


def _run_distribution(cfg: ExperimentConfig) -> dict:
    n = len(cfg.photons)
    m = cfg.interferometer.m
    kind, value = cfg.query

    if cfg.mixed:
        if cfg.detector == "resolved" and kind == "distribution":
            raise ConfigurationError(
                "resolved distributions are not defined for mixed sources: the induced "
                "basis varies per mixture component; query a specific outcome instead"
            )
        if kind == "distribution":
            pairs = [
                (sig, probability_mixed(cfg.interferometer, cfg.photons, cfg.input_modes,
                                        sig, "nonresolved", cfg.eps))
                for sig in _signature_space(n, m)
            ]
        else:
            pairs = [
                (value, probability_mixed(cfg.interferometer, cfg.photons, cfg.input_modes,
                                          value, cfg.detector, cfg.eps))
            ]
    else:
        lam = lambda_from_photons(cfg.photons)
        if kind == "distribution":
            if cfg.detector == "nonresolved":
                dist = distribution_nonresolved(cfg.interferometer, lam, cfg.input_modes, cfg.eps)
            else:
                dist = distribution_resolved(cfg.interferometer, lam, cfg.input_modes, cfg.eps)
            pairs = list(dist.items())
        elif kind == "signature":
            pairs = [(value, probability_nonresolved(cfg.interferometer, lam, cfg.input_modes,
                                                     value, cfg.eps))]
        else:
            pairs = [(value, probability_resolved(cfg.interferometer, lam, cfg.input_modes,
                                                  value, cfg.eps))]

    outcomes = [
        {"outcome": _outcome_json(outcome), "probability": _sig15(p)} for outcome, p in pairs
    ]
    return {
        "config": cfg.echo,
        "metadata": _metadata(cfg),
        "outcomes": outcomes,
        "sum": _sig15(sum(p for _, p in pairs)),
    }


def _run_verify(cfg: ExperimentConfig) -> dict:
    n = len(cfg.photons)
    m = cfg.interferometer.m

    weighted_states = []
    for weight, specs in mixture_tuples(cfg.photons):
        lam = lambda_from_photons(specs)
        weighted_states.append((weight, lam, fock_evolve(cfg.interferometer, lam, cfg.input_modes)))

    if cfg.detector == "nonresolved":
        outcome_space = list(_signature_space(n, m))
    else:
        if cfg.mixed:
            raise ConfigurationError(
                "resolved verification sweeps are not defined for mixed sources"
            )
        lam = weighted_states[0][1]
        dist = distribution_resolved(cfg.interferometer, lam, cfg.input_modes, cfg.eps)
        outcome_space = list(dist.keys())

    rows = []
    max_dev = 0.0
    for outcome in outcome_space:
        if cfg.mixed:
            engine_p = probability_mixed(cfg.interferometer, cfg.photons, cfg.input_modes,
                                         outcome, cfg.detector, cfg.eps)
            oracle_p = sum(
                w * oracle_probability(state, outcome, cfg.detector)
                for w, _, state in weighted_states
            )
        else:
            _, lam, state = weighted_states[0]
            if cfg.detector == "nonresolved":
                engine_p = probability_nonresolved(cfg.interferometer, lam, cfg.input_modes,
                                                   outcome, cfg.eps)
            else:
                engine_p = probability_resolved(cfg.interferometer, lam, cfg.input_modes,
                                                outcome, cfg.eps)
            oracle_p = oracle_probability(state, outcome, cfg.detector)
        dev = abs(engine_p - oracle_p)
        max_dev = max(max_dev, dev)
        rows.append({
            "outcome": _outcome_json(outcome),
            "engine": _sig15(engine_p),
            "oracle": _sig15(oracle_p),
            "deviation": _sig15(dev),
        })

    return {
        "config": cfg.echo,
        "metadata": _metadata(cfg),
        "outcomes": rows,
        "max_deviation": _sig15(max_dev),
        "tolerance": VERIFY_TOLERANCE,
        "passed": bool(max_dev <= VERIFY_TOLERANCE),
    }


def _parse_alpha_grid(text: str) -> tuple[float, float, int]:
    parts = text.split(":")
    if len(parts) != 3:
        raise ConfigurationError(f"--alpha-grid must be start:stop:count, got {text!r}")
    try:
        start, stop, count = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError as exc:
        raise ConfigurationError(f"--alpha-grid must be start:stop:count, got {text!r}") from exc
    if count < 1:
        raise ConfigurationError("--alpha-grid count must be >= 1")
    if not (0.0 <= start <= stop <= 1.0):
        raise ConfigurationError(f"alpha grid must lie within [0, 1], got {start}:{stop}")
    return start, stop, count


def _run_hom_scan(grid_text: str) -> dict:
    start, stop, count = _parse_alpha_grid(grid_text)
    beamsplitter = make_beamsplitter_50_50()
    results = []
    max_diff = 0.0
    for alpha in np.linspace(start, stop, count):
        alpha = float(alpha)
        lam = LambdaMatrix([[1.0, 0.0], [alpha, math.sqrt(max(1.0 - alpha**2, 0.0))]])
        engine_p = probability_nonresolved(beamsplitter, lam, (1, 2), (1, 1))
        closed = (1.0 - alpha**2) / 2.0
        diff = abs(engine_p - closed)
        max_diff = max(max_diff, diff)
        results.append({
            "alpha": alpha,
            "coincidence_probability": _sig15(engine_p),
            "closed_form": _sig15(closed),
            "difference": _sig15(diff),
        })
    return {
        "config": {
            "experiment": "hom-scan",
            "alpha_grid": {"start": start, "stop": stop, "count": count},
            "network": {"preset": "beamsplitter", "modes": 2},
            "input_modes": [1, 2],
            "detector": "nonresolved",
            "signature": [1, 1],
        },
        "metadata": {"engine": f"bosonspectra {__version__}", "eps": 0.0},
        "outcomes": results,
        "max_abs_difference": _sig15(max_diff),
    }


def _run_permanent(path: str) -> list:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ConfigurationError(f"{path}: invalid JSON ({exc})") from exc
    matrix = _parse_matrix(data, path)
    value = permanent_ryser(matrix)
    return _complex_pair(value)


def _write_document(doc, output: str) -> None:
    indent = 2 if isinstance(doc, dict) else None
    text = json.dumps(doc, indent=indent, sort_keys=True) + "\n"
    if output == "-":
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bosonspectra",
        description="Exact interferometer statistics for spectrally structured photons",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_dist = sub.add_parser("distribution", help="outcome probabilities for a config")
    p_dist.add_argument("--config", required=True, help="experiment config JSON path")
    p_dist.add_argument("--output", default="-", help="results path or '-' for stdout")
    p_dist.add_argument("--eps", type=float, default=None, help="override enumeration threshold")
    p_dist.add_argument("--seed", type=int, default=None, help="seed for the 'random' network preset")

    p_hom = sub.add_parser("hom-scan", help="two-photon coincidence dip vs distinguishability")
    p_hom.add_argument("--alpha-grid", default="0:1:21", help="start:stop:count within [0, 1]")
    p_hom.add_argument("--output", default="-", help="results path or '-' for stdout")

    p_verify = sub.add_parser("verify", help="engine vs brute-force Fock oracle")
    p_verify.add_argument("--config", required=True, help="experiment config JSON path")
    p_verify.add_argument("--output", default="-", help="results path or '-' for stdout")
    p_verify.add_argument("--eps", type=float, default=None, help="override enumeration threshold")
    p_verify.add_argument("--seed", type=int, default=None, help="seed for the 'random' network preset")

    p_perm = sub.add_parser("permanent", help="permanent of a complex matrix file")
    p_perm.add_argument("matrix", help="JSON matrix path (entries are numbers or [re, im])")
    p_perm.add_argument("--output", default="-", help="results path or '-' for stdout")

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "distribution":
            cfg = load_config(args.config, args.eps, args.seed)
            _write_document(_run_distribution(cfg), args.output)
            return EXIT_OK
        if args.command == "hom-scan":
            _write_document(_run_hom_scan(args.alpha_grid), args.output)
            return EXIT_OK
        if args.command == "verify":
            cfg = load_config(args.config, args.eps, args.seed)
            doc = _run_verify(cfg)
            _write_document(doc, args.output)
            return EXIT_OK if doc["passed"] else EXIT_VERIFY_FAILURE
        if args.command == "permanent":
            _write_document(_run_permanent(args.matrix), args.output)
            return EXIT_OK
        raise ConfigurationError(f"unknown command {args.command!r}")
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY_ERROR
    except (BosonSpectraError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
