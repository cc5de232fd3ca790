"""Monte Carlo simulator and dataset generator for noisy one- and
two-qubit systems driven by square or Gaussian control pulses.

The heavy lifting lives in the C++ extension module ``qdsim._core``;
this package adds a small convenience layer for configs and records.
"""

import json as _json

from ._core import (  # noqa: F401
    PulseConfig,
    DiscreteFilter,
    __version__,
    apply_filter,
    chebyshev_filter,
    dataset_names,
    evolve,
    expectation,
    expm_unitary,
    filter_response,
    gaussian_waveform,
    noise_realization,
    parse_dataset_name,
    pauli,
    psd_x,
    psd_z,
    square_waveform,
    tensor,
)
from . import _core


def config(name, **overrides):
    """Config dict for one of the 52 canonical dataset names.

    Keyword overrides are applied on top (e.g. ``K=8``, ``M=256``,
    ``num_ex=2``, ``master_seed=7``).
    """
    cfg = _json.loads(_core.config_json(name))
    cfg.update(overrides)
    return cfg


def generate_example(cfg, example_index=0, threads=1):
    """Runs the full pipeline for one example.

    Returns ``(metadata, arrays)`` where ``arrays`` maps every record key
    to a numpy array.
    """
    raw = _core.generate_example(_json.dumps(cfg), example_index, threads)
    return _json.loads(raw["metadata_json"]), raw["arrays"]


def generate_dataset(cfg, out_dir, threads=1, quiet=True):
    """Writes ``cfg['num_ex']`` examples plus manifest.json under
    ``out_dir/<name>/`` and returns the result summary."""
    return _core.generate_dataset(_json.dumps(cfg), out_dir, threads, quiet)


def read_example(path):
    """Reads one ``.qds`` file back into ``(metadata, arrays)``."""
    raw = _core.read_example(str(path))
    return _json.loads(raw["metadata_json"]), raw["arrays"]


def write_example(cfg, example_index, path, threads=1):
    _core.write_example(_json.dumps(cfg), example_index, str(path), threads)


def cross_validate(cfg, num_examples=5, substeps=64, tolerance=1e-6, threads=1):
    """Compares the simulator against the built-in RK4 oracle on matched
    noise realizations; returns the report dict."""
    return _json.loads(
        _core.cross_validate(_json.dumps(cfg), num_examples, substeps, tolerance, threads)
    )
