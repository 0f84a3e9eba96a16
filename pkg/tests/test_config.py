import pytest
from pydantic import ValidationError

from squeezecat.config import (
    build_config,
    config_hash,
    deep_merge,
    params_hash,
)


def test_empty_config_is_default_scenario():
    cfg = build_config()
    assert cfg.params.hbar_omega == 10.0
    assert cfg.params.beta == 0.25
    assert cfg.dims.n_fock == 80 and cfg.dims.guard == 12
    assert cfg.grid.t_end == 3.0 and cfg.grid.n_points == 61
    assert cfg.gamma_amp_complex == 1.0 + 0.0j
    assert cfg.wigner_spec.outcome == "g"
    assert cfg.sweep_spec.values == [0.05, 0.1, 0.25, 0.4, 0.5]


def test_deep_squeeze_preset():
    cfg = build_config(preset="deep-squeeze")
    assert cfg.params.hbar_omega == 50.0
    assert cfg.params.beta == 0.25  # everything else stays at defaults


def test_unknown_preset():
    with pytest.raises(ValueError):
        build_config(preset="nope")


def test_unknown_key_is_hard_error():
    with pytest.raises(ValidationError):
        build_config({"params": {"hbar_omega": 10.0, "bogus": 1}})
    with pytest.raises(ValidationError):
        build_config({"not_a_field": True})


def test_fock_truncation_minimum():
    with pytest.raises(ValidationError):
        build_config({"dims": {"n_fock": 4}})


def test_config_overlays_preset():
    cfg = build_config({"params": {"beta": 0.1}}, preset="deep-squeeze")
    assert cfg.params.hbar_omega == 50.0
    assert cfg.params.beta == 0.1


def test_gamma_amp_complex_forms():
    assert build_config({"gamma_amp": 0.5}).gamma_amp_complex == 0.5 + 0j
    assert build_config({"gamma_amp": [0.5, -0.25]}).gamma_amp_complex == 0.5 - 0.25j


def test_deep_merge_nested():
    merged = deep_merge({"a": {"x": 1, "y": 2}, "b": 3}, {"a": {"y": 9}})
    assert merged == {"a": {"x": 1, "y": 9}, "b": 3}


def test_config_hash_stable_and_sensitive():
    h1 = config_hash(build_config())
    h2 = config_hash(build_config({}))
    h3 = config_hash(build_config({"params": {"beta": 0.3}}))
    assert h1 == h2
    assert h1 != h3
    assert len(h1) == 64


def test_params_hash_ignores_grid():
    a = params_hash(build_config({"grid": {"n_points": 11}}))
    b = params_hash(build_config())
    assert a == b
