"""Smoke tests for the torusact python bindings."""

import json
import math

import pytest

import torusact as ta

PYTHAGORAS_REAL = json.dumps(
    {
        "action": {
            "family": "real-flow",
            "d": 2,
            "n": 3,
            "generators": [
                [{"1": "1"}, {"1": "0"}],
                [{"1": "0"}, {"1": "1"}],
                [{"1": "4/5"}, {"1": "3/5"}],
            ],
        }
    }
)

SQRT_BASIS = [
    {"name": "sqrt2", "value": 1.4142135623730951},
    {"name": "sqrt3", "value": 1.7320508075688772},
]


def test_hnf_example():
    h, u = ta.hnf([[2, 4], [1, 1]])
    assert h == [[1, 1], [0, 2]]
    assert ta.is_unimodular(u)


def test_smith_normal_form():
    d, u, v = ta.smith_normal_form([[2, 0], [0, 3]])
    assert d == [[1, 0], [0, 6]]
    assert ta.is_unimodular(u) and ta.is_unimodular(v)


def test_rational_kernel():
    assert ta.rational_kernel_lattice([["1", "-1/2"]]) == [[1, 2]]


def test_power_basis():
    assert ta.power_basis_coords([-2, 0, 1], 3) == ["0", "2"]


def test_pythagoras_relations_and_kronecker():
    cfg = ta.load_config(PYTHAGORAS_REAL)
    assert ta.relation_lattice(cfg) == [[4, 3, -5]]
    assert not ta.is_uniquely_ergodic(cfg)
    result = ta.kronecker_solvable(cfg, ["1/10", "1/10", "3/50"])
    assert result["solvable"] is False
    assert result["certificate"] == [4, 3, -5]


def test_orbit_structure():
    cfg = ta.load_config(
        json.dumps(
            {
                "action": {
                    "family": "lattice-action",
                    "d": 1,
                    "generators": [[{"1": "2/3"}]],
                }
            }
        )
    )
    structure = ta.orbit_structure(cfg)
    assert structure == {"free_rank": 0, "invariant_factors": [3]}


def test_conjugacy_round_trip():
    g = ta.load_config(
        json.dumps(
            {
                "basis": SQRT_BASIS[:1],
                "action": {
                    "family": "real-flow",
                    "d": 1,
                    "generators": [[{"1": "1"}], [{"sqrt2": "1"}]],
                },
            }
        )
    )
    h = ta.load_config(
        json.dumps(
            {
                "basis": SQRT_BASIS[:1],
                "action": {
                    "family": "real-flow",
                    "d": 1,
                    "generators": [
                        [{"1": "1", "sqrt2": "1"}],
                        [{"1": "2", "sqrt2": "1"}],
                    ],
                },
            }
        )
    )
    result = ta.find_conjugacy(g, h)
    assert result["status"] == "conjugate"
    assert result["P"] == [[1, 1], [2, 1]]
    assert ta.verify_conjugacy(g, h, result["P"], [0.0, 0.0]) <= 1e-9


def test_character_weight():
    w = ta.character_weight("lattice-box", [0.0], [1.0 / 3.0], 1.0)
    assert abs(w) < 1e-14
    w0 = ta.character_weight("real-box", [0.0], [0.0], 25.0)
    assert w0 == 1.0


def test_weyl_trace_hits_the_constant_term():
    cfg = ta.load_config(
        json.dumps(
            {
                "basis": SQRT_BASIS,
                "action": {
                    "family": "real-flow",
                    "d": 1,
                    "generators": [[{"sqrt2": "1"}], [{"sqrt3": "1"}]],
                },
                "polynomial": {
                    "terms": [
                        {"u": [0, 0], "re": 0.7},
                        {"u": [1, 0], "re": 1.0},
                    ]
                },
                "point": [0.2, 0.4],
            }
        )
    )
    trace = ta.weyl_trace(cfg, [10.0, 1000.0])
    assert trace["target"] == pytest.approx(0.7)
    assert trace["errors"][1] < trace["errors"][0]
    assert trace["errors"][1] <= 1.0 / (2 * math.pi * math.sqrt(2.0) * 1000.0)


def test_bohr_mean_trace():
    cfg = ta.load_config(
        json.dumps(
            {
                "basis": SQRT_BASIS,
                "group_polynomial": {
                    "terms": [
                        {"frequency": [{}], "re": 3.0},
                        {"frequency": [{"sqrt2": "1"}], "re": 2.0},
                        {"frequency": [{"sqrt3": "-1"}], "re": 1.0},
                    ]
                },
                "group_shift": [1.7],
                "folner": {"kind": "real-box", "dim": 1},
            }
        )
    )
    trace = ta.bohr_mean_trace(cfg, [1000.0])
    assert trace["target"] == 3.0
    assert abs(trace["averages"][0] - 3.0) < 1e-2


def test_wiener_traces():
    cfg = ta.load_config(
        json.dumps(
            {
                "measure": {
                    "group": "circle",
                    "atoms": [
                        {"location": "0", "re": 0.5},
                        {"location": "1/3", "re": 0.3},
                    ],
                    "uniform_arcs": [{"a": "0", "b": "1", "re": 0.2}],
                },
                "wiener_x": "1/3",
            }
        )
    )
    atom = ta.wiener_atom_trace(cfg, [200.0])
    assert atom["target"] == pytest.approx(0.3)
    assert atom["errors"][0] <= 0.01
    energy = ta.wiener_energy_trace(cfg, [400.0])
    assert energy["target"] == pytest.approx(0.34)
    assert energy["errors"][0] <= 0.005


def test_config_round_trip():
    cfg = ta.load_config(PYTHAGORAS_REAL)
    text = ta.serialize_config(cfg)
    again = ta.load_config(text)
    assert ta.serialize_config(again) == text


def test_config_error_names_the_symbol():
    with pytest.raises(Exception, match="sqrt17"):
        ta.load_config(
            json.dumps(
                {
                    "action": {
                        "family": "real-flow",
                        "d": 1,
                        "generators": [[{"sqrt17": "1"}]],
                    }
                }
            )
        )
