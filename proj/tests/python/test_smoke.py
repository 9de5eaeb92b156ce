import json
import math

import pytest

import phyllo


def test_fibonacci_helpers():
    assert [phyllo.fibonacci(u) for u in range(8)] == [0, 1, 1, 2, 3, 5, 8, 13]
    assert phyllo.fibonacci_rank(55) == 10
    assert phyllo.inflate("LSL") == "LSLLS"
    assert phyllo.canonical_form("SLLSL") == phyllo.canonical_form("LSLLS")
    assert phyllo.strip_sequence(7)["counts"] == (13, 8, 13)
    assert math.isclose(phyllo.golden_ratio() * phyllo.golden_divergence(), 1.0)


def test_plane_rings():
    t = phyllo.tessellate(phyllo.generate_plane(3000))
    assert len(t) == 3000
    counts = [g["counts"] for g in phyllo.grain_boundaries(t)]
    assert counts[:4] == [(3, 5, 8), (13, 8, 13), (21, 13, 21), (34, 21, 34)]
    assert all(passed for _, passed, _ in phyllo.check_invariants(t))
    assert [link["ds"] for link in t.neighbors(25)] == [-13, -8, 8, 13, 21]


def test_sphere_and_thresholds():
    t = phyllo.tessellate(phyllo.generate_sphere(1351))
    assert phyllo.topological_charge(t) == 12
    assert phyllo.sphere_thresholds(10)[-2:] == [1331, 3484]
    assert phyllo.equatorial_defects(phyllo.tessellate(phyllo.generate_sphere(1329))) == 0
    summary = phyllo.series_summary(t)
    assert 1.67 * 0.99 <= summary["min_distance"] <= summary["max_distance"] <= 2.51 * 1.01


def test_json_round_trip_and_errors():
    p = phyllo.generate_hyperbolic(200, a=0.05)
    q = phyllo.parse_pattern(p.to_json())
    assert q.to_json() == p.to_json()
    assert json.loads(p.to_json())["surface"]["kind"] == "hyperbolic"
    with pytest.raises(ValueError):
        phyllo.generate_sphere(100)
    with pytest.raises(RuntimeError):
        phyllo.parse_pattern("{")


def test_render_and_cli():
    svg = phyllo.render_svg(phyllo.tessellate(phyllo.generate_sphere(301)), projection="stereographic", size=300)
    assert svg.startswith("<svg") and 'class="origin"' in svg
    code, out, _ = phyllo.run_cli(["thresholds", "--u-max", "5", "--format", "csv"])
    assert code == 0
    assert out.splitlines()[0].startswith("u,f_2u_plus_1,threshold")
    code, _, _ = phyllo.run_cli(["generate", "--geometry", "torus"])
    assert code == 1
