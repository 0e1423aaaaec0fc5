import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from singsub import (
    DomainError,
    GridFunction,
    bilinear_eval,
    eval_on_grid,
    max_diff,
    union_mesh,
    uniform_time_grid,
)
from singsub.mesh import MeshKind, SpaceMesh, Transition


def make_grid_function(fn, xs, ts):
    xs = np.asarray(xs, float)
    pts = xs.copy()
    pts.flags.writeable = False
    mesh = SpaceMesh(pts, Transition(MeshKind.BOUNDARY, 0.25))
    grid = uniform_time_grid(len(ts) - 1, float(ts[-1]))
    vals = fn(xs[None, :], np.asarray(ts, float)[:, None])
    return GridFunction(np.ascontiguousarray(vals), mesh, grid)


def nonuniform_xs(n):
    rng = np.random.default_rng(n)
    interior = np.sort(rng.uniform(0.02, 0.98, n - 1))
    return np.concatenate([[0.0], interior, [1.0]])


class TestBilinearEval:
    def test_nodal_exact(self):
        g = make_grid_function(lambda x, t: np.sin(3 * x) + t * x, nonuniform_xs(12), np.linspace(0, 1, 9))
        for i in (0, 3, 7, 12):
            for j in (0, 4, 8):
                x = float(g.mesh.points[i])
                t = float(g.grid.points[j])
                assert bilinear_eval(g, x, t) == g.values[j, i]

    def test_reproduces_own_span(self):
        # a + b*x + c*t + d*x*t is reproduced exactly from any grid
        rng = np.random.default_rng(3)
        a, b, c, d = rng.uniform(-2, 2, 4)
        fn = lambda x, t: a + b * x + c * t + d * x * t
        g = make_grid_function(fn, nonuniform_xs(9), np.linspace(0, 1, 7))
        for _ in range(200):
            x = float(rng.uniform(0, 1))
            t = float(rng.uniform(0, 1))
            assert abs(bilinear_eval(g, x, t) - fn(x, t)) <= 1e-13

    def test_quadratic_midpoint_error(self):
        h = 1.0 / 8
        g = make_grid_function(lambda x, t: x * x + 0.0 * t, np.linspace(0, 1, 9), [0.0, 1.0])
        mid = 3 * h + h / 2
        err = bilinear_eval(g, mid, 0.5) - mid * mid
        assert err == pytest.approx(h * h / 4.0, rel=1e-10)

    def test_outside_domain(self):
        g = make_grid_function(lambda x, t: x + t, np.linspace(0, 1, 5), [0.0, 1.0])
        with pytest.raises(DomainError):
            bilinear_eval(g, 1.5, 0.5)
        with pytest.raises(DomainError):
            bilinear_eval(g, 0.5, -0.5)

    @given(st.floats(min_value=0, max_value=1), st.floats(min_value=0, max_value=1))
    @settings(max_examples=100, deadline=None)
    def test_within_data_range(self, x, t):
        g = make_grid_function(lambda x, t: np.cos(4 * x * (t + 1)), np.linspace(0, 1, 17), np.linspace(0, 1, 9))
        v = bilinear_eval(g, x, t)
        assert g.values.min() - 1e-12 <= v <= g.values.max() + 1e-12


class TestUnionMesh:
    def test_contains_all_points(self):
        ga = make_grid_function(lambda x, t: x + t, nonuniform_xs(8), np.linspace(0, 1, 5))
        gb = make_grid_function(lambda x, t: x - t, nonuniform_xs(13), np.linspace(0, 1, 9))
        um = union_mesh(ga, gb)
        for p in ga.mesh.points:
            assert np.min(np.abs(um.x - p)) == 0.0
        for p in gb.grid.points:
            assert np.min(np.abs(um.t - p)) == 0.0
        assert np.all(np.diff(um.x) > 0)

    def test_dedup_exact_duplicates(self):
        xs = np.linspace(0, 1, 9)
        ga = make_grid_function(lambda x, t: x + t, xs, np.linspace(0, 1, 5))
        gb = make_grid_function(lambda x, t: x - t, xs, np.linspace(0, 1, 5))
        um = union_mesh(ga, gb)
        assert len(um.x) == 9
        assert len(um.t) == 5

    def test_close_points_not_merged(self):
        xs = np.concatenate([[0.0], [0.5], [1.0]])
        ys = np.concatenate([[0.0], [0.5 + 1e-9], [1.0]])
        ga = make_grid_function(lambda x, t: x + t, xs, [0.0, 1.0])
        gb = make_grid_function(lambda x, t: x + t, ys, [0.0, 1.0])
        um = union_mesh(ga, gb)
        assert len(um.x) == 4

    def test_mismatched_final_time(self):
        ga = make_grid_function(lambda x, t: x + t, np.linspace(0, 1, 5), [0.0, 1.0])
        gb = make_grid_function(lambda x, t: x + t, np.linspace(0, 1, 5), [0.0, 2.0])
        with pytest.raises(DomainError):
            max_diff(ga, gb)


class TestMaxDiff:
    def test_identical(self):
        g = make_grid_function(lambda x, t: np.sin(x * (1 + t)), nonuniform_xs(10), np.linspace(0, 1, 6))
        assert max_diff(g, g) == 0.0

    def test_constant_offset(self):
        ga = make_grid_function(lambda x, t: 0.0 * x + 0.0 * t, np.linspace(0, 1, 9), np.linspace(0, 1, 5))
        gb = make_grid_function(lambda x, t: 0.0 * x + 0.0 * t + 0.7, nonuniform_xs(6), np.linspace(0, 1, 7))
        assert max_diff(ga, gb) == pytest.approx(0.7, abs=1e-15)

    def test_symmetry_and_triangle(self):
        xs_a, xs_b, xs_c = nonuniform_xs(9), nonuniform_xs(14), nonuniform_xs(11)
        ga = make_grid_function(lambda x, t: np.sin(2 * x) * (1 + t), xs_a, np.linspace(0, 1, 5))
        gb = make_grid_function(lambda x, t: np.cos(3 * x) * t, xs_b, np.linspace(0, 1, 9))
        gc = make_grid_function(lambda x, t: x * t, xs_c, np.linspace(0, 1, 7))
        assert max_diff(ga, gb) == max_diff(gb, ga)
        assert max_diff(ga, gc) <= max_diff(ga, gb) + max_diff(gb, gc) + 1e-12

    def test_dominates_nodewise_differences(self):
        ga = make_grid_function(lambda x, t: np.sin(4 * x) + t, nonuniform_xs(10), np.linspace(0, 1, 5))
        gb = make_grid_function(lambda x, t: np.sin(4 * x) * t, nonuniform_xs(7), np.linspace(0, 1, 9))
        d = max_diff(ga, gb)
        for g in (ga, gb):
            for j, t in enumerate(g.grid.points):
                if t == 0.0:
                    continue
                diffs = np.abs(
                    np.asarray([bilinear_eval(ga, float(x), float(t)) for x in g.mesh.points])
                    - np.asarray([bilinear_eval(gb, float(x), float(t)) for x in g.mesh.points])
                )
                assert d >= float(np.max(diffs)) - 1e-13

    def test_initial_row_not_scanned(self):
        # identical except the initial row: no difference registered
        xs = np.linspace(0, 1, 9)
        ts = np.linspace(0, 1, 5)
        base = np.outer(1 + ts, np.sin(xs))
        other = base.copy()
        other[0] += 5.0
        ga = make_grid_function(lambda x, t: 0 * x + 0 * t, xs, ts)
        pts = xs.copy(); pts.flags.writeable = False
        mesh = SpaceMesh(pts, Transition(MeshKind.BOUNDARY, 0.25))
        grid = uniform_time_grid(4, 1.0)
        ga = GridFunction(base, mesh, grid)
        gb = GridFunction(other, mesh, grid)
        # difference exists only below the first positive level through
        # time interpolation, bounded by the first-cell weight
        assert max_diff(ga, gb) < 5.0


class TestEvalOnGrid:
    def test_matches_pointwise(self):
        g = make_grid_function(lambda x, t: np.sin(2 * x) + np.cos(t), nonuniform_xs(11), np.linspace(0, 1, 7))
        xs = np.linspace(0, 1, 23)
        ts = np.linspace(0, 1, 13)
        block = eval_on_grid(g, xs, ts)
        assert block.shape == (13, 23)
        for r in (0, 5, 12):
            for c in (0, 11, 22):
                assert block[r, c] == pytest.approx(
                    bilinear_eval(g, float(xs[c]), float(ts[r])), abs=1e-15
                )
