"""Smoke tests for the python bindings. Runs standalone: python3 test_smoke.py"""

import math
import sys

try:
    import steerlab as sl
except ImportError:
    import _steerlab as sl


def approx(a, b, tol=1e-9):
    assert abs(a - b) <= tol, f"{a} != {b} (tol {tol})"


def test_states():
    bell = sl.max_entangled()
    approx(bell[0][0].real, 0.5, 1e-14)
    approx(bell[0][3].real, 0.5, 1e-14)
    alpha = 7 * math.pi / 36
    rho = sl.partial_entangled(alpha)
    approx(rho[0][0].real, math.cos(alpha) ** 2, 1e-14)


def test_pauli():
    sx = sl.pauli(1)
    assert sx[0][1] == 1 and sx[1][0] == 1
    u = sl.rot_y(math.pi / 4)
    approx(u[0][0].real, math.sqrt(2) / 2, 1e-14)


def test_case_scores():
    theta = -math.pi / 12
    sim = sl.simulate_case("steer-ab-ll", math.pi / 4, "1", theta)
    ana = sl.closed_form_scores("steer-ab-ll", math.pi / 4, "1", theta)
    approx(sim[0], ana[0], 1e-12)
    approx(sim[1], ana[1], 1e-12)
    approx(sim[0], math.cos(theta) - math.sin(theta), 1e-12)

    catalog = sl.case_catalog("steer-ab-ll", math.pi / 4)
    assert [c["case"] for c in catalog] == ["1", "2", "3"]


def test_mixing():
    s1, s2 = sl.mixed_scores([(0.0, math.sqrt(2)), (math.sqrt(2), 0.0)], [0.5, 0.5])
    approx(s1, math.sqrt(2) / 2, 1e-14)
    approx(s2, math.sqrt(2) / 2, 1e-14)


def test_optimize():
    result = sl.optimize("steer-ab-ll", ["1", "2"], math.pi / 4)
    approx(result["value"], 1.035, 2e-3)
    approx(result["mix"]["1"], 0.845, 0.02)


def test_envelope():
    env = sl.build_envelope("steer-ab-ll", math.pi / 4, 1024)
    approx(env["s1_min"], 0.0, 1e-6)
    labels = [seg["label"] for seg in env["segments"]]
    assert labels == ["mix(2|3)", "mix(1|3)", "arc(1)"], labels
    approx(env["diagonal_crossing"], 1.021, 5e-3)


def test_weak():
    result = sl.weak_benchmark("square", 0.8, "steer-ab-ll")
    approx(result["f"], 0.6, 1e-12)
    approx(result["s1"], 1.13137, 1e-5)
    approx(result["s2"], 1.13137, 1e-5)


def test_angles():
    approx(sl.parse_angle("7pi/36"), 7 * math.pi / 36, 1e-14)
    assert sl.format_angle(math.pi / 4) == "pi/4"


def test_verify_weak_group():
    results = sl.verify("weak")
    assert len(results) == 6
    assert all(r["pass"] for r in results), results


if __name__ == "__main__":
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for test in tests:
        test()
        print(f"ok {test.__name__}")
    print(f"{len(tests)} smoke tests passed")
    sys.exit(0)
