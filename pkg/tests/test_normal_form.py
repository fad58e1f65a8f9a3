import numpy as np
import pytest

from helpers import random_sl2, random_state, rng
from tangle3.exceptions import NearSingularMarginal
from tangle3.linalg import I2, basis_state, kron3, partial_trace, projector
from tangle3.normal_form import filter_step, marginal_deviation, newton_step, normal_form
from tangle3.states import PI_GHZ, PI_W, rho1, rho2, rho3


def test_filter_step_leaves_ghz():
    for j in (1, 2, 3):
        out, a = filter_step(PI_GHZ, j)
        assert np.allclose(out, PI_GHZ, atol=1e-15)
        assert np.allclose(a, I2, atol=1e-15)


def test_filter_step_singular_marginal():
    with pytest.raises(NearSingularMarginal):
        filter_step(projector(basis_state("001")), 3)


def test_filter_step_diagonal_marginal():
    # qubit 1 marginal diag(3/4, 1/4), the rest maximally mixed
    rho = kron3(np.diag([0.75, 0.25]), I2 / 2, I2 / 2) * 0.5 + 0.5 * PI_GHZ
    m = partial_trace(rho, 1)
    out, a = filter_step(rho, 1)
    expected = np.diag(np.diag(m.real) ** -0.5)
    expected /= np.sqrt(np.linalg.det(expected))
    assert np.allclose(a, expected, atol=1e-14)
    assert np.linalg.det(a) == pytest.approx(1, abs=1e-12)
    assert np.trace(out).real < np.trace(rho).real
    marg = partial_trace(out, 1)
    assert np.allclose(marg, np.trace(marg) / 2 * I2, atol=1e-12)


def test_filter_is_positive_with_real_leading_entry():
    _, a = filter_step(random_state(rng(40)), 2)
    assert a[0, 0].imag == 0 and a[0, 0].real > 0


def test_ghz_is_its_own_normal_form():
    res = normal_form(PI_GHZ)
    assert res.converged and res.iterations == 1
    assert np.allclose(res.nf, PI_GHZ, atol=1e-15)
    assert res.trace_nf == pytest.approx(1)


@pytest.mark.parametrize("p", [0.1, 0.5, 0.9])
def test_rho1_trace_tends_to_p(p):
    res = normal_form(rho1(p))
    assert res.converged and not res.degenerate
    assert abs(res.trace_nf - p) <= 1e-6
    assert np.allclose(res.normalized, PI_GHZ, atol=1e-6)


def test_plain_sweeps_agree_with_accelerated_limit():
    rho = rho2(0.9)
    plain = normal_form(rho, accelerate=False, eps_nf=1e-7)
    fast = normal_form(rho, eps_nf=1e-7)
    assert plain.trace_nf == pytest.approx(fast.trace_nf, abs=1e-9)


def test_w_is_degenerate():
    res = normal_form(PI_W)
    assert res.degenerate
    assert res.trace_nf < 1e-6 or not res.converged


def test_result_invariants_random_states():
    g = rng(41)
    for _ in range(4):
        rho = random_state(g)
        res = normal_form(rho)
        assert res.converged and not res.degenerate
        assert marginal_deviation(res.nf) <= 1e-9
        assert res.trace_nf == pytest.approx(np.trace(res.nf).real, abs=1e-12)
        assert np.allclose(res.accumulated_filter.apply(rho), res.nf, atol=1e-8)
        for a in res.accumulated_filter:
            assert np.linalg.det(a) == pytest.approx(1, abs=1e-9)
        assert np.all(np.diff(res.trace_history) <= 1e-12)


def test_rho3_normal_form():
    res = normal_form(rho3())
    assert res.converged
    assert 0 < res.trace_nf < 1


def test_trace_is_invariant_on_local_orbit():
    g = rng(42)
    rho = random_state(g)
    b = kron3(*(random_sl2(g, 0.3) for _ in range(3)))
    moved = b @ rho @ b.conj().T
    scale = np.trace(moved).real
    # tr(rho_NF) scales with the overall trace and is otherwise an orbit invariant
    assert normal_form(moved / scale).trace_nf * scale == pytest.approx(normal_form(rho).trace_nf, abs=1e-8)


def test_newton_step_never_raises_trace():
    rho = random_state(rng(43), rank=3)
    out, op = newton_step(rho)
    assert np.trace(out).real <= np.trace(rho).real
    assert np.allclose(op.apply(rho), out, atol=1e-12)
