import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from helike import (
    IonRecord,
    NoSolutionError,
    ReferenceSet,
    ValidationError,
    fit_global_p,
    interpolated_energy,
    solve_p_for_ion,
)
from helike.fit import model_energy


def synthetic(p0, zs=range(1, 11)):
    return ReferenceSet(tuple(IonRecord(z, f"Z{z}", interpolated_energy(z, p0), "synthetic") for z in zs))


def test_helium_solve_matches_closed_form(refs):
    he = refs.by_z(2)
    p = solve_p_for_ion(he, True)
    assert p == pytest.approx(0.548, abs=0.01)
    assert p == pytest.approx(float(oracles.invert_p(2, he.e_exp)), abs=1e-9)


@pytest.mark.parametrize("z", range(1, 11))
@pytest.mark.parametrize("corr", [True, False])
def test_solve_matches_closed_form_all(refs, z, corr):
    rec = refs.by_z(z)
    exact = float(oracles.invert_p(z, rec.e_exp, corr))
    if not 0.1 <= exact <= 1.5:
        with pytest.raises(NoSolutionError):
            solve_p_for_ion(rec, corr)
        return
    assert solve_p_for_ion(rec, corr) == pytest.approx(exact, abs=1e-9)


def test_uncorrected_neon_out_of_range(refs):
    # the bare formula would need p ~ 1.56 for z = 10
    with pytest.raises(NoSolutionError):
        solve_p_for_ion(refs.by_z(10), False)


def test_self_consistency():
    rec = IonRecord(3, "Li+", interpolated_energy(3, 0.5), "synthetic")
    assert solve_p_for_ion(rec, False) == pytest.approx(0.5, abs=1e-8)


def test_hydride_in_range(refs):
    assert 0.45 <= solve_p_for_ion(refs.by_z(1), True) <= 0.60


def test_no_solution_names_interval():
    rec = IonRecord(2, "He", -3.5, "too deep")
    with pytest.raises(NoSolutionError, match="attainable interval"):
        solve_p_for_ion(rec)


@pytest.mark.parametrize("z", [1, 2, 5, 10])
def test_model_monotone_in_p(z):
    ps = [0.1 + 0.014 * k for k in range(101)]
    es = [model_energy(z, p, True) for p in ps]
    assert all(b < a for a, b in zip(es, es[1:]))


def test_global_fit_bundled(refs):
    res = fit_global_p(refs, True)
    assert 0.50 <= res.p <= 0.62
    assert res.objective == pytest.approx(sum(r * r for _, r in res.residuals), rel=1e-12)
    assert [z for z, _ in res.residuals] == list(range(1, 11))
    assert res.excluded == ()


def test_global_fit_local_minimum_certificate(refs):
    res = fit_global_p(refs, True)

    def objective(p):
        return sum(((model_energy(r.z, p) - r.e_exp) / r.e_exp) ** 2 for r in refs)

    assert objective(res.p) <= objective(res.p - 0.01)
    assert objective(res.p) <= objective(res.p + 0.01)


def test_global_fit_single_record(refs):
    he = ReferenceSet((refs.by_z(2),))
    assert fit_global_p(he, True).p == pytest.approx(solve_p_for_ion(refs.by_z(2), True), abs=1e-6)


def test_global_fit_synthetic_zero_residual():
    res = fit_global_p(synthetic(0.5), False)
    assert res.p == pytest.approx(0.5, abs=1e-6)
    assert res.objective < 1e-20


@settings(deadline=None, max_examples=25)
@given(st.floats(min_value=0.3, max_value=1.0))
def test_fixed_point_recovery(p0):
    assert fit_global_p(synthetic(p0), False).p == pytest.approx(p0, abs=1e-6)


def test_absolute_weighting(refs):
    res = fit_global_p(refs, True, weighting="absolute")
    assert 0.1 <= res.p <= 1.5
    assert res.objective == pytest.approx(sum(r * r for _, r in res.residuals), rel=1e-12)


def test_relative_objective_scale_invariant(refs):
    res = fit_global_p(refs, False)
    k = 3.0
    scaled = [((k * model_energy(z, res.p, False)) - k * refs.by_z(z).e_exp) / (k * refs.by_z(z).e_exp) for z, _ in res.residuals]
    assert sum(s * s for s in scaled) == pytest.approx(res.objective, rel=1e-9)


def test_fit_validation():
    with pytest.raises(ValidationError):
        fit_global_p(ReferenceSet(()), True)
    with pytest.raises(ValidationError):
        fit_global_p(synthetic(0.5), weighting="huber")


def test_fit_is_deterministic(refs):
    assert fit_global_p(refs) == fit_global_p(refs)
