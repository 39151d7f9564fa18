import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError
from sklearn.pipeline import make_pipeline

from suprematrix import qutrit
from suprematrix.channels import dephasing_channel
from suprematrix.estimators import AffineChannel, MalevichFeatures, ProbabilityRepresentation
from suprematrix.exceptions import ProbabilityRangeError
from suprematrix.sampling import SeededGenerator, sample_density_matrix, sample_unitary


@pytest.fixture
def rhos():
    return sample_density_matrix(SeededGenerator(1), 3, size=50)


def test_representation_round_trip(rhos):
    est = ProbabilityRepresentation().fit(rhos)
    pi = est.transform(rhos)
    assert pi.shape == (50, 8)
    np.testing.assert_allclose(est.inverse_transform(pi), rhos, atol=1e-14)
    assert list(est.get_feature_names_out())[:3] == ["p1_1", "p2_1", "p3_1"]


def test_qubit_representation():
    rho = sample_density_matrix(SeededGenerator(2), 2, size=10)
    est = ProbabilityRepresentation(kind="qubit")
    assert est.fit_transform(rho).shape == (10, 3)


def test_not_fitted(rhos):
    with pytest.raises(NotFittedError):
        ProbabilityRepresentation().transform(rhos)


def test_bad_kind(rhos):
    with pytest.raises(ValueError):
        ProbabilityRepresentation(kind="ququart").fit(rhos)


def test_clone_and_params():
    est = MalevichFeatures(include_purity=True)
    assert est.get_params() == {"include_purity": True}
    c = clone(est)
    assert c.include_purity and c is not est
    est.set_params(include_purity=False)
    assert not est.include_purity


def test_pipeline_features(rhos):
    pipe = make_pipeline(ProbabilityRepresentation(), MalevichFeatures(include_purity=True))
    out = pipe.fit_transform(rhos)
    assert out.shape == (50, 13)
    np.testing.assert_allclose(out[:, -1], np.trace(rhos @ rhos, axis1=1, axis2=2).real, atol=1e-12)
    assert np.all((out[:, [3, 7, 11]] >= 1.5 - 1e-12) & (out[:, [3, 7, 11]] < 4.5))


def test_pipeline_channel(rhos):
    u = sample_unitary(SeededGenerator(3), 3)
    pipe = make_pipeline(ProbabilityRepresentation(), AffineChannel(u))
    out = pipe.fit_transform(rhos)
    expected = qutrit.probabilities_from_density(u @ rhos @ u.conj().T)
    np.testing.assert_allclose(out, expected, atol=1e-10)


def test_affine_channel_variants(rhos):
    pi = ProbabilityRepresentation().fit_transform(rhos)
    np.testing.assert_array_equal(AffineChannel().fit(pi).transform(pi), pi)
    out = AffineChannel(dephasing_channel()).fit(pi).transform(pi)
    np.testing.assert_allclose(out[:, [0, 1, 3, 4, 6, 7]], 0.5, atol=1e-12)


def test_probability_batch_validation():
    with pytest.raises(ProbabilityRangeError):
        MalevichFeatures().fit(np.full((2, 8), 1.5))
    with pytest.raises(ValueError):
        MalevichFeatures().fit(np.full((2, 7), 0.5))
