import pytest

from succinv.parameters import ParamsBundle
from succinv.settings import settings
from succinv.weaving import weave_pair
from tests.structures import mix, relabeled, tri


@pytest.fixture
def layering_checks():
    settings.check_layering = True
    yield
    settings.check_layering = False


@pytest.fixture(scope="session")
def tri30_pair():
    return tri(30), relabeled(tri(30), 30)


@pytest.fixture(scope="session")
def tri30_weave(tri30_pair):
    g1, g2 = tri30_pair
    return weave_pair(g1, g2, ParamsBundle(d=2, r=1, t=2, n_occ=1))


@pytest.fixture(scope="session")
def mix71_pair():
    return mix(71), relabeled(mix(71), 71)


@pytest.fixture(scope="session")
def mix71_weave(mix71_pair):
    g1, g2 = mix71_pair
    return weave_pair(g1, g2, ParamsBundle(d=2, r=1, t=2, n_occ=2))
