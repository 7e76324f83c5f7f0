import os

import pytest

from arrays.window import load_window
from bratteli.fixtures import FIXTURES
from core.settings import FIXTURES_DIR
from symbolic.parser import load_subshift


@pytest.fixture
def golden():
    return load_subshift(os.path.join(FIXTURES_DIR, "golden.sub"))


@pytest.fixture
def full2():
    return load_subshift(os.path.join(FIXTURES_DIR, "full2.sub"))


@pytest.fixture
def sunny():
    return load_subshift(os.path.join(FIXTURES_DIR, "sunny.sub"))


@pytest.fixture
def dyadic():
    return load_window(os.path.join(FIXTURES_DIR, "dyadic.arr"))


@pytest.fixture(params=sorted(FIXTURES))
def fixture_diagram(request):
    return FIXTURES[request.param]()
