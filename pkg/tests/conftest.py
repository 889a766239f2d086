import random

import pytest

from schurq.shapes import ParameterSequence


@pytest.fixture(scope="session")
def random_params():
    return ParameterSequence.random(random.Random(2024), 24)


PARAM_KINDS = ["classical", "factorial", "random"]


@pytest.fixture(params=PARAM_KINDS)
def params(request, random_params):
    if request.param == "classical":
        return ParameterSequence.classical(24)
    if request.param == "factorial":
        return ParameterSequence.factorial(24)
    return random_params
