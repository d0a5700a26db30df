import pytest

from homhopf import GF, QQ


@pytest.fixture(params=["Q", "GF7"], ids=["Q", "GF7"])
def field(request):
    return QQ if request.param == "Q" else GF(7)
