import pytest

from properties import EXAMPLES, SUITES, run_suite


@pytest.mark.parametrize("name", list(SUITES))
def test_property_suite(name):
    count, _, err = run_suite(name)
    if err is not None:
        raise err
    assert count >= EXAMPLES
