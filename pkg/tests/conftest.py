from pathlib import Path

import pytest

from arabic_transfer.lexicon import load_lexicon

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def lex():
    return load_lexicon()


@pytest.fixture(scope="session")
def data_dir():
    return DATA
