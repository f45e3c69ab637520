from importlib import resources

import pytest

from posslogic.parser import parse_goal, parse_kb, parse_literal


def bundled(name: str):
    return parse_kb((resources.files("posslogic") / "data" / f"{name}.kb").read_text())


@pytest.fixture
def load():
    return bundled


@pytest.fixture
def meeting():
    return bundled("meeting")


@pytest.fixture
def meeting_updated():
    return bundled("meeting-updated")


@pytest.fixture
def goal():
    return parse_goal


@pytest.fixture
def lit():
    return parse_literal
