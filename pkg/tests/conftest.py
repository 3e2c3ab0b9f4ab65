import functools

import hypothesis
import pytest

from liecensus.matgroup import GroupSpec, build_group, conjugacy_classes

hypothesis.settings.register_profile("default", max_examples=60, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=10, deadline=None)
hypothesis.settings.load_profile("default")


@functools.lru_cache(maxsize=None)
def _table(family, n, q):
    return conjugacy_classes(build_group(GroupSpec(family, n, q)))


@pytest.fixture(scope="session")
def class_table():
    """``class_table(family, n, q)``, cached for the whole session."""
    return _table
