import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from charprod import catalog
from charprod.chartab import dixon_table


@pytest.fixture(scope="session")
def group_of():
    """Catalog groups, cached for the whole test session."""
    return catalog.builtin


@pytest.fixture(scope="session")
def table_of(group_of):
    def build(group_id):
        return dixon_table(group_of(group_id))

    return build
