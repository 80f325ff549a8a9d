import json

import pytest

from clopen import ring as ring_mod
from clopen.topo import FiniteSpace


@pytest.fixture
def sierpinski():
    return FiniteSpace.sierpinski()


@pytest.fixture
def pseudocircle():
    return FiniteSpace.from_subbasis(4, [{0}, {1}, {0, 1, 2}, {0, 1, 3}])


@pytest.fixture
def sierpinski_plus_point():
    # Sierpinski on {0,1} (with {1} open) next to an isolated point 2
    return FiniteSpace.from_opens(
        3, [[], [1], [0, 1], [2], [1, 2], [0, 1, 2]])


@pytest.fixture
def table_file(tmp_path):
    def write(ring_desc, name="ring.json"):
        tbl = ring_mod.to_table(ring_desc)
        path = tmp_path / name
        path.write_text(json.dumps({
            "size": tbl.size,
            "add": [list(r) for r in tbl.add_table],
            "mul": [list(r) for r in tbl.mul_table],
            "zero": tbl.zero,
            "one": tbl.one,
        }))
        return str(path)

    return write
