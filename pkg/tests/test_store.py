import pytest
from hypothesis import given, settings, strategies as st

from overpartition import store
from overpartition.errors import FormatError
from overpartition.kernel import OverpartitionTable, linear_table

FULL = linear_table(300)


def test_format_of_small_table(tmp_path):
    path = tmp_path / "t.txt"
    store.save(OverpartitionTable([1, 2, 4]), path)
    assert path.read_bytes() == b"OVERP1\n3\n0\t1\n1\t2\n2\t4\n"


def test_creates_parent(tmp_path):
    path = tmp_path / "a" / "b" / "cache.txt"
    store.save(linear_table(5), path)
    assert store.load(path) == linear_table(5)


def test_no_temp_files_left(tmp_path):
    store.save(linear_table(10), tmp_path / "c.txt")
    assert [p.name for p in tmp_path.iterdir()] == ["c.txt"]


def test_unwritable_parent(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("x")
    with pytest.raises(OSError, match="cannot write cache"):
        store.save(linear_table(3), blocker / "cache.txt")


def test_round_trip_2000(tmp_path):
    t = linear_table(2000)
    store.save(t, tmp_path / "big.txt")
    assert store.load(tmp_path / "big.txt") == t


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=0, max_value=300))
def test_round_trip_prefixes(n):
    t = OverpartitionTable(FULL.values[: n + 1])
    assert store.loads(store.dumps(t)) == t


def _write(tmp_path, text):
    path = tmp_path / "bad.txt"
    path.write_text(text)
    return path


@pytest.mark.parametrize(
    "text",
    [
        "OVERP2\n3\n0\t1\n1\t2\n2\t4\n",  # magic
        "OVERP1\n5\n0\t1\n1\t2\n2\t4\n3\t8\n4\t15\n",  # odd value
        "OVERP1\n3\n0\t1\n1\t2\n3\t8\n",  # gap
        "OVERP1\n4\n0\t1\n1\t2\n2\t4\n",  # count
        "OVERP1\n2\n0\t1\n1\tx\n",  # non-integer
        "OVERP1\n2\n0\t1\n1\t-2\n",  # negative
        "OVERP1\n1\n0\t3\n",  # base value
        "OVERP1\n0\n",  # empty
        "OVERP1\n",  # no count
        "",
    ],
)
def test_rejects_corrupt(tmp_path, text):
    with pytest.raises(FormatError):
        store.load(_write(tmp_path, text))


def test_missing_file(tmp_path):
    with pytest.raises(FileNotFoundError):
        store.load(tmp_path / "nope.txt")
