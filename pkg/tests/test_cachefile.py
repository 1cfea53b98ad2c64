import pytest

from degseq import cachefile
from degseq.cachefile import HEADER, CacheFormatError
from degseq.core import MemoCache, count
from degseq.families import regular_count


def test_empty_cache_is_header_only(tmp_path):
    path = tmp_path / "c.cache"
    cachefile.save(MemoCache(), path)
    assert path.read_text() == HEADER + "\n"
    assert len(cachefile.load(path)) == 0


def test_records_after_count(tmp_path):
    cache = MemoCache()
    assert count((2, 2, 2, 2), cache) == 3
    path = tmp_path / "c.cache"
    cachefile.save(cache, path)
    lines = path.read_text().splitlines()
    assert lines[0] == "degseq-cache v1 nonincreasing"
    assert "2,2,2,2\t3" in lines


def test_round_trip_is_byte_identical(tmp_path):
    cache = MemoCache()
    for n in range(2, 16):
        for m in range(1, 9):
            regular_count(n, m, cache)
    first, second = tmp_path / "a", tmp_path / "b"
    cachefile.save(cache, first)
    loaded = cachefile.load(first)
    assert loaded.entries == cache.entries
    cachefile.save(loaded, second)
    assert first.read_bytes() == second.read_bytes()


def test_loaded_cache_is_transparent(tmp_path):
    cache = MemoCache()
    regular_count(12, 4, cache)
    path = tmp_path / "c"
    cachefile.save(cache, path)
    warm = cachefile.load(path)
    for n in range(5, 13):
        assert regular_count(n, 4, warm) == regular_count(n, 4)


def test_empty_sequence_record():
    cache = cachefile.loads(HEADER + "\n\t1\n")
    assert cache.entries == {(): 1}
    assert cachefile.dumps(cache) == HEADER + "\n\t1\n"


@pytest.mark.parametrize(
    "text, lineno",
    [
        ("", 1),
        ("degseq-cache v2 nonincreasing\n", 1),
        ("degseq-cache v1 nondecreasing\n", 1),
        ("something else\n", 1),
        (HEADER + "\n2,2\t1\n1,2\t1\n", 3),
        (HEADER + "\n2,2 1\n", 2),
        (HEADER + "\n2,x\t1\n", 2),
        (HEADER + "\n2,2\t1e3\n", 2),
        (HEADER + "\n2,2\t-1\n", 2),
        (HEADER + "\n1,1\t1\n1,1\t1\n", 3),
        (HEADER + "\n2,0\t1\n", 2),
    ],
)
def test_malformed(text, lineno):
    with pytest.raises(CacheFormatError) as info:
        cachefile.loads(text, "f.cache")
    assert info.value.lineno == lineno
    assert f"f.cache:{lineno}:" in str(info.value)
