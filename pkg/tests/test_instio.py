import json

import pytest

from crossorder import ExactField, ResidueData, StructureError, \
    example_rank2, random_instance
from crossorder import instio


def test_round_trip_example():
    ext, ct = example_rank2()
    ext2, ct2, res = instio.loads(instio.dumps(ext, ct))
    assert ext2 == ext
    assert ct2.w == ct.w
    assert res is None


def test_round_trip_corpus():
    for seed in range(25):
        ext, ct = random_instance(seed)
        text = instio.dumps(ext, ct)
        ext2, ct2, _ = instio.loads(text)
        assert ext2 == ext and ct2.w == ct.w
        assert instio.dumps(ext2, ct2) == text


def test_round_trip_residue_block():
    ext, ct = example_rank2()
    f5 = ExactField("Fp", 5)
    res = ResidueData(field=f5, cocycle=((1, 1), (1, 2)))
    ext2, ct2, res2 = instio.loads(instio.dumps(ext, ct, res))
    assert res2 is not None
    assert res2.field == f5
    assert res2.cocycle == ((1, 1), (1, 2))


def test_deterministic_bytes():
    ext, ct = example_rank2()
    assert instio.dumps(ext, ct) == instio.dumps(ext, ct)
    assert instio.dumps(ext, ct).endswith("\n")


def test_malformed_rejected():
    ext, ct = example_rank2()
    obj = json.loads(instio.dumps(ext, ct))
    del obj["cocycle"]
    with pytest.raises(StructureError):
        instio.instance_from_json(obj)
    obj2 = json.loads(instio.dumps(ext, ct))
    obj2["cocycle"][0][1][1] = ["bogus"]
    with pytest.raises(StructureError):
        instio.instance_from_json(obj2)


def test_file_round_trip(tmp_path):
    ext, ct = random_instance(5)
    path = tmp_path / "inst.json"
    instio.save(str(path), ext, ct)
    ext2, ct2, _ = instio.load(str(path))
    assert ext2 == ext and ct2.w == ct.w
