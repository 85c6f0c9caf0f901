"""Smoke test for the `hcmod` extension module.

Build and install first:  pip install --no-build-isolation -e crates/python
"""

import json

import hcmod


def main():
    tau = hcmod.Partition("3,2,1")
    assert tau.parts == [3, 2, 1] and tau.size == 6
    assert tau.transpose() == tau
    assert hcmod.Partition([2, 1]).codim2_parts() == [1]

    e = hcmod.PinElement.e
    assert e(1, 10) * e(3, 10) == -(e(3, 10) * e(1, 10))
    assert (e(2, 10) * e(2, 10)).sign == -1

    g = hcmod.ComponentGroup("3,2,1")
    assert (g.label, g.order, g.model) == ("Z4xZ2", 8, "extension")
    assert sum(d * d for d in g.character_degrees()) == g.order

    r = hcmod.classify("2,1", pair="spin", parameter="0,0")
    assert r.group == "Z4" and r.counts == (4, 3)
    assert hcmod.ClassificationReport.from_json(r.to_json()) == r
    assert r.to_dict() == json.loads(r.to_json())

    assert hcmod.a2_outer_verdict("2", "i")[0] == "quantizable"
    assert len(hcmod.ab_diagrams("3,2,1", 3)) == 4

    v = hcmod.exceptional_verdict("E7(7)", 50)
    assert v["split"] == {"none": 4, "k": 4, "kbar": 4, "ktilde": 4}
    assert len(hcmod.exceptional_catalog()) == 14
    assert hcmod.evaluate_weights("e6_6", ["1", "0", "0", "-2", "0", "1"]) == (["0", "1", "0", "-2"], 1)

    try:
        hcmod.classify("3,2")
    except hcmod.HcmodError as err:
        assert "codimension 2" in str(err)
    else:
        raise AssertionError("3,2 should be rejected")

    print("python smoke test passed")


if __name__ == "__main__":
    main()
