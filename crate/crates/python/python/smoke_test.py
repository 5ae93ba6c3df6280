"""Quick check of the edslab extension module."""

import json

import edslab


def main():
    p4 = edslab.Tree(4, [(0, 1), (1, 2), (2, 3)])
    assert p4.eds() == 52
    assert p4.eccentricities() == [3, 2, 2, 3]
    assert p4.invariants()["center"] == [1, 2]

    star = edslab.Tree.family("star:4")
    assert star.eds() == 33
    assert edslab.Tree.from_graph6(star.graph6()).isomorphic(star)

    grown, before, after, relation = p4.transform("egt", [1, 2])
    assert (before, after, relation) == (52, 33, "strict-decrease")
    assert grown.isomorphic(star)

    assert len(edslab.free_trees(10)) == 106
    assert len(edslab.free_trees(6, bipartition=(3, 3))) == 3

    assert edslab.formula("eds-tn-beta", [8, 3]) == (383, True)
    assert edslab.formula("eds-tn-beta", [4, 1]) == (51, False)

    bottom, _ = edslab.extremal_scan(6, bottom=2, top=0, bipartition=(3, 3))
    assert [v for _, v in bottom] == [160, 205]

    reports = [json.loads(line) for line in edslab.verify("T4.4", "15", "p=7")]
    verdicts = {r["params"]["variant"]: r["verdict"] for r in reports}
    assert verdicts == {"paper": "refuted", "rederived": "confirmed"}

    try:
        edslab.Tree(4, [(0, 1), (2, 3)])
    except ValueError as e:
        assert "cycle" in str(e) or "disconnected" in str(e)
    else:
        raise AssertionError("invalid tree accepted")

    print("smoke test passed")


if __name__ == "__main__":
    main()
