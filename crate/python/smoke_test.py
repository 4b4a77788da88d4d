"""Smoke test for the stratalg_py extension module."""

import json

import stratalg_py as sa


def main():
    assert "sl2-block" in sa.zoo_list()

    a = sa.Algebra.zoo("sl2-block")
    assert a.dim == 5
    assert a.labels == ["1", "2"]
    assert a.cartan() == [[1, 1], [1, 2]]
    assert a.global_dimension() == 2
    assert a.centre_dim() == 2
    assert not a.is_symmetric()
    assert a.projective_injective() == ["2"]
    assert sa.Algebra.from_json(a.to_json()) == a

    p2 = a.projective("2")
    assert p2.dims == [1, 2]
    assert p2.nakayama().is_isomorphic(a.injective("2"))
    assert a.simple("1").ext_dim(a.simple("2"), 1) == 1
    assert p2.hom_dim(p2) == 2
    assert sa.Module.from_json(p2.to_json()).dims == p2.dims

    s = sa.Stratified(a, [("2", "1")])
    assert s.standardly_stratified() and s.quasi_hereditary()
    assert s.standard("1").dims == [1, 1]
    assert [t.total_dim for t in s.tilting()] == [3, 1]
    assert s.ringel_dual().dim == 5
    assert [x.total_dim for x in s.dc_tilting()] == [3]

    assert a.serre_conditions(["2"]) == {"i": True, "ii": True, "iii": True, "allEqual": True}
    assert p2.coapp(["2"], 2).is_isomorphic(p2.nakayama())

    report = sa.analyze(a, [("2", "1")])
    assert report == sa.zoo_report("sl2-block")
    json.dumps(report)

    for name in sa.zoo_list():
        sa.zoo_verify(name)

    try:
        sa.Algebra.from_json("{")
    except sa.StratalgError as e:
        assert "parse" in str(e)
    else:
        raise AssertionError("malformed JSON accepted")

    try:
        sa.Stratified(sa.Algebra.zoo("nongood"), []).tilting()
    except ValueError:
        pass
    else:
        raise AssertionError("tilting modules on a non-stratified algebra")

    print("smoke test passed")


if __name__ == "__main__":
    main()
