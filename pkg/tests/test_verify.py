import json

import pytest

from boxlat import catalog
from boxlat import verify as V
from boxlat.errors import PreconditionNotMet
from boxlat.grid import grid
from boxlat.tensor import element_index

CON_SIZES = [("chain(3)", "N5", 25), ("N5", "N5", 48), ("M3", "M3", 2), ("M3", "N5", 5),
             ("boolean(2)", "boolean(2)", 16), ("chain(3)", "chain(3)", 16),
             ("boolean(2)", "M3", 4), ("chain(2)", "chain(3)", 4)]


@pytest.mark.parametrize("a,b,size", CON_SIZES)
def test_iso_checks_pass_with_frozen_sizes(a, b, size):
    A, B = catalog(a), catalog(b)
    for check in (V.verify_iso_zero, V.verify_iso_bounded, V.verify_iso_unit):
        rep = check(A, B)
        assert rep.passed, rep.witness
        assert rep.stats["source_size"] == rep.stats["target_size"] == size
    assert V.verify_iso_bounded(A, B).stats["agrees_with_zero_case"]


@pytest.mark.parametrize("a,b", [("M3", "N5"), ("N5", "chain(3)"), ("boolean(2)", "M3")])
def test_other_checks_pass(a, b):
    A, B = catalog(a), catalog(b)
    for check in (V.verify_identities, V.verify_capped, V.verify_duality):
        rep = check(A, B)
        assert rep.passed, (check.__name__, rep.witness)
    assert V.verify_identities(A, B).stats["instances"] == 7 * (A.n * B.n) ** 2


def test_collapse_needs_a_distributive_factor():
    assert V.verify_distributive_collapse(catalog("chain(3)"), catalog("M3")).passed
    with pytest.raises(PreconditionNotMet):
        V.verify_distributive_collapse(catalog("M3"), catalog("N5"))


def test_identity_witness_is_rechecked(monkeypatch):
    A, B = catalog("M3"), catalog("chain(2)")
    real = V._identity_clauses

    def corrupted(A, B):
        for k, (clause, args, holds) in enumerate(real(A, B)):
            yield clause, args, holds and k != 40

    monkeypatch.setattr(V, "_identity_clauses", corrupted)
    rep = V.verify_identities(A, B)
    assert not rep.passed
    # the naive recomputation finds the clause true, so the witness is not confirmed
    assert rep.witness["confirmed"] is False
    rec = rep.to_record()
    assert rec["result"] == "fail"
    assert rec["witness"]["clause"] in {"a", "b", "c", "d", "e", "meet", "join"}


def test_report_record_shape():
    rep = V.verify_iso_zero(catalog("M3"), catalog("N5"))
    rec = rep.to_record()
    assert set(rec) >= {"name", "lattices", "result", "witness", "stats"}
    assert rec["lattices"] == ["M3", "N5"] and rec["result"] == "pass" and rec["witness"] is None
    assert rec["note"] == V.FINITE_SHADOW
    json.dumps(rec)


def test_the_tensor_map_itself_factors():
    M3, c3 = catalog("M3"), catalog("chain(3)")
    fz = V.Factorizer(M3, c3)
    LT = fz.LT
    f = fz.pure
    assert V.is_lattice_bimorphism(M3, c3, LT, f)
    g = V.factor_bimorphism(M3, c3, LT, f)
    assert g == tuple(range(LT.n))


def test_meet_map_on_a_chain():
    c3 = catalog("chain(3)")
    f = [[c3.meet[a][b] for b in range(3)] for a in range(3)]
    assert V.is_lattice_bimorphism(c3, c3, c3, f)
    g = V.factor_bimorphism(c3, c3, c3, f)
    assert g is not None
    fz = V.Factorizer(c3, c3)
    gr = grid(c3, c3)
    for a in range(3):
        for b in range(3):
            assert g[element_index(fz.LT, gr.ltensor(a, b))] == c3.meet[a][b]
    # the join map is not even a join-bimorphism
    j = [[c3.join[a][b] for b in range(3)] for a in range(3)]
    assert not V.is_lattice_bimorphism(c3, c3, c3, j)


def test_bimorphism_counts_m3_m3_to_two():
    rep = V.verify_universal_bimorphism(catalog("M3"), catalog("M3"), catalog("chain(2)"),
                                        full_limit=5)
    assert rep.passed
    s = rep.stats
    assert s["exhaustive"] and s["candidates"] == 65536
    assert (s["join_bimorphisms"], s["bimorphisms"], s["non_factoring"]) == (50, 44, 6)


def test_bimorphism_sampling_is_seeded():
    N5, two, c3 = catalog("N5"), catalog("chain(2)"), catalog("chain(3)")
    r1 = V.verify_universal_bimorphism(N5, two, c3, seed=1, full_limit=3, samples=300)
    r2 = V.verify_universal_bimorphism(N5, two, c3, seed=1, full_limit=3, samples=300)
    assert r1.passed and not r1.stats["exhaustive"]
    assert {k: v for k, v in r1.stats.items() if k != "seconds"} == \
        {k: v for k, v in r2.stats.items() if k != "seconds"}
    full = V.verify_universal_bimorphism(N5, two, c3, full_limit=5)
    assert full.stats["bimorphisms"] == 13


def test_separations():
    rep = V.verify_separations()
    assert rep.passed
    assert rep.stats["M3"]["sizes"] == [50, 44]
    assert rep.stats["N5"]["sizes"] == [43, 42]


def test_embedding_check():
    assert V.verify_embedding(catalog("M3"), catalog("N5")).passed


def test_verify_all_small():
    reports = V.verify_all(max_size=3)
    assert reports and all(r.passed for r in reports)
    names = {r.name for r in reports}
    assert {"identities", "iso_zero", "iso_bounded", "iso_unit", "capped", "duality",
            "distributive_collapse", "embedding", "universal_bimorphism"} <= names
    assert "separations" not in names
