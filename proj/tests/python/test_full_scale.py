from fractions import Fraction
from pathlib import Path

import hedet

FIXTURE = Path(__file__).resolve().parent.parent / "data" / "circulant83.col"


def test_fixture_is_the_circulant():
    f = hedet.Graph.from_dimacs(FIXTURE.read_text())
    expected = {tuple(sorted((v, (v + s) % 83))) for v in range(83) for s in (1, 6, 15, 20)}
    assert set(f.edges()) == expected
    assert hedet.odd_girth(f) == 7
    assert hedet.independence_number(f) == 27
    assert 41 * Fraction(83, 27) > 125


def test_full_scale_verdict():
    f = hedet.load_seed(f"file:{FIXTURE}")
    r = hedet.verify(f, 41, alpha=27, workers=2)
    assert r["verdict"] == "counterexample verified"
    assert r["params"]["c"] == 125
    emb = next(c for c in r["checks"] if c["name"] == "embedding")
    assert emb["detail"]["h_edges"] == 1018732
