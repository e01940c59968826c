import pytest

from locald4.classify import row_pair, table_rows
from locald4.families import CrsParams, GammaTParams, build_crs, build_gamma


@pytest.fixture(scope="session")
def gamma_pairs():
    """Both signs of the doubling family, t = 2..6."""
    return {(t, sign): build_gamma(GammaTParams(t, sign))
            for t in range(2, 7) for sign in "+-"}


@pytest.fixture(scope="session")
def crs_pairs():
    """Every cyclic-cover pair in the locally dihedral range s <= r - 2."""
    return {(r, s): build_crs(CrsParams(r, s))
            for r in range(3, 9) for s in range(1, r - 1)}


@pytest.fixture(scope="session")
def table_pairs():
    return {rid: row_pair(rid) for rid in table_rows()}


@pytest.fixture(scope="session")
def d4_corpus(table_pairs, gamma_pairs, crs_pairs):
    """Every locally dihedral pair the acceptance run quantifies over,
    keyed by a structured tag."""
    corpus = [(("row", rid), ag) for rid, ag in table_pairs.items()]
    corpus += [(("gamma", t, sign), ag)
               for (t, sign), ag in gamma_pairs.items()]
    corpus += [(("crs", r, s), ag) for (r, s), ag in crs_pairs.items()]
    return corpus
