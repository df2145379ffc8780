from itertools import combinations

import pytest

from poissonval.catalog import (
    COUNTABLE, ENTRY_KEYS, UNCOUNTABLE, NamedValuationSpec, build_named_valuation, distinguisher_report,
    get_entry, list_entries,
)
from poissonval.valuation import ValuationError, is_classical_on_generators, min_weight_w

from axioms import check_axioms


def test_rows():
    counts = {e.key: e.faithful_count for e in list_entries()}
    assert counts == {"weyl": UNCOUNTABLE, "q_skew": COUNTABLE, "graded_elliptic": 2, "elliptic": 1,
                      "higher_genus_graded": 0, "higher_genus": 0}
    assert all(e.transcendence_degree == 2 for e in list_entries())


def test_recorded_facts_have_citations():
    for e in list_entries():
        for fact in e.recorded.values():
            assert fact.source == "recorded" and fact.citation


SPECS = [
    ("weyl", "weyl_nu_xi", {"xi": 1, "w": -1}),
    ("weyl", "weyl_induced", {"w": -2}),
    ("weyl", "point", {"p": (1, 2)}),
    ("weyl", "gadic", {"g": "x+y"}),
    ("q_skew", "torus_lattice", {"v": (2, 3)}),
    ("q_skew", "point", {"p": (0, 0)}),
    ("graded_elliptic", "adams", {"sign": 1}),
    ("graded_elliptic", "adams", {"sign": -1, "lam": 2}),
    ("elliptic", "nu_c", {}),
    ("higher_genus", "nu_c", {"d": 6}),
    ("higher_genus", "z_filtration", {}),
    ("higher_genus_graded", "adams", {"sign": -1}),
]


@pytest.mark.parametrize("entry,family,params", SPECS)
def test_named_valuations_pass_axioms(entry, family, params):
    ctx = build_named_valuation(NamedValuationSpec.make(entry, family, **params))
    assert check_axioms(ctx, 40, seed=11) == []
    assert "residue_dimension" in ctx.recorded


@pytest.mark.parametrize("entry,family", [("graded_elliptic", "adams"), ("elliptic", "nu_c"),
                                          ("weyl", "weyl_nu_xi"), ("higher_genus", "z_filtration")])
def test_recorded_nonclassical_families_are_nonclassical(entry, family):
    ctx = build_named_valuation(NamedValuationSpec.make(entry, family))
    assert not is_classical_on_generators(ctx, ctx.w)


def test_guards():
    with pytest.raises(ValuationError):
        build_named_valuation(NamedValuationSpec.make("elliptic", "nu_c", lam=-3))
    with pytest.raises(ValuationError):
        build_named_valuation(NamedValuationSpec.make("q_skew", "adams"))
    with pytest.raises(ValuationError):
        build_named_valuation(NamedValuationSpec.make("q_skew", "torus_lattice", v=(0, 0)))
    with pytest.raises(KeyError):
        get_entry("nope")


def test_all_pairs_separated():
    for a, b in combinations(ENTRY_KEYS, 2):
        r = distinguisher_report(a, b)
        assert r.separated, (a, b)
        for line in r.lines:
            assert line["tag"] in ("computed-witness", "recorded")


def test_weyl_vs_skew_line():
    r = distinguisher_report("weyl", "q_skew")
    line = r.lines[0]
    assert line["invariant"] == "has_minus1_valuation" and line["tag"] == "computed-witness"
    assert line["weyl"]["source"] == "computed" and line["weyl"]["value"] is True
    assert line["q_skew"]["source"] == "recorded" and line["q_skew"]["value"] is False


def test_elliptic_pair_is_recorded_alpha0():
    r = distinguisher_report("graded_elliptic", "elliptic")
    line = next(l for l in r.lines if l["invariant"] == "alpha_0")
    assert line["tag"] == "recorded"
    assert (line["graded_elliptic"]["value"], line["elliptic"]["value"]) == (2, 1)


def test_higher_genus_vs_skew():
    r = distinguisher_report("higher_genus", "q_skew")
    line = next(l for l in r.lines if l["invariant"] == "has_nontrivial_0_valuation")
    assert line["higher_genus"]["source"] == "recorded" and line["higher_genus"]["value"] is False
    assert line["q_skew"]["source"] == "computed"
    assert r.has_computed_witness


def test_witness_contexts_really_are_negative_weight():
    ctx = build_named_valuation(NamedValuationSpec.make("weyl", "weyl_nu_xi", xi=0, w=-1))
    assert min_weight_w(ctx) == -1
