import math
import random
from itertools import product

import pytest

from derring.errors import HomomorphismRejected
from derring.groups import (DihedralEndoParams, abelian_group, brute_force_endomorphisms,
                            compose, cyclic_group, dihedral_group, endo_from_images,
                            enumerate_endomorphisms, identity_endomorphism, make_group,
                            parse_word, table_group, word_str)


def test_word_parser():
    assert parse_word("a^2*b") == (("a", 1), ("a", 1), ("b", 1))
    assert parse_word("a^-2") == (("a", -1), ("a", -1))
    assert parse_word("1") == ()
    assert word_str(parse_word("a^2*b")) == "a^2*b"
    with pytest.raises(ValueError):
        parse_word("a^^2")


def test_cyclic_listing():
    g = cyclic_group(18)
    assert g.order == 18
    assert g.names[:3] == ["1", "x", "x^2"]
    assert g.names[17] == "x^17"
    assert g.family == "cyclic"


def test_dihedral_structure():
    g = dihedral_group(3)
    assert g.order == 6
    assert not g.is_abelian()
    assert g.names == ["1", "a", "a^2", "b", "a*b", "a^2*b"]
    # b^-1 a b = a^-1
    a, b = 1, 3
    conj = g.mul[g.mul[g.inv[b]][a]][b]
    assert conj == g.inv[a]


def test_dihedral_requires_n_at_least_3():
    with pytest.raises(ValueError):
        dihedral_group(2)


def test_abelian_product():
    g = abelian_group([9, 2])
    assert g.order == 18
    assert len(g.generators) == 2
    assert g.is_abelian()


def test_table_group_rejects_non_associative():
    # swap one entry of the C3 table to break associativity
    table = [[0, 1, 2], [1, 2, 0], [2, 0, 1]]
    table[2][2] = 2
    with pytest.raises(ValueError):
        table_group(table)


def test_make_group_dispatch():
    assert make_group({"family": "cyclic", "n": 6}).order == 6
    assert make_group({"family": "dihedral", "n": 4}).order == 8
    assert make_group({"family": "abelian", "factors": [2, 2]}).order == 4
    with pytest.raises(ValueError):
        make_group({"family": "simple"})


@pytest.mark.parametrize("group", [cyclic_group(12), dihedral_group(5), abelian_group([4, 3])])
def test_normal_forms_evaluate(group):
    for g in range(group.order):
        assert group.eval_word(group.normal_forms[g]) == g
    for rel in group.relators:
        assert group.eval_word(rel) == group.identity


def test_endo_from_images_sigma1_tag():
    g = dihedral_group(6)
    endo = endo_from_images(g, {"a": "a^2", "b": "a*b"})
    assert endo.family == "sigma1"
    assert (endo.s, endo.t) == (2, 1)


def test_identity_endomorphism_accepted():
    g = dihedral_group(4)
    endo = endo_from_images(g, {"a": "a", "b": "b"})
    assert endo.is_identity
    assert endo == identity_endomorphism(g)


def test_endo_rejection_reports_relator():
    g = dihedral_group(3)
    with pytest.raises(HomomorphismRejected) as err:
        endo_from_images(g, {"a": "a", "b": "a"})
    assert err.value.relator == parse_word("b^2")


def test_endo_unknown_generator():
    g = dihedral_group(3)
    with pytest.raises(ValueError):
        endo_from_images(g, {"a": "a", "b": "b", "c": "a"})
    with pytest.raises(ValueError):
        endo_from_images(g, {"a": "a"})


@pytest.mark.parametrize("n,expected", [(3, 10), (4, 36), (5, 26), (6, 64)])
def test_endomorphism_counts(n, expected):
    count = n * n + 1 if n % 2 else (n + 2) ** 2
    assert count == expected
    assert len(enumerate_endomorphisms(dihedral_group(n))) == expected


def test_enumeration_matches_brute_force():
    for n in (3, 6):
        g = dihedral_group(n)
        enumerated = {e.images for e in enumerate_endomorphisms(g)}
        brute = {e.images for e in brute_force_endomorphisms(g)}
        assert enumerated == brute


def test_brute_force_guard():
    with pytest.raises(ValueError):
        brute_force_endomorphisms(dihedral_group(7))
    with pytest.raises(ValueError):
        enumerate_endomorphisms(cyclic_group(6))


def test_family_partition_counts():
    n = 5
    endos = enumerate_endomorphisms(dihedral_group(n))
    by_family = {}
    for e in endos:
        by_family[e.family] = by_family.get(e.family, 0) + 1
    assert by_family == {"sigma-1": 1, "sigma0": n * (n - 1), "sigma3": n}
    n = 6
    endos = enumerate_endomorphisms(dihedral_group(n))
    by_family = {}
    for e in endos:
        by_family[e.family] = by_family.get(e.family, 0) + 1
    assert by_family == {"sigma1": (n - 2) * n, "sigma2": 4, "sigma3": 2 * n,
                         "sigma4": 2 * n, "sigma5": 2 * n}


@pytest.mark.parametrize("n", [3, 4])
def test_generator_words_consistent_with_image_tables(n):
    g = dihedral_group(n)
    for endo in enumerate_endomorphisms(g):
        rebuilt = endo_from_images(g, endo.generator_images)
        assert rebuilt.images == endo.images


@pytest.mark.parametrize("n", [3, 4])
def test_composition_closure(n):
    g = dihedral_group(n)
    endos = enumerate_endomorphisms(g)
    tables = {e.images for e in endos}
    for e1, e2 in product(endos, repeat=2):
        assert compose(e1, e2).images in tables


def test_element_orders():
    g = dihedral_group(6)
    assert g.element_order(g.identity) == 1
    assert g.element_order(1) == 6      # a
    assert g.element_order(6) == 2      # b
    rng = random.Random(3)
    for n in (4, 5, 6, 9):
        gg = dihedral_group(n)
        for _ in range(6):
            s = rng.randrange(n)
            # order of a^s agrees with the arithmetic prediction
            expect = n // math.gcd(n, s) if s else 1
            assert gg.element_order(s % n) == expect


def test_dihedral_params():
    g = dihedral_group(6)
    endo = endo_from_images(g, {"a": "a^2", "b": "a*b"})
    params = DihedralEndoParams.from_endo(endo)
    assert (params.m, params.d, params.j0) == (3, 2, 1)
    sigma2 = endo_from_images(g, {"a": "a^3", "b": "a^3"})
    assert sigma2.family == "sigma2"
    with pytest.raises(ValueError):
        DihedralEndoParams.from_endo(sigma2)


def test_words_over_custom_elements():
    g = cyclic_group(18)
    # x^9 and x^2 generate C18 jointly
    words = g.words_over([("k", 9), ("h", 2)])
    for idx, word in enumerate(words):
        assert g.eval_word_of(word, {"k": 9, "h": 2}) == idx
    with pytest.raises(ValueError):
        g.words_over([("h", 2)])  # x^2 alone only reaches the even powers
