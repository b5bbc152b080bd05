import pytest

from matchbound.errors import ParameterError
from matchbound.fullerenes import (
    capped_rings,
    extend_cap,
    hexacap,
    leapfrog_ring_profile,
    pentacap,
    validate_fullerene,
)
from matchbound.graphs import dodecahedron
from matchbound.corpus import octahedron_embedding
from matchbound.matchings import enumerate_perfect_matchings
from matchbound.pfaffian import count_by_pfaffian


def test_pentacap1_is_dodecahedron():
    gen = pentacap(1)
    assert gen.n == 20
    assert gen.graph.edges == dodecahedron().edges
    info = validate_fullerene(gen.embedding)
    assert info["is_fullerene"] and info["pentagons"] == 12 and info["hexagons"] == 0


@pytest.mark.parametrize("family,layers,expected_n", [
    ("pentacap", 1, 20), ("pentacap", 2, 30), ("pentacap", 3, 40),
    ("hexacap", 1, 24), ("hexacap", 2, 36),
])
def test_vertex_count_formula(family, layers, expected_n):
    gen = capped_rings(family, layers)
    k = 5 if family == "pentacap" else 6
    assert gen.n == 2 * k * (layers + 1) == expected_n
    assert validate_fullerene(gen.embedding)["is_fullerene"]
    assert gen.decomposition.is_circular
    assert gen.decomposition.ring_sizes() == [k] + [2 * k] * layers + [k]


def test_layers_must_be_positive():
    with pytest.raises(ParameterError):
        pentacap(0)


def test_generated_counts_match_oracle():
    for gen, expected in [(pentacap(2), 151), (hexacap(1), 54)]:
        assert count_by_pfaffian(gen.embedding) == expected
        assert enumerate_perfect_matchings(gen.graph) == expected


def test_octahedron_is_not_a_fullerene():
    assert not validate_fullerene(octahedron_embedding())["is_fullerene"]


def test_extend_cap_counts_and_validity():
    bigger = extend_cap(pentacap(1))
    assert bigger.n == 30                       # +2k, not the stated +k+1
    assert validate_fullerene(bigger.embedding)["is_fullerene"]
    assert bigger.decomposition.ring_sizes()[0] == 5

    hexa = extend_cap(hexacap(1))
    assert hexa.n == 36
    assert validate_fullerene(hexa.embedding)["is_fullerene"]


def test_extend_cap_of_extension():
    twice = extend_cap(extend_cap(pentacap(1)))
    assert twice.n == 40
    assert validate_fullerene(twice.embedding)["is_fullerene"]
    assert twice.decomposition.ring_sizes() == [5, 10, 10, 10, 5]


def test_extend_cap_requires_matching_rings():
    with pytest.raises(ParameterError):
        # leapfrog profile starts C_5, C_15: not extendable
        profile = leapfrog_ring_profile("pentacap", 1)
        from matchbound.fullerenes import GeneratedFullerene

        extend_cap(GeneratedFullerene(profile["graph"], profile["embedding"],
                                      profile["decomposition"]))


def test_leapfrog_profiles_odd():
    res = leapfrog_ring_profile("pentacap", 1)
    assert res["matches"] and res["circular"]
    assert res["rings"] == [5, 15, 20, 15, 5] and res["n"] == 60

    res = leapfrog_ring_profile("pentacap", 3)
    assert res["matches"] and res["rings"] == [5, 15, 20, 20, 20, 20, 15, 5]
    assert res["n"] == 120


def test_leapfrog_profile_even():
    res = leapfrog_ring_profile("pentacap", 2)
    assert res["is_fullerene"] and not res["circular"]
    assert res["v0_size"] == 5
    assert res["rings"] == [5, 20, 20, 20, 15, 5]


def test_leapfrog_hexacap_even():
    res = leapfrog_ring_profile("hexacap", 2)
    assert res["matches"] and res["v0_size"] == 6


def test_leapfrog_fullerene_validity_preserved():
    for family, layers in [("pentacap", 1), ("pentacap", 2), ("hexacap", 1)]:
        assert leapfrog_ring_profile(family, layers)["is_fullerene"]


def test_pentacap_lower_envelope_exact():
    for layers in (1, 2, 3):
        gen = pentacap(layers)
        count = count_by_pfaffian(gen.embedding)
        exponent = (gen.n - 20) // 10
        assert count >= 5 ** exponent
