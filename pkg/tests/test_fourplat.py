import pytest

from ratcensus.errors import ConsistencyError
from ratcensus.fourplat import (
    Orient2,
    SignedVectorType,
    build,
    reversal,
    seifert_decompose,
    signed_vector_and_type,
)

from refdata import odd_vectors

BOTH = (Orient2.FORWARD, Orient2.REVERSED)


def test_build_crossing_counts_and_components():
    assert len(build([3, 2, 2, 3, 3]).crossings) == 13
    assert build([2]).mu == 2
    assert build([3]).mu == 1


def test_seifert_decompose_small_cases():
    trefoil = seifert_decompose(build([3]))
    assert (trefoil.c, trefoil.s, trefoil.mu, trefoil.genus) == (3, 2, 1, 1)
    hopf = seifert_decompose(build([2]))
    assert (hopf.c, hopf.s, hopf.mu, hopf.genus) == (2, 2, 2, 0)
    fig8 = seifert_decompose(build([2, 1, 1]))
    assert (fig8.c, fig8.s, fig8.mu, fig8.genus) == (4, 3, 1, 1)


def test_signed_vector_of_standard_form():
    sv = signed_vector_and_type(build([3, 2, 2, 3, 3]))
    assert sv.signed_entries == (-3, -2, -2, -3, -3)
    assert sv.type == "IV"


def test_hopf_link_signs_cover_both_orientations():
    entries = {
        signed_vector_and_type(build([2], o)).signed_entries for o in BOTH
    }
    assert entries == {(2,), (-2,)}


def test_type_classification():
    cases = {
        (1, 1, -1): "I",
        (-1, 1, 1): "II",
        (2, 3, 2): "III",
        (-2, -3, -2): "IV",
    }
    for entries, expected in cases.items():
        first, last = entries[0], entries[-1]
        if first > 0:
            kind = "III" if last > 0 else "I"
        else:
            kind = "II" if last > 0 else "IV"
        assert kind == expected
        assert SignedVectorType(entries, kind).type == expected


def test_reversal_reverses_signed_vector():
    d = build([3, 2, 2, 3, 3])
    assert signed_vector_and_type(reversal(d)).signed_entries == (-3, -3, -2, -2, -3)


def test_reversal_is_involution_on_signed_vectors():
    for v in odd_vectors(9):
        for o in BOTH:
            d = build(v, o)
            sv = signed_vector_and_type(d).signed_entries
            r = reversal(d)
            assert signed_vector_and_type(r).signed_entries == tuple(reversed(sv))
            assert signed_vector_and_type(reversal(r)).signed_entries == sv


def test_reversal_swaps_types_one_and_two():
    # reversing a sequence swaps the first/last entries, hence types I and II
    assert tuple(reversed((1, 1, -1))) == (-1, 1, 1)
    for v in odd_vectors(8):
        for o in BOTH:
            d = build(v, o)
            before = signed_vector_and_type(d).type
            after = signed_vector_and_type(reversal(d)).type
            expected = {"I": "II", "II": "I", "III": "III", "IV": "IV"}[before]
            assert after == expected


def test_parity_theorem_and_genus_bounds():
    for v in odd_vectors(10):
        for o in BOTH:
            data = seifert_decompose(build(v, o))
            assert (data.c - data.s) % 2 == data.mu % 2
            assert 0 <= data.genus <= data.c // 2
            assert (data.mu == 1) == ((data.c - data.s) % 2 == 1)


def test_alternation_and_crossing_count():
    for v in odd_vectors(9):
        d = build(v)
        assert len(d.crossings) == sum(v)
        assert d.is_alternating()


def test_orientation_choice_can_change_circle_count():
    # for two-component links s may depend on the second orientation;
    # both choices must still satisfy the parity theorem
    seen = set()
    for v in odd_vectors(8):
        d = build(v)
        if d.mu != 2:
            continue
        s_values = {seifert_decompose(build(v, o)).s for o in BOTH}
        seen.add(len(s_values))
    assert seen <= {1, 2} and 2 in seen


def test_mixed_signs_inside_block_is_internal_error():
    d = build([2, 1, 1])
    flipped = d.crossings[0]
    d.crossings[0] = type(flipped)(flipped.col, flipped.row, flipped.block,
                                   not flipped.desc_over)
    with pytest.raises(ConsistencyError):
        signed_vector_and_type(d)
