import pytest

from eqhilb import (
    Abacus,
    AmbiguousQuotientError,
    GroupParams,
    MultiPartition,
    NotNCoreError,
    Partition,
    from_abacus,
    from_core_quotient,
    has_empty_core,
    is_balanced,
    partitions_of,
    runners,
    to_abacus,
)


def test_to_abacus_golden():
    ab = to_abacus(Partition((4, 2, 2, 1)))
    assert "".join(str(x) for x in ab.word) == "01011001"
    assert ab.offset == -4
    assert ab.charge() == 0
    assert str(ab) == "...11|01011001|00..."


def test_to_abacus_small():
    assert to_abacus(Partition()).word == ()
    assert to_abacus(Partition((1,))).word == (0, 1)


def test_from_abacus_inverts():
    for rows in [(), (1,), (4, 2, 2, 1), (5, 5, 3)]:
        lam = Partition(rows)
        assert from_abacus(to_abacus(lam)) == lam


def test_from_abacus_core_word():
    # the word 001001 starting two positions left of the origin
    assert from_abacus(Abacus((0, 0, 1, 0, 0, 1), -2)) == Partition((4, 2))


def test_from_abacus_translation_class():
    base = to_abacus(Partition((3, 1)))
    shifted = Abacus(base.word, base.offset + 5)
    assert from_abacus(shifted) == Partition((3, 1))


def test_abacus_canonical():
    ab = Abacus((1, 1, 0, 1, 0, 0), -3)
    canon = ab.canonical()
    assert canon.word == (0, 1)
    assert canon.offset == -1
    assert canon.charge() == ab.charge()


def test_runners_golden():
    quot, core = runners(Partition((4, 2, 2, 1)), 3)
    assert quot.parts == (Partition((1,)), Partition(), Partition())
    assert core == Partition((4, 2))
    assert quot.alignment == 2
    # size identity on the golden example
    assert 9 == core.size + 3 * quot.total()


def test_runners_empty():
    quot, core = runners(Partition(), 4)
    assert quot.parts == (Partition(),) * 4
    assert core == Partition()


def test_size_identity_exhaustive():
    for m in range(13):
        for lam in partitions_of(m):
            for n in (2, 3, 5):
                quot, core = runners(lam, n)
                assert lam.size == core.size + n * quot.total()


def test_core_quotient_roundtrip_exhaustive():
    for m in range(16):
        for lam in partitions_of(m):
            for n in range(1, 6):
                quot, core = runners(lam, n)
                assert from_core_quotient(core, quot) == lam


def test_from_core_quotient_golden():
    quot, core = runners(Partition((4, 2, 2, 1)), 3)
    assert from_core_quotient(core, quot) == Partition((4, 2, 2, 1))
    assert from_core_quotient(Partition(), MultiPartition((Partition(),) * 3, alignment=0)) == Partition()


def test_from_core_quotient_rejects_non_core():
    with pytest.raises(NotNCoreError):
        from_core_quotient(Partition((2, 1)), MultiPartition((Partition(),) * 3, alignment=0))


def test_bare_quotient_can_be_ambiguous():
    """Without the recorded alignment the pair does not pin the partition:
    (3), (2,1) and (1,1,1) share an empty 3-core and quotient ((1),{},{})."""
    tuples = set()
    for rows in [(3,), (2, 1), (1, 1, 1)]:
        quot, core = runners(Partition(rows), 3)
        assert core == Partition()
        tuples.add(quot.parts)
    assert tuples == {(Partition((1,)), Partition(), Partition())}
    with pytest.raises(AmbiguousQuotientError):
        from_core_quotient(
            Partition(), MultiPartition((Partition((1,)), Partition(), Partition()))
        )


def test_bare_quotient_unique_case_is_accepted():
    # around the 2-core (1) only one alignment is consistent, so the bare
    # tuple reconstructs without help
    lam = Partition((1, 1, 1))
    quot, core = runners(lam, 2)
    assert core == Partition((1,))
    bare = MultiPartition(quot.parts)
    assert from_core_quotient(core, bare) == lam


def test_empty_core_examples():
    assert has_empty_core(Partition((3,)), 3)
    assert has_empty_core(Partition((2, 1)), 3)
    assert has_empty_core(Partition((1, 1, 1)), 3)
    assert has_empty_core(Partition(), 5)
    assert not has_empty_core(Partition((4, 2, 2, 1)), 3)
    assert not has_empty_core(Partition((7, 2)), 3)


def test_empty_core_iff_balanced():
    for m in range(15):
        for lam in partitions_of(m):
            for n in (2, 3, 4, 5, 6):
                balanced, _ = is_balanced(GroupParams(1, -1, n), lam)
                assert has_empty_core(lam, n) == balanced, (lam, n)


def test_abacus_word_validation():
    with pytest.raises(ValueError):
        Abacus((0, 2, 1), 0)
