"""Разбиения типа B: валидация, дуги, статистики, перебор, проектор, расширенные разбиения"""

import pytest
import sympy

from typeb_fock.config import DEFAULT_CONFIG
from typeb_fock.exceptions import CapExceededError, PartitionValidationError, PreconditionError
from typeb_fock.partitions import (
    Arc,
    ArcSign,
    BArc,
    ExtendedTypeBPartition,
    b_arcs,
    canonicalize,
    count,
    enumerate_extended,
    enumerate_filter,
    enumerate_partitions,
    extended_statistics,
    format_partition,
    fiber,
    minmax,
    parse_extended,
    parse_partition,
    project_and_outer,
    statistics,
)

FIG_CROSSING = "{(-10,-7,-4),(4,7,10),(-6,5),(-5,6),(-3,1),(-1,3),(-9,2),(-2,9),(-8),(8)}"
FIG_EXTENDED = "{(-10,-6,5),(-5,6,10),(-9,-8),(8,9),(-7,-4,-3,1),(-1,3,4,7),(-2),(2)}"


# ============================================================================
# Валидация и текст
# ============================================================================

@pytest.mark.parametrize("text", ["{(-2,-1),(1,2)}", "{(-2,1),(-1,2)}", "{(-1),(1)}"])
def test_valid_partitions(text):
    assert parse_partition(text).to_text() == text


@pytest.mark.parametrize("text", [
    "{(-1,1)}",                      # блок с a и -a
    "{(-1),(1,2),(-2)}",             # нет отражения блока (1,2)
    "{(-2,-1),(1)}",                 # не покрыт элемент 2
    "{(-1),(1),(1)}",                # повтор элемента
    "{(-2)E,(2)E,(-2,-1)E,(1,2)E}",  # E в обычном разбиении
    "(-1),(1)",
])
def test_invalid_partitions(text):
    with pytest.raises(PartitionValidationError):
        parse_partition(text)


def test_invalid_extended_partitions():
    with pytest.raises(PartitionValidationError):
        parse_extended("{(-2)E,(2)E,(-2,-1)E,(1,2)E}")
    with pytest.raises(PartitionValidationError):
        parse_extended("{(-2,-1)E,(1,2)}")


def test_canonical_form_is_idempotent():
    p = canonicalize([(3, 2), (-1, 4), (-2, -3), (1, -4)])
    assert p.to_text() == "{(-4,1),(-3,-2),(-1,4),(2,3)}"
    assert format_partition(p) == p.to_text()
    assert parse_partition(p.to_text()) == p
    for q in enumerate_partitions(3):
        assert parse_partition(q.to_text()) == q
        assert statistics(parse_partition(q.to_text())) == statistics(q)


def test_extended_text_round_trip():
    for e in enumerate_extended(3):
        assert parse_extended(e.to_text()) == e


# ============================================================================
# Дуги и статистики
# ============================================================================

def test_arc_signs():
    dec = b_arcs(parse_partition("{(-4,1),(-1,4),(-3,-2),(2,3)}"))
    assert dec.arcs == (
        BArc(pos=Arc(2, 3), neg=Arc(-3, -2), sign=ArcSign.POSITIVE),
        BArc(pos=Arc(-1, 4), neg=Arc(-4, 1), sign=ArcSign.NEGATIVE),
    )
    assert dec.singletons == ()

    single = b_arcs(parse_partition("{(-1),(1)}"))
    assert single.arcs == () and single.singletons == (1,)


def test_arcs_of_long_block():
    p = parse_partition(FIG_EXTENDED)
    chain = [c for c in p.positive_chains() if len(c) == 4][0]
    assert chain == (-1, 3, 4, 7)
    arcs = {a.pos: a.sign for a in b_arcs(p).arcs}
    assert arcs[Arc(-1, 3)] is ArcSign.NEGATIVE
    assert arcs[Arc(3, 4)] is ArcSign.POSITIVE
    assert arcs[Arc(4, 7)] is ArcSign.POSITIVE


def test_statistics_of_crossing_figure():
    st = statistics(parse_partition(FIG_CROSSING))
    assert (st.na, st.rc, st.cs) == (3, 6, 2)


def test_statistics_of_extended_figure():
    st = statistics(parse_partition(FIG_EXTENDED))
    assert (st.rc, st.na, st.cs) == (3, 2, 3)


def test_all_singletons_have_zero_statistics():
    st = statistics(parse_partition("{(-3),(-2),(-1),(1),(2),(3)}"))
    assert (st.na, st.rc, st.cs) == (0, 0, 0)


@pytest.mark.parametrize("marked, expected", [
    ([], 3),
    ([(8, 9)], 4),
    ([(8, 9), (-1, 3, 4, 7)], 5),
    ([(-9, -8), (-7, -4, -3, 1)], 5),
])
def test_minmax_of_extended_figure(marked, expected):
    e = ExtendedTypeBPartition(parse_partition(FIG_EXTENDED), marked)
    assert minmax(e) == expected
    assert extended_statistics(e).minmax == expected


def test_minmax_with_only_singletons_extended_equals_cs():
    for n in range(1, 5):
        for p in enumerate_partitions(n):
            assert minmax(ExtendedTypeBPartition(p)) == statistics(p).cs


# ============================================================================
# Перебор
# ============================================================================

def test_enumerate_small_cases():
    assert {p.to_text() for p in enumerate_partitions(2)} == {
        "{(-2),(-1),(1),(2)}",
        "{(-2,-1),(1,2)}",
        "{(-2,1),(-1,2)}",
    }
    assert [p.to_text() for p in enumerate_partitions(1)] == ["{(-1),(1)}"]
    assert count(3, "A") == 5


@pytest.mark.parametrize("n", [1, 2, 3, 4])
@pytest.mark.parametrize("cls", ["B", "A", "pairB", "noSingletonB", "ncB", "ncA", "B12"])
def test_enumeration_matches_filter(n, cls):
    fast = list(enumerate_partitions(n, cls))
    assert len(fast) == len(set(fast))
    assert set(fast) == set(enumerate_filter(n, cls))


@pytest.mark.parametrize("n", range(1, 7))
def test_type_a_count_is_bell(n):
    assert count(n, "A") == sympy.bell(n)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_class_invariants(n):
    for p in enumerate_partitions(n, "ncA"):
        st = statistics(p)
        assert st.rc == 0 and st.na == 0
    for p in enumerate_partitions(n, "ncB"):
        assert statistics(p).rc == 0
    for p in enumerate_partitions(n, "A"):
        assert statistics(p).na == 0 and p.is_type_a()


def test_enumeration_limits():
    with pytest.raises(PreconditionError):
        list(enumerate_partitions(0))
    with pytest.raises(CapExceededError):
        list(enumerate_partitions(DEFAULT_CONFIG.partition_cap + 1))
    with pytest.raises(ValueError):
        list(enumerate_partitions(2, "C"))
    with pytest.raises(CapExceededError):
        enumerate_filter(5)


# ============================================================================
# Проектор NC^B -> NC^A
# ============================================================================

def test_projection_example():
    result = project_and_outer(parse_partition("{(-4,3),(-3,4),(-2,-1),(1,2)}"))
    assert result.image == parse_partition("{(-4,-3),(3,4),(-2,-1),(1,2)}")
    assert result.outer_count == 2
    assert result.preimage_count == 4


def test_projection_requires_noncrossing():
    with pytest.raises(PreconditionError):
        project_and_outer(parse_partition(FIG_CROSSING))


def test_type_a_input_is_fixed():
    p = parse_partition("{(-3,-1),(-2),(1,3),(2)}")
    result = project_and_outer(p)
    assert result.image == p
    assert result.preimage_count == 2 ** result.outer_count


@pytest.mark.parametrize("n", range(1, 6))
def test_noncrossing_b_is_union_of_fibers(n):
    total = sum(project_and_outer(p).preimage_count for p in enumerate_partitions(n, "ncA"))
    assert total == count(n, "ncB")


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_fiber_sizes(n):
    for p in enumerate_partitions(n, "ncA"):
        assert len(fiber(p)) == project_and_outer(p).preimage_count


# ============================================================================
# Расширенные разбиения
# ============================================================================

def test_extended_counts():
    assert len(list(enumerate_extended(1))) == 1
    assert len(list(enumerate_extended(2))) == 5
    only = list(enumerate_extended(2, ["create", "create"]))
    assert len(only) == 1 and only[0].base.to_text() == "{(-2),(-1),(1),(2)}"
    regular = list(enumerate_extended(2, ["*", "1"]))
    assert {e.base.to_text() for e in regular} == {"{(-2,-1),(1,2)}", "{(-2,1),(-1,2)}"}
    assert all(not e.extended for e in regular)


def test_extended_label_length_is_checked():
    with pytest.raises(PreconditionError):
        list(enumerate_extended(2, ["create"]))
