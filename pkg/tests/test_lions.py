import json
import random

import pytest

from trigrid import (
    Coord,
    LionTrace,
    TriGrid,
    claim_check,
    column_sweep_strategy,
    couple_to_search,
    exact_lion_number,
    lion_step,
    neighborhood,
    random_legal_walk,
    verify_trace,
)

from helpers import lions_clearable_oracle


def test_lion_step_t2_worked_panels():
    g = TriGrid(2)
    pos = (Coord(0, 0), Coord(0, 1), Coord(0, 2))
    cont = g.set_of([(1, 0), (1, 1), (2, 0)])
    pos, cont = lion_step(g, pos, [Coord(1, 0), None, None], cont)
    assert cont == g.set_of([(1, 1), (2, 0)])
    pos, cont = lion_step(g, pos, [None, Coord(1, 1), None], cont)
    assert cont == g.set_of([(2, 0)])
    pos, cont = lion_step(g, pos, [Coord(2, 0), None, None], cont)
    assert cont == g.empty_set()
    assert pos == (Coord(2, 0), Coord(1, 1), Coord(0, 2))


def test_lion_step_no_sources():
    g = TriGrid(2)
    pos = (Coord(1, 1),)
    new_pos, cont = lion_step(g, pos, [None], g.empty_set())
    assert new_pos == pos and not cont


def test_lion_step_validation():
    g = TriGrid(2)
    with pytest.raises(ValueError, match="illegal"):
        lion_step(g, (Coord(0, 0),), [Coord(2, 0)], g.empty_set())
    with pytest.raises(ValueError):
        lion_step(g, (Coord(0, 0),), [], g.empty_set())


def test_lion_step_vacated_vertex_recontaminated_elsewhere():
    # a lion leaves (1,0); the traversed edge is blocked but contamination
    # still reenters through the other edges
    g = TriGrid(2)
    cont = g.set_of([(1, 1), (0, 0)])
    _, new_cont = lion_step(g, (Coord(1, 0),), [Coord(2, 0)], cont)
    assert (1, 0) in new_cont


def test_swap_moves_block_their_shared_edge():
    g = TriGrid(2)
    cont = g.set_of([(2, 0), (0, 2), (1, 1)])
    pos = (Coord(0, 0), Coord(1, 0))
    new_pos, new_cont = lion_step(g, pos, [Coord(1, 0), Coord(0, 0)], cont)
    assert new_pos == (Coord(1, 0), Coord(0, 0))
    assert new_cont == g.set_of([(2, 0), (0, 2), (1, 1), (0, 1)])


def test_column_sweep_t1():
    g = TriGrid(1)
    tr = column_sweep_strategy(g)
    assert tr.start == (Coord(0, 0), Coord(0, 1))
    assert tr.turns == [[(0, Coord(1, 0))]]
    assert tr.is_winning()


def test_column_sweep_t2_contamination_sequence():
    tr = column_sweep_strategy(TriGrid(2))
    states = [sorted(tuple(v) for v in c) for c in tr.contaminated]
    assert states == [
        [(1, 0), (1, 1), (2, 0)],
        [(1, 1), (2, 0)],
        [(2, 0)],
        [],
    ]


def column_invariant_holds(trace):
    """During the sweep of column c, contamination stays right of column c;
    after its last turn, right of column c+1."""
    g = trace.grid
    n = g.n
    turn = 0
    for c in range(n):
        for r in range(n - c):
            turn += 1
            cont = trace.contaminated[turn]
            limit = c + 2 if r == n - c - 1 else c + 1
            if any(v.v1 < limit for v in cont):
                return False
    return True


def test_column_sweep_clears_and_keeps_invariant():
    for n in range(1, 13):
        g = TriGrid(n)
        tr = column_sweep_strategy(g)
        assert tr.lions == n + 1
        assert len(tr.turns) == n * (n + 1) // 2
        assert tr.is_winning()
        assert column_invariant_holds(tr)


def test_trace_invariants_on_random_walks():
    rng = random.Random(31)
    for _ in range(120):
        n = rng.randrange(1, 6)
        g = TriGrid(n)
        tr = random_legal_walk(g, rng.randrange(1, n + 3), rng.randrange(0, 12), rng)
        for k in range(1, len(tr.positions)):
            occupied = g.set_of(tr.positions[k])
            cont, prev = tr.contaminated[k], tr.contaminated[k - 1]
            assert not (cont & occupied)  # occupancy exclusion
            assert (prev - occupied).issubset(cont)  # no spontaneous cleaning
            assert cont.issubset(neighborhood(g, prev))  # spread locality


def test_couple_to_search_budget_and_verification():
    for n in (1, 2, 5, 9):
        g = TriGrid(n)
        tr = column_sweep_strategy(g)
        st = couple_to_search(tr)
        assert st.budget == 2 * (n + 1)
        assert st.max_search_size() <= st.budget
        assert verify_trace(g, st)


def test_couple_refuses_non_winning():
    g = TriGrid(1)
    lone = LionTrace.from_moves(g, [Coord(0, 0)], [[(0, Coord(1, 0))]])
    assert not lone.is_winning()
    with pytest.raises(ValueError, match="refusing"):
        couple_to_search(lone)


def test_claim_on_sweeps_and_walks():
    for n in range(1, 11):
        assert claim_check(column_sweep_strategy(TriGrid(n)))
    rng = random.Random(32)
    for _ in range(200):
        n = rng.randrange(1, 6)
        g = TriGrid(n)
        tr = random_legal_walk(g, rng.randrange(1, n + 3), rng.randrange(0, 12), rng)
        assert claim_check(tr)


def test_claim_base_case_equality():
    # before any move the two cleared sets coincide with the start positions
    g = TriGrid(3)
    tr = column_sweep_strategy(g)
    searches0 = g.set_of(tr.positions[0])
    post = g.full_set() - searches0
    assert post == tr.contaminated[0]


def test_lion_trace_json_round_trip():
    tr = column_sweep_strategy(TriGrid(2))
    obj = json.loads(tr.to_json())
    back = LionTrace.from_json_obj(obj)
    assert back.to_json() == tr.to_json()
    assert back.is_winning()
    obj["lions"] = 5
    with pytest.raises(ValueError):
        LionTrace.from_json_obj(obj)


def test_exact_lion_number_t1():
    g = TriGrid(1)
    assert exact_lion_number(g, 3) == 2
    assert exact_lion_number(g, 1) is None
    assert not lions_clearable_oracle(g, 1)
    assert lions_clearable_oracle(g, 2)


def test_exact_lion_number_t2_matches_oracle():
    g = TriGrid(2)
    val = exact_lion_number(g, 3)
    assert val == 3
    assert not lions_clearable_oracle(g, 2)  # independent confirmation of > 2
    assert column_sweep_strategy(g).is_winning()  # and of <= 3


def test_exact_lion_order_limit():
    with pytest.raises(ValueError):
        exact_lion_number(TriGrid(3), 2)
