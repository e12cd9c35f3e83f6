import json
from pathlib import Path

import pytest

from matula import (
    PairingReport,
    factor_count,
    is_squarefree,
    liouville,
    load_pairs,
    mobius,
    pair_range,
    partner_candidates,
    partner_moves,
    report_from_pairs,
    summatory,
    validate_report,
    validation_errors,
)
from oracles import forest_partners, liouville_brute, mobius_brute

FIXTURE = (Path(__file__).parent / "data" / "pairs_liouville_96.txt").read_text()


def test_sign_examples(table):
    assert mobius(1, table) == 1
    assert mobius(12, table) == 0
    assert mobius(30, table) == -1
    assert liouville(1, table) == 1
    assert liouville(8, table) == -1
    # 96 = 2^5 * 3 has six factors, so its sign is +1
    assert factor_count(96, table) == 6
    assert liouville(96, table) == 1


def test_signs_match_brute_force(table):
    for k in range(1, 3_000):
        assert mobius(k, table) == mobius_brute(k)
        assert liouville(k, table) == liouville_brute(k)


def test_summatory_examples(table):
    assert summatory(1, "mobius", table) == 1
    assert summatory(1, "liouville", table) == 1
    assert summatory(96, "liouville", table) == 0
    assert summatory(1000, "mobius", table) == sum(
        mobius_brute(k) for k in range(1, 1001)
    )


def test_summatory_rejects_bad_mode(table):
    with pytest.raises(ValueError):
        summatory(10, "merten", table)


def test_partner_candidate_examples(table):
    assert 3 in partner_candidates(6, "mobius", table)
    assert partner_candidates(35, "mobius", table) == [30]
    assert partner_candidates(2, "mobius", table) == []
    assert partner_candidates(2, "liouville", table) == []


def test_partner_preconditions(table):
    with pytest.raises(ValueError):
        partner_moves(1, "liouville", table)
    with pytest.raises(ValueError):
        partner_moves(12, "mobius", table)  # not squarefree


def test_partners_match_forest_enumeration(table):
    for k in range(2, 101):
        assert set(partner_candidates(k, "liouville", table)) == forest_partners(
            k, "liouville", table
        ), k
        if is_squarefree(k, table):
            assert set(partner_candidates(k, "mobius", table)) == forest_partners(
                k, "mobius", table
            ), k


def test_moves_flip_the_sign(table):
    for k in range(2, 400):
        for mode in ("mobius", "liouville"):
            if mode == "mobius" and not is_squarefree(k, table):
                continue
            for l, _move in partner_moves(k, mode, table):
                assert abs(factor_count(l, table) - factor_count(k, table)) == 1
                assert liouville(l, table) == -liouville(k, table)
                if mode == "mobius":
                    assert mobius(l, table) == -mobius(k, table) != 0


def test_self_fusion_needs_square(table):
    # 9 = 3*3 can fuse its two equal trees into prime #4 = 7
    assert 7 in partner_candidates(9, "liouville", table)
    moves = dict()
    for l, mv in partner_moves(9, "liouville", table):
        moves[l] = mv
    assert moves[7] == {"kind": "fusion", "left": 3, "right": 3}


def test_pair_range_trivial(table):
    for mode in ("mobius", "liouville"):
        report = pair_range(1, mode, "largest", table)
        assert report.pairs == []
        assert report.singletons == [1]
        assert report.bound == 1
        assert report.exact == 1
        assert validate_report(report, table)


def test_pair_range_96_liouville(table):
    report = pair_range(96, "liouville", "largest", table)
    assert validate_report(report, table)
    assert report.exact == 0
    assert report.bound >= abs(report.exact)


def test_pair_range_1000_mobius_all_policies(table):
    for policy in ("largest", "smallest", "first"):
        report = pair_range(1000, "mobius", policy, table)
        assert validate_report(report, table), validation_errors(report, table)
        assert report.bound >= abs(report.exact)
        assert report.exact == summatory(1000, "mobius", table)


def test_pair_range_is_deterministic(table):
    a = pair_range(500, "liouville", "largest", table)
    b = pair_range(500, "liouville", "largest", table)
    assert a == b
    assert a.to_json() == b.to_json()


def test_pair_range_universe_partition(table):
    report = pair_range(200, "mobius", "largest", table)
    members = {m for pair in report.pairs for m in pair} | set(report.singletons)
    assert members == {m for m in range(1, 201) if is_squarefree(m, table)}
    report = pair_range(200, "liouville", "smallest", table)
    members = {m for pair in report.pairs for m in pair} | set(report.singletons)
    assert members == set(range(1, 201))


def test_bound_dominates_summatory_sweep(table):
    for mode in ("mobius", "liouville"):
        exact = 0
        signs = {
            "mobius": lambda k: mobius(k, table),
            "liouville": lambda k: liouville(k, table),
        }[mode]
        reports = {n: pair_range(n, mode, "largest", table) for n in range(1, 301)}
        for n in range(1, 301):
            exact += signs(n)
            assert reports[n].exact == exact
            assert abs(exact) <= reports[n].bound, (mode, n)


def test_bound_dominates_summatory_to_2000_strided(table):
    for mode in ("mobius", "liouville"):
        for n in list(range(350, 2_001, 150)) + [2_000]:
            report = pair_range(n, mode, "largest", table)
            assert abs(report.exact) <= report.bound, (mode, n)
            assert validate_report(report, table)


def test_move_log_replays(table):
    report = pair_range(300, "liouville", "first", table)
    assert set(report.move_log) == {k for k, _ in report.pairs}
    assert validate_report(report, table)


def test_validation_catches_duplicates(table):
    report = report_from_pairs(10, "liouville", [(10, 5), (9, 5)], table=table)
    errors = validation_errors(report, table)
    assert any("more than once" in e for e in errors)
    assert not validate_report(report, table)


def test_validation_catches_sign_violation(table):
    # 5 and 3 are both sign -1 under liouville
    report = report_from_pairs(10, "liouville", [(5, 3)], table=table)
    assert any("signs do not cancel" in e for e in validation_errors(report, table))


def test_validation_catches_orientation(table):
    report = report_from_pairs(10, "liouville", [(5, 6)], table=table)
    assert any("not descending" in e for e in validation_errors(report, table))


def test_validation_catches_alien_and_missing(table):
    report = report_from_pairs(10, "mobius", [(10, 9)], table=table)
    # 9 is not squarefree: alien member; the rest of the universe is fine
    assert any("outside the pairable universe" in e for e in validation_errors(report, table))
    report = PairingReport(
        n=4, mode="liouville", policy="fixture",
        pairs=[(4, 3)], singletons=[1], bound=1, exact=summatory(4, "liouville", table),
    )
    assert any("unaccounted" in e for e in validation_errors(report, table))


def test_validation_catches_wrong_bound_and_move(table):
    good = pair_range(50, "liouville", "largest", table)
    tampered = PairingReport(
        n=good.n, mode=good.mode, policy=good.policy, pairs=good.pairs,
        singletons=good.singletons, bound=good.bound + 2, exact=good.exact,
        move_log=good.move_log,
    )
    assert any("bound" in e for e in validation_errors(tampered, table))
    bad_move = dict(good.move_log)
    k = good.pairs[0][0]
    bad_move[k] = {"kind": "fusion", "left": 2, "right": 2}
    tampered = PairingReport(
        n=good.n, mode=good.mode, policy=good.policy, pairs=good.pairs,
        singletons=good.singletons, bound=good.bound, exact=good.exact,
        move_log=bad_move,
    )
    assert any("move log" in e for e in validation_errors(tampered, table))


def test_fixture_pairing_of_96_is_valid(table):
    pairs = load_pairs(FIXTURE)
    assert len(pairs) == 48
    report = report_from_pairs(96, "liouville", pairs, table=table)
    assert validate_report(report, table), validation_errors(report, table)
    assert report.singletons == []
    assert report.bound == 0
    assert report.exact == 0


def test_fixture_loader_rejects_garbage():
    with pytest.raises(ValueError):
        load_pairs("3 2 1\n")
    assert load_pairs("# only a comment\n\n") == []


def test_report_json_round(table):
    report = pair_range(30, "mobius", "largest", table)
    doc = json.loads(report.to_json())
    assert doc["N"] == 30
    assert doc["mode"] == "mobius"
    assert doc["bound"] == report.bound
    assert ["move_log" in doc] == [bool(report.move_log)]
    slim = json.loads(report.to_json(with_moves=False))
    assert "move_log" not in slim
