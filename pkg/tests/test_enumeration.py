import pytest

from majority_closure.core import all_full
from majority_closure.enumeration import Mode, enumerate_check
from majority_closure.errors import ScopeTooLarge
from majority_closure.generators import cyclic, linear


def test_classify_n3():
    r = enumerate_check(3, Mode.CLASSIFY)
    assert (r.counts["full"], r.counts["full_pseudo"]) == (8, 2)
    assert (r.counts["all"], r.counts["all_pseudo"]) == (27, 3)
    assert r.ok and r.agreements == r.families_tested * r.targets_tested


def test_classify_n4():
    r = enumerate_check(4, "classify")
    assert r.counts["full"] == 64 and r.counts["full_pseudo"] == 24
    assert r.counts["full_balanced"] == 0
    assert r.ok


def test_decide_vs_oracle_n3():
    r = enumerate_check(3, Mode.DECIDE_VS_ORACLE)
    assert r.families_tested * r.targets_tested == 216
    assert r.ok and r.agreements == 216
    assert r.realizable_count == 6 * 27 + 2 * 3


def test_decide_vs_oracle_n4_sample():
    gens = [linear(4)] + list(all_full(4))[:3]
    r = enumerate_check(4, Mode.DECIDE_VS_ORACLE, generators=gens)
    assert r.ok and r.realizable_count == 64 * len(gens)


def test_synthesize_all_n3():
    r = enumerate_check(3, Mode.SYNTHESIZE_ALL)
    assert r.ok and r.realizable_count == 168


def test_workers_give_identical_report():
    targets = list(all_full(5))[:40]
    a = enumerate_check(5, Mode.DECIDE_VS_ORACLE, generators=[cyclic(5)], targets=targets)
    b = enumerate_check(5, Mode.DECIDE_VS_ORACLE, generators=[cyclic(5)], targets=targets,
                        workers=2)
    assert a == b and a.render() == b.render()


def test_scope():
    with pytest.raises(ScopeTooLarge):
        enumerate_check(6, Mode.CLASSIFY)


def test_render_has_machine_lines():
    text = enumerate_check(3, Mode.CLASSIFY).render()
    assert "disagreements=0" in text and "full_pseudo=2" in text
