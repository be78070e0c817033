import pytest
from hypothesis import given, settings, strategies as st

from thetapack.certificates import (
    REPAIRED, VERIFIED, CertificateError, build_certificate, certificate_cycle, certificate_path,
    coloring_from_words, cycle_word, path_word,
)
from thetapack.formula import ConditionLabel as L, cycle_pcn, path_pcn
from thetapack.graph import ThetaSpec, build_cycle, build_path, build_theta, distance_matrix
from thetapack.verify import verify


def test_three_threes():
    cert = build_certificate(ThetaSpec((3, 3, 3)))
    assert cert.k == 5 and cert.status == VERIFIED
    assert cert.words == ["4125", "4215", "4315"]


def test_two_two_two():
    cert = build_certificate(ThetaSpec((2, 2, 2)))
    assert cert.k == 3 and cert.words == ["213"] * 3


def test_five_five_five_under_c():
    cert = build_certificate(ThetaSpec((5, 5, 5)), 4, L.C)
    assert cert.status == VERIFIED
    assert (cert.coloring["u"], cert.coloring["v"]) == (2, 4)
    assert cert.words == ["213214"] * 3


def test_extra_threes_get_fresh_colors():
    cert = build_certificate(ThetaSpec((3, 3, 3, 3, 3, 4)))
    assert cert.k == 7 and cert.status == VERIFIED
    assert cert.coloring.color_count == 7


@pytest.mark.parametrize("n,word", [(8, "12131213"), (5, "12134"), (7, "1213214"), (3, "123")])
def test_cycle_words(n, word):
    assert cycle_word(n) == word
    g = build_cycle(n)
    col = certificate_cycle(n)
    assert verify(distance_matrix(g), col).valid and col.color_count == cycle_pcn(n)


@pytest.mark.parametrize("n,word", [(1, "1"), (3, "121"), (6, "121312")])
def test_path_words(n, word):
    assert path_word(n) == word


@pytest.mark.parametrize("n", range(1, 30))
def test_path_certificates(n):
    col = certificate_path(n)
    assert verify(distance_matrix(build_path(n)), col).valid and col.color_count == path_pcn(n)


@pytest.mark.parametrize("n", range(3, 30))
def test_cycle_certificates(n):
    col = certificate_cycle(n)
    assert verify(distance_matrix(build_cycle(n)), col).valid and col.color_count == cycle_pcn(n)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(1, 14), min_size=2, max_size=6).map(sorted).filter(lambda ls: ls[1] >= 2))
def test_certificates_beyond_sweep_range(lengths):
    # longer paths than the acceptance sweep uses; patterns must still verify
    spec = ThetaSpec(lengths)
    cert = build_certificate(spec)
    assert cert.status == VERIFIED, cert.note
    assert verify(distance_matrix(build_theta(spec)), cert.coloring).valid
    assert cert.coloring.color_count == cert.k


def test_mismatched_end_letters_rejected():
    with pytest.raises(CertificateError):
        coloring_from_words(ThetaSpec((2, 2)), ["213", "214"])


def test_wrong_construction_falls_back_to_solver():
    # the 5-color words on a 4-chromatic graph use too many colors
    spec = ThetaSpec((5, 5, 5))
    forced = build_certificate(spec, 4, L.NONE)
    assert forced.status == REPAIRED and "5 colors" in forced.note
    assert verify(distance_matrix(build_theta(spec)), forced.coloring).valid
    assert forced.coloring.color_count == 4


def test_every_condition_construction_where_it_holds():
    # D and N are never the first condition in range, so exercise each one directly
    from thetapack.formula import conditions_holding, pcn_theta
    from thetapack.sweep import theta_specs

    seen = set()
    for spec in theta_specs(5, 8, 24, min_p=3):
        if pcn_theta(spec)[0] != 4:
            continue
        for label in conditions_holding(spec):
            cert = build_certificate(spec, 4, label)
            assert cert.status == VERIFIED, (spec, label, cert.note)
            seen.add(label)
    assert seen == {L(c) for c in "ABCDEFGHIJKLMN"}
