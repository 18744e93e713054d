"""Choice-function expansion of models into answer sets."""

from itertools import product

from ndlp import count, expand, least_model, enumerate_stable
from ndlp.corpus import corpus_text
from ndlp.wf import PartialInterpretation
from ndlp import well_founded_model

from conftest import gp_from


def nd(gp, text):
    for atom in gp.base:
        if str(atom) == text:
            return atom
    raise KeyError(text)


def brute_force_images(model):
    """Independent choice enumeration: raw products and set collapse."""
    if isinstance(model, PartialInterpretation):
        pos = sorted(model.pos, key=lambda a: a.key)
        neg = sorted(model.neg, key=lambda a: a.key)
    else:
        pos, neg = sorted(model, key=lambda a: a.key), []
    images = set()
    for picks in product(*[a.atoms for a in pos], *[a.atoms for a in neg]):
        chosen_pos = frozenset(picks[: len(pos)])
        chosen_neg = frozenset(picks[len(pos):])
        if chosen_pos & chosen_neg:
            continue
        images.add((chosen_pos, chosen_neg))
    return images


class TestExpand:
    def test_teaching_model(self, teaching):
        math = frozenset([nd(teaching, "{math(101), math(102)}")])
        sets = [str(s) for s in expand(math)]
        assert sets == ["{math(101)}", "{math(102)}"]

    def test_second_teaching_superset_retained(self, teaching2):
        model = enumerate_stable(teaching2).models[0]
        sets = [str(s) for s in expand(model)]
        assert sets == ["{math(101), math(102)}", "{math(102)}"]

    def test_subset_minimal_flag_drops_the_superset(self, teaching2):
        model = enumerate_stable(teaching2).models[0]
        sets = [str(s) for s in expand(model, subset_minimal=True)]
        assert sets == ["{math(102)}"]

    def test_wf_total_model_signed_sets(self):
        gp = gp_from("{a1, a2} :- not {b1, b2}.")
        sets = [str(s) for s in expand(well_founded_model(gp))]
        assert sets == [
            "{a1, not b1}",
            "{a1, not b2}",
            "{a2, not b1}",
            "{a2, not b2}",
        ]

    def test_empty_model_has_one_empty_branch(self):
        result = expand(frozenset())
        assert len(result) == 1 and str(result.answer_sets[0]) == "{}"

    def test_cap_truncates(self):
        gp = gp_from(corpus_text("fred.ndlp"))
        result = expand(least_model(gp), cap=5)
        assert len(result) == 5 and result.truncated

    def test_matches_brute_force_on_fred(self):
        gp = gp_from(corpus_text("fred.ndlp"))
        model = least_model(gp)
        expected = brute_force_images(model)
        got = {(s.atoms, s.negatives) for s in expand(model)}
        assert got == expected
        assert len(got) == 49

    def test_matches_brute_force_on_partial(self):
        gp = gp_from(corpus_text("wf_partial.ndlp"))
        model = well_founded_model(gp)
        got = {(s.atoms, s.negatives) for s in expand(model)}
        assert got == brute_force_images(model)


class TestInvariants:
    def test_size_bound_and_cover(self, teaching2):
        model = enumerate_stable(teaching2).models[0]
        expansion = expand(model)
        bound = 1
        for atom in model:
            bound *= len(atom)
        assert len(expansion) <= bound
        for answer_set in expansion:
            for atom in model:
                assert answer_set.atoms & frozenset(atom.atoms)
            for chosen in answer_set.atoms:
                assert any(chosen in atom.atoms for atom in model)

    def test_no_duplicates(self):
        gp = gp_from(corpus_text("fred.ndlp"))
        expansion = expand(least_model(gp))
        keys = [s.key for s in expansion]
        assert len(keys) == len(set(keys))

    def test_singleton_collapse(self):
        gp = gp_from("{a}. {b}. {c} :- {a}, {b}.")
        sets = expand(least_model(gp))
        assert len(sets) == 1
        assert sorted(str(a) for a in sets.answer_sets[0].atoms) == ["a", "b", "c"]


class TestCount:
    def test_singletons_count_one(self):
        gp = gp_from("{a}. {b}.")
        assert count(least_model(gp)) == (1, True)

    def test_fred_count_collapses_duplicates(self):
        gp = gp_from(corpus_text("fred.ndlp"))
        model = least_model(gp)
        assert count(model) == (len(brute_force_images(model)), True)

    def test_cap_reports_inexact(self):
        gp = gp_from(corpus_text("fred.ndlp"))
        assert count(least_model(gp), cap=10) == (10, False)
