import json
import random
from fractions import Fraction as F

import pytest
from _oracles import automorphisms_bruteforce, maximal_chains_bruteforce

from entgeo import (
    CycleError,
    DuplicateCoverError,
    FinitePoset,
    NotALatticeError,
    NotBoundedError,
    NotOrthocomplementationError,
    SizeLimitError,
    UnknownElementError,
    automorphisms,
    chain_poset,
    load_poset,
    maximal_chains,
    powerset_lattice,
    strip_and_reverse,
    to_dot,
)
from entgeo.poset import (
    OrthoStructure,
    boolean_complement,
    dump_poset,
    is_orthoadditive_measure,
    load_ortho,
    random_graded_poset,
)

DIAMOND = FinitePoset.from_covers(["0", "a", "b", "1"], [["0", "a"], ["0", "b"], ["a", "1"], ["b", "1"]])


class TestFromCovers:
    def test_diamond_is_p2(self):
        P2 = powerset_lattice(2)
        assert len(DIAMOND) == 4 and len(DIAMOND.covers) == 4
        assert DIAMOND.top == "1" and DIAMOND.bottom == "0"
        assert DIAMOND.is_lattice() and P2.is_lattice()
        assert len(automorphisms(DIAMOND)) == len(automorphisms(P2)) == 2

    def test_errors(self):
        with pytest.raises(CycleError):
            FinitePoset.from_covers(["a", "b"], [["a", "b"], ["b", "a"]])
        with pytest.raises(UnknownElementError):
            FinitePoset.from_covers(["a"], [["a", "z"]])
        with pytest.raises(DuplicateCoverError):
            FinitePoset.from_covers(["a", "b"], [["a", "b"], ["a", "b"]])
        with pytest.raises(DuplicateCoverError):
            FinitePoset.from_covers(["a", "a"], [])

    def test_one_point(self):
        P = FinitePoset.from_covers(["x"], [])
        assert len(P) == 1 and P.top == P.bottom == "x"

    def test_redundant_cover_is_reduced(self):
        P = FinitePoset.from_covers(["0", "a", "1"], [["0", "a"], ["a", "1"], ["0", "1"]])
        assert P.covers == (("0", "a"), ("a", "1"))

    def test_lattice_ops(self):
        P = powerset_lattice(3)
        assert P.join("{1}", "{2}") == "{1,2}"
        assert P.meet("{1,2}", "{2,3}") == "{2}"
        bowtie = FinitePoset.from_covers(
            ["a", "b", "c", "d"], [["a", "c"], ["a", "d"], ["b", "c"], ["b", "d"]]
        )
        assert bowtie.join("a", "b") is None and not bowtie.is_lattice()


class TestStripAndChains:
    def test_strip_examples(self):
        S = strip_and_reverse(powerset_lattice(2))
        assert set(S.elements) == {"{1}", "{2}"} and not S.comparable("{1}", "{2}")
        S = strip_and_reverse(chain_poset(4))
        assert S.elements == ("c1", "c2") and S.leq("c2", "c1")
        assert len(strip_and_reverse(chain_poset(2))) == 0

    def test_not_bounded(self):
        V = FinitePoset.from_covers(["0", "a", "b"], [["0", "a"], ["0", "b"]])
        with pytest.raises(NotBoundedError):
            strip_and_reverse(V)

    def test_chain_counts(self):
        assert len(maximal_chains(strip_and_reverse(powerset_lattice(3)))) == 6
        anti = FinitePoset.from_covers(["p", "q", "r"], [])
        assert sorted(maximal_chains(anti)) == [("p",), ("q",), ("r",)]
        assert maximal_chains(chain_poset(5)) == [("c4", "c3", "c2", "c1", "c0")]

    def test_chains_match_bruteforce(self):
        rng = random.Random(7)
        posets = [strip_and_reverse(powerset_lattice(n)) for n in (2, 3, 4)]
        posets += [strip_and_reverse(random_graded_poset(rng)) for _ in range(20)]
        for P in posets:
            assert sorted(maximal_chains(P)) == maximal_chains_bruteforce(P.elements, P.leq)

    def test_chains_are_top_down_and_deterministic(self):
        S = strip_and_reverse(powerset_lattice(3))
        chains = maximal_chains(S)
        assert chains == maximal_chains(strip_and_reverse(powerset_lattice(3)))
        for c in chains:
            assert all(S.lt(b, a) for a, b in zip(c, c[1:]))


class TestGenerators:
    def test_sizes(self):
        P = powerset_lattice(3)
        assert len(P) == 8 and len(P.covers) == 12
        C = chain_poset(4)
        assert len(C) == 4 and len(C.covers) == 3 and C.is_chain()
        P1 = powerset_lattice(1)
        assert len(P1) == 2 and P1.is_chain()

    def test_random_graded(self):
        rng = random.Random(0)
        for _ in range(30):
            A = random_graded_poset(rng)
            assert A.top is not None and A.bottom is not None
            assert len({len(c) for c in maximal_chains(strip_and_reverse(A))}) == 1


class TestAutomorphisms:
    def test_examples(self):
        assert len(automorphisms(powerset_lattice(3))) == 6
        assert len(automorphisms(chain_poset(5))) == 1
        anti = FinitePoset.from_covers(["p", "q"], [])
        assert len(automorphisms(anti)) == 2

    def test_against_bruteforce(self):
        rng = random.Random(3)
        for _ in range(15):
            A = random_graded_poset(rng, max_elements=7)
            got = sorted(tuple(sorted(f.items())) for f in automorphisms(A))
            want = sorted(tuple(sorted(f.items())) for f in automorphisms_bruteforce(A.elements, A.leq))
            assert got == want

    def test_colours_restrict(self):
        P = powerset_lattice(3)
        colours = {e: (e == "{1}") for e in P.elements}
        assert len(automorphisms(P, colours)) == 2

    def test_size_limit(self, monkeypatch):
        monkeypatch.setattr("entgeo.poset.AUTOMORPHISM_SIZE_LIMIT", 5)
        with pytest.raises(SizeLimitError):
            automorphisms(chain_poset(6))
        assert len(automorphisms(chain_poset(5))) == 1


class TestOrthoadditive:
    L = powerset_lattice(3)
    ortho = boolean_complement(3)

    def omega_of(self, x):
        from entgeo.poset import parse_subset

        return {e: sum((x[i - 1] for i in parse_subset(e)), F(0)) for e in self.L.elements}

    def test_examples(self):
        assert is_orthoadditive_measure(self.L, self.ortho, self.omega_of((F(1, 2), F(1, 3), F(1, 6))))
        bad = self.omega_of((F(1, 2), F(1, 3), F(1, 3)))
        bad["{1,2,3}"] = F(1)
        assert not is_orthoadditive_measure(self.L, self.ortho, bad)
        ones = {e: F(1) for e in self.L.elements}
        ones["{}"] = F(0)
        assert not is_orthoadditive_measure(self.L, self.ortho, ones)

    def test_enumeration_matches_distributions(self):
        # ω ranges over all maps to {0,1/4,...,1} on the six proper elements
        # (ω(∅)=0, ω(top)=1); the orthoadditive ones are exactly the 15
        # distributions of Δ³ with denominator 4, read off the atoms
        from itertools import product

        middle = [e for e in self.L.elements if e not in ("{}", "{1,2,3}")]
        vals = [F(k, 4) for k in range(5)]
        found = []
        for a in product(vals, repeat=len(middle)):
            omega = dict(zip(middle, a), **{"{}": F(0), "{1,2,3}": F(1)})
            if is_orthoadditive_measure(self.L, self.ortho, omega):
                found.append((omega["{1}"], omega["{2}"], omega["{3}"]))
        assert len(found) == 15
        assert all(sum(t) == 1 for t in found)

    def test_bad_structures(self):
        with pytest.raises(NotOrthocomplementationError):
            is_orthoadditive_measure(self.L, OrthoStructure({e: e for e in self.L.elements}), {})
        with pytest.raises(NotOrthocomplementationError):
            OrthoStructure.from_pairs([["a", "b"], ["a", "c"]])
        bowtie = FinitePoset.from_covers(["a", "b", "c", "d"], [["a", "c"], ["a", "d"], ["b", "c"], ["b", "d"]])
        with pytest.raises(NotALatticeError):
            is_orthoadditive_measure(bowtie, OrthoStructure({}), {})


class TestDot:
    def test_counts(self):
        for P, nodes, edges in ((DIAMOND, 4, 4), (chain_poset(3), 3, 2), (powerset_lattice(3), 8, 12)):
            dot = to_dot(P)
            assert dot.count(" -> ") == edges
            assert sum(1 for line in dot.splitlines() if line.strip().endswith(";") and "->" not in line and "=" not in line) == nodes
            assert "rankdir=BT" in dot

    def test_stable(self):
        assert to_dot(powerset_lattice(3)) == to_dot(powerset_lattice(3))

    def test_quoting(self):
        P = FinitePoset.from_covers(['a"b', "c"], [['a"b', "c"]])
        assert '"a\\"b" -> "c"' in to_dot(P)


class TestFiles:
    def test_roundtrip(self, tmp_path):
        p = tmp_path / "p.json"
        dump_poset(powerset_lattice(2), p)
        data = json.loads(p.read_text())
        assert set(data) == {"elements", "covers"}
        assert load_poset(p) == powerset_lattice(2)

    def test_documented_format(self):
        P = load_poset({"elements": ["0", "a", "b", "1"], "covers": [["0", "a"], ["0", "b"], ["a", "1"], ["b", "1"]]})
        assert P == DIAMOND

    def test_ortho_file(self, tmp_path):
        p = tmp_path / "o.json"
        p.write_text(json.dumps({"pairs": [["0", "1"], ["a", "b"]]}))
        o = load_ortho(p)
        assert o("a") == "b" and o("1") == "0"
        assert is_orthoadditive_measure(DIAMOND, o, {"0": 0, "a": F(1, 3), "b": F(2, 3), "1": 1})

    def test_missing_keys(self):
        with pytest.raises(ValueError):
            load_poset({"elements": ["a"]})
