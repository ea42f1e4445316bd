"""Exhaustive verification suites over all even D up to a bound.

Each suite returns a list of :class:`Check` results; nothing raises on a
failed property, so the CLI can report every line.
"""

from __future__ import annotations

from typing import Callable, NamedTuple

from . import basis_sets as bs
from . import symplectic as sp
from . import tableaux as tb


class Check(NamedTuple):
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}" + (f": {self.detail}" if self.detail else "")


def _ds(d_max: int) -> range:
    return range(0, d_max + 1, 2)


def counts(d_max: int) -> list[Check]:
    out = []
    for D in _ds(d_max):
        cat = bs.catalan((D + 2) // 2)
        half = len(bs.enumerate_sets(D, "half"))
        reduced = len(bs.enumerate_sets(D, "reduced"))
        direct = tb.distinguished_symbols(D)
        image = tb.almost_special_symbols(D)
        out.append(Check(f"D={D} catalan", half == reduced == len(direct) == cat,
                         f"half={half} reduced={reduced} symbols={len(direct)} Cat={cat}"))
        out.append(Check(f"D={D} symbol image is everything",
                         set(image) == set(direct) and len(set(image)) == len(image)))
        all_sets = bs.enumerate_sets(D, "all")
        out.append(Check(f"D={D} search agrees", bs.enumerate_by_search(D) == all_sets))
        if D <= bs.BRUTE_FORCE_MAX_D:
            out.append(Check(f"D={D} power set agrees", bs.brute_force_enumerate(D) == all_sets))
        bad = [B for B in all_sets if bs.has_half_shape(B) != (2 * len(B) == D) or 2 * len(B) > D]
        out.append(Check(f"D={D} size bound and shape test", not bad, f"{len(bad)} failures"))
    return out


def roundtrip(d_max: int) -> list[Check]:
    out = []
    for D in _ds(d_max):
        failures: dict[str, int] = {}

        def fail(name: str) -> None:
            failures[name] = failures.get(name, 0) + 1

        for B in bs.enumerate_sets(D, "all"):
            if bs.reduce_set(bs.reduce_set(B)) != bs.reduce_set(B):
                fail("reduce idempotent")
        for B in bs.enumerate_sets(D, "half"):
            if bs.saturate(bs.reduce_set(B)) != B:
                fail("saturate after reduce")
        for B in bs.enumerate_sets(D, "reduced"):
            if bs.reduce_set(bs.saturate(B)) != B:
                fail("reduce after saturate")
            C = tb.dot(B)
            if tb.undot(C) != B:
                fail("undot after dot")
            X = tb.shift(C)
            if tb.shift_by_moving(C) != X:
                fail("shift closed form")
            if tb.unshift(X) != C:
                fail("unshift after shift")
            mu = tb.tableau_to_pairs(X)
            if tb.pairs_to_tableau(mu) != X:
                fail("tableau after pairs")
            sym = tb.pairs_to_symbol(mu)
            if tb.symbol_to_pairs(sym) != mu:
                fail("pairs after symbol")
        for C in tb.dotted_sets(D):
            if tb.dot(tb.undot(C)) != C:
                fail("dot after undot")
        for sym in tb.distinguished_symbols(D):
            if tb.pairs_to_symbol(tb.symbol_to_pairs(sym)) != sym:
                fail("symbol after pairs")
        out.append(Check(f"D={D} round trips", not failures, str(failures) if failures else ""))
    return out


def epsilon(d_max: int) -> list[Check]:
    out = []
    for D in _ds(d_max):
        all_sets = bs.enumerate_sets(D, "all")
        images = [sp.epsilon(B) for B in all_sets]
        out.append(Check(f"D={D} epsilon injective", len(set(images)) == len(images)))
        agree = all(sp.epsilon_by_multiplicity(B) == e for B, e in zip(all_sets, images))
        out.append(Check(f"D={D} epsilon formulas agree", agree))
        rows_ok = symbol_ok = True
        for B in bs.enumerate_sets(D, "reduced"):
            X = tb.shift(tb.dot(B))
            e = sp.epsilon_rows(X)
            rows_ok &= sp.epsilon(B) == e == sp.epsilon_dotted(tb.dot(B))
            sym = sp.f_map(e).as_distinguished()
            symbol_ok &= sym is not None and sym == tb.pairs_to_symbol(tb.tableau_to_pairs(X))
        out.append(Check(f"D={D} epsilon through shifted tableau", rows_ok))
        out.append(Check(f"D={D} f(epsilon) matches symbol route", symbol_ok))
    return out


def lattice(d_max: int) -> list[Check]:
    out = []
    for D in _ds(d_max):
        all_sets = bs.enumerate_sets(D, "all")
        half = bs.enumerate_sets(D, "half")
        reduced = bs.enumerate_sets(D, "reduced")
        cc1 = sp.cc(D, 1)
        spans = {sp.span(B) for B in all_sets}
        # ca(V^1) straight from its definition, independent of phi
        defined = set()
        for L in cc1:
            for Lp in cc1:
                if L <= Lp:
                    comp = sp.shriek(Lp, 1)
                    if L.dim + comp.dim == (L + comp).dim and (L + comp) in spans:
                        defined.add((L, Lp))
        images = [sp.phi(B) for B in all_sets]
        out.append(Check(f"D={D} phi bijects onto ca",
                         len(set(images)) == len(images) and set(images) == defined))
        for name, family in (("half", half), ("reduced", reduced)):
            odd = [sp.span_parts(B)[2] for B in family]
            out.append(Check(f"D={D} <B>_1 bijects {name} onto cc",
                             len(set(odd)) == len(odd) and set(odd) == cc1))
        try:
            upper = {(L, sp.l_max(L)) for L in cc1}
            unique = True
        except sp.ConsistencyError:
            upper, unique = set(), False
        out.append(Check(f"D={D} l_max unique", unique))
        on_reduced = [sp.phi(B) for B in reduced]
        out.append(Check(f"D={D} phi bijects reduced onto ca^*",
                         len(set(on_reduced)) == len(on_reduced) and set(on_reduced) == upper))
        dims_ok = True
        for B in reduced:
            base = sp.span_parts(B)[1].dim
            Z = bs.growth_set(B)
            for S in bs.fibre(B):
                U = len(S) - len(B)
                dims_ok &= sp.span_parts(S)[1].dim == base + U and len(Z) >= U
        out.append(Check(f"D={D} fibre dimensions", dims_ok))
    return out


SUITES: dict[str, Callable[[int], list[Check]]] = {
    "counts": counts,
    "roundtrip": roundtrip,
    "epsilon": epsilon,
    "lattice": lattice,
}


def run(suite: str, d_max: int) -> list[Check]:
    names = list(SUITES) if suite == "all" else [suite]
    return [c for name in names for c in SUITES[name](d_max)]
