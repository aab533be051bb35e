"""Incremental exact linear solving over the rationals.

Rows are sparse maps unknown -> Fraction with a constant term.  Every row
added to the system carries an opaque tag; reduced rows remember which tags
combined into them, so a contradiction yields a certificate naming the
original equations with no common solution.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = ["LinearSystem"]


class LinearSystem:
    """Incremental reduced row echelon form with provenance tracking."""

    def __init__(self):
        # pivot unknown -> (row coeffs, constant, tag combination)
        self.pivots = {}
        self.contradiction = None  # tag combination of an inconsistent row

    def _reduce(self, coeffs, const, combo):
        coeffs = dict(coeffs)
        combo = dict(combo)
        for var in list(coeffs):
            piv = self.pivots.get(var)
            if piv is None:
                continue
            factor = coeffs.pop(var)
            prow, pconst, pcombo = piv
            for v, c in prow.items():
                s = coeffs.get(v, Fraction(0)) - factor * c
                if s:
                    coeffs[v] = s
                else:
                    coeffs.pop(v, None)
            const -= factor * pconst
            for tag, c in pcombo.items():
                s = combo.get(tag, Fraction(0)) - factor * c
                if s:
                    combo[tag] = s
                else:
                    combo.pop(tag, None)
        return coeffs, const, combo

    def add_equation(self, coeffs, const, tag):
        """Add sum(coeffs[v]*v) = const; returns False on contradiction.

        A contradictory row is remembered (certificate) and not installed;
        the rest of the system stays usable.
        """
        clean = {v: Fraction(c) for v, c in coeffs.items() if c}
        coeffs, const, combo = self._reduce(clean, Fraction(const), {tag: Fraction(1)})
        if not coeffs:
            if const:
                if self.contradiction is None:
                    self.contradiction = combo
                return False
            return True
        var = min(coeffs)  # deterministic pivot choice
        lead = coeffs.pop(var)
        row = {v: c / lead for v, c in coeffs.items()}
        const = const / lead
        combo = {t: c / lead for t, c in combo.items()}
        # back-substitute into existing pivot rows
        for pvar, (prow, pconst, pcombo) in self.pivots.items():
            factor = prow.get(var)
            if not factor:
                continue
            prow.pop(var)
            for v, c in row.items():
                s = prow.get(v, Fraction(0)) - factor * c
                if s:
                    prow[v] = s
                else:
                    prow.pop(v, None)
            self.pivots[pvar] = (prow, pconst - factor * const, _sub(pcombo, factor, combo))
        self.pivots[var] = (row, const, combo)
        return True

    def value_of(self, var):
        """The forced value of var, or None if var is still free/coupled."""
        piv = self.pivots.get(var)
        if piv is None or piv[0]:
            return None
        return piv[1]

    def solved_values(self):
        return {
            var: const
            for var, (row, const, _) in self.pivots.items()
            if not row
        }

    def undetermined(self, unknowns):
        """Unknowns not pinned to a single value by the current system."""
        return sorted(
            v for v in unknowns
            if v not in self.pivots or self.pivots[v][0]
        )

    def rank(self):
        return len(self.pivots)

    def certificate_tags(self):
        """Tags of an inconsistent equation subset, or None if consistent."""
        if self.contradiction is None:
            return None
        return sorted(self.contradiction, key=repr)


def _sub(combo, factor, other):
    out = dict(combo)
    for tag, c in other.items():
        s = out.get(tag, Fraction(0)) - factor * c
        if s:
            out[tag] = s
        else:
            out.pop(tag, None)
    return out
