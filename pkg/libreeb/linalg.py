"""
Exact ranks of sparse boundary matrices.

Columns are reduced left to right against earlier pivots keyed by their
lowest nonzero row, as in persistence column reduction. Over the
rationals the entries are Fractions, over GF(2) a column is a set of rows
and addition is symmetric difference.
"""
from fractions import Fraction


def rank_rational(columns):
    """
    Rank over Q.

    Args:
      columns: iterable of {row: int or Fraction} mappings.
    """
    pivots = {}
    rank = 0
    for column in columns:
        col = {row: Fraction(value) for row, value in column.items() if value}
        while col:
            low = max(col)
            pivot = pivots.get(low)
            if pivot is None:
                pivots[low] = col
                rank += 1
                break
            factor = col[low] / pivot[low]
            for row, value in pivot.items():
                updated = col.get(row, 0) - factor * value
                if updated:
                    col[row] = updated
                else:
                    col.pop(row, None)
    return rank


def rank_gf2(columns):
    """
    Rank over GF(2).

    Args:
      columns: iterable of {row: int} mappings; odd entries count as 1.
    """
    pivots = {}
    rank = 0
    for column in columns:
        col = {row for row, value in column.items() if value % 2}
        while col:
            low = max(col)
            pivot = pivots.get(low)
            if pivot is None:
                pivots[low] = col
                rank += 1
                break
            col ^= pivot
    return rank
