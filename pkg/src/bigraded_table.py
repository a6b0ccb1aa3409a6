"""
Bigraded and graded group tables: algebra on tables plus JSON and Markdown rendering
"""

from typing import Dict, Iterator, List, Mapping, Optional, Tuple

import pandas as pd

from src.abelian_groups import AbelianGroup, group_tensor

Bidegree = Tuple[int, int]

TRIVIAL = AbelianGroup()


class BigradedGroupTable(Mapping[Bidegree, AbelianGroup]):
    """Map (p, q) -> AbelianGroup storing only nonzero cells; missing cells read as 0"""

    def __init__(self, cells: Optional[Mapping[Bidegree, AbelianGroup]] = None):
        self._cells: Dict[Bidegree, AbelianGroup] = {
            (int(p), int(q)): group for (p, q), group in (cells or {}).items() if not group.is_trivial
        }

    def __getitem__(self, bidegree: Bidegree) -> AbelianGroup:
        return self._cells.get(tuple(bidegree), TRIVIAL)

    def __iter__(self) -> Iterator[Bidegree]:
        return iter(sorted(self._cells))

    def __len__(self) -> int:
        return len(self._cells)

    def __contains__(self, bidegree: object) -> bool:
        return bidegree in self._cells

    def __eq__(self, other: object) -> bool:
        if isinstance(other, BigradedGroupTable):
            return self._cells == other._cells
        if isinstance(other, Mapping):
            return self == BigradedGroupTable(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._cells.items()))

    def __repr__(self) -> str:
        inner = ", ".join(f"({p},{q}): {g}" for (p, q), g in self.items())
        return f"BigradedGroupTable({{{inner}}})"

    # -- algebra ------------------------------------------------------------

    def direct_sum(self, other: "BigradedGroupTable") -> "BigradedGroupTable":
        keys = set(self._cells) | set(other._cells)
        return BigradedGroupTable({k: self[k] + other[k] for k in keys})

    __add__ = direct_sum

    def tensor(self, other: "BigradedGroupTable") -> "BigradedGroupTable":
        """(A ⊗ B)^{P,Q} = ⊕_{p+p'=P, q+q'=Q} A^{p,q} ⊗ B^{p',q'}"""
        cells: Dict[Bidegree, AbelianGroup] = {}
        for (p, q), a in self.items():
            for (r, s), b in other.items():
                key = (p + r, q + s)
                cells[key] = cells.get(key, TRIVIAL) + group_tensor(a, b)
        return BigradedGroupTable(cells)

    def shift(self, dp: int, dq: int) -> "BigradedGroupTable":
        return BigradedGroupTable({(p + dp, q + dq): g for (p, q), g in self.items()})

    def with_cell(self, bidegree: Bidegree, group: AbelianGroup) -> "BigradedGroupTable":
        cells = dict(self._cells)
        cells[tuple(bidegree)] = group
        return BigradedGroupTable(cells)

    def euler_sum(self) -> int:
        """Σ_{0<=p<=q} (-1)^{q-p} rank"""
        return sum((-1) ** (q - p) * g.rank for (p, q), g in self.items() if 0 <= p <= q)

    def total_degree(self, n: int) -> List[Tuple[Bidegree, AbelianGroup]]:
        return [((p, q), g) for (p, q), g in self.items() if q - p == n]

    def differences(self, other: "BigradedGroupTable") -> List[Tuple[Bidegree, AbelianGroup, AbelianGroup]]:
        """Cells where the two tables disagree, as (cell, ours, theirs)"""
        keys = sorted(set(self._cells) | set(other._cells))
        return [(k, self[k], other[k]) for k in keys if self[k] != other[k]]

    # -- rendering ----------------------------------------------------------

    def to_json(self, page: Optional[int] = None) -> Dict[str, object]:
        data: Dict[str, object] = {}
        if page is not None:
            data["page"] = page
        data["cells"] = {f"{p},{q}": g.to_json() for (p, q), g in self.items()}
        return data

    @classmethod
    def from_json(cls, data: Mapping[str, object]) -> "BigradedGroupTable":
        cells = {}
        for key, value in data.get("cells", {}).items():
            p, q = (int(x) for x in key.split(","))
            cells[(p, q)] = AbelianGroup.from_json(value)
        return cls(cells)

    def to_frame(self) -> pd.DataFrame:
        """p on rows, q on columns, blank for 0"""
        if not self._cells:
            return pd.DataFrame()
        ps = range(min(p for p, _ in self._cells), max(p for p, _ in self._cells) + 1)
        qs = range(min(q for _, q in self._cells), max(q for _, q in self._cells) + 1)
        frame = pd.DataFrame("", index=list(ps), columns=list(qs))
        for (p, q), group in self.items():
            frame.loc[p, q] = str(group)
        frame.index.name = "p"
        frame.columns.name = "q"
        return frame

    def to_markdown(self, title: Optional[str] = None) -> str:
        lines = [f"### {title}", ""] if title else []
        frame = self.to_frame()
        if frame.empty:
            lines.append("_all cells are 0_")
            return "\n".join(lines) + "\n"
        lines.append(frame.rename_axis(index="p \\ q").to_markdown())
        return "\n".join(lines) + "\n"


def graded_to_json(groups: Mapping[int, AbelianGroup]) -> Dict[str, Dict[str, object]]:
    return {str(k): groups[k].to_json() for k in sorted(groups)}


def graded_to_markdown(groups: Mapping[int, AbelianGroup], title: Optional[str] = None) -> str:
    frame = pd.DataFrame({"degree": sorted(groups), "group": [str(groups[k]) for k in sorted(groups)]})
    lines = [f"### {title}", ""] if title else []
    if frame.empty:
        lines.append("_no degrees_")
    else:
        lines.append(frame.to_markdown(index=False))
    return "\n".join(lines) + "\n"


def nonzero_graded(groups: Mapping[int, AbelianGroup]) -> Dict[int, AbelianGroup]:
    return {k: g for k, g in groups.items() if not g.is_trivial}
