"""LP-format export of the vendor-selection integer program.

The emitted document minimizes sum(p_ij * x_i_j) + sum(c_j * y_j) subject
to one assignment equality per item (over bidding vendors only), one
linking row x_i_j <= y_j per present bid, and binary declarations for all
variables. Absent bids produce neither variables nor rows, which is
equivalent to pricing them arbitrarily high without the numeric hazard.

Row and column order is items ascending then vendors ascending, and money
is printed in major units with two decimals, so exports are byte-stable.
Lines are wrapped well under 255 characters for legacy LP readers.
"""

from __future__ import annotations

from .errors import UncoveredItem
from .model import Instance, Solution
from .money import format_money, parse_money

_WRAP_WIDTH = 72


def _wrap_terms(label: str, terms: list[str], tail: str = "") -> list[str]:
    """Join terms with ' + ' and fold into indented continuation lines."""
    lines = []
    current = f" {label}: " if label else " "
    for idx, term in enumerate(terms):
        piece = term if idx == 0 else f" + {term}"
        if len(current) + len(piece) > _WRAP_WIDTH and current.strip():
            lines.append(current)
            current = "   " + (f"+ {term}" if idx else term)
        else:
            current += piece
    if tail:
        current += f" {tail}"
    lines.append(current)
    return lines


def export_integer_program(instance: Instance) -> str:
    """Render the instance as an LP-format text document."""
    missing = instance.zero_bid_items
    if missing:
        raise UncoveredItem(
            "cannot export a full-coverage program: no vendor bids on "
            + ", ".join(missing),
            items=missing,
        )

    objective_terms = []
    for i, row in enumerate(instance.prices, start=1):
        for j, price in enumerate(row, start=1):
            if price is not None:
                objective_terms.append(f"{format_money(price)} x_{i}_{j}")
    for j, cost in enumerate(instance.fixed_costs, start=1):
        objective_terms.append(f"{format_money(cost)} y_{j}")

    lines = ["Minimize"]
    lines.extend(_wrap_terms("obj", objective_terms))
    lines.append("Subject To")
    for i, row in enumerate(instance.prices, start=1):
        terms = [f"x_{i}_{j}" for j, p in enumerate(row, start=1) if p is not None]
        lines.extend(_wrap_terms(f"assign_{i}", terms, tail="= 1"))
    for i, row in enumerate(instance.prices, start=1):
        for j, price in enumerate(row, start=1):
            if price is not None:
                lines.append(f" link_{i}_{j}: x_{i}_{j} - y_{j} <= 0")
    lines.append("Binaries")
    names = []
    for i, row in enumerate(instance.prices, start=1):
        names.extend(f"x_{i}_{j}" for j, p in enumerate(row, start=1) if p is not None)
    names.extend(f"y_{j}" for j in range(1, instance.n + 1))
    current = ""
    for name in names:
        if len(current) + len(name) + 1 > _WRAP_WIDTH and current:
            lines.append(" " + current.strip())
            current = ""
        current += name + " "
    if current.strip():
        lines.append(" " + current.strip())
    lines.append("End")
    return "\n".join(lines) + "\n"


def objective_value_at(document: str, solution: Solution) -> int:
    """Evaluate the document's objective at a solution, in minor units.

    Used to cross-check that the exported coefficients reproduce the
    solution's total cost exactly.
    """
    section = document.split("Minimize", 1)[1].split("Subject To", 1)[0]
    text = " ".join(section.split())
    if text.startswith("obj:"):
        text = text[len("obj:"):]
    coefficients: dict[str, int] = {}
    for chunk in text.split("+"):
        parts = chunk.split()
        if not parts:
            continue
        amount, name = parts
        coefficients[name] = parse_money(amount)

    active = {
        f"x_{i}_{j}"
        for i, j in enumerate(solution.assignment, start=1)
        if j is not None
    }
    active.update(f"y_{j}" for j in solution.subset.members)
    return sum(coef for name, coef in coefficients.items() if name in active)
