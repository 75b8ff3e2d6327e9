import pytest

from mivs import validate_instance

# Worked example: 9 items, 5 vendors, all prices in whole currency units.
FIG3_PRICES = [
    [19, 13, 11, 12, 12],
    [19, 17, 16, 13, 10],
    [15, 14, 21, 18, 11],
    [16, 23, 24, 23, 14],
    [23, 11, 16, 11, 24],
    [18, 16, 20, 18, 11],
    [22, 18, 22, 20, 11],
    [23, 24, 16, 14, 22],
    [12, 10, 10, 14, 16],
]
FIG3_FIXED = [10, 13, 15, 8, 11]
FIG3_ITEMS = [f"P{i}" for i in range(1, 10)]
FIG3_VENDORS = [f"S{j}" for j in range(1, 6)]


def money(units: int) -> int:
    return units * 100


def fig3_price_matrix():
    """Figure data in minor units, list-of-lists (oracle-friendly)."""
    return [[money(p) for p in row] for row in FIG3_PRICES]


def fig3_fixed_costs():
    return [money(c) for c in FIG3_FIXED]


def make_fig3_instance():
    return validate_instance(
        FIG3_ITEMS, FIG3_VENDORS, fig3_price_matrix(), fig3_fixed_costs()
    )


def fig3_csv() -> str:
    lines = ["item," + ",".join(FIG3_VENDORS)]
    for item, row in zip(FIG3_ITEMS, FIG3_PRICES):
        lines.append(item + "," + ",".join(str(p) for p in row))
    lines.append("FIXED_COST," + ",".join(str(c) for c in FIG3_FIXED))
    return "\n".join(lines) + "\n"


@pytest.fixture(scope="session")
def fig3():
    return make_fig3_instance()


@pytest.fixture(scope="session")
def fig3_csv_text():
    return fig3_csv()
