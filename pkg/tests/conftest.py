import numpy as np
import pytest

from cliquekit.graph import build_csr, complete_graph, gnp_graph

DENSITIES = (0.1, 0.3, 0.5, 0.9)


def two_triangles():
    """Two triangles {0,1,2} and {2,3,4} sharing vertex 2."""
    return build_csr(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])


def random_corpus(count, n_lo=10, n_hi=60, densities=DENSITIES):
    """Seeded Erdős–Rényi graphs cycling through ``densities``."""
    out = []
    for seed in range(count):
        rng = np.random.default_rng(seed)
        n = int(rng.integers(n_lo, n_hi + 1))
        out.append(gnp_graph(n, densities[seed % len(densities)], seed))
    return out


def cycle(n):
    return build_csr(n, [(i, (i + 1) % n) for i in range(n)])


def star(leaves):
    return build_csr(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


@pytest.fixture
def k3():
    return complete_graph(3)


@pytest.fixture
def fig_cpm():
    return two_triangles()


def pytest_terminal_summary(terminalreporter):
    rows: dict[str, dict] = {}
    for reports in terminalreporter.stats.values():
        for rep in reports:
            props = dict(getattr(rep, "user_properties", []) or [])
            if "criterion" not in props:
                continue
            row = rows.setdefault(rep.nodeid, {"name": props["criterion"], "ok": True, "elapsed": float("nan")})
            row["ok"] = row["ok"] and not rep.failed
            row["elapsed"] = props.get("elapsed", row["elapsed"])
    if rows:
        terminalreporter.section("acceptance criteria")
        for row in sorted(rows.values(), key=lambda r: r["name"]):
            status = "PASS" if row["ok"] else "FAIL"
            terminalreporter.write_line(f"{status}  {row['name']}  ({row['elapsed']:.2f} s)")
