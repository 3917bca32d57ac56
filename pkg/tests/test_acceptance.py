"""The twelve acceptance criteria, each run through its named suite at seed 0.

Every criterion prints one ``PASS``/``FAIL`` line; the lines are also
repeated in the pytest terminal summary.
"""

import time

import pytest

from valmat.suites import SUITES

LINES: list[str] = []

# name, criterion, time limit in seconds (None: no stated limit), minimum counts per tally label
CRITERIA = [
    ("example", 1, 1, {"induce_bipartite": 1, "valuated": 1}),
    (
        "family",
        2,
        60,
        {**{f"Fn_valuated_n{n}": 50 for n in range(2, 7)}, **{f"hnat_vgm_n{n}": 1 for n in range(2, 6)}},
    ),
    ("solver", 3, 120, {"algorithm_equals_brute": 500}),
    (
        "duality",
        4,
        120,
        {
            k: 200
            for k in (
                "edge_feasibility",
                "pi_nonnegative_on_V",
                "strong_duality",
                "optimal_edges_tight",
                "maximizers_equal_tight_rado_minor",
            )
        },
    ),
    (
        "identities",
        5,
        None,
        {
            k: 100
            for k in (
                "contract_via_dual_delete",
                "truncation_via_zero_extension",
                "principal_extensions_commute",
                "induction_by_extensions",
                "union_by_induction",
                "union_rank_formula",
                "rado_rank_condition_equals_matching",
            )
        },
    ),
    ("closure", 6, None, {"delete": 1, "dual": 1, "merge": 1, "endow": 1, "rminor_dual": 1}),
    ("snowflake", 7, None, {"rinduced_U23_algorithm": 1, "gammoid_contracted_algorithm": 1}),
    ("trimming", 8, None, {"left_degree_at_most_d": 100, "edge_count_at_most_Vd": 100, "function_unchanged": 100}),
    (
        "rado",
        9,
        None,
        {
            "rho_submodular": 50,
            "closure_identity": 50,
            "uncrossing_I": 50,
            "uncrossing_II": 50,
            **{f"robust_{b}_witness_n{n}": 1 for b in ("B0", "B1") for n in (8, 9, 10)},
            "B0_not_fully_reducible": 1,
        },
    ),
    (
        "tropical",
        10,
        180,
        {
            "deg_multiplicative": 1000,
            "deletion_commutes": 1,
            "contraction_commutes": 1,
            "multi_affine_commutation": 100,
            "full_commutation_vs_subgraphs": 50,
        },
    ),
    ("rnat", 11, None, {"endow_representation": 50, "merge_representation": 50}),
    ("lift", 12, None, {"recovery_all_paddings": 1, "lift_valuated_when_vgm": 1}),
]


def run_criterion(name, criterion, limit, minimums):
    start = time.perf_counter()
    res = SUITES[name](0)
    elapsed = time.perf_counter() - start
    problems = [f"{label}: {res.count(label)} < {need}" for label, need in minimums.items() if res.count(label) < need]
    if not res.ok:
        problems.append(f"failed checks: {res.failures[:3]}")
    if limit is not None and elapsed >= limit:
        problems.append(f"took {elapsed:.1f}s, limit {limit}s")
    checks = sum(t for _, t in res.tallies.values())
    status = "PASS" if not problems else "FAIL"
    line = f"{status} criterion {criterion:2d} [{name}] {checks} checks in {elapsed:.2f}s"
    if problems:
        line += " :: " + "; ".join(problems)
    return line, problems


@pytest.mark.parametrize("name,criterion,limit,minimums", CRITERIA, ids=[c[0] for c in CRITERIA])
def test_criterion(name, criterion, limit, minimums):
    line, problems = run_criterion(name, criterion, limit, minimums)
    LINES.append(line)
    print(line)
    assert not problems, line


if __name__ == "__main__":
    for spec in CRITERIA:
        print(run_criterion(*spec)[0], flush=True)
