"""Curated decomposition fixtures for two-copy pair hosts.

Each fixture pins down one worked decomposition: a pair configuration
(cross-edge mask, designations, pendants) together with an explicit
{K2, H, Hhat}-tiling of its assembled host covering at least 13 vertices.
They serve as ground truth for the extendability machinery: the depicted
members must validate edge by edge in the assembled host, and the
configuration must test extendable.

A deliberately corrupted copy of the first fixture (one cross edge its
tiling uses removed from the mask) is included as a negative control; its
member validation must fail.

Host vertex layout (see :mod:`htiling.extendability`): H_i at 0..5,
H_j at 6..11, both in label order (u, v, a, b, c, d); pendants from 12.
"""

from __future__ import annotations

from dataclasses import dataclass

from .extendability import PairConfig, assemble_host, bip_bit, bip_from_pairs, is_extendable
from .patterns import pattern_h, pattern_hhat, pattern_k2
from .tiling import Tiling, TilingError, tiling_from_images

_K2 = pattern_k2()
_H = pattern_h()
_HHAT = pattern_hhat()
_BY_NAME = {"K2": _K2, "H": _H, "Hhat": _HHAT}


@dataclass(frozen=True)
class Fixture:
    key: str
    config: PairConfig
    members: tuple[tuple[str, tuple[int, ...]], ...]
    expect_valid: bool = True

    @property
    def expected_coverage(self) -> int:
        return sum(_BY_NAME[name].n for name, _ in self.members)

    def build_tiling(self) -> Tiling:
        host = assemble_host(self.config)
        return tiling_from_images(host, [(_BY_NAME[n], img) for n, img in self.members])


def _cfg(pairs, l_i, l_j=()):
    return PairConfig(bip_from_pairs(pairs), frozenset(l_i), frozenset(l_j))


FIXTURES: tuple[Fixture, ...] = (
    # one designated centre; cover = Hhat + three disjoint edges (13 of 13)
    Fixture(
        key="Decomposition of V(Hi+Hj)+{w} into Hhat and three pairwise disjoint edges (1)",
        config=_cfg([("c", "a"), ("d", "d"), ("b", "d"), ("a", "u"), ("v", "b")], "u"),
        members=(
            ("Hhat", (0, 1, 11, 12, 3, 5, 9)),
            ("K2", (7, 10)),
            ("K2", (6, 2)),
            ("K2", (8, 4)),
        ),
    ),
    # one designated leaf; same cover shape
    Fixture(
        key="Decomposition of V(Hi+Hj)+{w} into Hhat and three pairwise disjoint edges (2)",
        config=_cfg([("d", "a"), ("b", "a"), ("u", "d")], "a"),
        members=(
            ("Hhat", (1, 0, 8, 4, 5, 3, 11)),
            ("K2", (10, 7)),
            ("K2", (6, 9)),
            ("K2", (12, 2)),
        ),
    ),
    # designated centres in both copies; cover = H + four disjoint edges (14)
    Fixture(
        key="Decomposition of W into a copy of H and four disjoint edges",
        config=_cfg([("d", "u"), ("a", "c"), ("c", "v"), ("d", "b"), ("b", "d")], "u", "u"),
        members=(
            ("H", (6, 5, 8, 13, 1, 9)),
            ("K2", (12, 0)),
            ("K2", (3, 11)),
            ("K2", (10, 2)),
            ("K2", (7, 4)),
        ),
    ),
    # centre + leaf designations; cover = two H-copies + one edge (14)
    Fixture(
        key="Decomposition of W into two disjoint copies of H and one edge (1)",
        config=_cfg([("d", "d"), ("a", "a"), ("d", "a"), ("d", "u"), ("v", "b")], "u", "a"),
        members=(
            ("H", (0, 1, 3, 12, 4, 9)),
            ("H", (8, 5, 13, 2, 6, 11)),
            ("K2", (10, 7)),
        ),
    ),
    # two designations on H_i; cover = two H-copies + one edge (14)
    Fixture(
        key="Decomposition of W into two disjoint copies of H and one edge (2)",
        config=_cfg([("c", "c"), ("v", "c"), ("u", "u"), ("u", "d")], "va"),
        members=(
            ("H", (6, 0, 8, 9, 3, 11)),
            ("H", (10, 1, 7, 4, 5, 12)),
            ("K2", (13, 2)),
        ),
    ),
    # full designation on H_i plus two on H_j; cover = two H + edge (14 of 17)
    Fixture(
        key="Decomposition of W into two disjoint copies of H and one edge (3)",
        config=_cfg([("b", "d"), ("a", "v"), ("b", "u")], "vab", "uv"),
        members=(
            ("H", (2, 7, 0, 13, 10, 16)),
            ("H", (3, 6, 14, 11, 9, 15)),
            ("K2", (12, 1)),
        ),
    ),
)

#: Negative control: first fixture with the cross edge its Hhat member uses
#: between the two d-labelled vertices removed from the mask.
CORRUPTED_FIXTURE = Fixture(
    key="corrupted control: Hhat-and-three-edges fixture minus one depicted edge",
    config=PairConfig(
        FIXTURES[0].config.bip & ~(1 << bip_bit("d", "d")),
        FIXTURES[0].config.l_i,
        FIXTURES[0].config.l_j,
    ),
    members=FIXTURES[0].members,
    expect_valid=False,
)


def verify_figure_fixtures(include_control: bool = True) -> dict:
    """Validate every fixture's depicted tiling and its extendability.

    Returns a report document; ``passed`` is True when every fixture met its
    expectation (including the corrupted control failing validation).
    """
    results = []
    all_ok = True
    for fx in FIXTURES + ((CORRUPTED_FIXTURE,) if include_control else ()):
        entry: dict = {"key": fx.key, "expect_valid": fx.expect_valid}
        try:
            tiling = fx.build_tiling()
            entry["members_valid"] = True
            entry["coverage"] = tiling.coverage
        except TilingError as exc:
            entry["members_valid"] = False
            entry["error"] = str(exc)
        if entry["members_valid"]:
            entry["extendable"] = is_extendable(fx.config)
            ok = fx.expect_valid and entry["coverage"] >= 13 and entry["extendable"]
        else:
            ok = not fx.expect_valid
        entry["ok"] = ok
        all_ok = all_ok and ok
        results.append(entry)
    return {"schema_version": 1, "fixtures": results, "passed": all_ok}
