"""Command-line interface: verify, counts, pairings, aut, export.

``verify`` runs the full verification ladder and exits 0 only if every
check passes; reports are deterministic except for the ``millis`` timing
fields, which comparison tooling should strip (see ``strip_timing``).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass

from . import __version__
from .algebra import to_gf2
from .geometry import (
    exterior_points,
    hyperoval_partitions,
    nonzero_vectors,
    self_polar_triangles,
    strata_for,
    ti_lines,
    ti_planes,
    unital_points,
)
from .groups import (
    PermutationGroup,
    automorphism_generators,
    induced_actions,
    nonequivalence_certificate,
    preserves_incidence,
)
from .hexagon import (
    IncidenceStructure,
    build,
    concurrency_graph,
    dual,
    incidence_graph,
    point_graph,
    verify_classification_hypotheses,
    verify_concurrency_witnesses,
    verify_connected,
    verify_generalized_hexagon,
    verify_partial_linear_space,
    verify_plane_property,
)

EXPECTED_GROUP_ORDER = 12096
EXPECTED_SUBDEGREES = (1, 6, 24, 32)


@dataclass(frozen=True)
class CheckRecord:
    """One report entry: the claim checked, outcome, payload and timing."""

    name: str
    anchor: str
    passed: bool
    witness: object = None
    millis: float = 0.0

    def to_dict(self, timing: bool = True) -> dict:
        out = {"name": self.name, "anchor": self.anchor, "pass": self.passed}
        if self.witness is not None:
            out["witness"] = _jsonable(self.witness)
        if timing:
            out["millis"] = self.millis
        return out


@dataclass(frozen=True)
class VerificationReport:
    version: str
    pairing: int
    checks: tuple

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def verdict(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def to_dict(self, timing: bool = True) -> dict:
        return {
            "version": self.version,
            "pairing": self.pairing,
            "checks": [c.to_dict(timing=timing) for c in self.checks],
            "verdict": self.verdict,
        }

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing=timing), indent=2) + "\n"

    def to_text(self) -> str:
        lines = []
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            lines.append(f"[{status}] {c.name}: {c.anchor}")
            if c.witness is not None:
                lines.append(f"       {_compact(c.witness)}")
        headline = next(
            (c for c in self.checks if c.name == "generalized-hexagon"), None
        )
        if headline is not None:
            lines.append(f"GH(2,2): {'PASS' if headline.passed else 'FAIL'}")
        lines.append(f"verdict: {self.verdict}")
        return "\n".join(lines) + "\n"


def strip_timing(report_dict: dict) -> dict:
    """Drop the millis sidecar fields so reports can be compared bytewise."""
    out = dict(report_dict)
    out["checks"] = [
        {k: v for k, v in check.items() if k != "millis"}
        for check in report_dict["checks"]
    ]
    return out


def _jsonable(value):
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (frozenset, set)):
        return sorted(_jsonable(v) for v in value)
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def _compact(value) -> str:
    return json.dumps(_jsonable(value))


def run_verify(pairing: int = 0, with_aut: bool = False) -> VerificationReport:
    """Run the verification ladder for one hyperoval pairing."""
    if pairing not in (0, 1, 2):
        raise ValueError(f"pairing must be 0, 1 or 2, got {pairing}")
    records = []

    def record(name, anchor, fn):
        start = time.perf_counter()
        passed, witness = fn()
        elapsed = round((time.perf_counter() - start) * 1000.0, 3)
        records.append(
            CheckRecord(name=name, anchor=anchor, passed=passed,
                        witness=witness, millis=elapsed)
        )

    def check_symplectic_counts():
        lines = ti_lines()
        planes = ti_planes()
        plane_sizes = {len(p.vectors) for p in planes}
        per_line = {
            sum(1 for M in planes if L.vectors <= M.vectors) for L in lines
        }
        meets = {len(L.vectors & M.vectors) for L in lines for M in planes}
        counts = {
            "vectors": len(nonzero_vectors()),
            "ti_lines": len(lines),
            "ti_planes": len(planes),
            "plane_sizes": sorted(plane_sizes),
            "planes_per_line": sorted(per_line),
            "line_plane_meets": sorted(meets),
        }
        ok = (
            counts["vectors"] == 63
            and counts["ti_lines"] == 315
            and counts["ti_planes"] == 135
            and plane_sizes == {7}
            and per_line == {3}
            and meets <= {0, 1, 3}
        )
        return ok, counts

    def check_strata_counts():
        partition = hyperoval_partitions()[pairing]
        strata = strata_for(partition)
        counts = {
            "isotropic_vectors": len(strata.isotropic),
            "norm_one_vectors": len(strata.norm_one),
            "unital_points": len(unital_points()),
            "exterior_points": len(exterior_points()),
            "oval_points": len(partition.oval),
            "twin_points": len(partition.twin),
            "oval_vectors": len(strata.oval_vectors),
            "twin_vectors": len(strata.twin_vectors),
        }
        expected = {
            "isotropic_vectors": 27,
            "norm_one_vectors": 36,
            "unital_points": 9,
            "exterior_points": 12,
            "oval_points": 6,
            "twin_points": 6,
            "oval_vectors": 18,
            "twin_vectors": 18,
        }
        return counts == expected, counts

    partition = hyperoval_partitions()[pairing]
    strata = strata_for(partition)
    structure = build(partition)

    def from_report(make_report):
        def fn():
            report = make_report()
            if report.passed:
                payload = {
                    c.name: c.detail for c in report.checks if c.detail is not None
                } or None
            else:
                payload = {
                    c.name: _jsonable(c.witness) for c in report.failures()
                }
            return report.passed, payload

        return fn

    record(
        "symplectic-counts",
        "63 isotropic vectors, 315 totally isotropic lines and 135 totally "
        "isotropic planes over GF(2); planes hold 7 vectors, every t.i. line "
        "lies in exactly 3 t.i. planes, and a line meets a plane in 0, 1 or "
        "3 vectors",
        check_symplectic_counts,
    )
    record(
        "strata-counts",
        "27 isotropic and 36 norm-one vectors; 9 unital and 12 exterior "
        "points; two hyperoval halves of 6 points carrying 18 vectors each",
        check_strata_counts,
    )
    record(
        "partial-linear-space",
        "63 points and 63 lines (9 scalar + 27 oval + 27 twin), 3 points per "
        "line, 3 lines per point, two points on at most one common line",
        from_report(lambda: verify_partial_linear_space(structure)),
    )
    record(
        "point-plane-property",
        "for every point, the union of its three lines is a 7-vector totally "
        "isotropic plane",
        from_report(lambda: verify_plane_property(structure)),
    )
    record(
        "concurrency-witnesses",
        "every ordered pair of isotropic vectors with hermitian value 1 whose "
        "span meets the hyperoval twice admits an orthogonal norm-one witness "
        "placing their oval lines on a common point",
        from_report(lambda: verify_concurrency_witnesses(strata, partition)),
    )

    def check_concurrency_graph():
        graph = concurrency_graph(structure)
        degrees = set(graph.degrees())
        connected = verify_connected(graph)
        payload = {"connected": connected, "degrees": sorted(degrees)}
        return connected and degrees == {6}, payload

    record(
        "concurrency-connected",
        "the line-concurrency graph on 63 lines is connected and 6-regular",
        check_concurrency_graph,
    )
    record(
        "classification-hypotheses",
        "every point lies on three lines spanning a plane and the concurrency "
        "graph is connected; hypotheses only -- the hexagon conclusion is "
        "verified independently by the generalized-hexagon check",
        from_report(lambda: verify_classification_hypotheses(structure)),
    )

    def gh_payload(make_report):
        def fn():
            report = make_report()
            details = {
                c.name: c.detail for c in report.checks if c.detail is not None
            }
            if report.passed:
                return True, details
            details["failures"] = {
                c.name: _jsonable(c.witness) for c in report.failures()
            }
            return False, details

        return fn

    record(
        "generalized-hexagon",
        "the incidence graph has 126 vertices, 189 edges, diameter 6 and "
        "girth 12; the point distance distribution is (1, 6, 24, 32) from "
        "every base point",
        gh_payload(lambda: verify_generalized_hexagon(structure)),
    )
    record(
        "dual-generalized-hexagon",
        "the dual structure (points and lines interchanged) passes the same "
        "generalized-hexagon check",
        gh_payload(lambda: verify_generalized_hexagon(dual(structure))),
    )

    if with_aut:
        state = {}

        def check_order():
            graph = incidence_graph(structure)
            generators = automorphism_generators(graph, [0] * 63 + [1] * 63)
            group = PermutationGroup(126, generators)
            state["generators"] = generators
            state["group"] = group
            return group.order == EXPECTED_GROUP_ORDER, {"order": group.order}

        def check_generators():
            bad = 0
            for g in state["generators"]:
                point_part = g[:63]
                line_part = tuple(x - 63 for x in g[63:])
                if not preserves_incidence(structure, point_part, line_part):
                    bad += 1
            return bad == 0, {"generators": len(state["generators"]), "bad": bad}

        def check_actions():
            points_action, lines_action = induced_actions(state["group"], structure)
            state["actions"] = (points_action, lines_action)
            payload = {
                "point_action_order": points_action.order,
                "line_action_order": lines_action.order,
                "point_orbits": len(points_action.orbits()),
                "line_orbits": len(lines_action.orbits()),
                "point_subdegrees": list(points_action.stabilizer_orbit_sizes(0)),
            }
            ok = (
                payload["point_action_order"] == EXPECTED_GROUP_ORDER
                and payload["line_action_order"] == EXPECTED_GROUP_ORDER
                and payload["point_orbits"] == 1
                and payload["line_orbits"] == 1
                and tuple(payload["point_subdegrees"]) == EXPECTED_SUBDEGREES
            )
            return ok, payload

        def check_witness():
            witness = nonequivalence_certificate(*state["actions"])
            if witness is None:
                return False, "no character certificate"
            payload = {
                "fixed_points": witness.fixed_points,
                "fixed_lines": witness.fixed_lines,
            }
            return True, payload

        record(
            "automorphism-group-order",
            "the automorphism group of the structure has order exactly 12096",
            check_order,
        )
        record(
            "generators-preserve-incidence",
            "every generator maps lines to lines and preserves all 189 "
            "incidences",
            check_generators,
        )
        record(
            "induced-actions",
            "the induced degree-63 actions on points and on lines are both "
            "transitive and faithful of order 12096, with point subdegrees "
            "1, 6, 24, 32",
            check_actions,
        )
        record(
            "character-witness",
            "some automorphism fixes different numbers of points and lines, "
            "separating the two degree-63 permutation characters",
            check_witness,
        )

    return VerificationReport(
        version=__version__, pairing=pairing, checks=tuple(records)
    )


# ---------------------------------------------------------------------------
# other subcommands


def collect_counts(pairing: int) -> dict:
    partition = hyperoval_partitions()[pairing]
    strata = strata_for(partition)
    structure = build(partition)
    kinds = {}
    for tag in structure.tags:
        kinds[tag.kind] = kinds.get(tag.kind, 0) + 1
    lines = ti_lines()
    planes = ti_planes()
    return {
        "pairing": pairing,
        "nonzero_vectors": len(nonzero_vectors()),
        "isotropic_vectors": len(strata.isotropic),
        "norm_one_vectors": len(strata.norm_one),
        "unital_points": len(unital_points()),
        "exterior_points": len(exterior_points()),
        "self_polar_triangles": len(self_polar_triangles()),
        "oval_points": len(partition.oval),
        "twin_points": len(partition.twin),
        "oval_vectors": len(strata.oval_vectors),
        "twin_vectors": len(strata.twin_vectors),
        "ti_lines": len(lines),
        "ti_planes": len(planes),
        "hexagon_points": len(structure.points),
        "hexagon_lines": len(structure.lines),
        "line_kinds": {k: kinds[k] for k in sorted(kinds)},
    }


def collect_pairings() -> list:
    out = []
    for partition in hyperoval_partitions():
        structure = build(partition)
        report = verify_generalized_hexagon(structure)
        out.append(
            {
                "pairing": partition.index,
                "verdict": "PASS" if report.passed else "FAIL",
                "checks": {c.name: c.passed for c in report.checks},
            }
        )
    return out


def collect_aut(pairing: int) -> dict:
    structure = build(hyperoval_partitions()[pairing])
    graph = incidence_graph(structure)
    generators = automorphism_generators(graph, [0] * 63 + [1] * 63)
    group = PermutationGroup(126, generators)
    points_action, lines_action = induced_actions(group, structure)
    witness = nonequivalence_certificate(points_action, lines_action)
    return {
        "pairing": pairing,
        "generators": len(generators),
        "order": group.order,
        "point_action_order": points_action.order,
        "line_action_order": lines_action.order,
        "point_transitive": len(points_action.orbits()) == 1,
        "line_transitive": len(lines_action.orbits()) == 1,
        "point_subdegrees": list(points_action.stabilizer_orbit_sizes(0)),
        "character_witness": (
            None
            if witness is None
            else {
                "fixed_points": witness.fixed_points,
                "fixed_lines": witness.fixed_lines,
            }
        ),
    }


# ---------------------------------------------------------------------------
# export


def _bit_string(v) -> str:
    return "".join(map(str, to_gf2(v)))


def export_hexagon(structure: IncidenceStructure, fmt: str) -> str:
    index = structure.point_index()
    lines = []
    for i, tag in enumerate(structure.tags):
        members = sorted(index[p] for p in tag.points)
        lines.append(
            {
                "points": members,
                "kind": tag.kind,
                "seed": index[tag.seed],
            }
        )
    if fmt == "json":
        payload = {
            "points": [_bit_string(p) for p in structure.points],
            "lines": lines,
        }
        return json.dumps(payload, indent=2) + "\n"
    out = [f"p{i} {_bit_string(p)}" for i, p in enumerate(structure.points)]
    for i, line in enumerate(lines):
        members = " ".join(f"p{j}" for j in line["points"])
        out.append(f"l{i} {line['kind']} {members} seed=p{line['seed']}")
    return "\n".join(out) + "\n"


def _graph_names(what: str, structure: IncidenceStructure):
    if what == "incidence-graph":
        names = [f"p{i}" for i in range(len(structure.points))]
        names += [f"l{i}" for i in range(len(structure.lines))]
        return incidence_graph(structure), names
    if what == "concurrency-graph":
        return concurrency_graph(structure), [
            f"l{i}" for i in range(len(structure.lines))
        ]
    if what == "point-graph":
        return point_graph(structure), [
            f"p{i}" for i in range(len(structure.points))
        ]
    raise ValueError(f"unknown graph: {what}")


def export_graph(structure: IncidenceStructure, what: str, fmt: str) -> str:
    graph, names = _graph_names(what, structure)
    edges = sorted(
        (names[u], names[v])
        for u in range(graph.vertex_count)
        for v in graph.adjacency[u]
        if u < v
    )
    if fmt == "json":
        payload = {"vertices": names, "edges": [[u, v] for u, v in edges]}
        return json.dumps(payload, indent=2) + "\n"
    if fmt == "dot":
        out = [f"graph {what.replace('-', '_')} {{"]
        for name in names:
            shape = "box" if name.startswith("l") else "circle"
            out.append(f'  {name} [shape={shape}];')
        for u, v in edges:
            out.append(f"  {u} -- {v};")
        out.append("}")
        return "\n".join(out) + "\n"
    return "\n".join(f"{u} {v}" for u, v in edges) + "\n"


# ---------------------------------------------------------------------------
# entry point


def _emit(text: str, out_path) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="splithex",
        description=(
            "Construct the split Cayley hexagon of order 2 from the unitary "
            "plane over GF(4) and verify it"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, formats=("text", "json")):
        p.add_argument("--pairing", type=int, choices=(0, 1, 2), default=0,
                       help="hyperoval pairing index (default 0)")
        p.add_argument("--format", choices=formats, default=formats[0])
        p.add_argument("--out", default=None, help="write output to a file")

    p_verify = sub.add_parser("verify", help="run the verification ladder")
    add_common(p_verify)
    p_verify.add_argument("--with-aut", action="store_true",
                          help="also compute the automorphism group checks")

    p_counts = sub.add_parser("counts", help="print the fundamental counts")
    add_common(p_counts)

    p_pairings = sub.add_parser(
        "pairings", help="hexagon verdict for each of the 3 hyperoval pairings"
    )
    p_pairings.add_argument("--format", choices=("text", "json"), default="text")
    p_pairings.add_argument("--out", default=None)

    p_aut = sub.add_parser("aut", help="automorphism group and the two actions")
    add_common(p_aut)

    p_export = sub.add_parser("export", help="export the structure or a graph")
    p_export.add_argument(
        "--what",
        choices=("hexagon", "incidence-graph", "concurrency-graph", "point-graph"),
        default="hexagon",
    )
    add_common(p_export, formats=("json", "dot", "text"))
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)

    if args.command == "verify":
        report = run_verify(pairing=args.pairing, with_aut=args.with_aut)
        text = report.to_json() if args.format == "json" else report.to_text()
        _emit(text, args.out)
        return 0 if report.passed else 1

    if args.command == "counts":
        counts = collect_counts(args.pairing)
        if args.format == "json":
            text = json.dumps(counts, indent=2) + "\n"
        else:
            text = "".join(
                f"{key}: {_compact(value)}\n" if isinstance(value, dict)
                else f"{key}: {value}\n"
                for key, value in counts.items()
            )
        _emit(text, args.out)
        return 0

    if args.command == "pairings":
        verdicts = collect_pairings()
        if args.format == "json":
            text = json.dumps(verdicts, indent=2) + "\n"
        else:
            text = "".join(
                f"pairing {v['pairing']}: GH(2,2) {v['verdict']}\n" for v in verdicts
            )
        _emit(text, args.out)
        return 0 if all(v["verdict"] == "PASS" for v in verdicts) else 1

    if args.command == "aut":
        info = collect_aut(args.pairing)
        if args.format == "json":
            text = json.dumps(info, indent=2) + "\n"
        else:
            text = "".join(f"{key}: {_compact(value) if isinstance(value, (dict, list)) else value}\n"
                           for key, value in info.items())
        _emit(text, args.out)
        return 0

    if args.command == "export":
        structure = build(hyperoval_partitions()[args.pairing])
        if args.what == "hexagon":
            if args.format == "dot":
                parser.error(
                    "hexagon export supports json or text; "
                    "use --what incidence-graph for dot"
                )
            text = export_hexagon(structure, args.format)
        else:
            text = export_graph(structure, args.what, args.format)
        _emit(text, args.out)
        return 0

    parser.error(f"unknown command {args.command}")
    return 2


if __name__ == "__main__":
    sys.exit(main())
