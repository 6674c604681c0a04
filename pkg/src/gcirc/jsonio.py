"""JSON wire formats: matrices, specs, reports, diagonal pairs, and
search jobs. Elements travel as hex strings; every payload embeds its
field block {"m": ..., "poly": ...} so files are self-describing.
"""

from __future__ import annotations

from .circulant import CyclicSpec, GCirculantSpec
from .errors import ConfigError, ParseError
from .field import GF2m
from .matrix import Matrix, Permutation
from .properties import DiagonalPair, PropertyReport
from .search import RowSpace, RowSpaceKind, SearchJob, SearchResult, Target


def matrix_to_json(a: Matrix) -> dict:
    return {
        "k": a.rows,
        "entries": [[a.ctx.format_hex(e) for e in row] for row in a.entries],
        "field": a.ctx.to_json(),
    }


def matrix_from_json(obj: dict, ctx: GF2m | None = None) -> Matrix:
    ctx = ctx or GF2m.from_json(obj.get("field", {}))
    try:
        entries = [[ctx.parse(e) for e in row] for row in obj["entries"]]
    except KeyError as exc:
        raise ParseError(f"matrix JSON missing {exc}") from None
    return Matrix(ctx, entries)


def spec_to_json(spec: GCirculantSpec | CyclicSpec) -> dict:
    out = {
        "k": spec.k,
        "row": [spec.ctx.format_hex(c) for c in spec.row],
        "field": spec.ctx.to_json(),
    }
    if isinstance(spec, CyclicSpec):
        out["rho"] = list(spec.rho.images)
    else:
        out["g"] = spec.g
    return out


def spec_from_json(obj: dict, ctx: GF2m | None = None) -> GCirculantSpec | CyclicSpec:
    ctx = ctx or GF2m.from_json(obj.get("field", {}))
    try:
        k = int(obj["k"])
        row = tuple(ctx.parse(c) for c in obj["row"])
    except KeyError as exc:
        raise ParseError(f"spec JSON missing {exc}") from None
    if "rho" in obj:
        return CyclicSpec(ctx, k, Permutation(obj["rho"]), row)
    if "g" not in obj:
        raise ParseError("spec JSON needs either 'g' or 'rho'")
    return GCirculantSpec(ctx, k, int(obj["g"]), row)


def pair_to_json(ctx: GF2m, pair: DiagonalPair) -> dict:
    return {
        "d1": [ctx.format_hex(x) for x in pair.d1],
        "d2": [ctx.format_hex(x) for x in pair.d2],
        "k1": ctx.format_hex(pair.scalar1) if pair.scalar1 is not None else None,
        "k2": ctx.format_hex(pair.scalar2) if pair.scalar2 is not None else None,
    }


def report_to_json(ctx: GF2m, report: PropertyReport) -> dict:
    witness = None
    if report.mds_witness is not None:
        rows, cols = report.mds_witness
        witness = {"rows": list(rows), "cols": list(cols)}
    return {
        "mds": report.mds,
        "mds_witness": witness,
        "involutory": report.involutory,
        "orthogonal": report.orthogonal,
        "semi_involutory": (
            pair_to_json(ctx, report.semi_involutory) if report.semi_involutory else None
        ),
        "semi_orthogonal": (
            pair_to_json(ctx, report.semi_orthogonal) if report.semi_orthogonal else None
        ),
    }


def result_to_json(res: SearchResult) -> dict:
    return {
        "g": res.spec.g,
        "ordinal": res.ordinal,
        "spec": spec_to_json(res.spec),
        "report": report_to_json(res.spec.ctx, res.report),
    }


def job_to_json(job: SearchJob) -> dict:
    rs: dict = {"kind": job.row_space.kind.value}
    if job.row_space.kind is RowSpaceKind.RANDOM:
        rs["count"] = job.row_space.count
        rs["seed"] = job.row_space.seed
    return {
        "field": job.ctx.to_json(),
        "k": job.k,
        "target": job.target.value,
        "row_space": rs,
        "g_set": list(job.g_set),
        "resume_token": job.resume_token,
        "stop_token": job.stop_token,
        "pruning": job.pruning,
        "prune_power_of_two": job.prune_power_of_two,
        "debug_recheck": job.debug_recheck,
    }


def job_from_json(obj: dict) -> SearchJob:
    if not isinstance(obj, dict):
        raise ConfigError("job file must contain a JSON object")
    try:
        ctx = GF2m.from_json(obj["field"])
        k = int(obj["k"])
        target = Target(obj["target"])
        rs_obj = obj["row_space"]
        kind = RowSpaceKind(rs_obj["kind"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ConfigError(f"malformed job: {exc}") from None
    row_space = RowSpace(
        kind,
        count=rs_obj.get("count"),
        seed=rs_obj.get("seed"),
    )
    g_set = obj.get("g_set")
    return SearchJob(
        ctx=ctx,
        k=k,
        target=target,
        row_space=row_space,
        g_set=tuple(g_set) if g_set is not None else None,
        resume_token=obj.get("resume_token"),
        stop_token=obj.get("stop_token"),
        pruning=bool(obj.get("pruning", True)),
        prune_power_of_two=bool(obj.get("prune_power_of_two", False)),
        debug_recheck=float(obj.get("debug_recheck", 0.0)),
    )
