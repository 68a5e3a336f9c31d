"""Command-line front end.

Every invocation runs one command and prints a JSON report (or aligned text
with ``--format text``). Integers in reports are decimal strings. Exit codes:
0 success, 2 usage or configuration error, 3 unsupported, 4 domain error.

A run may be described by flags or by a JSON document passed with
``--config PATH``; both are normalized into a :class:`RunConfig`.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Any

from . import __version__
from .classify import classify
from .decimal_text import from_decimal, to_decimal
from .errors import ConfigError, DomainError, UnsupportedError
from .fujiki import Space, fujiki_K, fujiki_M, psi_degree, strata_dimensions
from .lattice import Lattice, determinant, discriminant_group, signature
from .mukai import MukaiVector, SurfaceKind, SurfaceModel, vperp_abstract, vperp_explicit
from .walls import (
    AmpleSegment,
    GenericityStatus,
    enumerate_walls,
    is_v_generic,
    v_norm_bound,
)

COMMANDS = ("classify", "fujiki", "walls", "generic", "vperp", "strata", "psi-degree")

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_UNSUPPORTED = 3
EXIT_DOMAIN = 4


def _stringify(obj):
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return to_decimal(obj)
    if isinstance(obj, dict):
        return {str(k): _stringify(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_stringify(x) for x in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


@dataclass
class Report:
    """Deterministic command report; integers are stored as strings."""

    command: str
    inputs: dict
    outputs: dict
    warnings: list = field(default_factory=list)
    version: str = __version__

    def __post_init__(self):
        self.inputs = _stringify(self.inputs)
        self.outputs = _stringify(self.outputs)
        self.warnings = [str(w) for w in self.warnings]

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "inputs": self.inputs,
            "outputs": self.outputs,
            "warnings": self.warnings,
            "version": self.version,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "Report":
        d = json.loads(text)
        return cls(d["command"], d["inputs"], d["outputs"], d["warnings"], d["version"])

    def to_text(self) -> str:
        flat: list[tuple[str, str]] = []

        def walk(prefix, obj):
            if isinstance(obj, dict):
                for k, v in obj.items():
                    walk(f"{prefix}.{k}" if prefix else k, v)
            elif isinstance(obj, list) and any(isinstance(x, (dict, list)) for x in obj):
                for i, v in enumerate(obj):
                    walk(f"{prefix}[{i}]", v)
            elif isinstance(obj, list):
                flat.append((prefix, " ".join(obj) if obj else "-"))
            else:
                flat.append((prefix, "-" if obj is None else str(obj)))

        walk("", {"command": self.command, "inputs": self.inputs,
                  "outputs": self.outputs, "warnings": self.warnings,
                  "version": self.version})
        width = max(len(k) for k, _ in flat)
        return "".join(f"{k.ljust(width)}  {v}\n" for k, v in flat)


# ---------------------------------------------------------------------------
# configuration


@dataclass
class RunConfig:
    command: str
    kind: SurfaceKind | None = None
    space: Space | None = None
    m: int | None = None
    k: int | None = None
    surface: SurfaceModel | None = None
    mukai: MukaiVector | None = None
    segment: AmpleSegment | None = None
    h: tuple[int, ...] | None = None
    vector: tuple[int, ...] | None = None

    def to_dict(self) -> dict:
        out: dict[str, Any] = {"command": self.command}
        if self.kind is not None:
            out["kind"] = self.kind.value
        if self.space is not None:
            out["space"] = self.space.value
        if self.m is not None:
            out["m"] = self.m
        if self.k is not None:
            out["k"] = self.k
        if self.surface is not None:
            out["surface"] = self.surface.to_json()
        if self.mukai is not None:
            out["mukai"] = self.mukai.to_json()
        if self.segment is not None:
            out["segment"] = [list(self.segment.h1), list(self.segment.h2)]
        if self.h is not None:
            out["h"] = list(self.h)
        if self.vector is not None:
            out["vector"] = list(self.vector)
        return _stringify(out)


def _int(value, path: str) -> int:
    if isinstance(value, bool):
        raise ConfigError(path, "expected an integer")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        try:
            return from_decimal(value)
        except ValueError:
            pass
    raise ConfigError(path, f"expected an integer, got {value!r}")


def _int_list(value, path: str) -> tuple[int, ...]:
    if not isinstance(value, list):
        raise ConfigError(path, "expected a list of integers")
    return tuple(_int(x, f"{path}[{i}]") for i, x in enumerate(value))


def _gram(value, path: str) -> Lattice:
    if not isinstance(value, list) or not all(isinstance(r, list) for r in value):
        raise ConfigError(path, "expected a list of rows")
    rows = [_int_list(r, f"{path}[{i}]") for i, r in enumerate(value)]
    n = len(rows)
    for i, r in enumerate(rows):
        if len(r) != n:
            raise ConfigError(path, f"row {i} has length {len(r)}, expected {n}")
    for i in range(n):
        for j in range(i + 1, n):
            if rows[i][j] != rows[j][i]:
                raise ConfigError(path, f"not symmetric at ({i}, {j})")
    return Lattice(rows)


def _enum(enum_cls, value, path):
    try:
        return enum_cls.coerce(value)
    except DomainError:
        raise ConfigError(path, f"invalid value {value!r}") from None


def _surface(value, path: str, default_kind=None) -> SurfaceModel:
    if not isinstance(value, dict):
        raise ConfigError(path, "expected an object")
    kind = value.get("kind", default_kind.value if default_kind else None)
    if kind is None:
        raise ConfigError(f"{path}.kind", "missing")
    kind = _enum(SurfaceKind, kind, f"{path}.kind")
    if "ns" not in value:
        raise ConfigError(f"{path}.ns", "missing")
    ns = value["ns"]
    if isinstance(ns, dict):
        ns = ns.get("gram")
    lattice = _gram(ns, f"{path}.ns.gram")
    if "ample" not in value:
        raise ConfigError(f"{path}.ample", "missing")
    ample = _int_list(value["ample"], f"{path}.ample")
    if len(ample) != lattice.rank:
        raise ConfigError(f"{path}.ample",
                          f"has {len(ample)} coordinates but NS has rank {lattice.rank}")
    embedding = value.get("embedding")
    if embedding is not None:
        embedding = [_int_list(r, f"{path}.embedding[{i}]") for i, r in enumerate(embedding)]
    try:
        return SurfaceModel(kind, lattice, ample, embedding=embedding)
    except DomainError as exc:
        raise ConfigError(path, str(exc)) from None


def _mukai(value, path: str, rho: int | None) -> MukaiVector:
    if not isinstance(value, dict):
        raise ConfigError(path, "expected an object with keys r, c, s")
    for key in ("r", "c", "s"):
        if key not in value:
            raise ConfigError(f"{path}.{key}", "missing")
    c = _int_list(value["c"], f"{path}.c")
    if rho is not None and len(c) != rho:
        raise ConfigError(f"{path}.c", f"has {len(c)} coordinates but NS has rank {rho}")
    return MukaiVector(_int(value["r"], f"{path}.r"), c, _int(value["s"], f"{path}.s"))


def config_from_dict(data: dict) -> RunConfig:
    """Validate a configuration object; errors carry a dotted path."""
    if not isinstance(data, dict):
        raise ConfigError("$", "expected a JSON object")
    command = data.get("command")
    if command not in COMMANDS:
        raise ConfigError("command", f"expected one of {', '.join(COMMANDS)}")
    cfg = RunConfig(command)
    if data.get("kind") is not None:
        cfg.kind = _enum(SurfaceKind, data["kind"], "kind")
    if data.get("space") is not None:
        cfg.space = _enum(Space, data["space"], "space")
    for key in ("m", "k"):
        if data.get(key) is not None:
            setattr(cfg, key, _int(data[key], key))
    if data.get("surface") is not None:
        cfg.surface = _surface(data["surface"], "surface", cfg.kind)
        if cfg.kind is None:
            cfg.kind = cfg.surface.kind
        elif cfg.kind is not cfg.surface.kind:
            raise ConfigError("surface.kind", "disagrees with kind")
    rho = cfg.surface.rho if cfg.surface else None
    if data.get("mukai") is not None:
        cfg.mukai = _mukai(data["mukai"], "mukai", rho)
    if data.get("segment") is not None:
        seg = data["segment"]
        if not isinstance(seg, list) or len(seg) != 2:
            raise ConfigError("segment", "expected two NS vectors")
        h1, h2 = (_int_list(x, f"segment[{i}]") for i, x in enumerate(seg))
        if rho is not None and (len(h1) != rho or len(h2) != rho):
            raise ConfigError("segment", f"endpoints must have {rho} coordinates")
        cfg.segment = AmpleSegment(h1, h2)
    if data.get("h") is not None:
        cfg.h = _int_list(data["h"], "h")
        if rho is not None and len(cfg.h) != rho:
            raise ConfigError("h", f"has {len(cfg.h)} coordinates but NS has rank {rho}")
    if data.get("vector") is not None:
        cfg.vector = _int_list(data["vector"], "vector")
    _require(cfg)
    return cfg


_REQUIRED = {
    "classify": ("kind", "space", "m", "k"),
    "fujiki": ("kind", "space", "m", "k"),
    "walls": ("surface", "mukai", "segment"),
    "generic": ("surface", "mukai", "h"),
    "vperp": (),
    "strata": ("m", "k"),
    "psi-degree": ("kind", "m", "k"),
}


def _require(cfg: RunConfig) -> None:
    for key in _REQUIRED[cfg.command]:
        if getattr(cfg, key) is None:
            raise ConfigError(key, f"required by {cfg.command}")
    if cfg.command == "vperp" and cfg.vector is None and cfg.mukai is None:
        if cfg.kind is None or cfg.k is None:
            raise ConfigError("k", "vperp needs kind and k, a vector, or surface and mukai")
    if cfg.mukai is not None and cfg.surface is None and cfg.command != "vperp":
        raise ConfigError("surface", "required with mukai")
    if cfg.command == "vperp" and cfg.mukai is not None and cfg.surface is None:
        raise ConfigError("surface", "required with mukai")


def parse_config(text: str) -> RunConfig:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError("$", f"invalid JSON: {exc.msg} at line {exc.lineno}") from None
    return config_from_dict(data)


def serialize_config(cfg: RunConfig) -> str:
    return json.dumps(cfg.to_dict(), indent=2) + "\n"


# ---------------------------------------------------------------------------
# execution


def _lattice_summary(L: Lattice) -> dict:
    return {
        "rank": L.rank,
        "det": determinant(L.gram),
        "signature": list(signature(L)),
        "discriminant": discriminant_group(L).as_list(),
        "gram": [list(r) for r in L.gram],
    }


def execute(cfg: RunConfig) -> Report:
    """Run a validated configuration; raises DomainError / UnsupportedError."""
    inputs = cfg.to_dict()
    inputs.pop("command")
    warnings: list[str] = []
    cmd = cfg.command
    if cmd == "classify":
        report = classify(cfg.kind, cfg.space, cfg.m, cfg.k)
        outputs = report.to_json(include_gram=False)
        warnings.extend(report.notes)
    elif cmd == "fujiki":
        if cfg.kind is SurfaceKind.K3 and cfg.space is Space.M:
            value = fujiki_M(cfg.m, cfg.k)
        elif cfg.kind is SurfaceKind.ABELIAN and cfg.space is Space.K:
            value = fujiki_K(cfg.m, cfg.k)
        else:
            raise DomainError("Fujiki constants are computed for M_v (K3) and K_v (Abelian)")
        outputs = {"fujiki": value.value}
        if value.note:
            warnings.append(value.note)
    elif cmd == "walls":
        walls = enumerate_walls(cfg.mukai, cfg.surface, cfg.segment)
        bound = v_norm_bound(cfg.mukai, cfg.surface)
        outputs = {"norm_bound": str(bound), "count": len(walls),
                   "walls": [w.to_json() for w in walls]}
    elif cmd == "generic":
        res = is_v_generic(cfg.h, cfg.mukai, cfg.surface)
        if res.status is GenericityStatus.UNSUPPORTED:
            raise UnsupportedError(res.reason)
        outputs = {"status": res.status.value,
                   "witness": None if res.witness is None else list(res.witness)}
        if cfg.mukai.r > 0:
            outputs["norm_bound"] = str(v_norm_bound(cfg.mukai, cfg.surface))
    elif cmd == "vperp":
        if cfg.vector is not None:
            L = vperp_explicit(cfg.vector, kind=cfg.kind)
            mode = "explicit"
        elif cfg.mukai is not None:
            L = vperp_explicit(cfg.mukai, cfg.surface)
            mode = "explicit"
        else:
            L = vperp_abstract(cfg.k, cfg.kind)
            mode = "abstract"
        outputs = {"mode": mode, **_lattice_summary(L)}
    elif cmd == "strata":
        table = strata_dimensions(cfg.m, cfg.k)
        outputs = table.to_json()
        if not table.bound_applies:
            warnings.append("(m, k) = (2, 1): codimension bound not asserted")
    elif cmd == "psi-degree":
        g = cfg.k * cfg.m * cfg.m + 1
        outputs = {"genus": g, "degree": psi_degree(cfg.m, cfg.k, cfg.kind)}
    else:  # pragma: no cover - guarded by config validation
        raise ConfigError("command", cmd)
    return Report(cmd, inputs, outputs, warnings)


# ---------------------------------------------------------------------------
# argument parsing


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _json_arg(text: str, path: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError:
        raise ConfigError(path, f"invalid JSON {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="mukailab", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)

    def common(p):
        p.add_argument("--config", metavar="PATH", help="JSON configuration file")
        p.add_argument("--format", choices=("json", "text"), default="json")

    p = sub.add_parser("classify", help="classify M_v / K_v for (m, k)")
    common(p)
    p.add_argument("--kind", choices=("k3", "abelian"))
    p.add_argument("--space", choices=("m", "k"))
    p.add_argument("--m", type=int)
    p.add_argument("--k", type=int)

    p = sub.add_parser("fujiki", help="Fujiki constant of M_v (K3) or K_v (Abelian)")
    common(p)
    p.add_argument("--kind", choices=("k3", "abelian"))
    p.add_argument("--space", choices=("m", "k"))
    p.add_argument("--m", type=int)
    p.add_argument("--k", type=int)

    for name, helptext in (("walls", "walls crossing an ample segment"),
                           ("generic", "v-genericity of a polarization")):
        p = sub.add_parser(name, help=helptext)
        common(p)
        p.add_argument("--kind", choices=("k3", "abelian"), default=None,
                       help="surface kind (default k3)")
        p.add_argument("--ns", help="NS Gram matrix as JSON")
        p.add_argument("--ample", help="ample class as JSON (defaults to the polarization)")
        p.add_argument("--mukai", help='Mukai vector as JSON {"r":..,"c":[..],"s":..}')
        if name == "walls":
            p.add_argument("--segment", help='two NS vectors "h1;h2", each JSON')
        else:
            p.add_argument("--h", help="polarization as JSON")

    p = sub.add_parser("vperp", help="orthogonal complement of v in the Mukai lattice")
    common(p)
    p.add_argument("--kind", choices=("k3", "abelian"))
    p.add_argument("--k", type=int)
    p.add_argument("--vector", help="full Mukai-lattice coordinates (r, H^2, s) as JSON")

    p = sub.add_parser("strata", help="strata of strictly semistable sheaves")
    common(p)
    p.add_argument("--m", type=int)
    p.add_argument("--k", type=int)

    p = sub.add_parser("psi-degree", help="degree of the tensor-power covering")
    common(p)
    p.add_argument("--kind", choices=("k3", "abelian"))
    p.add_argument("--m", type=int)
    p.add_argument("--k", type=int)
    return parser


def _config_from_args(args) -> RunConfig:
    if args.config:
        try:
            with open(args.config, encoding="utf-8") as fh:
                data = json.load(fh)
        except OSError as exc:
            raise ConfigError("--config", str(exc)) from None
        except json.JSONDecodeError as exc:
            raise ConfigError("--config", f"invalid JSON: {exc.msg}") from None
        if isinstance(data, dict):
            data.setdefault("command", args.command)
            if data["command"] != args.command:
                raise ConfigError("command", f"config names {data['command']!r}")
        return config_from_dict(data)

    data: dict[str, Any] = {"command": args.command}
    for key in ("kind", "space", "m", "k"):
        if getattr(args, key, None) is not None:
            data[key] = getattr(args, key)
    if args.command in ("walls", "generic"):
        if args.ns is None:
            raise ConfigError("ns", f"required by {args.command}")
        if args.mukai is None:
            raise ConfigError("mukai", f"required by {args.command}")
        surface = {"kind": args.kind or "k3", "ns": _json_arg(args.ns, "ns")}
        if args.command == "walls":
            if args.segment is None:
                raise ConfigError("segment", "required by walls")
            parts = args.segment.split(";")
            if len(parts) != 2:
                raise ConfigError("segment", 'expected "h1;h2"')
            data["segment"] = [_json_arg(x, "segment") for x in parts]
            default_ample = data["segment"][0]
        else:
            if args.h is None:
                raise ConfigError("h", "required by generic")
            data["h"] = _json_arg(args.h, "h")
            default_ample = data["h"]
        surface["ample"] = _json_arg(args.ample, "ample") if args.ample else default_ample
        data["surface"] = surface
        data["mukai"] = _json_arg(args.mukai, "mukai")
        data.pop("kind", None)
    if args.command == "vperp" and args.vector is not None:
        data["vector"] = _json_arg(args.vector, "vector")
    return config_from_dict(data)


def run(argv=None, stdout=None, stderr=None) -> int:
    """Entry point; returns the process exit code."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    if argv[:1] == ["--config"] and len(argv) >= 2:
        # command taken from the configuration document
        try:
            with open(argv[1], encoding="utf-8") as fh:
                command = json.load(fh).get("command")
        except (OSError, json.JSONDecodeError, AttributeError) as exc:
            print(f"mukailab: error: --config: {exc}", file=stderr)
            return EXIT_USAGE
        if command not in COMMANDS:
            print("mukailab: error: command: missing or unknown in config", file=stderr)
            return EXIT_USAGE
        argv = [command, *argv]
    old_err = sys.stderr
    sys.stderr = stderr
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    finally:
        sys.stderr = old_err
    if args.command is None:
        parser.print_usage(stderr)
        print("mukailab: error: a command is required", file=stderr)
        return EXIT_USAGE
    try:
        cfg = _config_from_args(args)
        report = execute(cfg)
    except ConfigError as exc:
        print(f"mukailab: error: {exc}", file=stderr)
        return EXIT_USAGE
    except UnsupportedError as exc:
        print(f"mukailab: unsupported: {exc}", file=stderr)
        return EXIT_UNSUPPORTED
    except DomainError as exc:
        print(f"mukailab: domain error: {exc}", file=stderr)
        return EXIT_DOMAIN
    stdout.write(report.to_text() if args.format == "text" else report.to_json())
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
