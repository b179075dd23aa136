"""Command line interface, the JSON atlas document and DOT emission.

Usage::

    stratatlas atlas --preset orthogonal --n 7 --form split
    stratatlas hn-check --preset quaternionic --place 3:3
    stratatlas eo --preset quaternionic --place 1:1 --place 1:1 --format dot
    stratatlas newton --datum mydatum.json --format json --out b.json

Every output is deterministic: nodes are listed by dimension and label,
JSON keys in a fixed order, and DOT lines in node order.

"""
from __future__ import annotations

import argparse
import contextlib
import json
import logging
import sys
from typing import Any
from typing import Callable
from typing import Dict
from typing import Hashable
from typing import Iterable
from typing import List
from typing import Mapping
from typing import Optional
from typing import Sequence
from typing import Tuple

from . import __version__
from . import exception
from .affine_weyl import AffineElement
from .eo_strata import EOPoset
from .eo_strata import EOStratum
from .hn_atlas import build_atlas
from .hn_atlas import is_hn_decomposable
from .hn_atlas import sigma_stable_levis
from .hn_atlas import StrataAtlas
from .kottwitz import Avatar
from .kottwitz import NewtonClass
from .kottwitz import NewtonPoset
from .presets import available_presets
from .presets import load_preset
from .region import default_region
from .root_datum import datum_from_dict
from .root_datum import datum_to_dict
from .root_datum import format_rational
from .root_datum import parse_rational
from .root_datum import Pi1Class
from .root_datum import RationalCocharacter
from .root_datum import RootDatum
from .util import Poset
from .weyl import ParabolicType
from .weyl import WeylElement

log = logging.getLogger(__name__)

FORMAT_VERSION = 1

COMMANDS = ("newton", "eo", "leaves", "hn-check", "atlas")


def _rational(value) -> Optional[str]:
    return None if value is None else format_rational(value)


def _unrational(value) -> Optional[Any]:
    return None if value is None else parse_rational(value)


def _cocharacter(value) -> Optional[List[str]]:
    return None if value is None else value.as_strings()


def _uncocharacter(value) -> Optional[RationalCocharacter]:
    return None if value is None else RationalCocharacter.parse(value)


def _affine_to_dict(e: Optional[AffineElement]) -> Optional[Dict[str, Any]]:
    if e is None:
        return None
    return {
        "translation": list(e.translation),
        "finite": list(e.finite.reduced_word),
        "label": e.label,
    }


def _affine_from_dict(
    d: RootDatum, data: Optional[Mapping[str, Any]]
) -> Optional[AffineElement]:
    if data is None:
        return None
    return AffineElement(
        d, data["translation"], WeylElement.from_word(d, data["finite"])
    )


def newton_class_to_dict(nc: NewtonClass) -> Dict[str, Any]:
    return {
        "label": nc.label,
        "nu": nc.nu.as_strings(),
        "kappa": {"value": list(nc.kappa.value), "moduli": list(nc.kappa.moduli)},
        "witness": _affine_to_dict(nc.straight_witness),
        "defect": _rational(nc.defect),
        "stratum_dim": _rational(nc.stratum_dim),
        "leaf_dim": _rational(nc.leaf_dim),
        "raw_defect": _rational(nc.raw_defect),
        "raw_stratum_dim": _rational(nc.raw_stratum_dim),
        "avatar_nu": _cocharacter(nc.avatar_nu),
        "basic": nc.is_basic,
        "mu_ordinary": nc.is_mu_ordinary,
    }


def newton_class_from_dict(d: RootDatum, data: Mapping[str, Any]) -> NewtonClass:
    return NewtonClass(
        nu=RationalCocharacter.parse(data["nu"]),
        kappa=Pi1Class(
            tuple(data["kappa"]["value"]), tuple(data["kappa"]["moduli"])
        ),
        straight_witness=_affine_from_dict(d, data["witness"]),
        label=data["label"],
        defect=_unrational(data["defect"]),
        stratum_dim=_unrational(data["stratum_dim"]),
        leaf_dim=_unrational(data["leaf_dim"]),
        raw_defect=_unrational(data["raw_defect"]),
        raw_stratum_dim=_unrational(data["raw_stratum_dim"]),
        avatar_nu=_uncocharacter(data["avatar_nu"]),
        is_basic=data["basic"],
        is_mu_ordinary=data["mu_ordinary"],
    )


def eo_stratum_to_dict(s: EOStratum) -> Dict[str, Any]:
    return {
        "label": s.label,
        "w": list(s.w.reduced_word),
        "length": s.length,
        "affine_form": _affine_to_dict(s.affine_form),
        "sigma_straight": s.is_sigma_straight,
        "newton_point": s.newton_point.as_strings(),
        "zip_orbit_dim": s.zip_orbit_dim,
        "newton_class": s.newton_class,
    }


def eo_stratum_from_dict(d: RootDatum, data: Mapping[str, Any]) -> EOStratum:
    return EOStratum(
        w=WeylElement.from_word(d, data["w"]),
        length=data["length"],
        affine_form=_affine_from_dict(d, data["affine_form"]),
        is_sigma_straight=data["sigma_straight"],
        newton_point=RationalCocharacter.parse(data["newton_point"]),
        zip_orbit_dim=data["zip_orbit_dim"],
        label=data["label"],
        newton_class=data["newton_class"],
    )


def newton_to_dict(newton: NewtonPoset) -> Dict[str, Any]:
    result: Dict[str, Any] = {
        "nodes": [newton_class_to_dict(nc) for nc in newton],
        "covers": [[a.label, b.label] for a, b in newton.covers],
        "avatar": None,
    }
    if newton.avatar is not None:
        result["avatar"] = {
            "datum": datum_to_dict(newton.avatar.datum, newton.avatar.mu),
            "projection": [list(row) for row in newton.avatar.projection],
        }
    return result


def newton_from_dict(
    d: RootDatum, mu: RationalCocharacter, data: Mapping[str, Any]
) -> NewtonPoset:
    avatar = None
    if data.get("avatar") is not None:
        cover, cover_mu = datum_from_dict(data["avatar"]["datum"])
        avatar = Avatar(
            cover,
            cover_mu,
            tuple(tuple(row) for row in data["avatar"]["projection"]),
        )
    return NewtonPoset(
        d, mu, [newton_class_from_dict(d, n) for n in data["nodes"]], avatar
    )


def eo_to_dict(eo: EOPoset) -> Dict[str, Any]:
    return {
        "parabolic": list(eo.J.indices),
        "nodes": [eo_stratum_to_dict(s) for s in eo],
        "covers": [[a.label, b.label] for a, b in eo.covers],
    }


def eo_from_dict(
    d: RootDatum, mu: RationalCocharacter, data: Mapping[str, Any]
) -> EOPoset:
    strata = [eo_stratum_from_dict(d, s) for s in data["nodes"]]
    by_label = {s.label: s.w for s in strata}
    order = Poset.from_covers(
        [s.w for s in strata],
        [(by_label[a], by_label[b]) for a, b in data["covers"]],
    )
    return EOPoset(d, mu, ParabolicType.of(data["parabolic"]), strata, order)


def atlas_to_dict(atlas: StrataAtlas) -> Dict[str, Any]:
    """The versioned JSON document of ``atlas``."""
    return {
        "format_version": FORMAT_VERSION,
        "provenance": atlas.provenance,
        "datum": datum_to_dict(atlas.datum, atlas.mu),
        "mu_bar": atlas.mu_bar.as_strings(),
        "flags": {
            "fully_hn": atlas.fully_hn,
            "split": atlas.split,
            "coxeter_tag": atlas.coxeter_tag,
        },
        "newton": newton_to_dict(atlas.newton),
        "eo": eo_to_dict(atlas.eo),
        "incidence": atlas.incidence,
        "notes": atlas.notes,
    }


def atlas_from_dict(data: Mapping[str, Any]) -> StrataAtlas:
    """Parse a document written by :func:`.atlas_to_dict`.

    :raises DatumError: the document is malformed or of another version.

    """
    if not isinstance(data, Mapping):
        raise exception.DatumError("atlas document must be a JSON object")
    version = data.get("format_version")
    if version != FORMAT_VERSION:
        raise exception.DatumError(
            "unsupported atlas document version %r" % (version,)
        )
    try:
        datum, mu = datum_from_dict(data["datum"])
        if mu is None:
            raise exception.DatumError("atlas document has no mu")
        return StrataAtlas(
            datum,
            mu,
            newton_from_dict(datum, mu, data["newton"]),
            eo_from_dict(datum, mu, data["eo"]),
            data["incidence"],
            data["flags"]["fully_hn"],
            coxeter_tag=data["flags"]["coxeter_tag"],
            provenance=data["provenance"],
            notes=data["notes"],
        )
    except (KeyError, TypeError, ValueError) as err:
        raise exception.DatumError("malformed atlas document: %r" % (err,))


class AtlasDocument:
    """JSON text of an atlas, and back."""

    @staticmethod
    def dumps(atlas: StrataAtlas) -> str:
        return json.dumps(atlas_to_dict(atlas), indent=2) + "\n"

    @staticmethod
    def loads(text: str) -> StrataAtlas:
        try:
            data = json.loads(text)
        except ValueError as err:
            raise exception.DatumError("atlas document is not JSON: %s" % err)
        return atlas_from_dict(data)


def _quote(text: str) -> str:
    return '"%s"' % text.replace("\\", "\\\\").replace('"', '\\"')


def _dim(value) -> str:
    if value is None:
        return "?"
    return str(int(value)) if value == int(value) else format_rational(value)


def _dot_lines(
    poset: Poset,
    name: Callable[[Hashable], str],
    dimension: Callable[[Hashable], Any],
    prefix: str = "",
    indent: str = "  ",
) -> List[str]:
    lines = []
    for node in poset:
        lines.append(
            "%s%s [label=%s];"
            % (
                indent,
                _quote(prefix + name(node)),
                _quote("%s (%s)" % (name(node), _dim(dimension(node)))),
            )
        )
    for small, large in poset.covers:
        lines.append(
            "%s%s -> %s;"
            % (indent, _quote(prefix + name(small)), _quote(prefix + name(large)))
        )
    return lines


def emit_dot(
    poset: Poset,
    name: Callable[[Hashable], str] = str,
    dimension: Callable[[Hashable], Any] = lambda node: None,
    graph_name: str = "hasse",
) -> str:
    """Hasse diagram of ``poset``: one node per element labelled
    ``name (dim)``, one edge per cover relation from smaller to larger."""
    lines = ["digraph %s {" % _quote(graph_name), "  rankdir=BT;"]
    lines.extend(_dot_lines(poset, name, dimension))
    lines.append("}")
    return "\n".join(lines) + "\n"


def newton_dot(newton: NewtonPoset) -> str:
    return emit_dot(
        newton.poset,
        lambda nc: nc.label,
        lambda nc: nc.stratum_dim,
        graph_name="newton",
    )


def eo_dot(eo: EOPoset) -> str:
    return emit_dot(
        eo.poset, lambda s: s.label, lambda s: s.length, graph_name="eo"
    )


def atlas_dot(atlas: StrataAtlas) -> str:
    """Both posets as clusters, with a dashed edge from each EO stratum
    to its Newton class."""
    lines = ["digraph \"atlas\" {", "  rankdir=BT;"]
    lines.append("  subgraph \"cluster_newton\" {")
    lines.append("    label=\"B(G, mu)\";")
    lines.extend(
        _dot_lines(
            atlas.newton.poset,
            lambda nc: nc.label,
            lambda nc: nc.stratum_dim,
            prefix="N:",
            indent="    ",
        )
    )
    lines.append("  }")
    lines.append("  subgraph \"cluster_eo\" {")
    lines.append("    label=\"EO\";")
    lines.extend(
        _dot_lines(
            atlas.eo.poset,
            lambda s: s.label,
            lambda s: s.length,
            prefix="E:",
            indent="    ",
        )
    )
    lines.append("  }")
    for s in atlas.eo:
        target = atlas.incidence.get(s.label)
        if target is not None:
            lines.append(
                "  %s -> %s [style=dashed];"
                % (_quote("E:" + s.label), _quote("N:" + target))
            )
    lines.append("}")
    return "\n".join(lines) + "\n"


def _table(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> List[str]:
    rows = [[str(cell) for cell in row] for row in rows]
    widths = [
        max([len(header[k])] + [len(row[k]) for row in rows])
        for k in range(len(header))
    ]

    def line(cells):
        return "  ".join(
            cell.ljust(width) for cell, width in zip(cells, widths)
        ).rstrip()

    return [line(header), line(["-" * w for w in widths])] + [
        line(row) for row in rows
    ]


def newton_rows(newton: NewtonPoset) -> List[NewtonClass]:
    """Descending dimension, then label."""
    return sorted(newton, key=lambda nc: (-nc.stratum_dim, nc.label))


def eo_rows(eo: EOPoset) -> List[EOStratum]:
    return sorted(eo, key=lambda s: (s.length, s.label))


def newton_text(newton: NewtonPoset) -> List[str]:
    rows = []
    for nc in newton_rows(newton):
        flags = []
        if nc.is_mu_ordinary:
            flags.append("mu-ordinary")
        if nc.is_basic:
            flags.append("basic")
        rows.append(
            (
                nc.label,
                nc.nu,
                nc.kappa,
                _dim(nc.defect),
                _dim(nc.stratum_dim),
                _dim(nc.leaf_dim),
                ",".join(flags),
            )
        )
    return _table(
        ("class", "nu", "kappa", "defect", "dim", "leaf", "flags"), rows
    )


def eo_text(eo: EOPoset) -> List[str]:
    rows = [
        (
            s.label,
            s.length,
            s.w.label,
            s.affine_form.label,
            s.newton_point,
            "yes" if s.is_sigma_straight else "no",
            s.newton_class or "?",
        )
        for s in eo_rows(eo)
    ]
    return _table(
        ("stratum", "dim", "w", "affine form", "newton point", "minimal",
         "class"),
        rows,
    )


def leaves_text(atlas: StrataAtlas) -> List[str]:
    rows = [
        (
            nc.label,
            _dim(nc.stratum_dim),
            _dim(nc.leaf_dim),
            "yes" if nc.stratum_dim == nc.leaf_dim else "no",
            " ".join(s.label for s in atlas.fiber(nc.label)) or "-",
        )
        for nc in newton_rows(atlas.newton)
    ]
    return _table(("class", "dim", "leaf", "single leaf", "strata"), rows)


def hn_report(atlas: StrataAtlas) -> List[Dict[str, Any]]:
    """Per non-basic class, the sigma-stable Levis it is Hodge-Newton
    decomposable for."""
    levis = sigma_stable_levis(atlas.datum)
    return [
        {
            "label": nc.label,
            "levis": [
                list(levi)
                for levi in levis
                if is_hn_decomposable(atlas.datum, atlas.mu, nc, levi)
            ],
        }
        for nc in newton_rows(atlas.newton)
        if not nc.is_basic
    ]


def _levi_label(levi: Sequence[int]) -> str:
    return "{%s}" % ",".join(str(i + 1) for i in levi)


def hn_text(atlas: StrataAtlas) -> List[str]:
    lines = ["fully_hn: %s" % ("true" if atlas.fully_hn else "false")]
    rows = [
        (
            entry["label"],
            " ".join(_levi_label(levi) for levi in entry["levis"]) or "none",
        )
        for entry in hn_report(atlas)
    ]
    if rows:
        lines.append("")
        lines.extend(_table(("class", "decomposable for"), rows))
    return lines


def _header(atlas: StrataAtlas) -> List[str]:
    lines = ["datum: %s" % atlas.datum.name]
    if atlas.provenance.get("preset"):
        lines.append(
            "preset: %s %s"
            % (
                atlas.provenance["preset"],
                json.dumps(atlas.provenance["parameters"], sort_keys=True),
            )
        )
    lines.append("mu: %s" % atlas.mu)
    lines.append("mu-bar: %s" % atlas.mu_bar)
    return lines


def atlas_text(atlas: StrataAtlas) -> List[str]:
    lines = _header(atlas)
    lines.append(
        "flags: fully_hn=%s split=%s coxeter=%s"
        % (
            "true" if atlas.fully_hn else "false",
            "true" if atlas.split else "false",
            atlas.coxeter_tag or "-",
        )
    )
    lines.append("")
    lines.append("Newton strata")
    lines.extend(newton_text(atlas.newton))
    lines.append("")
    lines.append("Ekedahl-Oort strata")
    lines.extend(eo_text(atlas.eo))
    lines.append("")
    lines.append("Incidence")
    for s in eo_rows(atlas.eo):
        lines.append(
            "  %s -> %s" % (s.label, atlas.incidence.get(s.label) or "?")
        )
    if atlas.notes:
        lines.append("")
        lines.append("Notes")
        lines.extend("  %s" % note for note in atlas.notes)
    return lines


def _section_document(atlas: StrataAtlas, key: str, value: Any) -> str:
    document = {
        "format_version": FORMAT_VERSION,
        "provenance": atlas.provenance,
        key: value,
    }
    return json.dumps(document, indent=2) + "\n"


def render(command: str, output_format: str, atlas: StrataAtlas) -> str:
    """The output of ``command`` in ``output_format``."""
    if output_format == "dot":
        if command == "atlas":
            return atlas_dot(atlas)
        if command == "eo":
            return eo_dot(atlas.eo)
        return newton_dot(atlas.newton)

    if output_format == "json":
        if command == "atlas":
            return AtlasDocument.dumps(atlas)
        if command == "newton":
            return _section_document(
                atlas, "newton", newton_to_dict(atlas.newton)
            )
        if command == "eo":
            return _section_document(atlas, "eo", eo_to_dict(atlas.eo))
        if command == "leaves":
            return _section_document(
                atlas,
                "leaves",
                [
                    {
                        "label": nc.label,
                        "stratum_dim": _rational(nc.stratum_dim),
                        "leaf_dim": _rational(nc.leaf_dim),
                        "strata": [s.label for s in atlas.fiber(nc.label)],
                    }
                    for nc in newton_rows(atlas.newton)
                ],
            )
        return _section_document(
            atlas,
            "hn_check",
            {"fully_hn": atlas.fully_hn, "classes": hn_report(atlas)},
        )

    if command == "atlas":
        lines = atlas_text(atlas)
    elif command == "newton":
        lines = _header(atlas) + [""] + newton_text(atlas.newton)
    elif command == "eo":
        lines = _header(atlas) + [""] + eo_text(atlas.eo)
    elif command == "leaves":
        lines = _header(atlas) + [""] + leaves_text(atlas)
    else:
        lines = hn_text(atlas)
    return "\n".join(lines) + "\n"


def preset_arguments(options: argparse.Namespace) -> Dict[str, Any]:
    given = {
        "n": options.n,
        "form": options.form,
        "g": options.g,
        "places": options.place,
    }
    return {key: value for key, value in given.items() if value is not None}


def load_atlas(options: argparse.Namespace) -> StrataAtlas:
    if options.datum is not None:
        try:
            with open(options.datum) as handle:
                data = json.load(handle)
        except OSError as err:
            raise exception.DatumError(
                "cannot read %s: %s" % (options.datum, err.strerror)
            )
        except ValueError as err:
            raise exception.DatumError(
                "%s is not JSON: %s" % (options.datum, err)
            )
        datum, mu = datum_from_dict(data)
        if mu is None:
            raise exception.DatumError("%s gives no mu" % options.datum)
        return build_atlas(datum, mu)

    preset = load_preset(options.preset, preset_arguments(options))
    return build_atlas(preset.datum(), preset.mu(), preset=preset)


@contextlib.contextmanager
def cap_override(cap: Optional[int]):
    """Every cap set to ``cap`` for the duration."""
    if cap is None:
        yield
        return
    saved = dict(default_region.caps)
    default_region.caps = {name: cap for name in saved}
    try:
        yield
    finally:
        default_region.caps = saved


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("%r is not an integer" % text)
    if value <= 0:
        raise argparse.ArgumentTypeError("%d is not positive" % value)
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    source = common.add_mutually_exclusive_group(required=True)
    source.add_argument(
        "--preset",
        help="named preset; one of %s" % ", ".join(available_presets()),
    )
    source.add_argument(
        "--datum", metavar="FILE", help="JSON root datum file with mu"
    )
    common.add_argument("--n", type=int, help="orthogonal: SO(n + 2)")
    common.add_argument(
        "--form",
        choices=("split", "nonsplit"),
        help="orthogonal: inner form",
    )
    common.add_argument(
        "--place",
        action="append",
        metavar="N:A",
        help="quaternionic: a place of degree N with A nontrivial "
        "embeddings; repeatable",
    )
    common.add_argument("--g", type=int, help="siegel: genus")
    common.add_argument(
        "--format",
        dest="output_format",
        choices=("text", "json", "dot"),
        default="text",
    )
    common.add_argument(
        "--out", metavar="PATH", help="write here instead of stdout"
    )
    common.add_argument(
        "--cap",
        type=_positive,
        help="override every enumeration cap for this run",
    )
    common.add_argument(
        "-v",
        "--verbose",
        action="store_true",
        help="log computation steps to stderr",
    )

    parser = argparse.ArgumentParser(
        prog="stratatlas",
        description="Newton, Ekedahl-Oort and central leaf stratifications "
        "of Shimura varieties with hyperspecial level.",
    )
    parser.add_argument(
        "--version", action="version", version="%(prog)s " + __version__
    )
    commands = parser.add_subparsers(dest="command", metavar="COMMAND")
    commands.required = True
    for name, text in (
        ("newton", "the Newton poset B(G, mu)"),
        ("eo", "the Ekedahl-Oort poset"),
        ("leaves", "central leaf dimensions"),
        ("hn-check", "fully Hodge-Newton decomposability"),
        ("atlas", "everything, cross-validated"),
    ):
        commands.add_parser(name, parents=[common], help=text)
    return parser


def _enable_logging() -> Tuple[logging.Logger, logging.Handler]:
    logger = logging.getLogger("stratatlas")
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(name)s: %(message)s"))
    logger.addHandler(handler)
    logger.setLevel(logging.DEBUG)
    return logger, handler


def write_output(path: str, output: str) -> None:
    try:
        with open(path, "w") as handle:
            handle.write(output)
    except OSError as err:
        raise exception.UsageError(
            "cannot write %s: %s" % (path, err.strerror or err)
        ) from err


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run the command line; returns the exit status."""
    parser = build_parser()
    try:
        options = parser.parse_args(argv)
    except SystemExit as err:
        return err.code if isinstance(err.code, int) else 2

    installed = _enable_logging() if options.verbose else None
    try:
        with cap_override(options.cap):
            atlas = load_atlas(options)
            output = render(options.command, options.output_format, atlas)
            if options.out:
                write_output(options.out, output)
    except exception.StratAtlasException as err:
        sys.stderr.write("%s %s\n" % (err.prefix, err))
        return err.exit_status
    finally:
        if installed is not None:
            installed[0].removeHandler(installed[1])

    if not options.out:
        sys.stdout.write(output)
    return 0


cli_main = main
