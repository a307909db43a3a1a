"""
File output for the command-line front end.

Every data file is CSV with 17-significant-digit floats; companion gnuplot
scripts reference it by name and a JSON manifest lists the parameters and
files of the run. Nothing written depends on the clock or the working
directory, so identical inputs give byte-identical files.

Classes:
    PlotSpec: What a generated gnuplot script draws.
    RunManifest: Command, parameters, version and emitted files.

Functions:
    format_value: Text form of one CSV or summary value.
    render_csv: CSV text with optional trailing ``#`` lines.
    emit: Write data, plot script and manifest for one run.
"""

import csv
import io
import json
import logging
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any, Iterable, Optional, Sequence

from schemes.constants import CSV_FLOAT_FORMAT, TOOL_NAME, TOOL_VERSION
from schemes.errors import ConfigurationError

logger = logging.getLogger(__name__)


def format_value(value: Any) -> str:
    """
    Format a value for CSV cells and ``#`` lines.

    Example:
        >>> format_value(0.1), format_value(True), format_value(None)
        ('0.10000000000000001', 'true', 'none')
    """
    if value is None:
        return "none"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return format(value, CSV_FLOAT_FORMAT)
    return str(value)


def render_csv(
    header: Sequence[str],
    rows: Iterable[Sequence[Any]],
    comments: Sequence[tuple[str, Any]] = (),
) -> str:
    """CSV text; ``comments`` follow the rows as ``# key=value`` lines."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_value(v) for v in row])
    for key, value in comments:
        buffer.write(f"# {key}={format_value(value)}\n")
    return buffer.getvalue()


def render_report(lines: Sequence[tuple[str, Any]], float_format: Optional[str] = None) -> str:
    out = []
    for key, value in lines:
        text = format(value, float_format) if float_format and isinstance(value, float) else format_value(value)
        out.append(f"{key}={text}")
    return "\n".join(out) + "\n"


@dataclass(frozen=True)
class PlotSpec:
    """
    A gnuplot script drawing columns of a CSV file.

    Attributes:
        title: Plot title.
        xlabel, ylabel: Axis labels.
        curves: (using clause, style, legend) per curve, e.g. ("1:2", "lines", "phi").
        extra: Additional directives placed before the plot command.
        splot: Use splot instead of plot.
    """

    title: str
    xlabel: str
    ylabel: str
    curves: tuple[tuple[str, str, str], ...]
    extra: tuple[str, ...] = ()
    splot: bool = False

    def render(self, data_name: str, image_name: str) -> str:
        lines = [
            f"# generated by {TOOL_NAME} {TOOL_VERSION}",
            'set datafile separator ","',
            "set datafile commentschars \"#\"",
            "set key top left",
            f'set title "{self.title}"',
            f'set xlabel "{self.xlabel}"',
            f'set ylabel "{self.ylabel}"',
            "set terminal pngcairo size 800,600",
            f'set output "{image_name}"',
            *self.extra,
        ]
        command = "splot" if self.splot else "plot"
        parts = [
            f'"{data_name}" every ::1 using {using} with {style} title "{legend}"'
            for using, style, legend in self.curves
        ]
        lines.append(f"{command} " + ", \\\n     ".join(parts))
        return "\n".join(lines) + "\n"


@dataclass
class RunManifest:
    """
    Record of one command invocation.

    Attributes:
        command: Subcommand name.
        parameters: Full parameter set, defaults included.
        version: Tool version.
        files: Names of the files written next to the manifest.
    """

    command: str
    parameters: dict[str, Any]
    version: str = TOOL_VERSION
    files: list[str] = field(default_factory=list)

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2, sort_keys=True) + "\n"

    def write(self, path: Path) -> None:
        path.write_text(self.to_json(), encoding="utf-8")


def manifest_path(out: Path) -> Path:
    return out.with_name(f"{out.stem}.manifest.json")


def emit(
    out: Path,
    command: str,
    text: str,
    parameters: dict[str, Any],
    plot: Optional[PlotSpec] = None,
) -> list[Path]:
    """
    Write a run's data file, its plot script and its manifest.

    :param out: Data file path; the script and manifest are placed beside it.
    :param command: Subcommand name.
    :param text: Data file contents.
    :param parameters: Parameters recorded in the manifest.
    :param plot: Plot to generate, if any.
    :return: Every path written, manifest last.
    :raises ConfigurationError: If a file cannot be written.
    """
    written = [out]
    try:
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(text, encoding="utf-8")
        if plot is not None:
            script = out.with_suffix(".gp")
            script.write_text(plot.render(out.name, out.with_suffix(".png").name), encoding="utf-8")
            written.append(script)

        manifest = RunManifest(command, parameters, files=[p.name for p in written])
        manifest.write(manifest_path(out))
    except OSError as e:
        raise ConfigurationError(f"cannot write {out}: {e}") from e
    written.append(manifest_path(out))
    logger.info("%s: wrote %s", command, ", ".join(p.name for p in written))
    return written
