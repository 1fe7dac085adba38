"""Serialization of sweep results and loading of parameter files."""

from __future__ import annotations

import io
import logging
import math
import sys
from pathlib import Path
from typing import Any

import orjson
import pandas as pd
import toml
import yaml

from lambda_disperse.params import SystemParams
from lambda_disperse.scan import GroupIndexCurve, RegimeGrid, SpectrumSeries, ValidationReport
from lambda_disperse.types import CSV_COLUMNS, SCHEMA_VERSION, Command, ConfigFormat, OutputFormat

logger = logging.getLogger(__name__)

FLOAT_FORMAT = "%.17g"

Result = SpectrumSeries | RegimeGrid | list[GroupIndexCurve] | ValidationReport


def command_of(result: Result) -> Command:
    match result:
        case SpectrumSeries():
            return Command.SPECTRUM
        case RegimeGrid():
            return Command.REGIME_MAP
        case ValidationReport():
            return Command.VALIDATE
        case list():
            return Command.GROUP_INDEX
    raise TypeError(f"Unsupported result type: {type(result).__name__}")


def clean_float(value: float | None) -> float | None:
    """Map -0.0 to 0.0 and non-finite values to None."""
    if value is None or not math.isfinite(value):
        return None
    return value + 0.0


def result_rows(result: Result) -> list[dict[str, Any]]:
    """Flat records with the CSV column names; responses are multiplied by alpha."""
    match result:
        case SpectrumSeries(params=params, samples=samples):
            return [
                {
                    "delta_p": clean_float(sample.delta_p),
                    "re_chi": clean_float(sample.chi_re),
                    "im_chi": clean_float(sample.chi_im),
                    "slope": clean_float(sample.slope),
                }
                for sample in (raw.scaled(params.alpha) for raw in samples)
            ]
        case RegimeGrid():
            return [{"r": clean_float(r), "omega": clean_float(omega), "class": cls.value} for r, omega, cls in result.rows()]
        case ValidationReport(cases=cases):
            return [
                {
                    "case_id": case.case_id,
                    "delta_p": clean_float(case.delta_p),
                    "re_a": clean_float(case.chi_analytic.real) if case.chi_analytic is not None else None,
                    "im_a": clean_float(case.chi_analytic.imag) if case.chi_analytic is not None else None,
                    "re_n": clean_float(case.chi_numeric.real) if case.chi_numeric is not None else None,
                    "im_n": clean_float(case.chi_numeric.imag) if case.chi_numeric is not None else None,
                    "abs_err": clean_float(case.abs_error),
                }
                for case in cases
            ]
        case list():
            return [
                {"omega": clean_float(curve.omega), "r": clean_float(r), "ng_minus_1": clean_float(curve.params.alpha * value)}
                for curve in result
                for r, value in zip(curve.r_axis, curve.values, strict=True)
            ]
    raise TypeError(f"Unsupported result type: {type(result).__name__}")


def to_csv(result: Result) -> str:
    """CSV text with a header row; floats carry 17 significant digits."""
    columns = list(CSV_COLUMNS[command_of(result)])
    frame = pd.DataFrame.from_records(result_rows(result), columns=columns)
    buffer = io.StringIO()
    frame.to_csv(buffer, index=False, float_format=FLOAT_FORMAT, lineterminator="\n", na_rep="")
    return buffer.getvalue()


def to_document(result: Result, params: SystemParams | None = None) -> dict[str, Any]:
    """JSON-ready mapping: schema version, parameter header, sweep metadata and rows."""
    command = command_of(result)
    document: dict[str, Any] = {"schema_version": SCHEMA_VERSION, "command": command.value}

    match result:
        case SpectrumSeries():
            document["params"] = result.params.model_dump(mode="json")
        case RegimeGrid():
            document["params"] = result.params.model_dump(mode="json")
            document["r_axis"] = [clean_float(value) for value in result.r_axis]
            document["omega_axis"] = [clean_float(value) for value in result.omega_axis]
        case ValidationReport():
            document["params"] = params.model_dump(mode="json") if params is not None else None
            document["tolerance"] = result.tolerance
            document["max_error"] = clean_float(result.max_error)
            document["pass"] = result.passed
            document["cases"] = _validation_cases(result)
        case list():
            document["params"] = params.model_dump(mode="json") if params is not None else (result[0].params.model_dump(mode="json") if result else None)
            document["curves"] = [
                {"omega": clean_float(curve.omega), "predicted_sign_changes": [clean_float(value) for value in curve.predicted_sign_changes]} for curve in result
            ]

    document["rows"] = result_rows(result)
    return document


def to_json(result: Result, params: SystemParams | None = None) -> bytes:
    return orjson.dumps(to_document(result, params), option=orjson.OPT_INDENT_2 | orjson.OPT_APPEND_NEWLINE)


def render(result: Result, output_format: OutputFormat, params: SystemParams | None = None) -> bytes:
    if output_format == OutputFormat.JSON:
        return to_json(result, params)
    return to_csv(result).encode("utf-8")


def emit(result: Result, output_format: OutputFormat, path: Path | None = None, params: SystemParams | None = None) -> Path | None:
    """Serialize ``result`` to ``path``; ``None`` or ``-`` writes to standard output.

    Raises:
        OSError: the output file cannot be written.
    """
    payload = render(result, output_format, params)
    if path is None or str(path) == "-":
        sys.stdout.buffer.write(payload)
        sys.stdout.flush()
        return None

    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(payload)
    logger.info(f"Wrote {len(payload)} bytes to {path}")
    return path


def determine_config_format(path: Path) -> ConfigFormat | None:
    match path.suffix.lower():
        case ".json":
            return ConfigFormat.JSON
        case ".yaml" | ".yml":
            return ConfigFormat.YAML
        case ".toml":
            return ConfigFormat.TOML
    return None


def parse_config_string(content: str, format_type: ConfigFormat | None = None) -> dict[str, Any]:
    """Parse parameter file content; without a known format try JSON, then TOML, then YAML."""
    if format_type == ConfigFormat.JSON:
        data = orjson.loads(content)
    elif format_type == ConfigFormat.TOML:
        data = toml.loads(content)
    elif format_type == ConfigFormat.YAML:
        data = yaml.safe_load(content)
    else:
        data = _sniff_config(content)

    if not isinstance(data, dict):
        raise ValueError("parameter file must contain a mapping")
    return data


def load_params_file(path: Path) -> dict[str, Any]:
    """SystemParams fields from a YAML, TOML or JSON file.

    A JSON document written by this tool is accepted; its ``params`` header is used.

    Raises:
        ValueError: the file cannot be parsed or holds no mapping.
    """
    content = path.read_text(encoding="utf-8")
    try:
        data = parse_config_string(content, determine_config_format(path))
    except (orjson.JSONDecodeError, toml.TomlDecodeError, yaml.YAMLError) as exc:
        raise ValueError(f"cannot parse parameter file {path}: {exc}") from exc

    if "schema_version" in data and isinstance(data.get("params"), dict):
        data = data["params"]
    logger.debug(f"Loaded parameters from {path}: {sorted(data)}")
    return data


def _sniff_config(content: str) -> Any:
    try:
        return orjson.loads(content)
    except orjson.JSONDecodeError:
        pass
    try:
        return toml.loads(content)
    except toml.TomlDecodeError:
        pass
    try:
        return yaml.safe_load(content)
    except yaml.YAMLError as exc:
        raise ValueError(f"unrecognised parameter file format: {exc}") from exc


def _validation_cases(report: ValidationReport) -> list[dict[str, Any]]:
    seen: dict[int, dict[str, Any]] = {}
    for case in report.cases:
        entry = seen.setdefault(case.case_id, {"case_id": case.case_id, "params": case.params.model_dump(mode="json"), "failures": []})
        if case.failure is not None:
            entry["failures"].append({"delta_p": clean_float(case.delta_p), "message": case.failure})
    return list(seen.values())
