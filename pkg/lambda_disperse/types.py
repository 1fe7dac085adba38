from enum import StrEnum


class Scheme(StrEnum):
    LAMBDA = "lambda"
    VEE = "vee"


class RegimeClass(StrEnum):
    """Propagation regime of the probe at zero detuning.

    Values are the lower-kebab-case names written to output files.
    """

    SUBLUMINAL_ABSORPTION = "subluminal-absorption"
    SUBLUMINAL_GAIN = "subluminal-gain"
    SUPERLUMINAL_ABSORPTION = "superluminal-absorption"
    SUPERLUMINAL_GAIN = "superluminal-gain"
    SATURATED = "saturated"


class OutputFormat(StrEnum):
    CSV = "csv"
    JSON = "json"


class Command(StrEnum):
    SPECTRUM = "spectrum"
    REGIME_MAP = "regime-map"
    GROUP_INDEX = "group-index"
    VALIDATE = "validate"


class ConfigFormat(StrEnum):
    """Parameter file formats accepted by ``--config``."""

    JSON = "json"
    YAML = "yaml"
    TOML = "toml"


# CSV column layout per command
CSV_COLUMNS: dict[Command, tuple[str, ...]] = {
    Command.SPECTRUM: ("delta_p", "re_chi", "im_chi", "slope"),
    Command.REGIME_MAP: ("r", "omega", "class"),
    Command.GROUP_INDEX: ("omega", "r", "ng_minus_1"),
    Command.VALIDATE: ("case_id", "delta_p", "re_a", "im_a", "re_n", "im_n", "abs_err"),
}

SCHEMA_VERSION = "1"
