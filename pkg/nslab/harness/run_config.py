"""
Run configuration: YAML sections merged over documented defaults, validated into the domain objects.

Every key has a default, unknown sections or keys are configuration errors, and the merged configuration dumps
back to YAML that reproduces it.
"""
import copy
import hashlib
from pathlib import Path

import yaml

from nslab.enum.pick_list import Families, Measures, Observers, Schemes, Spins
from nslab.evolution.config import EvolutionConfig
from nslab.general.exceptions import LabConfigurationError
from nslab.model.grid import GridSpec
from nslab.model.params import PhysicalParams
from nslab.nonlinearity.kinds import NonlinearityKind, RegularizationMode
from nslab.spectra.states import AnalyticState

DEFAULTS: dict[str, dict] = {
    "grid": {
        "dim": 1,
        "n": 256,
        "length": 1.0,
        "bc": "dirichlet",
        "origin": 0.0,
        "stencil": "finite_difference",
    },
    "physics": {
        "hbar": 1.0,
        "m": 1.0,
        "c": 10.0,
        "e": 1.0,
        "epsilon": 1e-3,
        "delta": 0.0,
    },
    "nonlinearity": {
        "kind": "F1",
        "A0": 0.0,
        "A": [0.0, 0.0, 0.0],
        "regularization": "small_component",
        "floor_tau": 1e-8,
        "f2_term_reading": "laplacian_of_density",
    },
    "state": {
        "family": Families.BOX,
        "n": [2],
        "spin": Spins.UP,
    },
    "evolution": {
        "dt": 1e-4,
        "steps": 100,
        "scheme": Schemes.STRANG_SPLIT,
        "observer_stride": 10,
        "observers": [Observers.NORM, Observers.ENERGY, Observers.MAX_IM_F],
    },
    "study": {
        "levels": [256, 512, 1024, 2048],
        "measure": Measures.DENSITY,
    },
    "output": {
        "dir": "out",
        "precision": 17,
    },
}
""" The default of every configuration key. `grid.n` counts intervals per axis. """


def _as_float(section: str, key: str, value) -> float:
    try:
        return float(value)
    except (TypeError, ValueError):
        raise LabConfigurationError(section + "." + key + " must be a number, got " + repr(value) + ".")


def _as_complex(section: str, key: str, value) -> complex:
    """ A number, a string such as "0.6+0.8j", or a [re, im] pair. """
    if isinstance(value, (list, tuple)):
        if len(value) != 2:
            raise LabConfigurationError(section + "." + key + " pairs must be [re, im], got " + repr(value) + ".")
        return complex(_as_float(section, key, value[0]), _as_float(section, key, value[1]))
    if isinstance(value, bool):
        raise LabConfigurationError(section + "." + key + " must be a number, got " + repr(value) + ".")
    try:
        return complex(value.replace(" ", "")) if isinstance(value, str) else complex(value)
    except (TypeError, ValueError):
        raise LabConfigurationError(section + "." + key + " must be a number, got " + repr(value) + ".")


def _as_int(section: str, key: str, value) -> int:
    if isinstance(value, bool):
        raise LabConfigurationError(section + "." + key + " must be an integer, got " + repr(value) + ".")
    try:
        number = float(value)
    except (TypeError, ValueError):
        raise LabConfigurationError(section + "." + key + " must be an integer, got " + repr(value) + ".")
    if number != int(number):
        raise LabConfigurationError(section + "." + key + " must be an integer, got " + repr(value) + ".")
    return int(number)


def _as_list(section: str, key: str, value) -> list:
    if isinstance(value, (list, tuple)):
        return list(value)
    if isinstance(value, (int, float, str)):
        return [value]
    raise LabConfigurationError(section + "." + key + " must be a list, got " + repr(value) + ".")


def _normalise(merged: dict[str, dict]):
    """ Coerces every value to its documented type, in place, so the dump is stable. """
    grid = merged["grid"]
    grid["dim"] = _as_int("grid", "dim", grid["dim"])
    grid["n"] = _as_int("grid", "n", grid["n"])
    grid["length"] = _as_float("grid", "length", grid["length"])
    grid["origin"] = _as_float("grid", "origin", grid["origin"])
    grid["bc"] = str(grid["bc"])
    grid["stencil"] = str(grid["stencil"])

    for key in DEFAULTS["physics"]:
        merged["physics"][key] = _as_float("physics", key, merged["physics"][key])

    nonlinearity = merged["nonlinearity"]
    nonlinearity["kind"] = str(nonlinearity["kind"])
    nonlinearity["A0"] = _as_float("nonlinearity", "A0", nonlinearity["A0"])
    nonlinearity["A"] = [_as_float("nonlinearity", "A", a) for a in _as_list("nonlinearity", "A", nonlinearity["A"])]
    nonlinearity["regularization"] = str(nonlinearity["regularization"])
    nonlinearity["floor_tau"] = _as_float("nonlinearity", "floor_tau", nonlinearity["floor_tau"])
    nonlinearity["f2_term_reading"] = str(nonlinearity["f2_term_reading"])

    state = merged["state"]
    state["family"] = str(state["family"])
    state["n"] = [_as_int("state", "n", n) for n in _as_list("state", "n", state["n"])]
    if not isinstance(state["spin"], str):
        components = [_as_complex("state", "spin", s) for s in _as_list("state", "spin", state["spin"])]
        if len(components) != 2:
            raise LabConfigurationError("state.spin must be a name or two components.")
        state["spin"] = [c.real if c.imag == 0.0 else [c.real, c.imag] for c in components]

    evolution = merged["evolution"]
    evolution["dt"] = _as_float("evolution", "dt", evolution["dt"])
    evolution["steps"] = _as_int("evolution", "steps", evolution["steps"])
    evolution["scheme"] = str(evolution["scheme"])
    evolution["observer_stride"] = _as_int("evolution", "observer_stride", evolution["observer_stride"])
    evolution["observers"] = [str(o) for o in _as_list("evolution", "observers", evolution["observers"])]

    merged["study"]["levels"] = [_as_int("study", "levels", n) for n in _as_list("study", "levels",
                                                                                  merged["study"]["levels"])]
    merged["study"]["measure"] = str(merged["study"]["measure"])
    merged["output"]["dir"] = str(merged["output"]["dir"])
    merged["output"]["precision"] = _as_int("output", "precision", merged["output"]["precision"])


def merge_with_defaults(raw: dict | None) -> dict[str, dict]:
    """ Overlays a parsed YAML mapping on the defaults. Unknown sections and keys raise LabConfigurationError. """
    merged = copy.deepcopy(DEFAULTS)
    if raw is None:
        raw = {}
    if not isinstance(raw, dict):
        raise LabConfigurationError("A run configuration must be a mapping of sections.")
    for section, values in raw.items():
        if section not in DEFAULTS:
            raise LabConfigurationError("Unknown configuration section '" + str(section) + "'. Expected one of "
                                        + ", ".join(DEFAULTS) + ".")
        if values is None:
            continue
        if not isinstance(values, dict):
            raise LabConfigurationError("Configuration section '" + section + "' must be a mapping.")
        for key, value in values.items():
            if key not in DEFAULTS[section]:
                raise LabConfigurationError("Unknown key '" + str(key) + "' in section '" + section + "'.")
            merged[section][key] = value
    _normalise(merged)
    return merged


class RunConfig:
    """
    A validated run configuration. Building one constructs every domain object once, so any invalid value fails
    here with a LabConfigurationError rather than halfway through a command.
    """

    def __init__(self, values: dict[str, dict]):
        self.values = values
        grid = values["grid"]
        self.grid = GridSpec.from_cells(grid["dim"], grid["n"], grid["length"], grid["bc"], grid["origin"],
                                        grid["stencil"])
        self.params = PhysicalParams(**values["physics"])

        nonlinearity = values["nonlinearity"]
        if len(nonlinearity["A"]) != 3:
            raise LabConfigurationError("nonlinearity.A needs three components (x, y, z).")
        self.kind = NonlinearityKind(nonlinearity["kind"], nonlinearity["A0"], tuple(nonlinearity["A"]),
                                     nonlinearity["f2_term_reading"])
        self.kind.validate_against(self.grid)
        self.mode = RegularizationMode(nonlinearity["regularization"], nonlinearity["floor_tau"])

        state = values["state"]
        numbers = state["n"] * self.grid.dim if len(state["n"]) == 1 else state["n"]
        spin = state["spin"]
        if not isinstance(spin, str):
            spin = tuple(_as_complex("state", "spin", s) for s in spin)
        self.state = AnalyticState(state["family"], tuple(numbers), spin)

        evolution = values["evolution"]
        self.evolution = EvolutionConfig(evolution["dt"], evolution["steps"], evolution["scheme"], self.kind,
                                         self.mode, frozenset(evolution["observers"]), evolution["observer_stride"])

        self.levels = values["study"]["levels"]
        self.measure = values["study"]["measure"]
        if self.measure not in Measures.ALL:
            raise LabConfigurationError("Unknown study measure '" + self.measure + "'.")
        self.out_dir = Path(values["output"]["dir"])
        self.precision = values["output"]["precision"]
        if not 1 <= self.precision <= 17:
            raise LabConfigurationError("output.precision must lie between 1 and 17.")

        self.params.validate_against(self.grid)

    @classmethod
    def from_mapping(cls, raw: dict | None) -> 'RunConfig':
        return cls(merge_with_defaults(raw))

    @classmethod
    def load(cls, path: str | Path | None) -> 'RunConfig':
        """ Reads a YAML file; no path means all defaults. """
        if path is None:
            return cls.from_mapping({})
        try:
            with open(path, "r", encoding="utf-8") as handle:
                raw = yaml.safe_load(handle)
        except OSError as e:
            raise LabConfigurationError("Cannot read configuration '" + str(path) + "': " + str(e))
        except yaml.YAMLError as e:
            raise LabConfigurationError("Configuration '" + str(path) + "' is not valid YAML: " + str(e))
        return cls.from_mapping(raw)

    def with_out_dir(self, out_dir: str | Path) -> 'RunConfig':
        values = copy.deepcopy(self.values)
        values["output"]["dir"] = str(out_dir)
        return RunConfig(values)

    def dump(self) -> str:
        return yaml.safe_dump(self.values, sort_keys=False, default_flow_style=False)

    def digest(self) -> str:
        return hashlib.sha256(self.dump().encode("utf-8")).hexdigest()[:16]
