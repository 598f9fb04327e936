# -*- coding: utf-8 -*-
"""
B92NetSim - Experiment-Presets
Taktraten-Sweep bei 6.55 km, Distanz-Sweep bei 2 GHz, 1x32-Netz mit
vier Ports, Punkt-zu-Punkt-Referenz bei 4.2 km und 1 GHz
"""

import logging
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from cli.csv_output import write_csv, write_manifest
from core.config import config_to_dict
from core.errors import QkdSimError
from core.event_bus import EventType
from modules.netsim.engine import SimulationEngine, get_engine
from modules.netsim.scenario import DEFAULT_PORT_LENGTHS_KM, ScenarioConfig, scenario_from_dict

logger = logging.getLogger(__name__)

FIG4_CLOCKS_HZ = [1.0e9, 1.2e9, 1.5e9, 1.7e9, 2.0e9]
FIG5_LENGTHS_KM = [0.5, 1.0, 2.0, 4.0, 6.55, 8.0, 10.0]

# Kalibrierung für das Netz: PDL je Splitter-Port, Dunkelrate der Module
TABLE1_SPLITTER_LOSS_DB = 18.7
TABLE1_PORT_PDL_DB = 1.1
TABLE1_DARK_RATE_HZ = 100.0


@dataclass
class SweepSpec:
    """
    Ein Sweep innerhalb eines Presets

    Attributes:
        output: Dateiname ohne Endung
        parameter: Sweep-Parameter
        values: Werte (bei lengths_as_attenuation in km)
        variant: Optionale Detektorvariante für beide Kanäle
        lengths_as_attenuation: km-Werte in Faserdämpfung umrechnen und als
            konzentrierten Dämpfer anwenden
    """
    output: str
    parameter: str
    values: List[float]
    variant: Optional[str] = None
    lengths_as_attenuation: bool = False


@dataclass
class ExperimentPreset:
    """Vordefiniertes Experiment"""
    name: str
    description: str
    overrides: Dict[str, Any] = field(default_factory=dict)
    sweeps: List[SweepSpec] = field(default_factory=list)
    network: bool = False

    def build_config(self, seed: Optional[int] = None,
                     mode: Optional[str] = None) -> ScenarioConfig:
        config = scenario_from_dict(self.overrides)
        if seed is not None:
            config = replace(config, seed=seed)
        if mode is not None:
            config = replace(config, mode=mode)
        return config


@dataclass
class PresetResult:
    """Ergebnis eines Preset-Laufs"""
    success: bool
    preset: str
    files: List[str] = field(default_factory=list)
    errors: List[str] = field(default_factory=list)


def _variant_sweeps(stem: str, parameter: str, values: List[float],
                    lengths_as_attenuation: bool = False) -> List[SweepSpec]:
    return [
        SweepSpec(f"{stem}_{variant}", parameter, values, variant, lengths_as_attenuation)
        for variant in ("standard", "enhanced")
    ]


def _table1_ports() -> List[Dict[str, Any]]:
    return [
        {
            "port_id": index,
            "drop": {"fiber_length_km": length, "receiver_excess_loss_db": 3.0},
            "splitter_loss_db": TABLE1_SPLITTER_LOSS_DB,
            "pdl_db": TABLE1_PORT_PDL_DB,
        }
        for index, length in enumerate(DEFAULT_PORT_LENGTHS_KM)
    ]


PRESETS: Dict[str, ExperimentPreset] = {
    "fig4_clock_sweep": ExperimentPreset(
        name="fig4_clock_sweep",
        description="QBER über Taktrate bei 6.55 km Faser",
        overrides={"path": {"fiber_length_km": 6.55}},
        sweeps=_variant_sweeps("fig4_clock_sweep", "clock_hz", FIG4_CLOCKS_HZ),
    ),
    "fig5_distance_sweep": ExperimentPreset(
        name="fig5_distance_sweep",
        description="QBER über Distanz bei 2 GHz (Faser und Dämpfer-Äquivalent)",
        overrides={"source": {"clock_hz": 2.0e9}},
        sweeps=(_variant_sweeps("fig5_distance_sweep", "fiber_length_km", FIG5_LENGTHS_KM)
                + _variant_sweeps("fig5_distance_sweep_attenuation",
                                  "attenuation_equivalent_db", FIG5_LENGTHS_KM,
                                  lengths_as_attenuation=True)),
    ),
    "table1_network": ExperimentPreset(
        name="table1_network",
        description="1x32-Netz, vier Ports bei 0.0/2.0/3.8/6.4 km, 1 GHz",
        overrides={
            "source": {"clock_hz": 1.0e9},
            "detectors": {
                "channel0": {"variant": "enhanced", "dark_rate_hz": TABLE1_DARK_RATE_HZ},
                "channel1": {"variant": "enhanced", "dark_rate_hz": TABLE1_DARK_RATE_HZ},
            },
            "network": {"port_count": 32, "ports": _table1_ports()},
        },
        network=True,
    ),
    "p2p_baseline": ExperimentPreset(
        name="p2p_baseline",
        description="Punkt-zu-Punkt bei 4.2 km und 1 GHz",
        overrides={"source": {"clock_hz": 1.0e9}, "path": {"fiber_length_km": 4.2}},
        sweeps=[SweepSpec("p2p_baseline", "fiber_length_km", [4.2])],
    ),
}


def get_preset(name: str) -> ExperimentPreset:
    """
    Raises:
        KeyError: Unbekanntes Preset
    """
    try:
        return PRESETS[name]
    except KeyError:
        raise KeyError(f"Unbekanntes Preset: {name} (verfügbar: {', '.join(PRESETS)})")


def run_preset(preset: ExperimentPreset, output_dir: Union[str, Path],
               seed: Optional[int] = None, mode: Optional[str] = None,
               engine: Optional[SimulationEngine] = None) -> PresetResult:
    """
    Führt ein Preset aus und schreibt CSV-Dateien plus Manifest

    Args:
        preset: Das Experiment
        output_dir: Zielverzeichnis (wird angelegt)
        seed: Optionaler Seed statt des Standard-Seeds
        mode: Optional "analytic" oder "monte_carlo"
        engine: Optional eigene Engine

    Returns:
        PresetResult mit den geschriebenen Dateien
    """
    engine = engine or get_engine()
    result = PresetResult(success=False, preset=preset.name)
    target = Path(output_dir)

    try:
        target.mkdir(parents=True, exist_ok=True)
    except OSError as e:
        result.errors.append(f"Ausgabeverzeichnis nicht anlegbar: {e}")
        return result

    config = preset.build_config(seed, mode)
    outputs: Dict[str, Any] = {}

    try:
        for spec in preset.sweeps:
            sweep_config = config
            if spec.variant is not None:
                sweep_config = replace(config, detectors=config.detectors.with_variant(spec.variant))
            values = spec.values
            if spec.lengths_as_attenuation:
                loss = sweep_config.path.fiber_loss_db_per_km
                values = [length * loss for length in spec.values]

            points = engine.sweep(spec.parameter, values, sweep_config)
            csv_file = write_csv(target / f"{spec.output}.csv",
                                 [(point.value, point.metrics) for point in points])
            result.files.append(str(csv_file))
            outputs[csv_file.name] = {
                "parameter": spec.parameter,
                "values": [float(value) for value in values],
                "variant": spec.variant,
            }

        if preset.network:
            ports = engine.run_network(config.network, config)
            csv_file = write_csv(target / f"{preset.name}.csv",
                                 [(port.drop_length_km, port.metrics) for port in ports])
            result.files.append(str(csv_file))
            outputs[csv_file.name] = {
                "parameter": "drop_length_km",
                "values": [port.drop_length_km for port in ports],
                "port_ids": [port.port_id for port in ports],
                "pdl_db": [port.pdl_db for port in ports],
            }
    except (QkdSimError, ValueError, OSError) as e:
        logger.error("Preset %s fehlgeschlagen: %s", preset.name, e)
        result.errors.append(str(e))
        return result

    manifest = {
        "preset": preset.name,
        "description": preset.description,
        "seed": config.seed,
        "mode": config.mode,
        "outputs": outputs,
        "config": config_to_dict(config),
    }
    manifest_file = write_manifest(target / f"{preset.name}_manifest.json", manifest)
    result.files.append(str(manifest_file))
    result.success = True

    engine.event_bus.emit(EventType.PRESET_WRITTEN, {
        'preset': preset.name, 'files': list(result.files)}, source='presets')
    logger.info("Preset %s: %d Dateien in %s", preset.name, len(result.files), target)
    return result
