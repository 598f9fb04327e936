# -*- coding: utf-8 -*-
"""
B92NetSim - Kommandozeile
Unterbefehle run, preset, sweep, keys und defaults

Exit-Codes: 0 Erfolg, 1 Konfigurationsfehler, 2 Laufzeitfehler
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from cli.csv_output import render_csv
from cli.presets import PRESETS, get_preset, run_preset
from core.config import dump_config
from core.errors import ConfigError, QkdSimError, SimulationError
from core.event_bus import Event, EventBus, EventType, get_event_bus
from modules.netsim.engine import SimulationEngine
from modules.netsim.scenario import MODES, ScenarioConfig, parse_config
from modules.postprocessing.key_files import write_key_file

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CONFIG_ERROR = 1
EXIT_RUNTIME_ERROR = 2


def _log_event(event: Event):
    logger.debug("Event %s: %s", event.type.name, event.data)


def _emit_text(text: str, out: Optional[str], bus: EventBus):
    if out:
        Path(out).write_text(text, encoding='utf-8')
        logger.info("Ausgabe geschrieben: %s", out)
        bus.emit_status_message(f"Ausgabe geschrieben: {out}", source='cli')
    else:
        sys.stdout.write(text)


def cmd_run(args, engine: SimulationEngine) -> int:
    config = parse_config(args.config)
    if args.network:
        ports = engine.run_network(config.network, config)
        rows = [(port.drop_length_km, port.metrics) for port in ports]
    else:
        rows = [(config.path.fiber_length_km, engine.run_link(config))]
    _emit_text(render_csv(rows), args.out, engine.event_bus)
    return EXIT_OK


def cmd_preset(args, engine: SimulationEngine) -> int:
    preset = get_preset(args.name)
    result = run_preset(preset, args.out, seed=args.seed, mode=args.mode, engine=engine)
    if not result.success:
        for error in result.errors:
            logger.error(error)
        return EXIT_RUNTIME_ERROR
    for file_name in result.files:
        print(file_name)
    engine.event_bus.emit_status_message(
        f"{preset.name}: {len(result.files)} Dateien in {args.out}", source='cli')
    return EXIT_OK


def cmd_sweep(args, engine: SimulationEngine) -> int:
    config = parse_config(args.config)
    try:
        values = [float(value) for value in args.values]
    except ValueError as e:
        raise ValueError(f"Ungültiger Sweep-Wert: {e}")
    points = engine.sweep(args.parameter, values, config)
    _emit_text(render_csv([(point.value, point.metrics) for point in points]), args.out,
               engine.event_bus)
    return EXIT_OK


def cmd_keys(args, engine: SimulationEngine) -> int:
    config = parse_config(args.config)
    result = engine.generate_keys(config)
    distillation = result.distillation
    if not result.success:
        raise SimulationError("; ".join(distillation.errors) or "Destillation fehlgeschlagen")

    key_file = write_key_file(args.emit_keys, distillation.alice_key)
    engine.event_bus.emit(EventType.KEYS_WRITTEN, {
        'file': str(key_file), 'bits': distillation.final_length}, source='cli')
    print(f"sifted_bits={distillation.sifted_length} "
          f"bits_leaked={distillation.bits_leaked} "
          f"final_bits={distillation.final_length} "
          f"qber_estimate={distillation.qber_estimate!r}")
    return EXIT_OK


def cmd_defaults(args, engine: SimulationEngine) -> int:
    _emit_text(dump_config(ScenarioConfig()) + "\n", args.out, engine.event_bus)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="b92netsim",
        description="B92-QKD-Simulator für Punkt-zu-Punkt-Links und passive 1xN-Netze",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="Debug-Ausgaben")
    parser.add_argument("--workers", type=int, default=1,
                        help="Parallele Läufe für Sweeps und Netz-Ports")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="Einen Link (oder das konfigurierte Netz) simulieren")
    run.add_argument("config", help="Szenario-Datei (JSON)")
    run.add_argument("--network", action="store_true", help="Alle Netz-Ports simulieren")
    run.add_argument("--out", help="CSV-Datei statt stdout")
    run.set_defaults(handler=cmd_run)

    preset = sub.add_parser("preset", help="Vordefiniertes Experiment ausführen")
    preset.add_argument("name", choices=sorted(PRESETS))
    preset.add_argument("--out", default="results", help="Ausgabeverzeichnis")
    preset.add_argument("--seed", type=int, help="Seed überschreiben")
    preset.add_argument("--mode", choices=MODES, help="Modus überschreiben")
    preset.set_defaults(handler=cmd_preset)

    sweep = sub.add_parser("sweep", help="Parameter-Sweep")
    sweep.add_argument("parameter",
                       help="clock_hz, fiber_length_km, attenuation_equivalent_db oder Punktpfad")
    sweep.add_argument("values", nargs="+", help="Werte")
    sweep.add_argument("config", help="Szenario-Datei (JSON)")
    sweep.add_argument("--out", help="CSV-Datei statt stdout")
    sweep.set_defaults(handler=cmd_sweep)

    keys = sub.add_parser("keys", help="Schlüssel erzeugen und destillieren")
    keys.add_argument("config", help="Szenario-Datei (JSON)")
    keys.add_argument("--emit-keys", required=True, metavar="FILE",
                      help="Zieldatei für den Endschlüssel")
    keys.set_defaults(handler=cmd_keys)

    defaults = sub.add_parser("defaults", help="Standardkonfiguration als JSON ausgeben")
    defaults.add_argument("--out", help="Datei statt stdout")
    defaults.set_defaults(handler=cmd_defaults)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.INFO,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )

    bus = get_event_bus()
    bus.subscribe_all(_log_event)
    try:
        engine = SimulationEngine(max_workers=args.workers, event_bus=bus)
        return args.handler(args, engine)
    except ConfigError as e:
        logger.error("Konfigurationsfehler: %s", e)
        return EXIT_CONFIG_ERROR
    except (QkdSimError, ValueError, KeyError, OSError) as e:
        logger.error("Laufzeitfehler: %s", e)
        return EXIT_RUNTIME_ERROR
    finally:
        bus.unsubscribe_all(_log_event)


if __name__ == "__main__":
    sys.exit(main())
