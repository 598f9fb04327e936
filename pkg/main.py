# -*- coding: utf-8 -*-
"""
B92NetSim - B92-QKD-Simulator
Haupteinstiegspunkt der Kommandozeile

Starten mit:
    python main.py preset table1_network --out results
oder:
    python main.py run scenario.json
"""

import sys
import os

# Pfad zum src-Verzeichnis hinzufügen
src_path = os.path.join(os.path.dirname(os.path.abspath(__file__)), "src")
if src_path not in sys.path:
    sys.path.insert(0, src_path)

from cli.commands import main

if __name__ == "__main__":
    sys.exit(main())
