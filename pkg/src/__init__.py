# -*- coding: utf-8 -*-
"""
B92NetSim - B92-QKD-Simulator
Punkt-zu-Punkt-Links und passive 1xN-Zugangsnetze

Bausteine:
- optics, source, channel, detection (Physik)
- protocol (B92-Messung, Sifting, QBER)
- postprocessing (Cascade, Privacy Amplification, Netto-Bitrate)
- netsim (analytisches Modell, Monte-Carlo-Kette, Netz und Sweeps)
- cli (Presets und CSV-Ausgabe)
"""

__version__ = "1.0.0"
__app_name__ = "B92NetSim"
