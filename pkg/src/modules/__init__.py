# -*- coding: utf-8 -*-
"""B92NetSim Modules Package"""

# Unterpakete werden einzeln importiert (from modules.netsim import ...)
