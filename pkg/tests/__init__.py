# -*- coding: utf-8 -*-
"""B92NetSim Tests Package"""
