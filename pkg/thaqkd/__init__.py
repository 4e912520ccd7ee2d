"""
thaqkd - Trojan-horse side-channel analysis for BB84 quantum key distribution
"""

__version__ = "0.1.0"
__author__ = "lsimons"
