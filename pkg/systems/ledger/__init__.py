"""
Results Ledger Package
"""

from .database import ResultsLedger

__all__ = ['ResultsLedger']
