"""
Command-line Package
"""

from .cli import run

__all__ = ['run']
