"""
Utilities: random graph corpus and solver monitoring
"""
