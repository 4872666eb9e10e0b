"""
Core graph, labeling and error types
"""
