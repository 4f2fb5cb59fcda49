"""
Test package for the Yang-Baxter toolkit.
"""
